#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

// Branch vocabulary.  Sizes (vertex counts) and attached root degrees:
//   B1Minus        pendant path of length 2          size 2,      degree 2
//   B(k)           k degree-2 sons, each with a leaf  size 2k+1,  degree k+1
//   BStar(k)       B(k) plus one vertex on a leaf     size 2k+2,  degree k+1
//   B3StarStar     root with {B1Minus, B1Minus, B(2)} size 10,    degree 4
//   C(comp)        middle vertex with B-type comp     size 1+sum, degree |comp|+1
struct BranchKind {
    enum class Tag { B1Minus, B, BStar, B3StarStar, C };
    Tag tag = Tag::B;
    int k = 0;                     // parameter of B / BStar
    std::vector<BranchKind> comp;  // composition of C (B-type members only)

    static BranchKind b1minus() { return {Tag::B1Minus, 0, {}}; }
    static BranchKind b(int k) { return {Tag::B, k, {}}; }
    static BranchKind bstar(int k) { return {Tag::BStar, k, {}}; }
    static BranchKind b3starstar() { return {Tag::B3StarStar, 0, {}}; }
    static BranchKind c(std::vector<BranchKind> comp) { return {Tag::C, 0, std::move(comp)}; }
    static BranchKind c_pure(int k);  // k copies of B(3)
};

bool operator==(const BranchKind& a, const BranchKind& b);
bool kind_less(const BranchKind& a, const BranchKind& b);  // storage order

long long branch_size(const BranchKind& kind);
int branch_attached_degree(const BranchKind& kind);
// Sum of edge weights internal to the branch (the edge to the tree root not
// included).
double branch_inner_weight(const BranchKind& kind);

struct FamilyConfig {
    // Normalized multiset: kind_less-sorted, positive counts.
    std::vector<std::pair<BranchKind, long long>> branches;

    long long vertex_count() const;
    long long root_degree() const;
};

FamilyConfig normalize_config(FamilyConfig cfg);

// Shape caps: B(k) needs 1 <= k <= 5, BStar k in {2,3}, C members are B(3)
// copies plus at most 11 B(2) and at most one special member.  The
// unrestricted flag lifts the caps (the lemma verifier builds shapes like
// B(6) through it).
struct CatalogLimits {
    bool unrestricted = false;
};

bool kind_in_catalog(const BranchKind& kind, const CatalogLimits& limits = {});

// Empty string when valid, else a description of the violated rule.  With
// paper_constraints the global count caps and the C balance rule are applied
// on top of the shape caps.
std::string config_validate(const FamilyConfig& cfg, bool paper_constraints,
                            const CatalogLimits& limits = {});

RootedTree build_branch(const BranchKind& kind, const CatalogLimits& limits = {});
Tree assemble(const FamilyConfig& cfg);

// Equals abc_index(assemble(cfg)) within 1e-10 without building the tree.
double closed_form_abc(const FamilyConfig& cfg);

// Structural inverse of assemble; nullopt when the tree is not of the
// root-plus-branches form for any viable rooting.
std::optional<FamilyConfig> recognize(const Tree& t);

// Classification of the subtree at v as a branch kind (shape only, no
// catalog caps applied).
std::optional<BranchKind> classify_branch(const RootedTree& rt, int v);

std::string config_to_json(const FamilyConfig& cfg);
FamilyConfig config_from_json(const std::string& text);

}  // namespace abc
