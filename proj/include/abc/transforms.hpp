#pragma once

#include <string_view>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

// Subtree exchange T(v,v2): the subtrees hanging at v and v2 swap places.
// Rejects the root and ancestor/descendant pairs.  Vertex count and the
// fathers' degrees are preserved.
RootedTree exchange(const RootedTree& rt, int v, int v2);

// True when the fathers' degrees or the subtree-root degrees coincide; the
// exchange then leaves the index unchanged.
bool legal_similarity(const RootedTree& rt, int v, int v2);

// Exact index change of an exchange, ABC(T) - ABC(T(v,v2)):
//   f(d_u,d_v) + f(d_u',d_v') - f(d_u,d_v') - f(d_u',d_v).
double exchange_delta(const RootedTree& rt, int v, int v2);

enum class MoveKind {
    SubtreeExchange,
    BRebalance,
    CSplit,
    Compactify365,
    B1Merge,
    ContractToLeafPath,
};

std::string_view move_kind_name(MoveKind k);

struct MoveRecord {
    MoveKind kind;
    double abc_after;
};

struct LocalSearchResult {
    Tree tree;
    double abc = 0.0;
    std::vector<MoveRecord> trace;
    bool budget_exhausted = false;
};

// Greedy first-improvement descent over the move set; accepts a move only
// when it lowers the index by more than 1e-12, so the trace is strictly
// decreasing and the search always terminates.
LocalSearchResult local_search(const Tree& t, int budget = 1000);

// Root choice plus succ-descending child ordering, realized through
// index-preserving similarity exchanges only.  Idempotent.
RootedTree extremal_canonicalize(const Tree& t);

// Pairwise ordering check: depth h(u) < h(v) implies the subtree at u is
// succ-at-least the subtree at v.  Lists offending pairs (capped).
std::vector<std::pair<int, int>> p1_violations(const RootedTree& rt, std::size_t cap = 16);

}  // namespace abc
