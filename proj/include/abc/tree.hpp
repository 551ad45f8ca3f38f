#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace abc {

// Undirected labeled tree on vertex ids 0..n-1.  Construction validates the
// tree axioms (n-1 edges, connected, no loops or duplicates).
struct Tree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

Tree make_tree(int n, std::vector<std::pair<int, int>> edges);
bool is_valid_tree(const Tree& t);

std::vector<int> vertex_degrees(const Tree& t);
std::vector<std::vector<int>> adjacency(const Tree& t);

// Sum of edge weights over all edges; 0 for n <= 2.
double abc_index(const Tree& t);

// Non-increasing degree multiset.  Invariants: sum = 2(count-1), count >= 2,
// at least two entries equal 1.
struct DegreeSequence {
    std::vector<int> degrees;
};

DegreeSequence degree_sequence(const Tree& t);
bool is_realizable(const DegreeSequence& seq);

struct RootedTree {
    Tree tree;
    int root = 0;
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;  // ordered child lists
};

RootedTree root_at(const Tree& t, int root);

// Roots at a vertex of maximum degree; ties broken by the subtree ordering
// (the succ-largest rooting wins), then by smallest vertex id.
RootedTree root_by_max_degree(const Tree& t);

std::vector<int> depths(const RootedTree& rt);
int vertex_degree(const RootedTree& rt, int v);  // parent edge included

// Vertex count of the subtree hanging at v.
int subtree_size(const RootedTree& rt, int v);

// Extracts T_v as a standalone tree, vertices relabeled 0..k-1 with v -> 0.
Tree extract_subtree(const RootedTree& rt, int v);

}  // namespace abc
