#pragma once

#include <cstdint>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

// Canonical code of a rooted tree: preorder child counts with children listed
// in succ-descending order.  Properties used throughout:
//   * equal codes  <=>  rooted-isomorphic,
//   * lexicographic code order == the succ ordering (larger code, larger tree).
using Code = std::vector<std::uint32_t>;

Code canonical_code(const RootedTree& rt);
Code subtree_canonical_code(const RootedTree& rt, int v);

// true when a < b lexicographically (shorter prefix loses only via counts).
bool code_less(const Code& a, const Code& b);

enum class SuccOrder { Less = -1, Equal = 0, Greater = 1 };

// succ comparison of whole rooted trees: root child counts first, then the
// descending-sorted child subtree lists lexicographically.
SuccOrder compare_subtrees(const RootedTree& a, const RootedTree& b);

// Serialized form for hashing / external output (big-endian 32-bit words).
std::vector<std::uint8_t> code_bytes(const Code& code);

}  // namespace abc
