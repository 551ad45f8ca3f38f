#pragma once

#include "abc/tree.hpp"

namespace abc {

// Breadth-first greedy realization of a degree sequence: the root takes the
// largest degree and remaining degrees are handed out in descending order to
// child slots in BFS order.  Throws on infeasible sequences.
RootedTree greedy_tree(const DegreeSequence& seq);

}  // namespace abc
