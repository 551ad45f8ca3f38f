#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "abc/tree.hpp"

namespace abc {

// Streams every free-tree isomorphism class of order n exactly once, in a
// deterministic platform-independent order.  Rooted level sequences are
// generated in decreasing lexicographic order; a sequence is emitted when its
// root is the canonical center of the underlying free tree.
class FreeTreeStream {
  public:
    static constexpr int kDefaultCap = 22;

    explicit FreeTreeStream(int n, int cap = kDefaultCap);

    // Next canonical level sequence (levels[0] == 1); false when exhausted.
    bool next_levels(std::vector<int>& levels);
    bool next(Tree& out);

    static Tree tree_from_levels(const std::vector<int>& levels);

  private:
    int n_;
    std::vector<int> seq_;
    bool fresh_ = true;
    bool done_ = false;

    bool advance_rooted();
    bool is_free_canonical() const;
};

struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Free-tree class count (walks the stream).
std::uint64_t count_free_trees(int n, int cap = FreeTreeStream::kDefaultCap);

struct SearchStats {
    std::uint64_t examined = 0;
    double elapsed_s = 0.0;
};

struct SearchResult {
    int n = 0;
    double best_value = 0.0;
    std::vector<Tree> witnesses;  // every tree within tie tolerance, code-sorted
    SearchStats stats;
};

struct BruteForceOptions {
    int cap = FreeTreeStream::kDefaultCap;
    int threads = 1;
    double tie_tolerance = 1e-10;
};

// Global minimum of the index over all isomorphism classes of order n.
SearchResult brute_force_min(int n, const BruteForceOptions& opts = {});

// For every realizable degree sequence of order n, the minimum over trees
// with exactly that degree sequence.  Key: non-increasing degree vector.
std::map<std::vector<int>, std::pair<double, Tree>> min_by_degree_sequence(
    int n, int cap = FreeTreeStream::kDefaultCap);

}  // namespace abc
