#include "abc/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace abc {

RootedTree greedy_tree(const DegreeSequence& seq) {
    std::vector<int> d = seq.degrees;
    std::sort(d.begin(), d.end(), std::greater<int>());
    if (!is_realizable(DegreeSequence{d}))
        throw std::invalid_argument("greedy_tree: degree sequence is not realizable");

    int n = static_cast<int>(d.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // queue of vertices with open child slots; vertex i has degree d[i]
    std::vector<int> queue{0};
    int next = 1;
    for (std::size_t qi = 0; qi < queue.size() && next < n; ++qi) {
        int v = queue[qi];
        int slots = d[v] - (v == 0 ? 0 : 1);
        for (int s = 0; s < slots && next < n; ++s) {
            edges.emplace_back(v, next);
            if (d[next] > 1) queue.push_back(next);
            ++next;
        }
    }
    if (next != n) throw std::invalid_argument("greedy_tree: degree sequence is not realizable");
    return root_at(make_tree(n, std::move(edges)), 0);
}

}  // namespace abc
