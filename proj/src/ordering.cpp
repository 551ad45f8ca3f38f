#include "abc/ordering.hpp"

#include <algorithm>

namespace abc {

namespace {

// Iterative bottom-up code construction; recursion would overflow on long
// paths.  Vertices are processed in reverse BFS order so children finish
// before their parent.
Code build_code(const RootedTree& rt, int start) {
    std::vector<int> order{start};
    order.reserve(rt.tree.n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : rt.children[order[i]]) order.push_back(c);

    std::vector<Code> codes(rt.tree.n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<Code*> kids;
        kids.reserve(rt.children[v].size());
        for (int c : rt.children[v]) kids.push_back(&codes[c]);
        std::sort(kids.begin(), kids.end(),
                  [](const Code* a, const Code* b) { return code_less(*b, *a); });
        Code code;
        std::size_t total = 1;
        for (Code* k : kids) total += k->size();
        code.reserve(total);
        code.push_back(static_cast<std::uint32_t>(rt.children[v].size()));
        for (Code* k : kids) {
            code.insert(code.end(), k->begin(), k->end());
            k->clear();
            k->shrink_to_fit();
        }
        codes[v] = std::move(code);
    }
    return std::move(codes[start]);
}

}  // namespace

Code canonical_code(const RootedTree& rt) { return build_code(rt, rt.root); }

Code subtree_canonical_code(const RootedTree& rt, int v) { return build_code(rt, v); }

bool code_less(const Code& a, const Code& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SuccOrder compare_subtrees(const RootedTree& a, const RootedTree& b) {
    Code ca = canonical_code(a);
    Code cb = canonical_code(b);
    if (ca == cb) return SuccOrder::Equal;
    return code_less(ca, cb) ? SuccOrder::Less : SuccOrder::Greater;
}

std::vector<std::uint8_t> code_bytes(const Code& code) {
    std::vector<std::uint8_t> out;
    out.reserve(code.size() * 4);
    for (std::uint32_t w : code) {
        out.push_back(static_cast<std::uint8_t>(w >> 24));
        out.push_back(static_cast<std::uint8_t>(w >> 16));
        out.push_back(static_cast<std::uint8_t>(w >> 8));
        out.push_back(static_cast<std::uint8_t>(w));
    }
    return out;
}

}  // namespace abc
