#include "abc/tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "abc/ordering.hpp"
#include "abc/weights.hpp"

namespace abc {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

Tree make_tree(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("make_tree: vertex count must be >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("make_tree: expected " + std::to_string(n - 1) +
                                    " edges, got " + std::to_string(edges.size()));
    UnionFind uf(n);
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("make_tree: vertex id out of range");
        if (u == v) throw std::invalid_argument("make_tree: self-loop");
        if (!uf.unite(u, v)) throw std::invalid_argument("make_tree: cycle or repeated edge");
    }
    return Tree{n, std::move(edges)};
}

bool is_valid_tree(const Tree& t) {
    if (t.n < 1 || static_cast<int>(t.edges.size()) != t.n - 1) return false;
    UnionFind uf(t.n);
    for (auto [u, v] : t.edges) {
        if (u < 0 || u >= t.n || v < 0 || v >= t.n || u == v) return false;
        if (!uf.unite(u, v)) return false;
    }
    return true;
}

std::vector<int> vertex_degrees(const Tree& t) {
    std::vector<int> deg(t.n, 0);
    for (auto [u, v] : t.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> adjacency(const Tree& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

double abc_index(const Tree& t) {
    if (t.n <= 2) return 0.0;
    std::vector<int> deg = vertex_degrees(t);
    std::vector<double> xs(t.edges.size()), ys(t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        xs[i] = static_cast<double>(deg[t.edges[i].first]);
        ys[i] = static_cast<double>(deg[t.edges[i].second]);
    }
    return active_kernel().sum_pairs(xs.data(), ys.data(), xs.size());
}

DegreeSequence degree_sequence(const Tree& t) {
    if (t.n < 2) throw std::invalid_argument("degree_sequence: needs n >= 2");
    std::vector<int> deg = vertex_degrees(t);
    std::sort(deg.begin(), deg.end(), std::greater<int>());
    return DegreeSequence{std::move(deg)};
}

bool is_realizable(const DegreeSequence& seq) {
    const auto& d = seq.degrees;
    if (d.size() < 2) return false;
    long long sum = 0;
    for (int x : d) {
        if (x < 1) return false;
        sum += x;
    }
    return sum == 2LL * (static_cast<long long>(d.size()) - 1);
}

RootedTree root_at(const Tree& t, int root) {
    if (root < 0 || root >= t.n) throw std::invalid_argument("root_at: root out of range");
    RootedTree rt;
    rt.tree = t;
    rt.root = root;
    rt.parent.assign(t.n, -1);
    rt.children.assign(t.n, {});
    auto adj = adjacency(t);
    std::vector<int> stack{root};
    std::vector<char> seen(t.n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            rt.parent[w] = v;
            rt.children[v].push_back(w);
            stack.push_back(w);
        }
    }
    return rt;
}

RootedTree root_by_max_degree(const Tree& t) {
    std::vector<int> deg = vertex_degrees(t);
    int maxdeg = t.n == 1 ? 0 : *std::max_element(deg.begin(), deg.end());
    RootedTree best;
    Code best_code;
    bool have = false;
    for (int v = 0; v < t.n; ++v) {
        if (t.n > 1 && deg[v] != maxdeg) continue;
        RootedTree cand = root_at(t, v);
        Code code = canonical_code(cand);
        if (!have || code_less(best_code, code)) {  // strictly succ-larger wins
            best = std::move(cand);
            best_code = std::move(code);
            have = true;
        }
    }
    return best;
}

std::vector<int> depths(const RootedTree& rt) {
    std::vector<int> h(rt.tree.n, 0);
    std::vector<int> order{rt.root};
    order.reserve(rt.tree.n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : rt.children[order[i]]) {
            h[c] = h[order[i]] + 1;
            order.push_back(c);
        }
    return h;
}

int vertex_degree(const RootedTree& rt, int v) {
    return static_cast<int>(rt.children[v].size()) + (v == rt.root ? 0 : 1);
}

int subtree_size(const RootedTree& rt, int v) {
    int count = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (int c : rt.children[u]) stack.push_back(c);
    }
    return count;
}

Tree extract_subtree(const RootedTree& rt, int v) {
    std::vector<int> order{v};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : rt.children[order[i]]) order.push_back(c);
    std::vector<int> relabel(rt.tree.n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) relabel[order[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(order.size() - 1);
    for (std::size_t i = 1; i < order.size(); ++i)
        edges.emplace_back(relabel[rt.parent[order[i]]], relabel[order[i]]);
    return make_tree(static_cast<int>(order.size()), std::move(edges));
}

}  // namespace abc
