#include "abc/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "abc/hp.hpp"
#include "abc/ordering.hpp"
#include "abc/parallel.hpp"
#include "abc/weights.hpp"

namespace abc {

namespace {

// parent[i] for a level sequence: nearest j < i with levels[j] == levels[i]-1.
void parents_from_levels(const std::vector<int>& levels, std::vector<int>& parent) {
    int n = static_cast<int>(levels.size());
    parent.assign(n, -1);
    std::vector<int> last(n + 2, -1);  // last index seen per level
    for (int i = 0; i < n; ++i) {
        int l = levels[i];
        if (l >= 2) parent[i] = last[l - 1];
        last[l] = i;
    }
}

double abc_from_levels(const std::vector<int>& levels, std::vector<int>& parent,
                       std::vector<int>& deg, std::vector<double>& xs,
                       std::vector<double>& ys) {
    int n = static_cast<int>(levels.size());
    parents_from_levels(levels, parent);
    deg.assign(n, 0);
    for (int i = 1; i < n; ++i) {
        ++deg[i];
        ++deg[parent[i]];
    }
    xs.resize(n - 1);
    ys.resize(n - 1);
    for (int i = 1; i < n; ++i) {
        xs[i - 1] = static_cast<double>(deg[i]);
        ys[i - 1] = static_cast<double>(deg[parent[i]]);
    }
    return active_kernel().sum_pairs(xs.data(), ys.data(), xs.size());
}

hp::Real abc_hp_from_tree(const Tree& t) {
    std::vector<int> deg = vertex_degrees(t);
    hp::Real total(0);
    for (auto [u, v] : t.edges) total += hp::edge_weight(deg[u], deg[v]);
    return total;
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n, int cap) : n_(n) {
    if (n < 1) throw std::invalid_argument("FreeTreeStream: n must be >= 1");
    if (n > cap)
        throw CapacityError("free tree enumeration: order " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    seq_.resize(n);
    std::iota(seq_.begin(), seq_.end(), 1);  // the path, lexicographically largest
}

bool FreeTreeStream::advance_rooted() {
    // Beyer-Hedetniemi successor: find the last entry above 2, then repeat the
    // block starting at its parent.
    int n = n_;
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
        if (seq_[i] > 2) {
            p = i;
            break;
        }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (seq_[i] == seq_[p] - 1) {
            q = i;
            break;
        }
    int span = p - q;
    for (int i = p; i < n; ++i) seq_[i] = seq_[i - span];
    return true;
}

bool FreeTreeStream::is_free_canonical() const {
    int n = n_;
    if (n <= 2) return true;

    // Cheap necessary condition: the two tallest root subtrees must have
    // heights within 1, otherwise the center sits strictly inside one subtree.
    int h1 = 0, h2 = 0, cur = 0;
    auto note = [&](int h) {
        if (h >= h1) {
            h2 = h1;
            h1 = h;
        } else if (h > h2) {
            h2 = h;
        }
    };
    for (int i = 1; i < n; ++i) {
        if (seq_[i] == 2 && cur > 0) {
            note(cur);
            cur = 0;
        }
        cur = std::max(cur, seq_[i] - 1);
    }
    note(cur);
    if (h1 > h2 + 1) return false;

    Tree t = tree_from_levels(seq_);
    // Centers by leaf stripping.
    std::vector<int> deg = vertex_degrees(t);
    auto adj = adjacency(t);
    std::vector<int> layer;
    std::vector<int> d = deg;
    for (int v = 0; v < n; ++v)
        if (d[v] <= 1) layer.push_back(v);
    int removed = 0;
    std::vector<int> centers;
    while (true) {
        if (n - removed <= 2) {
            centers = layer;
            break;
        }
        std::vector<int> nxt;
        for (int v : layer) {
            ++removed;
            for (int w : adj[v])
                if (--d[w] == 1) nxt.push_back(w);
        }
        layer = std::move(nxt);
    }
    bool root_is_center = false;
    int other = -1;
    for (int c : centers) {
        if (c == 0)
            root_is_center = true;
        else
            other = c;
    }
    if (!root_is_center) return false;
    if (centers.size() == 1) return true;
    // Bicentral: keep the rooting whose code is not smaller; equal codes mean
    // the two rootings are the same sequence, so this accepts exactly once.
    Code at_root = canonical_code(root_at(t, 0));
    Code at_other = canonical_code(root_at(t, other));
    return !code_less(at_root, at_other);
}

bool FreeTreeStream::next_levels(std::vector<int>& levels) {
    if (done_) return false;
    while (true) {
        if (fresh_) {
            fresh_ = false;
        } else if (!advance_rooted()) {
            done_ = true;
            return false;
        }
        if (is_free_canonical()) {
            levels = seq_;
            return true;
        }
    }
}

bool FreeTreeStream::next(Tree& out) {
    std::vector<int> levels;
    if (!next_levels(levels)) return false;
    out = tree_from_levels(levels);
    return true;
}

Tree FreeTreeStream::tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<int> parent;
    parents_from_levels(levels, parent);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
    return make_tree(n, std::move(edges));
}

std::uint64_t count_free_trees(int n, int cap) {
    FreeTreeStream stream(n, cap);
    std::vector<int> levels;
    std::uint64_t count = 0;
    while (stream.next_levels(levels)) ++count;
    return count;
}

SearchResult brute_force_min(int n, const BruteForceOptions& opts) {
    if (n < 3) throw std::invalid_argument("brute_force_min: needs n >= 3");
    auto t0 = std::chrono::steady_clock::now();

    // The generator is sequential; batches are scanned by workers and merged
    // in batch order, so the result is independent of the worker count.
    constexpr std::size_t kBatch = 2048;
    std::vector<std::vector<std::vector<int>>> batches;
    {
        FreeTreeStream stream(n, opts.cap);
        std::vector<std::vector<int>> cur;
        std::vector<int> levels;
        while (stream.next_levels(levels)) {
            cur.push_back(levels);
            if (cur.size() == kBatch) {
                batches.push_back(std::move(cur));
                cur.clear();
            }
        }
        if (!cur.empty()) batches.push_back(std::move(cur));
    }

    struct Local {
        double best = 0.0;
        bool have = false;
        std::vector<std::pair<double, std::vector<int>>> near;
        std::uint64_t examined = 0;
    };
    std::vector<Local> locals(batches.size());
    const double window = opts.tie_tolerance;

    parallel_chunks(static_cast<int>(batches.size()), opts.threads, [&](int b) {
        Local& loc = locals[b];
        std::vector<int> parent, deg;
        std::vector<double> xs, ys;
        for (const auto& levels : batches[b]) {
            double v = abc_from_levels(levels, parent, deg, xs, ys);
            ++loc.examined;
            if (!loc.have || v < loc.best) {
                loc.best = v;
                loc.have = true;
                std::erase_if(loc.near,
                              [&](const auto& e) { return e.first > loc.best + window; });
            }
            if (v <= loc.best + window) loc.near.emplace_back(v, levels);
        }
    });

    double best = 0.0;
    bool have = false;
    std::uint64_t examined = 0;
    for (const auto& loc : locals) {
        examined += loc.examined;
        if (loc.have && (!have || loc.best < best)) {
            best = loc.best;
            have = true;
        }
    }
    if (!have) throw std::logic_error("brute_force_min: empty stream");

    // Gather candidates in the tie window; near-ties that are not bit-equal to
    // the minimum get re-confirmed in extended precision.
    hp::Real best_hp(0);
    bool best_hp_set = false;
    std::vector<std::pair<Code, Tree>> witnesses;
    for (const auto& loc : locals) {
        for (const auto& [v, levels] : loc.near) {
            if (v > best + window) continue;
            Tree t = FreeTreeStream::tree_from_levels(levels);
            if (v != best) {
                if (!best_hp_set) {
                    for (const auto& loc2 : locals)
                        for (const auto& [v2, levels2] : loc2.near)
                            if (v2 == best && !best_hp_set) {
                                best_hp = abc_hp_from_tree(FreeTreeStream::tree_from_levels(levels2));
                                best_hp_set = true;
                            }
                }
                hp::Real diff = abc_hp_from_tree(t) - best_hp;
                if (diff.to_double() > window) continue;
            }
            witnesses.emplace_back(canonical_code(root_by_max_degree(t)), std::move(t));
        }
    }
    std::sort(witnesses.begin(), witnesses.end(),
              [](const auto& a, const auto& b) { return code_less(a.first, b.first); });

    SearchResult res;
    res.n = n;
    res.best_value = best;
    for (auto& [code, t] : witnesses) res.witnesses.push_back(std::move(t));
    res.stats.examined = examined;
    res.stats.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::map<std::vector<int>, std::pair<double, Tree>> min_by_degree_sequence(int n, int cap) {
    if (n < 3) throw std::invalid_argument("min_by_degree_sequence: needs n >= 3");
    FreeTreeStream stream(n, cap);
    std::map<std::vector<int>, std::pair<double, Tree>> out;
    std::vector<int> levels, parent, deg;
    std::vector<double> xs, ys;
    while (stream.next_levels(levels)) {
        double v = abc_from_levels(levels, parent, deg, xs, ys);
        std::vector<int> key = deg;
        std::sort(key.begin(), key.end(), std::greater<int>());
        auto it = out.find(key);
        if (it == out.end() || v < it->second.first)
            out.insert_or_assign(it == out.end() ? out.end() : it, std::move(key),
                                 std::make_pair(v, FreeTreeStream::tree_from_levels(levels)));
    }
    return out;
}

}  // namespace abc
