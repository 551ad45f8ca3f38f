#include <doctest.h>

#include <random>

#include "abc/catalog.hpp"
#include "abc/enumerate.hpp"
#include "abc/ordering.hpp"
#include "abc/transforms.hpp"

using namespace abc;

namespace {

Tree random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % v), v);
    return make_tree(n, std::move(e));
}

}  // namespace

TEST_CASE("exchange argument checks") {
    Tree t = make_tree(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    RootedTree rt = root_at(t, 0);
    CHECK_THROWS(exchange(rt, 0, 1));  // root
    CHECK_THROWS(exchange(rt, 1, 2));  // ancestor pair
    RootedTree swapped = exchange(rt, 1, 3);
    CHECK(swapped.tree.n == 5);
    CHECK(std::abs(abc_index(swapped.tree) - abc_index(t)) < 1e-12);  // symmetric here
}

TEST_CASE("exchange delta matches the recomputed difference") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 200) {
        Tree t = random_tree(12 + static_cast<int>(rng() % 8), rng);
        RootedTree rt = root_by_max_degree(t);
        int v = 1 + static_cast<int>(rng() % (t.n - 1));
        int w = 1 + static_cast<int>(rng() % (t.n - 1));
        auto ancestor = [&](int a, int b) {
            while (b != -1) {
                if (b == a) return true;
                b = rt.parent[b];
            }
            return false;
        };
        if (v == rt.root || w == rt.root || v == w || ancestor(v, w) || ancestor(w, v)) continue;
        double predicted = exchange_delta(rt, v, w);
        RootedTree after = exchange(rt, v, w);
        double actual = abc_index(rt.tree) - abc_index(after.tree);
        CHECK(std::abs(predicted - actual) < 1e-12);
        ++done;
    }
}

TEST_CASE("similarity exchanges preserve the index") {
    std::mt19937_64 rng(123);
    int done = 0;
    while (done < 1000) {
        Tree t = random_tree(14 + static_cast<int>(rng() % 10), rng);
        RootedTree rt = root_by_max_degree(t);
        int v = 1 + static_cast<int>(rng() % (t.n - 1));
        int w = 1 + static_cast<int>(rng() % (t.n - 1));
        auto ancestor = [&](int a, int b) {
            while (b != -1) {
                if (b == a) return true;
                b = rt.parent[b];
            }
            return false;
        };
        if (v == rt.root || w == rt.root || v == w || ancestor(v, w) || ancestor(w, v)) continue;
        if (!legal_similarity(rt, v, w)) continue;
        RootedTree after = exchange(rt, v, w);
        CHECK(std::abs(abc_index(after.tree) - abc_index(t)) < 1e-12);
        ++done;
    }
}

TEST_CASE("lemma-style improving exchanges strictly decrease") {
    std::mt19937_64 rng(321);
    int done = 0;
    while (done < 1000) {
        Tree t = random_tree(16 + static_cast<int>(rng() % 12), rng);
        RootedTree rt = root_by_max_degree(t);
        int v = 1 + static_cast<int>(rng() % (t.n - 1));
        int w = 1 + static_cast<int>(rng() % (t.n - 1));
        auto ancestor = [&](int a, int b) {
            while (b != -1) {
                if (b == a) return true;
                b = rt.parent[b];
            }
            return false;
        };
        if (v == rt.root || w == rt.root || v == w || ancestor(v, w) || ancestor(w, v)) continue;
        int du = vertex_degree(rt, rt.parent[v]), du2 = vertex_degree(rt, rt.parent[w]);
        int dv = vertex_degree(rt, v), dv2 = vertex_degree(rt, w);
        if (!(du > du2 && dv < dv2)) continue;
        RootedTree after = exchange(rt, v, w);
        CHECK(abc_index(after.tree) < abc_index(t) - 1e-12);
        ++done;
    }
}

TEST_CASE("local search improves a star and stays monotone") {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < 10; ++i) e.emplace_back(0, i);
    Tree star = make_tree(10, std::move(e));
    LocalSearchResult res = local_search(star, 200);
    CHECK(res.abc < abc_index(star) - 1e-12);
    double prev = abc_index(star);
    for (const auto& rec : res.trace) {
        CHECK(rec.abc_after < prev - 1e-12);
        prev = rec.abc_after;
    }
    CHECK(res.tree.n == star.n);
}

TEST_CASE("local search leaves an optimum unchanged") {
    SearchResult brute = brute_force_min(12);
    LocalSearchResult res = local_search(brute.witnesses[0], 100);
    CHECK(res.abc == doctest::Approx(brute.best_value).epsilon(1e-12));
}

TEST_CASE("rebalance pulls sibling pendant blocks together") {
    // root with a B_5 and a B_2: rebalancing moves one pendant pair
    FamilyConfig cfg;
    cfg.branches = {{BranchKind::b(5), 1}, {BranchKind::b(2), 1}, {BranchKind::b(3), 4}};
    Tree t = assemble(cfg);
    LocalSearchResult res = local_search(t, 50);
    CHECK(res.abc < abc_index(t) - 1e-12);
    auto cfg_after = recognize(res.tree);
    REQUIRE(cfg_after.has_value());
    int maxk = 0, mink = 99;
    for (const auto& [kind, count] : cfg_after->branches)
        if (kind.tag == BranchKind::Tag::B) {
            maxk = std::max(maxk, kind.k);
            mink = std::min(mink, kind.k);
        }
    CHECK(maxk - mink <= 1);
}

TEST_CASE("canonicalize is index preserving and idempotent") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        Tree t = random_tree(10 + static_cast<int>(rng() % 30), rng);
        RootedTree c1 = extremal_canonicalize(t);
        CHECK(std::abs(abc_index(c1.tree) - abc_index(t)) < 1e-12);
        RootedTree c2 = extremal_canonicalize(c1.tree);
        CHECK(canonical_code(c1) == canonical_code(c2));
        // children sorted succ-descending at every vertex
        for (int v = 0; v < c1.tree.n; ++v) {
            const auto& kids = c1.children[v];
            for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
                Code a = subtree_canonical_code(c1, kids[i]);
                Code b = subtree_canonical_code(c1, kids[i + 1]);
                CHECK_FALSE(code_less(a, b));
            }
        }
    }
}

TEST_CASE("canonicalized optimum satisfies the depth ordering") {
    SearchResult brute = brute_force_min(14);
    for (const Tree& w : brute.witnesses) {
        RootedTree canon = extremal_canonicalize(w);
        CHECK(p1_violations(canon).empty());
    }
}

TEST_CASE("assembled family tree with shuffled labels canonicalizes cleanly") {
    FamilyConfig cfg;
    cfg.branches = {{BranchKind::b(3), 6}, {BranchKind::b(2), 1}};
    Tree t = assemble(cfg);
    std::mt19937_64 rng(777);
    std::vector<int> perm(t.n);
    for (int i = 0; i < t.n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> pe;
    for (auto [u, v] : t.edges) pe.emplace_back(perm[u], perm[v]);
    Tree shuffled = make_tree(t.n, std::move(pe));
    RootedTree canon = extremal_canonicalize(shuffled);
    CHECK(std::abs(abc_index(canon.tree) - abc_index(t)) < 1e-12);
    CHECK(canonical_code(canon) == canonical_code(extremal_canonicalize(t)));
}
