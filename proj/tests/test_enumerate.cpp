#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "abc/enumerate.hpp"
#include "abc/ordering.hpp"
#include "abc/tree.hpp"
#include "abc/verify.hpp"

using namespace abc;

namespace {

// Independent oracle: enumerate all labeled trees from Pruefer sequences and
// deduplicate by canonical code.
std::set<Code> pruefer_classes(int n) {
    std::set<Code> classes;
    if (n == 1) {
        classes.insert(canonical_code(root_at(make_tree(1, {}), 0)));
        return classes;
    }
    if (n == 2) {
        classes.insert(canonical_code(root_by_max_degree(make_tree(2, {{0, 1}}))));
        return classes;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        // decode
        std::vector<int> deg(n, 1);
        for (int p : seq) ++deg[p];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.insert(v);
        std::vector<int> d = deg;
        for (int p : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, p);
            if (--d[p] == 1) leaves.insert(p);
        }
        auto it = leaves.begin();
        int a = *it++;
        int b = *it;
        edges.emplace_back(a, b);
        classes.insert(canonical_code(root_by_max_degree(make_tree(n, std::move(edges)))));
        // odometer
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return classes;
}

}  // namespace

TEST_CASE("free tree counts match the Pruefer oracle for n <= 8") {
    const std::uint64_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        auto classes = pruefer_classes(n);
        CHECK(classes.size() == expected[n]);
        CHECK(count_free_trees(n) == expected[n]);
        // every streamed tree is one of the oracle classes, pairwise distinct
        FreeTreeStream stream(n);
        Tree t;
        std::set<Code> seen;
        while (stream.next(t)) {
            Code code = canonical_code(root_by_max_degree(t));
            CHECK(classes.count(code) == 1);
            CHECK(seen.insert(code).second);
        }
    }
}

TEST_CASE("free tree counts for larger orders") {
    CHECK(count_free_trees(10) == 106);
    CHECK(count_free_trees(14) == 3159);
    CHECK(count_free_trees(16) == 19320);
}

TEST_CASE("stream determinism") {
    for (int pass = 0; pass < 2; ++pass) {
        FreeTreeStream a(9), b(9);
        std::vector<int> la, lb;
        while (a.next_levels(la)) {
            CHECK(b.next_levels(lb));
            CHECK(la == lb);
        }
        CHECK_FALSE(b.next_levels(lb));
    }
}

TEST_CASE("capacity errors") {
    CHECK_THROWS_AS(FreeTreeStream(23), CapacityError);
    CHECK_THROWS_AS(brute_force_min(23), CapacityError);
    CHECK(count_free_trees(23, 23) > 0);  // cap override allows it
}

TEST_CASE("brute force pinned small minima") {
    SearchResult r3 = brute_force_min(3);
    CHECK(r3.best_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r3.witnesses.size() == 1);

    SearchResult r5 = brute_force_min(5);
    CHECK(r5.best_value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
    REQUIRE(r5.witnesses.size() == 1);
    CHECK(degree_sequence(r5.witnesses[0]).degrees == std::vector<int>{2, 2, 2, 1, 1});
}

TEST_CASE("brute force is independent of the worker count") {
    BruteForceOptions one, four;
    one.threads = 1;
    four.threads = 4;
    SearchResult a = brute_force_min(11, one);
    SearchResult b = brute_force_min(11, four);
    CHECK(a.best_value == b.best_value);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i)
        CHECK(canonical_code(root_by_max_degree(a.witnesses[i])) ==
              canonical_code(root_by_max_degree(b.witnesses[i])));
}

TEST_CASE("min by degree sequence pinned values") {
    auto m5 = min_by_degree_sequence(5);
    CHECK(m5.at({2, 2, 2, 1, 1}).first == doctest::Approx(2.8284271247461903).epsilon(1e-15));
    // spider: 2 f(3,1) + f(3,2) + f(2,1)
    CHECK(m5.at({3, 2, 1, 1, 1}).first ==
          doctest::Approx(3.0472067242285472).epsilon(1e-15));
}

TEST_CASE("witness structure at small orders") {
    for (int n = 3; n <= 12; ++n) {
        SearchResult res = brute_force_min(n);
        for (const Tree& w : res.witnesses) {
            StructureChecklist list = validate_structure(w);
            const ChecklistItem* leaf = list.find("leaf-neighbor-deg2");
            REQUIRE(leaf != nullptr);
            if (n >= 4) CHECK(leaf->pass);
            if (n >= 10) {
                const ChecklistItem* one22 = list.find("one-22-edge");
                REQUIRE(one22 != nullptr);
                CHECK(one22->pass);
                const ChecklistItem* kk = list.find("kk-edges");
                REQUIRE(kk != nullptr);
                CHECK(kk->pass);
            }
        }
    }
}
