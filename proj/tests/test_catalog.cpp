#include <doctest.h>

#include <random>

#include "abc/catalog.hpp"
#include "abc/weights.hpp"
#include "abc/ordering.hpp"
#include "abc/tree.hpp"

using namespace abc;

TEST_CASE("branch sizes and degrees") {
    CHECK(branch_size(BranchKind::b1minus()) == 2);
    CHECK(branch_size(BranchKind::b(3)) == 7);
    CHECK(branch_size(BranchKind::bstar(3)) == 8);
    CHECK(branch_size(BranchKind::b3starstar()) == 10);
    CHECK(branch_size(BranchKind::c_pure(52)) == 365);
    CHECK(branch_attached_degree(BranchKind::b(3)) == 4);
    CHECK(branch_attached_degree(BranchKind::b3starstar()) == 4);
    CHECK(branch_attached_degree(BranchKind::c_pure(52)) == 53);
}

TEST_CASE("build_branch shapes") {
    RootedTree b3 = build_branch(BranchKind::b(3));
    CHECK(b3.tree.n == 7);
    CHECK(b3.children[b3.root].size() == 3);
    for (int c : b3.children[b3.root]) CHECK(vertex_degree(b3, c) == 2);

    RootedTree bss = build_branch(BranchKind::b3starstar());
    CHECK(bss.tree.n == 10);
    CHECK(degree_sequence(bss.tree).degrees == std::vector<int>{3, 3, 2, 2, 2, 2, 1, 1, 1, 1});

    CHECK_THROWS(build_branch(BranchKind::b(6)));
    CHECK_THROWS(build_branch(BranchKind::bstar(4)));
    CHECK(build_branch(BranchKind::b(6), CatalogLimits{true}).tree.n == 13);

    RootedTree c52 = build_branch(BranchKind::c_pure(52));
    CHECK(c52.tree.n == 365);
    CHECK(c52.children[c52.root].size() == 52);
}

TEST_CASE("assemble pinned examples") {
    FamilyConfig landmark;
    landmark.branches = {{BranchKind::b(3), 43}, {BranchKind::b3starstar(), 1}};
    Tree t = assemble(landmark);
    CHECK(t.n == 312);

    FamilyConfig cs;
    cs.branches = {{BranchKind::c_pure(52), 10}};
    CHECK(assemble(cs).n == 3651);

    FamilyConfig p3;
    p3.branches = {{BranchKind::b1minus(), 1}};
    Tree tp3 = assemble(p3);
    CHECK(tp3.n == 3);
    CHECK(degree_sequence(tp3).degrees == std::vector<int>{2, 1, 1});

    CHECK_THROWS(assemble(FamilyConfig{}));
}

TEST_CASE("closed form matches the assembled tree") {
    FamilyConfig p3;
    p3.branches = {{BranchKind::b1minus(), 1}};
    CHECK(closed_form_abc(p3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    FamilyConfig four_b3;
    four_b3.branches = {{BranchKind::b(3), 4}};
    CHECK(closed_form_abc(four_b3) ==
          doctest::Approx(abc_index(assemble(four_b3))).epsilon(1e-12));

    // one hundred C_52 branches, closed form from the per-branch accounting
    FamilyConfig big;
    big.branches = {{BranchKind::c_pure(52), 100}};
    double r = 100;
    double direct = r * (edge_weight(53, 100) + 52 * edge_weight(53, 4) +
                         156 * std::sqrt(2.0));
    CHECK(closed_form_abc(big) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(closed_form_abc(big) == doctest::Approx(abc_index(assemble(big))).epsilon(1e-12));
}

TEST_CASE("closed form equals assemble on random configs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        FamilyConfig cfg;
        int kinds = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < kinds; ++i) {
            switch (rng() % 5) {
                case 0: cfg.branches.emplace_back(BranchKind::b1minus(), 1 + rng() % 3); break;
                case 1: cfg.branches.emplace_back(BranchKind::b(1 + rng() % 5), 1 + rng() % 6); break;
                case 2: cfg.branches.emplace_back(BranchKind::bstar(2 + rng() % 2), 1); break;
                case 3: cfg.branches.emplace_back(BranchKind::b3starstar(), 1); break;
                default:
                    cfg.branches.emplace_back(BranchKind::c_pure(1 + rng() % 60), 1 + rng() % 3);
            }
        }
        cfg = normalize_config(std::move(cfg));
        Tree t = assemble(cfg);
        CHECK(t.n == cfg.vertex_count());
        CHECK(closed_form_abc(cfg) == doctest::Approx(abc_index(t)).epsilon(1e-10));
    }
}

TEST_CASE("recognize round trips") {
    FamilyConfig cfg;
    cfg.branches = {{BranchKind::c_pure(52), 10}};
    auto back = recognize(assemble(cfg));
    REQUIRE(back.has_value());
    CHECK(back->branches == cfg.branches);

    FamilyConfig landmark;
    landmark.branches = {{BranchKind::b(3), 43}, {BranchKind::b3starstar(), 1}};
    auto lb = recognize(assemble(landmark));
    REQUIRE(lb.has_value());
    CHECK(lb->branches == normalize_config(landmark).branches);
}

TEST_CASE("recognize rejects non-family shapes") {
    // deep chain: a pendant path of length 5 fits no branch shape
    Tree t = make_tree(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                            {0, 6}, {6, 7}, {0, 8}, {8, 9}, {9, 10}});
    CHECK_FALSE(recognize(t).has_value());
}

TEST_CASE("paper constraints") {
    FamilyConfig too_many_b2;
    too_many_b2.branches = {{BranchKind::b(2), 12}, {BranchKind::b(3), 1}};
    CHECK(config_validate(too_many_b2, true) != "");
    CHECK(config_validate(too_many_b2, false) == "");

    FamilyConfig two_starred;
    two_starred.branches = {{BranchKind::bstar(2), 1}, {BranchKind::bstar(3), 1},
                            {BranchKind::b(3), 3}};
    CHECK(config_validate(two_starred, true) != "");

    FamilyConfig unbalanced_c;
    unbalanced_c.branches = {{BranchKind::c_pure(10), 1}, {BranchKind::c_pure(12), 1}};
    CHECK(config_validate(unbalanced_c, true) != "");

    FamilyConfig ok;
    ok.branches = {{BranchKind::c_pure(52), 3}, {BranchKind::c_pure(53), 2},
                   {BranchKind::b(3), 5}};
    CHECK(config_validate(ok, true) == "");
}

TEST_CASE("no degree-2 root neighbors in constrained configs at n >= 40") {
    FamilyConfig cfg;
    cfg.branches = {{BranchKind::b(3), 6}, {BranchKind::b(2), 2}};
    Tree t = assemble(cfg);
    CHECK(t.n == 53);
    RootedTree rt = root_at(t, 0);
    for (int c : rt.children[0]) CHECK(vertex_degree(rt, c) >= 3);
}

TEST_CASE("config json round trip") {
    FamilyConfig cfg;
    std::vector<BranchKind> comp(52, BranchKind::b(3));
    comp.push_back(BranchKind::b(2));
    std::sort(comp.begin(), comp.end(), kind_less);
    cfg.branches = {{BranchKind::b(3), 43},
                    {BranchKind::b3starstar(), 1},
                    {BranchKind::c(comp), 2},
                    {BranchKind::bstar(2), 1}};
    cfg = normalize_config(std::move(cfg));
    FamilyConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.branches == cfg.branches);
}
