#include <doctest.h>

#include <stdexcept>

#include "abc/catalog.hpp"
#include "abc/enumerate.hpp"
#include "abc/tree.hpp"
#include "abc/verify.hpp"

using namespace abc;

namespace {

SweepReport run(const std::string& id, std::vector<ParamRange> ranges = {}, int threads = 1) {
    SweepSpec spec;
    spec.lemma_id = id;
    spec.ranges = std::move(ranges);
    spec.threads = threads;
    return sweep(spec);
}

}  // namespace

TEST_CASE("registry lists every lemma id exactly once") {
    auto infos = lemma_registry();
    CHECK(infos.size() >= 25);
    for (std::size_t i = 0; i < infos.size(); ++i)
        for (std::size_t j = i + 1; j < infos.size(); ++j) CHECK(infos[i].id != infos[j].id);
    CHECK(lemma_known("thm2.1-eq1"));
    CHECK_FALSE(lemma_known("nope"));
    CHECK_THROWS(sweep(SweepSpec{"nope", {}, false, 1}));
}

TEST_CASE("range overrides are validated against caps") {
    CHECK_THROWS_AS(run("thm2.1-eq1", {{"k", 5, 20000000}}), CapacityError);
    CHECK_THROWS(run("thm2.1-eq1", {{"bogus", 1, 2}}));
}

TEST_CASE("narrow kk sweep verifies") {
    SweepReport rep = run("thm2.1-eq1", {{"k", 5, 400}});
    CHECK(rep.status == "verified");
    CHECK(rep.evaluations > 0);
    CHECK(rep.min_value > 0.0);
    SweepReport corner = run("thm2.1-eq1-k4m2");
    CHECK(corner.status == "verified");
    CHECK(corner.evaluations == 1);
}

TEST_CASE("kk sweep is deterministic across thread counts") {
    SweepReport a = run("thm2.1-eq1", {{"k", 5, 200}}, 1);
    SweepReport b = run("thm2.1-eq1", {{"k", 5, 200}}, 4);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.min_value == b.min_value);
    CHECK(a.argmin == b.argmin);
    CHECK(a.status == b.status);
}

TEST_CASE("dis2 box verifies with the documented argmin behavior") {
    SweepReport rep = run("dis2-eq6");
    CHECK(rep.status == "verified");
    // 3 + 4 + ... : full triangular box
    CHECK(rep.evaluations == 98 * 99 / 2);
}

TEST_CASE("counterexample regions are reported, not silently clipped") {
    // below the stated threshold the deg2root bound goes negative
    SweepReport rep = run("deg2root-4xb1", {{"dR", 5, 11}});
    CHECK(rep.status == "counterexample");
    CHECK(rep.counterexamples.size() > 0);
    CHECK(rep.min_value < 0.0);
}

TEST_CASE("small boxes of the aux lemmas verify") {
    for (const char* id : {"bk-size", "bkstar-size", "b4star-to-b3ss", "deg2root-merge",
                           "b-exc-dx5", "b-exc-dx4", "b-exc-small-dr", "r33", "r3", "r4",
                           "k4-case1", "degree-k-4a", "degree-k-4b", "b5-to-b4-shift"}) {
        SweepSpec spec;
        spec.lemma_id = id;
        spec.threads = 1;
        // shrink every trailing dimension that allows it
        for (const auto& info : lemma_registry()) {
            if (info.id != id) continue;
            for (const auto& r : info.default_box)
                spec.ranges.push_back({r.name, r.lo, std::min(r.hi, r.lo + 200), r.step});
        }
        SweepReport rep = sweep(spec);
        CAPTURE(id);
        CHECK(rep.status == "verified");
    }
}

TEST_CASE("validate_structure on canonical shapes") {
    FamilyConfig cfg;
    cfg.branches = {{BranchKind::c_pure(52), 5}};
    StructureChecklist good = validate_structure(assemble(cfg));
    for (const auto& item : good.items) {
        CAPTURE(item.id);
        CHECK(item.pass);
    }

    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < 10; ++i) e.emplace_back(0, i);
    StructureChecklist star = validate_structure(make_tree(10, e));
    REQUIRE(star.find("leaf-neighbor-deg2") != nullptr);
    CHECK_FALSE(star.find("leaf-neighbor-deg2")->pass);

    std::vector<std::pair<int, int>> pe;
    for (int i = 0; i + 1 < 10; ++i) pe.emplace_back(i, i + 1);
    StructureChecklist path = validate_structure(make_tree(10, pe));
    REQUIRE(path.find("one-22-edge") != nullptr);
    CHECK_FALSE(path.find("one-22-edge")->pass);
    REQUIRE(path.find("kk-edges") != nullptr);
    CHECK_FALSE(path.find("kk-edges")->pass);
}

TEST_CASE("lemma_value spot checks") {
    CHECK(lemma_value("thm2.1-eq1", {5, 2}) > 0.0);
    CHECK_THROWS(lemma_value("thm2.1-eq1", {5}));
    CHECK_THROWS_AS(lemma_value("thm2.1-eq1", {5, 7}), std::domain_error);
    CHECK(lemma_value("s-zero-root-b3", {2948}) > 0.0);
    CHECK(lemma_value("7k8-k51", {51, 3274}) > 0.0);
}
