// Acceptance suite: every release criterion as one pass/fail line.
// Exit code 0 only when all criteria hold.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "abc/catalog.hpp"
#include "abc/enumerate.hpp"
#include "abc/family.hpp"
#include "abc/greedy.hpp"
#include "abc/parallel.hpp"
#include "abc/transforms.hpp"
#include "abc/tree.hpp"
#include "abc/verify.hpp"

using namespace abc;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::printf("criterion %d: %-4s %s%s%s\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Tree random_labeled_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    return make_tree(n, std::move(edges));
}

void criterion1() {
    double c0 = gamma_c0();
    bool pass = std::abs(c0 - 0.67737178) < 5e-9;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "c0 = %.17g", c0);
    report(1, "growth constant", pass, buf);
}

void criterion2() {
    bool pass = true;
    std::string detail;
    for (long long r = 1; r <= 200; ++r) {
        FamilyConfig cfg;
        cfg.branches = {{BranchKind::c_pure(52), r}};
        double closed = closed_form_abc(cfg);
        double built = abc_index(assemble(cfg));
        long long n = 365 * r + 1;
        GammaBounds b = gamma_bounds(n);
        if (std::abs(closed - built) > 1e-10) {
            pass = false;
            detail = "closed form mismatch at r=" + std::to_string(r);
            break;
        }
        if (closed < b.lower - 1e-3 || closed > b.upper + 1e-3) {
            pass = false;
            detail = "bounds violated at r=" + std::to_string(r);
            break;
        }
    }
    report(2, "closed form vs assembled trees and bounds, r=1..200", pass, detail);
}

void criterion3(int threads) {
    bool pass = true;
    std::string detail;
    for (int n = 3; n <= 18 && pass; ++n) {
        BruteForceOptions opts;
        opts.threads = threads;
        SearchResult res = brute_force_min(n, opts);
        for (const Tree& w : res.witnesses) {
            StructureChecklist list = validate_structure(w);
            const ChecklistItem* leaf = list.find("leaf-neighbor-deg2");
            bool leaf_applicable = n >= 4;  // n = 3: the only tree has no degree-2 target
            if (n == 3) {
                std::vector<int> deg = vertex_degrees(w);
                leaf_applicable = false;
                // checked directly: both leaves of the 3-path sit next to the center
                if (!(deg[0] + deg[1] + deg[2] == 4)) {
                    pass = false;
                    detail = "n=3 witness malformed";
                }
            }
            if (leaf_applicable && !(leaf != nullptr && leaf->pass)) {
                pass = false;
                detail = "leaf rule failed at n=" + std::to_string(n);
            }
            if (n >= 10) {
                const ChecklistItem* one22 = list.find("one-22-edge");
                if (!(one22 != nullptr && one22->pass)) {
                    pass = false;
                    detail = "2-2 edge rule failed at n=" + std::to_string(n);
                }
                const ChecklistItem* kk = list.find("kk-edges");
                if (!(kk != nullptr && kk->pass)) {
                    pass = false;
                    detail = "k-k edge rule failed at n=" + std::to_string(n);
                }
            }
        }
    }
    report(3, "brute-force witnesses pass the structure suite, n=3..18", pass, detail);
}

void criterion4() {
    bool pass = true;
    std::string detail;
    for (int n = 7; n <= 14 && pass; ++n) {
        auto table = min_by_degree_sequence(n);
        for (const auto& [seq, entry] : table) {
            RootedTree greedy = greedy_tree(DegreeSequence{seq});
            if (abc_index(greedy.tree) > entry.first + 1e-12) {
                pass = false;
                detail = "greedy above the sequence minimum at n=" + std::to_string(n);
                break;
            }
        }
    }
    report(4, "greedy optimality per degree sequence, n=7..14", pass, detail);
}

void criterion5(int threads) {
    const char* suite[] = {
        "thm2.1-eq1",    "thm2.1-eq1-k4m2", "dis2-eq6",      "ck-split",
        "ck-split-even", "compactify-52",   "7k8",           "7k8-k49",
        "7k8-k50",       "7k8-k51",         "uexc-g",        "uexc-g53",
        "bk-size",       "bkstar-size",     "b4star-to-b3ss", "deg2root-4xb1",
        "deg2root-merge", "b-exc-dx5",      "b-exc-dx4",     "b-exc-mod7",
        "b-exc-small-dr", "b-exc-22-to-b5", "degree-k-4a",   "degree-k-4b",
        "degree-k-5",    "degree-k",        "b4-to-root-small", "b4-to-root-large",
        "b4-split",      "b5-to-b4-shift",  "r33",           "r3",
        "r4",            "k4-case1",        "c52-exists-a",  "c52-exists-b",
        "s-zero-root-b3",
    };
    bool pass = true;
    std::string detail;
    for (const char* id : suite) {
        SweepSpec spec;
        spec.lemma_id = id;
        spec.threads = threads;
        SweepReport rep = sweep(spec);
        char line[256];
        std::snprintf(line, sizeof(line),
                      "    %-18s %-14s points=%llu escalated=%llu min=%.3e at", id,
                      rep.status.c_str(), static_cast<unsigned long long>(rep.evaluations),
                      static_cast<unsigned long long>(rep.escalated), rep.min_value);
        std::string text = line;
        for (long long v : rep.argmin) text += " " + std::to_string(v);
        std::printf("%s (%.1fs)\n", text.c_str(), rep.elapsed_s);
        std::fflush(stdout);
        if (rep.status != "verified") {
            pass = false;
            if (detail.empty()) detail = std::string(id) + " not verified";
        }
    }
    report(5, "lemma sweep suite, all boxes verified", pass, detail);
}

void criterion6(int threads) {
    FamilySearchOptions opts;
    opts.threads = threads;
    FamilySearchResult res = family_search(312, opts);
    long long b3 = 0, b3ss = 0;
    for (const auto& [kind, count] : res.best_config.branches) {
        if (kind.tag == BranchKind::Tag::B && kind.k == 3) b3 += count;
        if (kind.tag == BranchKind::Tag::B3StarStar) b3ss += count;
    }
    double assembled = abc_index(assemble(res.best_config));
    bool pass = b3 == 43 && b3ss == 1 && std::abs(res.best_value - assembled) <= 1e-10;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "b3=%lld b3**=%lld value=%.17g", b3, b3ss, res.best_value);
    report(6, "n=312 landmark config", pass, buf);
}

void criterion7(int threads) {
    FamilySearchOptions opts;
    opts.threads = threads;
    auto rows = transition_scan(368, 955, opts);
    auto first = transition_thresholds(rows);
    const long long expected[7] = {525, 939, 422, 864, 508, 740, 664};
    int exact = 0;
    bool within = true;
    std::string detail;
    for (int cls = 0; cls < 7; ++cls) {
        long long got = first[cls];
        if (got == expected[cls]) ++exact;
        if (got < 0 || std::llabs(got - expected[cls]) > 7) within = false;
        detail += (cls ? " " : "") + std::to_string(cls) + ":" + std::to_string(got);
        if (got != expected[cls]) detail += "(!=" + std::to_string(expected[cls]) + ")";
    }
    bool pass = exact >= 5 && within;
    report(7, "transition thresholds per residue class", pass, detail);
}

void criterion8(int threads) {
    bool pass = true;
    std::string detail;
    for (long long r : {500, 1000, 3000}) {
        long long n = 365 * r + 1;
        FamilySearchOptions opts;
        opts.threads = threads;
        FamilySearchResult res = family_search(n, opts);
        long long off52 = 0;
        bool shapes_ok = true;
        for (const auto& [kind, count] : res.best_config.branches) {
            if (kind.tag != BranchKind::Tag::C) {
                shapes_ok = false;
                continue;
            }
            long long b3 = 0;
            bool pure = true;
            for (const auto& m : kind.comp) {
                if (m.tag == BranchKind::Tag::B && m.k == 3)
                    ++b3;
                else
                    pure = false;
            }
            if (!pure || b3 < 51 || b3 > 53) shapes_ok = false;
            if (b3 != 52) off52 += count;
        }
        if (!(res.s == 0 && shapes_ok && off52 <= 364)) {
            pass = false;
            detail = "structure off at r=" + std::to_string(r) + " (s=" + std::to_string(res.s) +
                     ", off52=" + std::to_string(off52) + ")";
        }
    }
    report(8, "large-n family structure, r in {500,1000,3000}", pass, detail);
}

void criterion9() {
    std::mt19937_64 rng(20250809);
    bool pass = true;
    std::string detail;

    auto disjoint_pair = [&](const RootedTree& rt, int& v, int& w) {
        auto ancestor = [&](int a, int b) {
            while (b != -1) {
                if (b == a) return true;
                b = rt.parent[b];
            }
            return false;
        };
        for (int tries = 0; tries < 200; ++tries) {
            v = 1 + static_cast<int>(rng() % (rt.tree.n - 1));
            w = 1 + static_cast<int>(rng() % (rt.tree.n - 1));
            if (v == rt.root || w == rt.root || v == w) continue;
            if (ancestor(v, w) || ancestor(w, v)) continue;
            return true;
        }
        return false;
    };

    int done = 0;
    while (done < 1000) {
        Tree t = random_labeled_tree(20 + static_cast<int>(rng() % 20), rng);
        RootedTree rt = root_by_max_degree(t);
        int v, w;
        if (!disjoint_pair(rt, v, w) || !legal_similarity(rt, v, w)) continue;
        if (std::abs(abc_index(exchange(rt, v, w).tree) - abc_index(t)) > 1e-12) {
            pass = false;
            detail = "similarity exchange drifted";
            break;
        }
        ++done;
    }

    done = 0;
    while (pass && done < 1000) {
        Tree t = random_labeled_tree(20 + static_cast<int>(rng() % 20), rng);
        RootedTree rt = root_by_max_degree(t);
        int v, w;
        if (!disjoint_pair(rt, v, w)) continue;
        int du = vertex_degree(rt, rt.parent[v]), du2 = vertex_degree(rt, rt.parent[w]);
        int dv = vertex_degree(rt, v), dv2 = vertex_degree(rt, w);
        if (!(du > du2 && dv < dv2)) continue;
        if (!(abc_index(exchange(rt, v, w).tree) < abc_index(t) - 1e-12)) {
            pass = false;
            detail = "improving exchange failed to decrease";
            break;
        }
        ++done;
    }

    for (int trial = 0; pass && trial < 100; ++trial) {
        Tree t = random_labeled_tree(60, rng);
        LocalSearchResult res = local_search(t, 500);
        double prev = abc_index(t);
        for (const auto& rec : res.trace) {
            if (!(rec.abc_after < prev - 1e-12)) {
                pass = false;
                detail = "non-monotone local search trace";
                break;
            }
            prev = rec.abc_after;
        }
        if (res.budget_exhausted) {
            pass = false;
            detail = "local search hit the budget";
        }
        if (res.tree.n != 60) {
            pass = false;
            detail = "vertex count drifted";
        }
    }

    report(9, "transform properties (exchanges, local search)", pass, detail);
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    int threads = default_thread_count();
    criterion1();
    criterion2();
    criterion3(threads);
    criterion4();
    criterion5(threads);
    criterion6(threads);
    criterion7(threads);
    criterion8(threads);
    criterion9();
    std::printf("acceptance: %s (%d criteria failed, %.1fs total)\n",
                failures == 0 ? "ALL PASS" : "FAILURES", failures, elapsed_since(t0));
    return failures == 0 ? 0 : 1;
}
