#include "abc/family.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "abc/ordering.hpp"
#include "abc/parallel.hpp"
#include "abc/weights.hpp"

namespace abc {

namespace {

constexpr double kC = 0.70710678118654752440;  // f(2,x)
constexpr int kMaxCSize = 150;                 // larger C_k is provably suboptimal
constexpr int kSmallN = 40;                    // below: direct multiset enumeration

double f(double x, double y) { return edge_weight_raw(x, y); }

// f(x,y) >= lim_{x->inf} f(x,y) = sqrt(1/y) for y >= 2 (f decreases in x).
double f_floor(int y) { return std::sqrt(1.0 / y); }

}  // namespace

double gamma_c0() {
    return (1.0 / 365.0) * std::sqrt(1.0 / 53.0) *
           (1.0 + 26.0 * std::sqrt(55.0) + 156.0 * std::sqrt(106.0));
}

GammaBounds gamma_bounds(long long n) {
    if (n < 3) throw std::invalid_argument("gamma_bounds: needs n >= 3");
    double c0 = gamma_c0();
    double base = 365.0 * c0 + (51.0 / 2.0) * std::sqrt(1.0 / 53.0);
    long long r = (n - 1) / 365;
    double corr = std::sqrt(1.0 / 53.0) * (51.0 * 51.0 / 8.0) / static_cast<double>(r + 1);
    GammaBounds b;
    b.n = n;
    b.c0 = c0;
    b.lower = c0 * static_cast<double>(n) - base - corr;
    b.upper = c0 * static_cast<double>(n) + base + corr;
    return b;
}

namespace {

// ---------------------------------------------------------------------------
// Small-n / unconstrained path: direct enumeration of branch multisets.
// ---------------------------------------------------------------------------

std::vector<BranchKind> b_kinds_of_size(long long size, bool unrestricted) {
    std::vector<BranchKind> out;
    if (size == 2) out.push_back(BranchKind::b1minus());
    if (size >= 3 && size % 2 == 1) {
        int k = static_cast<int>((size - 1) / 2);
        if (unrestricted || k <= 5) out.push_back(BranchKind::b(k));
    }
    if (size >= 4 && size % 2 == 0) {
        int k = static_cast<int>((size - 2) / 2);
        if (unrestricted || k == 2 || k == 3) out.push_back(BranchKind::bstar(k));
    }
    if (size == 10) out.push_back(BranchKind::b3starstar());
    return out;
}

void enumerate_b_multisets(long long budget, bool unrestricted, std::vector<BranchKind>& cur,
                           const std::function<void(const std::vector<BranchKind>&)>& emit) {
    if (budget == 0) {
        emit(cur);
        return;
    }
    if (budget < 2) return;
    for (long long size = 2; size <= budget; ++size) {
        for (const BranchKind& kind : b_kinds_of_size(size, unrestricted)) {
            if (!cur.empty() && kind_less(kind, cur.back())) continue;
            cur.push_back(kind);
            enumerate_b_multisets(budget - size, unrestricted, cur, emit);
            cur.pop_back();
        }
    }
}

// All branch kinds of exactly `size` vertices (memoized per search).
struct KindTable {
    bool unrestricted;
    std::map<long long, std::vector<BranchKind>> cache;

    const std::vector<BranchKind>& of_size(long long size) {
        auto it = cache.find(size);
        if (it != cache.end()) return it->second;
        std::vector<BranchKind> out = b_kinds_of_size(size, unrestricted);
        if (size >= 3) {
            std::vector<BranchKind> cur;
            enumerate_b_multisets(size - 1, unrestricted, cur,
                                  [&](const std::vector<BranchKind>& comp) {
                                      if (comp.empty()) return;
                                      std::vector<BranchKind> sorted = comp;
                                      std::sort(sorted.begin(), sorted.end(), kind_less);
                                      BranchKind c = BranchKind::c(std::move(sorted));
                                      if (kind_in_catalog(c, CatalogLimits{unrestricted}))
                                          out.push_back(c);
                                  });
        }
        return cache.emplace(size, std::move(out)).first->second;
    }
};

void enumerate_small_configs(long long budget, KindTable& table, std::vector<BranchKind>& cur,
                             const std::function<void(const std::vector<BranchKind>&)>& emit) {
    if (budget == 0) {
        if (!cur.empty()) emit(cur);
        return;
    }
    if (budget < 2) return;
    for (long long size = 2; size <= budget; ++size) {
        for (const BranchKind& kind : table.of_size(size)) {
            if (!cur.empty() && kind_less(kind, cur.back())) continue;
            cur.push_back(kind);
            enumerate_small_configs(budget - size, table, cur, emit);
            cur.pop_back();
        }
    }
}

FamilyConfig config_from_multiset(const std::vector<BranchKind>& kinds) {
    FamilyConfig cfg;
    for (const auto& k : kinds) cfg.branches.emplace_back(k, 1);
    return normalize_config(std::move(cfg));
}

void result_counts(const FamilyConfig& cfg, long long& r, long long& s) {
    r = s = 0;
    for (const auto& [kind, count] : cfg.branches) {
        if (kind.tag == BranchKind::Tag::C) r += count;
        if (kind.tag == BranchKind::Tag::B && kind.k == 3) s += count;
    }
}

// value-ascending, then succ-descending of the assembled trees
void sort_tie_configs(std::vector<std::pair<double, FamilyConfig>>& near, long long n) {
    std::sort(near.begin(), near.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        if (n <= 5000) {
            Code ca = canonical_code(root_at(assemble(a.second), 0));
            Code cb = canonical_code(root_at(assemble(b.second), 0));
            return code_less(cb, ca);
        }
        return config_to_json(a.second) < config_to_json(b.second);
    });
}

FamilySearchResult small_family_search(long long n, const FamilySearchOptions& opts) {
    FamilySearchResult res;
    res.n = n;
    bool have = false;
    std::vector<std::pair<double, FamilyConfig>> near;
    std::vector<BranchKind> cur;
    std::uint64_t examined = 0;
    KindTable table{!opts.paper_constraints, {}};
    enumerate_small_configs(
        n - 1, table, cur, [&](const std::vector<BranchKind>& kinds) {
            FamilyConfig cfg = config_from_multiset(kinds);
            if (opts.paper_constraints && !config_validate(cfg, true).empty()) return;
            ++examined;
            double v = closed_form_abc(cfg);
            if (!have || v < res.best_value) {
                res.best_value = v;
                have = true;
                std::erase_if(near, [&](const auto& e) {
                    return e.first > res.best_value + opts.tie_tolerance;
                });
            }
            if (v <= res.best_value + opts.tie_tolerance && near.size() < 256)
                near.emplace_back(v, std::move(cfg));
        });
    if (!have)
        throw std::invalid_argument("family_search: no config of order " + std::to_string(n));
    std::erase_if(near,
                  [&](const auto& e) { return e.first > res.best_value + opts.tie_tolerance; });
    sort_tie_configs(near, n);
    res.best_config = near.front().second;
    res.best_value = closed_form_abc(res.best_config);
    for (auto& [v, cfg] : near) {
        if (static_cast<int>(res.ties.size()) >= opts.max_ties) break;
        res.ties.push_back(cfg);
    }
    result_counts(res.best_config, res.r, res.s);
    res.stats.examined = examined;
    return res;
}

// ---------------------------------------------------------------------------
// Window engine (n >= kSmallN, paper constraints).
//
// A configuration is s B(3)-branches, x copies of C_q plus y of C_{q+1}
// (all C sizes within 1), and a decoration: B1-, B(1), B(2), B(4), B(5) and
// at most one starred branch, where the B(2)'s split between the root and one
// irregular C-branch, the starred branch sits at the root or in that C, and
// the C may instead carry one B(4)/B(5) as its single special member.
// ---------------------------------------------------------------------------

struct Piece {
    int attach_degree;
    double inner;
    long long size;
};

Piece piece_of(const BranchKind& kind) {
    return {branch_attached_degree(kind), branch_inner_weight(kind), branch_size(kind)};
}

const Piece kPieceB1m = piece_of(BranchKind::b1minus());
const Piece kPieceB1 = piece_of(BranchKind::b(1));
const Piece kPieceB2 = piece_of(BranchKind::b(2));
const Piece kPieceB4 = piece_of(BranchKind::b(4));
const Piece kPieceB5 = piece_of(BranchKind::b(5));
const Piece kPieceStar[4] = {Piece{0, 0.0, 0}, piece_of(BranchKind::bstar(2)),
                             piece_of(BranchKind::bstar(3)), piece_of(BranchKind::b3starstar())};

struct Dec {
    std::int8_t b1m = 0, b1 = 0, b2r = 0, b2c = 0, b4 = 0, b5 = 0;
    std::int8_t starred = 0;  // 0 none, 1 B2*, 2 B3*, 3 B3**
    bool st_in_c = false;
    std::int8_t c_special = 0;  // 0 none, 4 = B(4), 5 = B(5) inside the C
    std::int8_t c_slot = 0;     // irregular C carries q (0) or q+1 (1) B(3)'s
    bool uses_c = false;

    std::int16_t size = 0;      // extra vertices
    std::int16_t root_count = 0;
    double lb = 0.0;            // floor of the decoration's own cost
};

std::vector<Dec> enumerate_decorations() {
    std::vector<Dec> out;
    auto floor_cost = [](const Piece& p, int cnt) {
        return cnt * (f_floor(p.attach_degree) + p.inner);
    };
    for (int b1m = 0; b1m <= 3; ++b1m)
        for (int b1 = 0; b1 <= 3; ++b1)
            for (int b2r = 0; b2r <= 11; ++b2r)
                for (int b2c = 0; b2c + b2r <= 11; ++b2c)
                    for (int b4 = 0; b4 <= 4; ++b4)
                        for (int b5 = 0; b5 <= 1; ++b5)
                            for (int st = 0; st <= 3; ++st)
                                for (int stc = 0; stc <= (st > 0 ? 1 : 0); ++stc)
                                    for (int csp = 0; csp <= 2; ++csp) {
                                        if (csp == 1 && b4 + 1 > 4) continue;
                                        if (csp == 2 && b5 + 1 > 1) continue;
                                        if (csp != 0 && stc == 1) continue;  // one special per C
                                        bool uses_c = b2c > 0 || stc == 1 || csp != 0;
                                        for (int slot = 0; slot <= (uses_c ? 1 : 0); ++slot) {
                                            Dec d;
                                            d.b1m = b1m;
                                            d.b1 = b1;
                                            d.b2r = b2r;
                                            d.b2c = b2c;
                                            d.b4 = b4;
                                            d.b5 = b5;
                                            d.starred = st;
                                            d.st_in_c = stc == 1;
                                            d.c_special = csp == 1 ? 4 : csp == 2 ? 5 : 0;
                                            d.c_slot = slot;
                                            d.uses_c = uses_c;
                                            d.size = static_cast<std::int16_t>(
                                                2 * b1m + 3 * b1 + 5 * (b2r + b2c) + 9 * b4 +
                                                11 * b5 + (st ? kPieceStar[st].size : 0) +
                                                (csp == 1 ? 9 : csp == 2 ? 11 : 0));
                                            d.root_count = static_cast<std::int16_t>(
                                                b1m + b1 + b2r + b4 + b5 +
                                                (st > 0 && stc == 0 ? 1 : 0));
                                            d.lb = floor_cost(kPieceB1m, b1m) +
                                                   floor_cost(kPieceB1, b1) +
                                                   floor_cost(kPieceB2, b2r + b2c) +
                                                   floor_cost(kPieceB4, b4 + (csp == 1)) +
                                                   floor_cost(kPieceB5, b5 + (csp == 2)) +
                                                   (st ? floor_cost(kPieceStar[st], 1) : 0.0);
                                            out.push_back(d);
                                        }
                                    }
    return out;
}

double c_body(int q) { return q * (f(q + 1, 4) + 6.0 * kC); }

// Full decoration cost at root degree `droot`; for decorations living inside
// the irregular C (q_irr B(3) members) the replaced plain C_{q_irr} is
// credited back, so callers always add x*costC(q) + y*costC(q+1) as if all
// C-branches were plain.
double dec_cost(const Dec& d, double droot, int q_irr) {
    double total = d.b1m * (kC + kPieceB1m.inner) + d.b1 * (kC + kPieceB1.inner) +
                   d.b4 * (f(droot, 5) + kPieceB4.inner) +
                   d.b5 * (f(droot, 6) + kPieceB5.inner);
    if (d.b2r > 0) total += d.b2r * (f(droot, 3) + kPieceB2.inner);
    if (d.starred > 0 && !d.st_in_c)
        total += f(droot, kPieceStar[d.starred].attach_degree) + kPieceStar[d.starred].inner;
    if (d.uses_c) {
        int extras = d.b2c + (d.st_in_c ? 1 : 0) + (d.c_special ? 1 : 0);
        int mid = q_irr + 1 + extras;
        double irr = f(droot, mid) + q_irr * (f(mid, 4) + 6.0 * kC);
        if (d.b2c > 0) irr += d.b2c * (f(mid, 3) + kPieceB2.inner);
        if (d.st_in_c)
            irr += f(mid, kPieceStar[d.starred].attach_degree) + kPieceStar[d.starred].inner;
        if (d.c_special == 4) irr += f(mid, 5) + kPieceB4.inner;
        if (d.c_special == 5) irr += f(mid, 6) + kPieceB5.inner;
        irr -= f(droot, q_irr + 1) + c_body(q_irr);
        total += irr;
    }
    return total;
}

bool c_count_ok(int k, long long count, long long droot) {
    if (count == 0) return true;
    if (k <= 48) return count <= 7LL * k + 7;
    if (k == 49) return droot <= 474 || count <= 7LL * k + 7;
    if (k == 50) return droot <= 874 || count <= 7LL * k + 7;
    if (k == 51) return droot <= 3273 || count <= 7LL * k + 7;
    if (k == 52) return true;
    return count <= 364;
}

long long c_count_limit(int k, long long budget_limit) {
    if (k <= 48) return std::min(budget_limit, 7LL * k + 7);
    if (k == 49) return std::min(budget_limit, 474LL);
    if (k == 50) return std::min(budget_limit, 874LL);
    if (k == 51) return std::min(budget_limit, 3273LL);
    if (k == 52) return budget_limit;
    return std::min(budget_limit, 364LL);
}

struct BestEntry {
    double value = 0.0;
    int q = -1;  // -1 marks the r = 0 family
    long long x = 0, y = 0;
    int dec_index = -1;
    bool valid = false;
};

FamilyConfig rebuild_config(long long n, const BestEntry& e, const std::vector<Dec>& decs) {
    const Dec& d = decs[e.dec_index];
    FamilyConfig cfg;
    if (d.b1m) cfg.branches.emplace_back(BranchKind::b1minus(), d.b1m);
    if (d.b1) cfg.branches.emplace_back(BranchKind::b(1), d.b1);
    if (d.b2r) cfg.branches.emplace_back(BranchKind::b(2), d.b2r);
    if (d.b4) cfg.branches.emplace_back(BranchKind::b(4), d.b4);
    if (d.b5) cfg.branches.emplace_back(BranchKind::b(5), d.b5);
    if (d.starred && !d.st_in_c)
        cfg.branches.emplace_back(d.starred == 3 ? BranchKind::b3starstar()
                                                 : BranchKind::bstar(d.starred == 1 ? 2 : 3),
                                  1);
    long long x = e.x, y = e.y;
    if (e.q >= 1 && d.uses_c) {
        int q_irr = e.q + d.c_slot;
        std::vector<BranchKind> comp(q_irr, BranchKind::b(3));
        for (int i = 0; i < d.b2c; ++i) comp.push_back(BranchKind::b(2));
        if (d.st_in_c)
            comp.push_back(d.starred == 3 ? BranchKind::b3starstar()
                                          : BranchKind::bstar(d.starred == 1 ? 2 : 3));
        if (d.c_special) comp.push_back(BranchKind::b(d.c_special));
        std::sort(comp.begin(), comp.end(), kind_less);
        cfg.branches.emplace_back(BranchKind::c(std::move(comp)), 1);
        if (d.c_slot == 0)
            --x;
        else
            --y;
    }
    if (e.q >= 1) {
        if (x > 0) cfg.branches.emplace_back(BranchKind::c_pure(e.q), x);
        if (y > 0) cfg.branches.emplace_back(BranchKind::c_pure(e.q + 1), y);
    }
    cfg = normalize_config(std::move(cfg));
    long long fill = (n - cfg.vertex_count()) / 7;  // the s B(3)-branches
    if (fill > 0) cfg.branches.emplace_back(BranchKind::b(3), fill);
    return normalize_config(std::move(cfg));
}

struct WindowLocal {
    BestEntry best;
    std::vector<BestEntry> near;
    std::uint64_t examined = 0;
};

// Safe slack for the irregular-C adjustment in lower bounds: the connector
// drop is < 1 (f < 1 everywhere) and the B(3) members get cheaper by at most
// max_q q*(f(q+1,4) - f(q+14,4)) < 0.3.
constexpr double kIrrSlack = 1.5;

FamilySearchResult window_family_search(long long n, const FamilySearchOptions& opts) {
    const long long budget = n - 1;
    static const std::vector<Dec> decs = [] {
        std::vector<Dec> d = enumerate_decorations();
        std::stable_sort(d.begin(), d.end(),
                         [](const Dec& a, const Dec& b) { return a.size < b.size; });
        return d;
    }();

    std::vector<std::vector<int>> bucket_all(7), bucket_root(7);
    for (int i = 0; i < static_cast<int>(decs.size()); ++i) {
        bucket_all[decs[i].size % 7].push_back(i);
        if (!decs[i].uses_c) bucket_root[decs[i].size % 7].push_back(i);
    }

    const double b3_vertex_floor = (f_floor(4) + 6.0 * kC) / 7.0;
    std::atomic<double> incumbent{1e300};
    const double tol = opts.tie_tolerance;

    auto eval_entry = [&](int q, long long x, long long y, const Dec& d, double& out) -> bool {
        long long szq = 7LL * q + 1, szq1 = szq + 7;
        long long used = (q >= 1 ? x * szq + y * szq1 : 0) + d.size;
        if (used > budget) return false;
        long long rem = budget - used;
        if (rem % 7 != 0) return false;
        long long s = rem / 7;
        if (d.uses_c) {
            if (q < 1) return false;
            if (d.c_slot == 0 && x < 1) return false;
            if (d.c_slot == 1 && y < 1) return false;
        }
        long long droot = x + y + s + d.root_count;
        if (droot < 1) return false;
        if (q >= 1 && (!c_count_ok(q, x, droot) || !c_count_ok(q + 1, y, droot))) return false;
        double dr = static_cast<double>(droot);
        double v = static_cast<double>(s) * (f(dr, 4) + 6.0 * kC);
        if (q >= 1)
            v += static_cast<double>(x) * (f(dr, q + 1) + c_body(q)) +
                 static_cast<double>(y) * (f(dr, q + 2) + c_body(q + 1)) +
                 dec_cost(d, dr, q + d.c_slot);
        else
            v += dec_cost(d, dr, 0);
        out = v;
        return true;
    };

    auto record = [&](WindowLocal& loc, double v, int q, long long x, long long y, int di) {
        if (!loc.best.valid || v < loc.best.value) {
            loc.best = BestEntry{v, q, x, y, di, true};
            double cur = incumbent.load(std::memory_order_relaxed);
            while (v < cur &&
                   !incumbent.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
            }
            std::erase_if(loc.near,
                          [&](const BestEntry& e) { return e.value > loc.best.value + tol; });
        }
        if (v <= loc.best.value + tol && loc.near.size() < 64)
            loc.near.push_back(BestEntry{v, q, x, y, di, true});
    };

    auto scan_window = [&](int q, WindowLocal& loc) {
        long long szq = 7LL * q + 1, szq1 = szq + 7;
        const double lb_cq = f_floor(q + 1) + c_body(q);
        const double lb_cq1 = f_floor(q + 2) + c_body(q + 1);
        long long xmax = c_count_limit(q, budget / szq);
        for (long long x = 1; x <= xmax; ++x) {
            long long rem_x = budget - x * szq;
            long long ymax = q + 1 <= kMaxCSize ? c_count_limit(q + 1, rem_x / szq1) : 0;
            for (long long y = 0; y <= ymax; ++y) {
                long long rem = rem_x - y * szq1;
                double row_lb = 0.0;
                if (opts.prune) {
                    long long s_min7 = std::max<long long>(0, rem - 200);
                    row_lb = static_cast<double>(x) * lb_cq + static_cast<double>(y) * lb_cq1 -
                             kIrrSlack + static_cast<double>(s_min7) * b3_vertex_floor;
                    if (row_lb > incumbent.load(std::memory_order_relaxed) + tol) continue;
                }
                int residue = static_cast<int>(rem % 7);
                for (int di : bucket_all[residue]) {
                    const Dec& d = decs[di];
                    if (d.size > rem) break;  // bucket sorted by size
                    if (opts.prune &&
                        row_lb + d.lb + static_cast<double>(rem - d.size) * b3_vertex_floor -
                                std::max<long long>(0, rem - 200) * b3_vertex_floor >
                            incumbent.load(std::memory_order_relaxed) + tol)
                        continue;
                    ++loc.examined;
                    double v;
                    if (!eval_entry(q, x, y, d, v)) continue;
                    record(loc, v, q, x, y, di);
                }
            }
        }
    };

    auto scan_r0 = [&](WindowLocal& loc) {
        int residue = static_cast<int>(budget % 7);
        for (int di : bucket_root[residue]) {
            const Dec& d = decs[di];
            if (d.size > budget) break;
            ++loc.examined;
            double v;
            if (!eval_entry(-1, 0, 0, d, v)) continue;
            record(loc, v, -1, 0, 0, di);
        }
    };

    // Seed the incumbent with near-asymptotic candidates; affects pruning
    // speed only, never the result.
    if (opts.prune) {
        WindowLocal seed;
        for (int q : {50, 51, 52}) {
            long long szq = 7LL * q + 1;
            long long xtop = budget / szq;
            for (long long x = std::max<long long>(1, xtop - 2); x <= xtop; ++x) {
                long long rem_x = budget - x * szq;
                long long ytop = rem_x / (szq + 7);
                for (long long y = std::max<long long>(0, ytop - 2); y <= ytop; ++y) {
                    long long rem = rem_x - y * (szq + 7);
                    for (int di : bucket_all[rem % 7]) {
                        if (decs[di].size > rem) break;
                        double v;
                        if (eval_entry(q, x, y, decs[di], v)) {
                            double cur = incumbent.load();
                            while (v < cur && !incumbent.compare_exchange_weak(cur, v)) {
                            }
                            break;  // one valid decoration per (x,y) is enough
                        }
                    }
                }
            }
        }
        scan_r0(seed);  // cheap, seeds the r=0 side
    }

    std::vector<WindowLocal> locals(kMaxCSize + 1);
    parallel_chunks(kMaxCSize + 1, opts.threads, [&](int chunk) {
        if (chunk == 0)
            scan_r0(locals[0]);
        else
            scan_window(chunk, locals[chunk]);
    });

    BestEntry best;
    std::uint64_t examined = 0;
    for (const auto& loc : locals) {
        examined += loc.examined;
        if (loc.best.valid && (!best.valid || loc.best.value < best.value)) best = loc.best;
    }
    if (!best.valid)
        throw std::invalid_argument("family_search: no config of order " + std::to_string(n));

    FamilySearchResult res;
    res.n = n;
    res.best_config = rebuild_config(n, best, decs);
    res.best_value = closed_form_abc(res.best_config);
    result_counts(res.best_config, res.r, res.s);
    std::vector<std::pair<double, FamilyConfig>> near;
    for (const auto& loc : locals)
        for (const auto& e : loc.near)
            if (e.value <= best.value + tol) near.emplace_back(e.value, rebuild_config(n, e, decs));
    sort_tie_configs(near, n);
    for (auto& [v, cfg] : near) {
        if (static_cast<int>(res.ties.size()) >= opts.max_ties) break;
        res.ties.push_back(cfg);
    }
    res.stats.examined = examined;
    return res;
}

}  // namespace

FamilySearchResult family_search(long long n, const FamilySearchOptions& opts) {
    if (n < 3) throw std::invalid_argument("family_search: needs n >= 3");
    auto t0 = std::chrono::steady_clock::now();
    FamilySearchResult res;
    if (!opts.paper_constraints || n < kSmallN || opts.force_exhaustive)
        res = small_family_search(n, opts);
    else
        res = window_family_search(n, opts);
    res.stats.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<ScanRow> transition_scan(long long from, long long to,
                                     const FamilySearchOptions& opts) {
    if (from > to || from < 3)
        throw std::invalid_argument("transition_scan: need 3 <= from <= to");
    std::vector<ScanRow> rows;
    rows.reserve(to - from + 1);
    for (long long n = from; n <= to; ++n) {
        FamilySearchResult r = family_search(n, opts);
        GammaBounds b = gamma_bounds(n);
        rows.push_back(ScanRow{n, r.r, r.s, r.best_value, b.lower, b.upper});
    }
    return rows;
}

std::vector<long long> transition_thresholds(const std::vector<ScanRow>& rows) {
    std::vector<long long> first(7, -1);
    for (const auto& row : rows) {
        int cls = static_cast<int>(row.n % 7);
        if (row.r >= 1 && first[cls] == -1) first[cls] = row.n;
    }
    return first;
}

}  // namespace abc
