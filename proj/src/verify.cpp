#include "abc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "abc/enumerate.hpp"
#include "abc/expressions.hpp"
#include "abc/hp.hpp"
#include "abc/parallel.hpp"
#include "abc/weights.hpp"

namespace abc {

namespace {

// Escalation policy: values this close to zero get re-certified at >= 50
// significant digits before classification.
constexpr double kEscalateBelow = 1e-6;
constexpr std::size_t kMaxCounterexamples = 32;

bool escalation_enabled() {
    const char* env = std::getenv("ABC_PRECISION_ESCALATION");
    return env == nullptr || std::atoi(env) != 0;
}

using Point = std::vector<long long>;

struct LemmaDef {
    LemmaInfo info;
    std::vector<ParamRange> full_box;
    std::function<bool(const Point&)> domain;  // may be null (box == domain)
    std::function<double(const Point&)> eval_d;
    std::function<hp::Real(const Point&)> eval_hp;
    std::vector<std::string> notes;
    // Optional batched row evaluator: fills values for the row of points
    // formed by fixing all but the innermost dimension.
    std::function<void(const Point& prefix, const std::vector<long long>& inner,
                       std::vector<double>& out)>
        row_eval;
};

// --- tuple helpers for the composite (multiset) lemmas ----------------------

// b-exc-mod7 point layout: (k1, k2, k3, k4, dR)
bool bexc_domain(const Point& p) {
    long long k1 = p[0], k2 = p[1], k3 = p[2], k4 = p[3], dR = p[4];
    long long du = k1 + k2 + k3 + k4 + 1;
    long long nv = 1 + 2 * k1 + 5 * k2 + 7 * k3 + 9 * k4;
    if (k1 < 1 || du < 4 || du > 14) return false;
    if (k2 > 11 || k4 > 4) return false;
    if (k2 > 0 && k4 > 0) return false;
    if (k2 + k3 + k4 < 1) return false;
    if (nv < 12) return false;
    return dR >= du;
}

double bexc_eval_d(const Point& p) {
    long long counts[8] = {p[0], p[1], 0, p[2], 0, 0, p[3], 0};
    long long nv = 1 + 2 * p[0] + 5 * p[1] + 7 * p[2] + 9 * p[3];
    long long dR = p[4];
    double std_rep = expr::delta_mod7_replace<double>(dR, counts, false);
    // The one 20-vertex case switches to the B_4 + B_5 replacement at large
    // root degree; either suggested change being positive suffices.
    if (nv == 20 && dR >= 95)
        return std::max(std_rep, expr::delta_mod7_replace<double>(dR, counts, true));
    return std_rep;
}

hp::Real bexc_eval_hp(const Point& p) {
    long long counts[8] = {p[0], p[1], 0, p[2], 0, 0, p[3], 0};
    long long nv = 1 + 2 * p[0] + 5 * p[1] + 7 * p[2] + 9 * p[3];
    long long dR = p[4];
    hp::Real std_rep = expr::delta_mod7_replace<hp::Real>(dR, counts, false);
    if (nv == 20 && dR >= 95) {
        hp::Real alt = expr::delta_mod7_replace<hp::Real>(dR, counts, true);
        if ((alt - std_rep).sign() > 0) return alt;
    }
    return std_rep;
}

// degree-k-5 point layout: (k2, k2s, k3, k3s, k3ss, dP)
bool degree5_domain(const Point& p) {
    long long k2 = p[0], k2s = p[1], k3 = p[2], k3s = p[3], k3ss = p[4];
    if (k2 + k2s + k3 + k3s + k3ss != 4) return false;
    if (k2s + k3s + k3ss > 1) return false;
    return p[5] >= 5;
}

template <class R>
R degree5_eval(const Point& p) {
    long long counts[8] = {0, p[0], p[1], p[2], p[3], p[4], 0, 0};
    return expr::delta_mod7_replace<R>(p[5], counts, false);
}

// degree-k point layout: (k, k2, k2s, k3, k3s, k3ss, k4, k5, dR)
bool degreek_domain(const Point& p) {
    long long k = p[0];
    long long k2 = p[1], k2s = p[2], k3 = p[3], k3s = p[4], k3ss = p[5], k4 = p[6], k5 = p[7];
    long long dR = p[8];
    if (k2 + k2s + k3 + k3s + k3ss + k4 + k5 != k - 1) return false;
    if (k2 > 11 || k4 > 4 || k5 > 1) return false;
    if (k2s + k3s + k3ss > 1) return false;
    // starred branches and B_3** cannot coexist with B_4 / B_5
    if ((k2s + k3s + k3ss) > 0 && (k4 > 0 || k5 > 0)) return false;
    // sibling degrees within a consecutive window
    int dmin = 99, dmax = 0;
    auto note = [&](long long cnt, int deg) {
        if (cnt > 0) {
            dmin = std::min(dmin, deg);
            dmax = std::max(dmax, deg);
        }
    };
    note(k2, 3);
    note(k2s, 3);
    note(k3, 4);
    note(k3s, 4);
    note(k3ss, 4);
    note(k4, 5);
    note(k5, 6);
    if (dmax - dmin > 1) return false;
    return dR >= k;
}

template <class R>
R degreek_eval(const Point& p) {
    long long counts[8] = {0, p[1], p[2], p[3], p[4], p[5], p[6], p[7]};
    return expr::delta_mod7_replace<R>(p[8], counts, false);
}

// --- registry ----------------------------------------------------------------

std::vector<LemmaDef> build_registry() {
    using expr::delta_7k8;
    using expr::delta_b4_split;
    using expr::delta_b4_to_root;
    using expr::delta_b4star;
    using expr::delta_bexc_22_to_b5;
    using expr::delta_bexc_dx4;
    using expr::delta_bexc_dx5;
    using expr::delta_bexc_small_dr;
    using expr::delta_bk_size;
    using expr::delta_bkstar_size;
    using expr::delta_b5_shift;
    using expr::delta_c52_exists_a;
    using expr::delta_c52_exists_b;
    using expr::delta_ck_split;
    using expr::delta_compactify;
    using expr::delta_deg2root_4xb1;
    using expr::delta_deg2root_merge;
    using expr::delta_degree4_case16;
    using expr::delta_degree4_case17;
    using expr::delta_dis2;
    using expr::delta_k4_case1;
    using expr::delta_kk;
    using expr::delta_r3;
    using expr::delta_r33;
    using expr::delta_r4;
    using expr::delta_s_zero_root_b3;
    using expr::delta_uexc;

    std::vector<LemmaDef> reg;
    auto add = [&](LemmaDef def) { reg.push_back(std::move(def)); };

    {
        LemmaDef d;
        d.info = {"thm2.1-eq1",
                  "k-k edge elimination bound, 1 < m < k (params k, m)",
                  {{"k", 5, 10000}, {"m", 2, 9999}},
                  true};
        d.full_box = {{"k", 5, 100000}, {"m", 2, 99999}};
        d.domain = [](const Point& p) { return p[1] > 1 && p[1] < p[0]; };
        d.eval_d = [](const Point& p) { return delta_kk<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_kk<hp::Real>(p[0], p[1]); };
        d.row_eval = [](const Point& prefix, const std::vector<long long>& inner,
                        std::vector<double>& out) {
            long long k = prefix[0];
            std::size_t n = inner.size();
            static thread_local std::vector<double> ms, fk, fk1, fkm1;
            ms.resize(n);
            fk.resize(n);
            fk1.resize(n);
            fkm1.resize(n);
            for (std::size_t i = 0; i < n; ++i) ms[i] = static_cast<double>(inner[i]);
            const WeightKernel& kern = active_kernel();
            kern.map_const_x(static_cast<double>(k), ms.data(), fk.data(), n);
            kern.map_const_x(static_cast<double>(k + 1), ms.data(), fk1.data(), n);
            kern.map_const_x(static_cast<double>(k - 1), ms.data(), fkm1.data(), n);
            double head = 2.0 * edge_weight_raw(k, k) - edge_weight_raw(k, k + 1) -
                          edge_weight_raw(k + 1, k - 1);
            double a = static_cast<double>(2 * k - 3), b = static_cast<double>(k - 1),
                   c = static_cast<double>(k - 2);
            out.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                out[i] = head + a * fk[i] - b * fk1[i] - c * fkm1[i];
        };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"thm2.1-eq1-k4m2",
                  "k-k edge bound at the isolated point (k,m) = (4,2)",
                  {{"k", 4, 4}, {"m", 2, 2}},
                  false};
        d.eval_d = [](const Point& p) { return delta_kk<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_kk<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"dis2-eq6",
                  "root-son contraction bound, 3 <= du <= dR (params du, dR)",
                  {{"du", 3, 100}, {"dR", 3, 100}},
                  true};
        d.full_box = {{"du", 3, 2000}, {"dR", 3, 2000}};
        d.domain = [](const Point& p) { return p[0] <= p[1]; };
        d.eval_d = [](const Point& p) { return delta_dis2<double>(p[1], p[0]); };
        d.eval_hp = [](const Point& p) { return delta_dis2<hp::Real>(p[1], p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"ck-split",
                  "C_k split bound for odd k >= 143 (params k, dR)",
                  {{"k", 143, 199, 2}, {"dR", 143, 10000}},
                  false};
        d.domain = [](const Point& p) { return p[1] >= p[0]; };
        d.eval_d = [](const Point& p) { return delta_ck_split<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_ck_split<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"ck-split-even",
                  "C_k split bound, even-k variant (params k, dR)",
                  {{"k", 144, 200, 2}, {"dR", 144, 10000}},
                  false};
        d.domain = [](const Point& p) { return p[1] >= p[0]; };
        d.eval_d = [](const Point& p) { return delta_ck_split<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_ck_split<hp::Real>(p[0], p[1]); };
        d.notes = {"even-sized halves reconstructed from the odd case; pendant pairs assigned to the smaller half"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"compactify-52",
                  "365 copies of C_k collapse to C_52 (params k, du)",
                  {{"k", 53, 142}, {"du", 365, 10000}},
                  false};
        d.eval_d = [](const Point& p) { return delta_compactify<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_compactify<hp::Real>(p[0], p[1]); };
        d.notes = {"source text states the k range as '53 >= k >= 142'; swept ascending 53..142"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"7k8",
                  "at most 7k+7 copies of C_k, k <= 48 (params k, du >= 7k+8)",
                  {{"k", 1, 48}, {"du", 15, 10000}},
                  false};
        d.domain = [](const Point& p) { return p[1] >= 7 * p[0] + 8; };
        d.eval_d = [](const Point& p) { return delta_7k8<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_7k8<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    for (int k : {49, 50, 51}) {
        long long lo = k == 49 ? 475 : k == 50 ? 875 : 3274;
        LemmaDef d;
        d.info = {"7k8-k" + std::to_string(k),
                  "at most 7k+7 copies of C_" + std::to_string(k) + " above the degree threshold",
                  {{"k", k, k}, {"du", lo, 10000}},
                  false};
        d.eval_d = [](const Point& p) { return delta_7k8<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_7k8<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"uexc-g",
                  "U-exceptional bound g over 6 <= d' <= du < dR <= 3271 (params dR, du, dp)",
                  {{"dR", 7, 3271}, {"du", 6, 3270}, {"dp", 6, 3270}},
                  false};
        d.domain = [](const Point& p) { return p[2] <= p[1] && p[1] < p[0]; };
        d.eval_d = [](const Point& p) {
            return delta_uexc<double>(p[0], p[1], p[2], p[1] - 3);
        };
        d.eval_hp = [](const Point& p) {
            return delta_uexc<hp::Real>(p[0], p[1], p[2], p[1] - 3);
        };
        d.row_eval = [](const Point& prefix, const std::vector<long long>& inner,
                        std::vector<double>& out) {
            long long dR = prefix[0], du = prefix[1];
            std::size_t n = inner.size();
            static thread_local std::vector<double> dps, f_dR, f_dR1, f_du, f_dum1;
            dps.resize(n);
            f_dR.resize(n);
            f_dR1.resize(n);
            f_du.resize(n);
            f_dum1.resize(n);
            for (std::size_t i = 0; i < n; ++i) dps[i] = static_cast<double>(inner[i]);
            const WeightKernel& kern = active_kernel();
            kern.map_const_x(static_cast<double>(dR), dps.data(), f_dR.data(), n);
            kern.map_const_x(static_cast<double>(dR + 1), dps.data(), f_dR1.data(), n);
            kern.map_const_x(static_cast<double>(du), dps.data(), f_du.data(), n);
            kern.map_const_x(static_cast<double>(du - 1), dps.data(), f_dum1.data(), n);
            double head = edge_weight_raw(dR, du) - edge_weight_raw(dR + 1, du - 1) +
                          edge_weight_raw(du, 5) - edge_weight_raw(du - 1, 5);
            double a = static_cast<double>(dR - 1), m = static_cast<double>(du - 3);
            out.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                out[i] = head + a * (f_dR[i] - f_dR1[i]) + f_du[i] - f_dR1[i] +
                         m * (f_du[i] - f_dum1[i]);
        };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"uexc-g53",
                  "U-exceptional bound g at d' = 53 (params dR, du)",
                  {{"dR", 53, 10000}, {"du", 53, 10000}},
                  false};
        d.domain = [](const Point& p) { return p[1] <= p[0]; };
        d.eval_d = [](const Point& p) { return delta_uexc<double>(p[0], p[1], 53, p[1] - 3); };
        d.eval_hp = [](const Point& p) {
            return delta_uexc<hp::Real>(p[0], p[1], 53, p[1] - 3);
        };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"bk-size",
                  "B_k with k >= 6 dissolves into B_{k-4} + B_3* (params k, d)",
                  {{"k", 6, 150}, {"d", 7, 10000}},
                  false};
        d.domain = [](const Point& p) { return p[1] >= p[0] + 1; };
        d.eval_d = [](const Point& p) { return delta_bk_size<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_bk_size<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"bkstar-size",
                  "B_k* with k >= 5 dissolves into B_{k-3} + B_3 (params k, d)",
                  {{"k", 5, 150}, {"d", 6, 10000}},
                  false};
        d.domain = [](const Point& p) { return p[1] >= p[0] + 1; };
        d.eval_d = [](const Point& p) { return delta_bkstar_size<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_bkstar_size<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b4star-to-b3ss", "B_4* rewrites to the 10-vertex branch (param d)",
                  {{"d", 5, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_b4star<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_b4star<hp::Real>(p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"deg2root-4xb1", "four B_1^- at the root fuse into one B_3* (param dR)",
                  {{"dR", 12, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_deg2root_4xb1<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_deg2root_4xb1<hp::Real>(p[0]); };
        d.notes = {"negative at dR = 11: the stated bound starts exactly at 12"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"deg2root-merge", "B_k + B_1^- at the root merge into B_{k+1} (params k, dR)",
                  {{"k", 2, 3}, {"dR", 17, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_deg2root_merge<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_deg2root_merge<hp::Real>(p[0], p[1]); };
        d.notes = {"sibling connector terms are non-negative and dropped; the bound is coarser than the source's"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b-exc-dx5", "B-exceptional first bound, smallest big child of degree 5 (param du)",
                  {{"du", 13, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_bexc_dx5<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_bexc_dx5<hp::Real>(p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b-exc-dx4", "B-exceptional first bound, smallest big child of degree <= 4 (param du)",
                  {{"du", 15, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_bexc_dx4<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_bexc_dx4<hp::Real>(p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b-exc-mod7",
                  "B-exceptional branch dissolves via the mod-7 table (params k1, k2, k3, k4, dR)",
                  {{"k1", 1, 12}, {"k2", 0, 11}, {"k3", 0, 12}, {"k4", 0, 4}, {"dR", 4, 10000}},
                  false};
        d.domain = bexc_domain;
        d.eval_d = [](const Point& p) { return bexc_eval_d(p); };
        d.eval_hp = [](const Point& p) { return bexc_eval_hp(p); };
        d.notes = {"20-vertex branches switch to the B_4 + B_5 replacement once dR >= 95"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b-exc-small-dr",
                  "expanded 10-vertex branch swaps to B_2 + B_2* at small father degree (param dr)",
                  {{"dr", 5, 8}}, false};
        d.eval_d = [](const Point& p) { return delta_bexc_small_dr<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_bexc_small_dr<hp::Real>(p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b-exc-22-to-b5",
                  "expanded 10-vertex branch swaps to B_5 at father degree >= 9 (param dr)",
                  {{"dr", 9, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_bexc_22_to_b5<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_bexc_22_to_b5<hp::Real>(p[0]); };
        d.notes = {"negative at dr = 8: the threshold is exactly 9"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"degree-k-4a", "degree-4 subtree of 16 vertices swaps to B_3 + B_4 (param dP)",
                  {{"dP", 5, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_degree4_case16<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_degree4_case16<hp::Real>(p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"degree-k-4b", "degree-4 subtree of 17 vertices swaps to B_3 + 2 B_2 (param dP)",
                  {{"dP", 5, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_degree4_case17<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_degree4_case17<hp::Real>(p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"degree-k-5",
                  "degree-5 subtrees dissolve via the mod-7 table (params k2, k2s, k3, k3s, k3ss, dP)",
                  {{"k2", 0, 4}, {"k2s", 0, 1}, {"k3", 0, 4}, {"k3s", 0, 1}, {"k3ss", 0, 1},
                   {"dP", 5, 10000}},
                  false};
        d.domain = degree5_domain;
        d.eval_d = [](const Point& p) { return degree5_eval<double>(p); };
        d.eval_hp = [](const Point& p) { return degree5_eval<hp::Real>(p); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"degree-k",
                  "no non-root vertices of degree 6..15 (params k, k2, k2s, k3, k3s, k3ss, k4, k5, dR)",
                  {{"k", 6, 15}, {"k2", 0, 11}, {"k2s", 0, 1}, {"k3", 0, 14}, {"k3s", 0, 1},
                   {"k3ss", 0, 1}, {"k4", 0, 4}, {"k5", 0, 1}, {"dR", 6, 10000}},
                  false};
        d.domain = degreek_domain;
        d.eval_d = [](const Point& p) { return degreek_eval<double>(p); };
        d.eval_hp = [](const Point& p) { return degreek_eval<hp::Real>(p); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b4-to-root-small", "B_4 blocks move to a small-degree root (params j, du, dR)",
                  {{"j", 1, 4}, {"du", 16, 951}, {"dR", 16, 951}}, false};
        d.domain = [](const Point& p) { return p[1] <= p[2]; };
        d.eval_d = [](const Point& p) { return delta_b4_to_root<double>(p[0], p[1], p[2]); };
        d.eval_hp = [](const Point& p) { return delta_b4_to_root<hp::Real>(p[0], p[1], p[2]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b4-to-root-large", "B_4 blocks move to a large-degree root (params j, du, dR)",
                  {{"j", 1, 4}, {"du", 16, 107}, {"dR", 952, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_b4_to_root<double>(p[0], p[1], p[2]); };
        d.eval_hp = [](const Point& p) { return delta_b4_to_root<hp::Real>(p[0], p[1], p[2]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b4-split",
                  "root-adjacent block with j B_4's splits when du >= 108, dR >= 952 (params j, du, dR)",
                  {{"j", 1, 4}, {"du", 108, 400}, {"dR", 952, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_b4_split<double>(p[0], p[1], p[2]); };
        d.eval_hp = [](const Point& p) { return delta_b4_split<hp::Real>(p[0], p[1], p[2]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"b5-to-b4-shift", "pendant pair leaves the B_5 (params du, j)",
                  {{"du", 16, 10000}, {"j", 2, 3}}, false};
        d.eval_d = [](const Point& p) { return delta_b5_shift<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_b5_shift<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"r33", "two degree-3 sons rewrite to B_4 + B_1^- (param dR)",
                  {{"dR", 3, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_r33<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_r33<hp::Real>(p[0]); };
        d.notes = {"rewrite target reconstructed; vertex budget 11 realized as B_4 + B_1^-"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"r3", "single 3-3 edge rewrites to B_3* (param dR)", {{"dR", 5, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_r3<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_r3<hp::Real>(p[0]); };
        d.notes = {"negative at dR = 4: the stated bound starts exactly at 5"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"r4", "3-3 edge at a degree-4 root hands its B_2 to the deeper vertex (param dw)",
                  {{"dw", 5, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_r4<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_r4<hp::Real>(p[0]); };
        d.notes = {"negative at dw = 4: the stated bound starts exactly at 5"};
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"k4-case1", "first degree-4 k-k case rewrites to three B_4 (param dR)",
                  {{"dR", 4, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_k4_case1<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_k4_case1<hp::Real>(p[0]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"c52-exists-a", "s = 323 B_3-merge, sparse-C worst case (params s, dR)",
                  {{"s", 323, 323}, {"dR", 2092, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_c52_exists_a<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_c52_exists_a<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"c52-exists-b", "s = 323 B_3-merge, dense-C_52 worst case (params s, dR)",
                  {{"s", 323, 323}, {"dR", 2888, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_c52_exists_b<double>(p[0], p[1]); };
        d.eval_hp = [](const Point& p) { return delta_c52_exists_b<hp::Real>(p[0], p[1]); };
        add(std::move(d));
    }
    {
        LemmaDef d;
        d.info = {"s-zero-root-b3", "a root B_3 merges into a C_52 once dR >= 2948 (param dR)",
                  {{"dR", 2948, 10000}}, false};
        d.eval_d = [](const Point& p) { return delta_s_zero_root_b3<double>(p[0]); };
        d.eval_hp = [](const Point& p) { return delta_s_zero_root_b3<hp::Real>(p[0]); };
        add(std::move(d));
    }
    return reg;
}

const std::vector<LemmaDef>& registry() {
    static const std::vector<LemmaDef> reg = build_registry();
    return reg;
}

const LemmaDef* find_lemma(const std::string& id) {
    for (const auto& d : registry())
        if (d.info.id == id) return &d;
    return nullptr;
}

struct SweepLocal {
    std::uint64_t evaluations = 0;
    std::uint64_t escalated = 0;
    std::uint64_t negatives = 0;
    double min_value = 0.0;
    Point argmin;
    bool have_min = false;
    std::vector<SweepPoint> counterexamples;
};

void classify_point(const LemmaDef& def, const Point& point, double v, bool escalate,
                    SweepLocal& loc) {
    ++loc.evaluations;
    if (!loc.have_min || v < loc.min_value ||
        (v == loc.min_value && point < loc.argmin)) {
        loc.min_value = v;
        loc.argmin = point;
        loc.have_min = true;
    }
    bool positive;
    if (std::abs(v) <= kEscalateBelow && escalate) {
        ++loc.escalated;
        positive = def.eval_hp(point).sign() > 0;
    } else {
        positive = v > 0.0;
    }
    if (!positive) {
        ++loc.negatives;
        if (loc.counterexamples.size() < kMaxCounterexamples)
            loc.counterexamples.push_back(SweepPoint{point, v});
    }
}

}  // namespace

std::vector<LemmaInfo> lemma_registry() {
    std::vector<LemmaInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
}

bool lemma_known(const std::string& id) { return find_lemma(id) != nullptr; }

double lemma_value(const std::string& id, const std::vector<long long>& point) {
    const LemmaDef* def = find_lemma(id);
    if (def == nullptr) throw std::invalid_argument("unknown lemma id: " + id);
    if (point.size() != def->info.default_box.size())
        throw std::invalid_argument("lemma " + id + ": wrong parameter count");
    if (def->domain && !def->domain(point))
        throw std::domain_error("lemma " + id + ": point outside domain");
    return def->eval_d(point);
}

SweepReport sweep(const SweepSpec& spec) {
    const LemmaDef* def = find_lemma(spec.lemma_id);
    if (def == nullptr) throw std::invalid_argument("unknown lemma id: " + spec.lemma_id);
    auto t0 = std::chrono::steady_clock::now();

    std::vector<ParamRange> box = def->info.default_box;
    if (spec.full && def->info.has_full_box) box = def->full_box;
    const std::vector<ParamRange>& cap = def->info.has_full_box ? def->full_box : box;
    if (!spec.ranges.empty()) {
        for (const auto& user : spec.ranges) {
            bool matched = false;
            for (std::size_t i = 0; i < box.size(); ++i) {
                if (box[i].name != user.name) continue;
                if (user.lo > user.hi || user.lo < 1 || user.hi > cap[i].hi)
                    throw CapacityError("sweep range for " + user.name + " exceeds the cap " +
                                        std::to_string(cap[i].hi));
                box[i].lo = user.lo;
                box[i].hi = user.hi;
                if (user.step >= 1) box[i].step = user.step;
                matched = true;
            }
            if (!matched)
                throw std::invalid_argument("lemma " + spec.lemma_id + " has no parameter " +
                                            user.name);
        }
    }

    const bool escalate = escalation_enabled();
    const int dims = static_cast<int>(box.size());

    // Chunk the outer dimension for deterministic parallel merging.
    std::vector<long long> outer_values;
    for (long long v = box[0].lo; v <= box[0].hi; v += box[0].step) outer_values.push_back(v);
    int chunks = static_cast<int>(outer_values.size());
    std::vector<SweepLocal> locals(std::max(chunks, 1));

    parallel_chunks(chunks, spec.threads, [&](int ci) {
        SweepLocal& loc = locals[ci];
        Point point(dims);
        point[0] = outer_values[ci];

        std::function<void(int)> descend = [&](int dim) {
            if (dim == dims) {
                if (def->domain && !def->domain(point)) return;
                classify_point(*def, point, def->eval_d(point), escalate, loc);
                return;
            }
            // batched innermost dimension when a row evaluator exists
            if (dim == dims - 1 && def->row_eval) {
                static thread_local std::vector<long long> inner;
                static thread_local std::vector<double> values;
                inner.clear();
                for (long long v = box[dim].lo; v <= box[dim].hi; v += box[dim].step) {
                    point[dim] = v;
                    if (def->domain && !def->domain(point)) continue;
                    inner.push_back(v);
                }
                if (inner.empty()) return;
                Point prefix(point.begin(), point.begin() + dim);
                def->row_eval(prefix, inner, values);
                for (std::size_t i = 0; i < inner.size(); ++i) {
                    point[dim] = inner[i];
                    classify_point(*def, point, values[i], escalate, loc);
                }
                return;
            }
            for (long long v = box[dim].lo; v <= box[dim].hi; v += box[dim].step) {
                point[dim] = v;
                descend(dim + 1);
            }
        };
        descend(1);
    });

    SweepReport rep;
    rep.lemma_id = spec.lemma_id;
    rep.ranges = box;
    rep.notes = def->notes;
    if (!escalate) rep.notes.push_back("precision escalation disabled by environment");
    std::uint64_t negatives = 0;
    for (const auto& loc : locals) {
        rep.evaluations += loc.evaluations;
        rep.escalated += loc.escalated;
        negatives += loc.negatives;
        if (loc.have_min &&
            (rep.argmin.empty() || loc.min_value < rep.min_value ||
             (loc.min_value == rep.min_value && loc.argmin < rep.argmin))) {
            rep.min_value = loc.min_value;
            rep.argmin = loc.argmin;
        }
        for (const auto& ce : loc.counterexamples)
            if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(ce);
    }
    if (rep.evaluations == 0)
        rep.status = "inconclusive";
    else
        rep.status = negatives == 0 ? "verified" : "counterexample";
    rep.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace abc
