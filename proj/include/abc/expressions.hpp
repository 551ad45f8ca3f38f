#pragma once

#include "abc/hp.hpp"
#include "abc/weights.hpp"

// Closed-form index differences for the verified tree rewrites.  Every
// expression is written once as a template so the double path and the
// extended-precision escalation path evaluate the same formula.

namespace abc::expr {

template <class R>
R fw(long long x, long long y);

template <>
inline double fw<double>(long long x, long long y) {
    return edge_weight_raw(static_cast<double>(x), static_cast<double>(y));
}

template <>
inline hp::Real fw<hp::Real>(long long x, long long y) {
    return hp::edge_weight(x, y);
}

template <class R>
R rec_sqrt(long long x);  // 1 / sqrt(x)

template <>
inline double rec_sqrt<double>(long long x) {
    return 1.0 / std::sqrt(static_cast<double>(x));
}

template <>
inline hp::Real rec_sqrt<hp::Real>(long long x) {
    return hp::Real(1) / sqrt(hp::Real(x));
}

template <class R>
R num(long long v);

template <>
inline double num<double>(long long v) {
    return static_cast<double>(v);
}

template <>
inline hp::Real num<hp::Real>(long long v) {
    return hp::Real(v);
}

// --- k-k edge elimination bound (the five-line inequality) ----------------
template <class R>
R delta_kk(long long k, long long m) {
    return fw<R>(k, k) + fw<R>(k, k) - fw<R>(k, k + 1) - fw<R>(k + 1, k - 1) +
           num<R>(2 * k - 3) * fw<R>(k, m) - num<R>(k - 1) * fw<R>(k + 1, m) -
           num<R>(k - 2) * fw<R>(k - 1, m);
}

// --- root-son contraction bound, degree-6 floor ---------------------------
template <class R>
R delta_dis2(long long dR, long long du) {
    return fw<R>(dR, du) - fw<R>(2, 2) +
           num<R>(dR - 1) * (fw<R>(dR, 6) - fw<R>(dR + du - 2, 6)) +
           num<R>(du - 1) * (fw<R>(du, 6) - fw<R>(dR + du - 2, 6));
}

// --- C_k split bound (odd k and the even-k variant) ------------------------
template <class R>
R delta_ck_split(long long k, long long dR) {
    if (k % 2 == 1) {
        long long h = (k + 1) / 2;
        return fw<R>(dR, k + 1) + num<R>(k) * fw<R>(k + 1, 4) +
               num<R>(dR - 1) * (fw<R>(dR, 4) - fw<R>(dR + 1, 4)) -
               (fw<R>(dR + 1, h) + fw<R>(dR + 1, h)) - num<R>(k - 4) * fw<R>(h, 4) -
               num<R>(3) * fw<R>(h, 5);
    }
    long long h = k / 2;  // halves h and h-1 members; pendant pairs in the smaller
    return fw<R>(dR, k + 1) + num<R>(k) * fw<R>(k + 1, 4) +
           num<R>(dR - 1) * (fw<R>(dR, 4) - fw<R>(dR + 1, 4)) - fw<R>(dR + 1, h + 1) -
           fw<R>(dR + 1, h) - num<R>(h) * fw<R>(h + 1, 4) - num<R>(h - 4) * fw<R>(h, 4) -
           num<R>(3) * fw<R>(h, 5);
}

// --- 365-copy compactification bound ---------------------------------------
template <class R>
R delta_compactify(long long k, long long du) {
    long long d = du - 366;
    long long du2 = du + 7 * k - 364;
    R six_pairs = num<R>(6) * fw<R>(2, 1);
    return num<R>(365) * (fw<R>(du, k + 1) + num<R>(k) * (fw<R>(k + 1, 4) + six_pairs)) +
           num<R>(d + 1) * fw<R>(du, 4) -
           num<R>(7 * k + 1) * (fw<R>(du2, 53) + num<R>(52) * (fw<R>(53, 4) + six_pairs)) -
           num<R>(d + 1) * fw<R>(du2, 4);
}

// --- 7k+8 copies bound ------------------------------------------------------
template <class R>
R delta_7k8(long long k, long long du) {
    return rec_sqrt<R>(du) - rec_sqrt<R>(du - 7) + num<R>(7 * k + 8) * fw<R>(du, k + 1) -
           num<R>(7 * k + 1) * fw<R>(du - 7, k + 2) +
           num<R>(du - 7 * k - 10) * (fw<R>(du, k + 2) - fw<R>(du - 7, k + 2)) +
           fw<R>(du, du - 1) - fw<R>(du - 7, du - 1) +
           num<R>(k * (7 * k + 8)) * fw<R>(k + 1, 4) -
           num<R>((7 * k + 1) * (k + 1)) * fw<R>(k + 2, 4) - num<R>(6) * fw<R>(2, 1);
}

// --- U-exceptional elimination, worst case over m ---------------------------
template <class R>
R delta_uexc(long long dR, long long du, long long dp, long long m) {
    return fw<R>(dR, du) - fw<R>(dR + 1, du - 1) +
           num<R>(dR - 1) * (fw<R>(dR, dp) - fw<R>(dR + 1, dp)) + fw<R>(du, dp) -
           fw<R>(dR + 1, dp) + num<R>(du - 2 - m) * (fw<R>(du, 5) - fw<R>(du - 1, 5)) +
           num<R>(m) * (fw<R>(du, dp) - fw<R>(du - 1, dp));
}

// --- B_k size caps -----------------------------------------------------------
// B_k (k>=6) -> B_{k-4} + B_3* at the father (degree d); one pendant pair freed.
template <class R>
R delta_bk_size(long long k, long long d) {
    return fw<R>(d, k + 1) - fw<R>(d + 1, k - 3) - fw<R>(d + 1, 4) + fw<R>(2, 2);
}

// B_k* (k>=5) -> B_{k-3} + B_3.
template <class R>
R delta_bkstar_size(long long k, long long d) {
    return fw<R>(d, k + 1) - fw<R>(d + 1, k - 2) - fw<R>(d + 1, 4) + fw<R>(2, 2);
}

// B_4* -> B_3** in place (same size, same father degree).
template <class R>
R delta_b4star(long long d) {
    return fw<R>(d, 5) - fw<R>(d, 4) - fw<R>(4, 3) + fw<R>(2, 2);
}

// --- Degree-2 neighbors of the root -----------------------------------------
// Four B_1^- fuse into one B_3*.
template <class R>
R delta_deg2root_4xb1(long long dR) {
    return fw<R>(2, 2) - fw<R>(4, dR - 3) +
           num<R>(dR - 4) * (fw<R>(6, dR) - fw<R>(6, dR - 3));
}

// B_k + B_1^- merge into B_{k+1}; sibling terms are non-negative and dropped.
template <class R>
R delta_deg2root_merge(long long k, long long dR) {
    return fw<R>(dR, k + 1) - fw<R>(dR - 1, k + 2);
}

// --- B-exceptional first stage ----------------------------------------------
template <class R>
R delta_bexc_dx5(long long du) {
    return rec_sqrt<R>(du) + num<R>(4) * fw<R>(du, 5) - rec_sqrt<R>(du - 1) -
           num<R>(3) * fw<R>(du - 1, 5) - fw<R>(du - 1, 6);
}

template <class R>
R delta_bexc_dx4(long long du) {
    return rec_sqrt<R>(du) + num<R>(4) * fw<R>(du, 5) + num<R>(du - 6) * fw<R>(du, 4) -
           rec_sqrt<R>(du - 1) - num<R>(5) * fw<R>(du - 1, 5) -
           num<R>(du - 7) * fw<R>(du - 1, 4);
}

// Expanded B_3** replaced by B_2 + B_2* at the father (small-degree case).
template <class R>
R delta_bexc_small_dr(long long d) {
    return fw<R>(3, 4) + fw<R>(4, d) - fw<R>(3, d + 1) - fw<R>(3, d + 1) +
           num<R>(d - 1) * (fw<R>(3, d) - fw<R>(3, d + 1));
}

// Expanded B_3** replaced by B_5 in place (father degree unchanged).
template <class R>
R delta_bexc_22_to_b5(long long d) {
    return fw<R>(d, 4) + fw<R>(4, 3) - fw<R>(d, 6) - fw<R>(2, 2);
}

// --- B_5 dismantling (degree-gap finale) -------------------------------------
// Pendant pair moves from a B_5 under w (limit d_w -> inf) onto a B_j under u.
template <class R>
R delta_b5_shift(long long du, long long j) {
    return rec_sqrt<R>(6) - rec_sqrt<R>(5) + fw<R>(du, j + 1) - fw<R>(du, j + 2);
}

// --- B_4 branches move to the root -------------------------------------------
template <class R>
R delta_b4_to_root(long long j, long long du, long long dR) {
    return fw<R>(dR, du) - fw<R>(dR + j, du - j) +
           num<R>(j) * (fw<R>(du, 5) - fw<R>(dR + j, 5)) +
           num<R>(du - 1 - j) * (fw<R>(du, 4) - fw<R>(du - j, 4)) +
           num<R>(dR - 1) * (fw<R>(dR, 4) - fw<R>(dR + j, 4));
}

// Split of a root-adjacent branch carrying j B_4's and B_3's otherwise.
template <class R>
R delta_b4_split(long long j, long long du, long long dR) {
    long long k = du - 1;
    if (k % 2 == 1) {
        long long h = (k + 1) / 2;
        return fw<R>(dR, du) + num<R>(k - j) * fw<R>(du, 4) + num<R>(j) * fw<R>(du, 5) +
               num<R>(dR - 1) * (fw<R>(dR, 4) - fw<R>(dR + 1, 4)) -
               (fw<R>(dR + 1, h) + fw<R>(dR + 1, h)) - num<R>(k - j - 4) * fw<R>(h, 4) -
               num<R>(j + 3) * fw<R>(h, 5);
    }
    long long h = k / 2;
    return fw<R>(dR, du) + num<R>(k - j) * fw<R>(du, 4) + num<R>(j) * fw<R>(du, 5) +
           num<R>(dR - 1) * (fw<R>(dR, 4) - fw<R>(dR + 1, 4)) - fw<R>(dR + 1, h + 1) -
           fw<R>(dR + 1, h) - num<R>(h) * fw<R>(h + 1, 4) -
           num<R>(h - 4 - j) * fw<R>(h, 4) - num<R>(j + 3) * fw<R>(h, 5);
}

// --- s = 323 merges and the B_3-at-root elimination ---------------------------
template <class R>
R delta_c52_exists_a(long long s, long long dR) {
    long long d2 = dR - s + 7;
    long long mid = (s + 6) / 7;
    return num<R>(364) * fw<R>(dR, 143) + num<R>(364) * fw<R>(dR, 142) +
           num<R>(4) * fw<R>(dR, 5) + num<R>(dR - 2 * 364 - 4) * fw<R>(dR, 4) +
           num<R>(6) * fw<R>(2, 2) - num<R>(364) * fw<R>(d2, 142) -
           num<R>(364) * fw<R>(d2, 143) - num<R>(7) * fw<R>(d2, mid) -
           num<R>(4) * fw<R>(d2, 5) - num<R>(dR - s - 2 * 364 - 4) * fw<R>(d2, 4) -
           num<R>(s - 1) * fw<R>(mid, 4);
}

template <class R>
R delta_c52_exists_b(long long s, long long dR) {
    long long d2 = dR - s + 7;
    long long mid = (s + 6) / 7;
    return num<R>(364) * fw<R>(dR, 54) + num<R>(dR - 364 - 4) * fw<R>(dR, 53) +
           num<R>(4) * fw<R>(dR, 5) + num<R>(s) * fw<R>(dR, 4) + num<R>(6) * fw<R>(2, 2) -
           num<R>(364) * fw<R>(d2, 54) - num<R>(dR - 364 - 4) * fw<R>(d2, 53) -
           num<R>(4) * fw<R>(d2, 5) - num<R>(7) * fw<R>(d2, mid) -
           num<R>(s - 1) * fw<R>(mid, 4);
}

template <class R>
R delta_s_zero_root_b3(long long dR) {
    return num<R>(364) * fw<R>(dR, 54) + num<R>(dR - 365) * fw<R>(dR, 53) + fw<R>(dR, 4) +
           num<R>(52) * fw<R>(53, 4) - num<R>(365) * fw<R>(dR - 1, 54) -
           num<R>(dR - 366) * fw<R>(dR - 1, 53) - num<R>(53) * fw<R>(54, 4);
}

// --- mod-7 branch replacement machinery ---------------------------------------
// Cost data of the small ending branches used by the replacement table.
struct RepBranch {
    int degree;        // attached root degree
    int pend_pairs;    // number of sqrt(2)/2 internal edges
    bool has_43_edge;  // B_3** carries one f(4,3) edge
};

constexpr RepBranch kRepB2{3, 4, false};
constexpr RepBranch kRepB2s{3, 5, false};
constexpr RepBranch kRepB3{4, 6, false};
constexpr RepBranch kRepB3s{4, 7, false};
constexpr RepBranch kRepB3ss{4, 8, true};
constexpr RepBranch kRepB4{5, 8, false};
constexpr RepBranch kRepB5{6, 10, false};

// Cost of a subtree `v(children...)` attached with connector degree `dv` seen
// from a parent of degree dparent.
template <class R>
R rep_cost(const RepBranch& b, long long dparent) {
    R cost = fw<R>(dparent, b.degree) + num<R>(b.pend_pairs) * fw<R>(2, 2);
    if (b.has_43_edge) cost = cost + fw<R>(4, 3);
    return cost;
}

// Standard replacement multiset for a branch of nv vertices, following the
// residue of nv mod 7.  Returns false when nv is too small to admit it.
struct Mod7Rep {
    int b3_copies = 0;
    int extra_count = 0;
    RepBranch extras[2] = {};
};
bool mod7_replacement(long long nv, Mod7Rep& rep);

// Delta of removing a subtree T_v (v adjacent to R, members described by
// counts of B_1^-, B_2, B_2*, B_3, B_3*, B_3**, B_4, B_5 children) and
// attaching the standard replacement to R, with R's other sons at the
// worst-case degree 3.  alt_b4b5 switches to the B_4 + B_5 replacement used
// for the one 20-vertex case at large root degree.
template <class R>
R delta_mod7_replace(long long dR, const long long counts[8], bool alt_b4b5) {
    // counts: [b1m, b2, b2s, b3, b3s, b3ss, b4, b5]
    static const RepBranch kMember[8] = {RepBranch{2, 2, false}, kRepB2, kRepB2s, kRepB3,
                                         kRepB3s, kRepB3ss, kRepB4, kRepB5};
    static const long long kSize[8] = {2, 5, 6, 7, 8, 10, 9, 11};
    long long children = 0, nv = 1;
    for (int i = 0; i < 8; ++i) {
        children += counts[i];
        nv += counts[i] * kSize[i];
    }
    long long dv = children + 1;
    R before = fw<R>(dR, dv);
    for (int i = 0; i < 8; ++i)
        if (counts[i] > 0) before = before + num<R>(counts[i]) * rep_cost<R>(kMember[i], dv);

    Mod7Rep rep;
    long long reps = 0;
    if (alt_b4b5) {
        rep.b3_copies = 0;
        rep.extra_count = 2;
        rep.extras[0] = kRepB4;
        rep.extras[1] = kRepB5;
        reps = 2;
    } else {
        if (!mod7_replacement(nv, rep)) return num<R>(0);
        reps = rep.b3_copies + rep.extra_count;
    }
    long long dR2 = dR - 1 + reps;
    R after = num<R>(rep.b3_copies) * rep_cost<R>(kRepB3, dR2);
    for (int i = 0; i < rep.extra_count; ++i)
        after = after + rep_cost<R>(rep.extras[i], dR2);
    // R's other sons at degree 3 (worst case).
    R side = num<R>(dR - 1) * (fw<R>(dR, 3) - fw<R>(dR2, 3));
    return before - after + side;
}

// Specific degree-4 replacements (16 and 17 vertex cases).
template <class R>
R delta_degree4_case16(long long dP) {
    return fw<R>(dP, 4) + num<R>(3) * fw<R>(4, 3) - fw<R>(dP + 1, 4) - fw<R>(dP + 1, 5) -
           num<R>(2) * fw<R>(2, 2) + num<R>(dP - 1) * (fw<R>(dP, 3) - fw<R>(dP + 1, 3));
}

template <class R>
R delta_degree4_case17(long long dP) {
    return fw<R>(dP, 4) + num<R>(3) * fw<R>(4, 3) - fw<R>(dP + 2, 4) -
           num<R>(2) * fw<R>(dP + 2, 3) - fw<R>(2, 2) +
           num<R>(dP - 1) * (fw<R>(dP, 3) - fw<R>(dP + 2, 3));
}

// 3-3 edge eliminations.
template <class R>
R delta_r33(long long dR) {
    return fw<R>(dR, 3) + num<R>(2) * fw<R>(3, 3) - fw<R>(dR + 1, 5) - num<R>(2) * fw<R>(2, 2) +
           num<R>(dR - 1) * (fw<R>(dR, 3) - fw<R>(dR + 1, 3));
}

template <class R>
R delta_r3(long long dR) {
    return fw<R>(dR, 3) + fw<R>(3, 3) - fw<R>(dR, 4) - fw<R>(2, 2);
}

template <class R>
R delta_r4(long long dw) {
    return fw<R>(dw, 4) + fw<R>(4, 3) + fw<R>(3, 3) - fw<R>(dw + 1, 4) - fw<R>(dw + 1, 3) -
           fw<R>(2, 2);
}

// First case of the degree-4 k-k elimination figure.
template <class R>
R delta_k4_case1(long long dR) {
    return fw<R>(dR, 4) + num<R>(5) * fw<R>(4, 3) + fw<R>(4, 4) + num<R>(10) * fw<R>(3, 2) +
           num<R>(10) * fw<R>(2, 1) - num<R>(3) * fw<R>(dR + 2, 5) - num<R>(12) * fw<R>(5, 2) -
           num<R>(12) * fw<R>(2, 1) + num<R>(dR - 1) * (fw<R>(dR, 3) - fw<R>(dR + 2, 3));
}

}  // namespace abc::expr
