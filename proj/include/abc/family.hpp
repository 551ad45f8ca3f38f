#pragma once

#include <vector>

#include "abc/catalog.hpp"
#include "abc/enumerate.hpp"

namespace abc {

// c0 = (1/365) sqrt(1/53) (1 + 26 sqrt(55) + 156 sqrt(106))
double gamma_c0();

struct GammaBounds {
    long long n = 0;
    double lower = 0.0;
    double upper = 0.0;
    double c0 = 0.0;
};

// c0 n +- (365 c0 + (51/2) sqrt(1/53)) with the explicit next expansion term
// of sqrt(1 + 51/(r+1)) folded into both sides, r = floor((n-1)/365).
GammaBounds gamma_bounds(long long n);

struct FamilySearchOptions {
    bool paper_constraints = true;
    int threads = 1;
    double tie_tolerance = 1e-10;
    int max_ties = 16;
    bool prune = true;  // exact lower-bound pruning; results identical either way
    // Forces the direct multiset enumeration regardless of order (slow, used
    // to cross-check the window engine).
    bool force_exhaustive = false;
};

struct FamilySearchResult {
    long long n = 0;
    FamilyConfig best_config;
    double best_value = 0.0;
    std::vector<FamilyConfig> ties;  // within tie tolerance, succ-descending
    long long r = 0;                 // C-branches at the root
    long long s = 0;                 // B(3)-branches at the root
    SearchStats stats;
};

// Exhaustive minimization of closed_form_abc over catalog configs of order n.
FamilySearchResult family_search(long long n, const FamilySearchOptions& opts = {});

struct ScanRow {
    long long n = 0;
    long long r = 0;
    long long s = 0;
    double best_value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

std::vector<ScanRow> transition_scan(long long from, long long to,
                                     const FamilySearchOptions& opts = {});

// First n of each residue class mod 7 (index = n mod 7) with r >= 1 in the
// scanned range; -1 when the class never transitions in range.
std::vector<long long> transition_thresholds(const std::vector<ScanRow>& rows);

}  // namespace abc
