#pragma once

#include <cmath>
#include <cstddef>
#include <string_view>

namespace abc {

// Edge weight of a degree pair: f(x,y) = sqrt((x + y - 2) / (x * y)).
// Integer degrees below 2^26 keep numerator and product exact, so the value
// depends only on correctly rounded divide/sqrt and is bit-stable across
// scalar and SIMD paths.
inline double edge_weight_raw(double x, double y) noexcept {
    return std::sqrt((x + y - 2.0) / (x * y));
}

// Validated form; rejects non-positive degrees.
double edge_weight(long long x, long long y);

// Batched kernels.  All variants of one operation produce bit-identical
// results: elementwise maps are trivially so, and sums follow a fixed
// four-accumulator schedule (accumulator j takes elements with index = j mod 4,
// final reduction (a0+a1)+(a2+a3)).
struct WeightKernel {
    std::string_view name;
    void (*map_pairs)(const double* x, const double* y, double* out, std::size_t n);
    void (*map_const_x)(double x, const double* y, double* out, std::size_t n);
    void (*map_const_y)(const double* x, double y, double* out, std::size_t n);
    double (*sum_pairs)(const double* x, const double* y, std::size_t n);
};

const WeightKernel& scalar_kernel();
const WeightKernel* avx2_kernel();  // null when unsupported by the build/CPU
const WeightKernel* neon_kernel();

// Kernel picked at startup: ABC_KERNEL=scalar|avx2|neon overrides, otherwise
// the widest supported variant wins.
const WeightKernel& active_kernel();

}  // namespace abc
