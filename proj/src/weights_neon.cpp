#include "abc/weights.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace abc {
namespace {

inline float64x2_t f2(float64x2_t x, float64x2_t y) {
    float64x2_t num = vsubq_f64(vaddq_f64(x, y), vdupq_n_f64(2.0));
    return vsqrtq_f64(vdivq_f64(num, vmulq_f64(x, y)));
}

void map_pairs_neon(const double* x, const double* y, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, f2(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) out[i] = edge_weight_raw(x[i], y[i]);
}

void map_const_x_neon(double x, const double* y, double* out, std::size_t n) {
    const float64x2_t xv = vdupq_n_f64(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, f2(xv, vld1q_f64(y + i)));
    for (; i < n; ++i) out[i] = edge_weight_raw(x, y[i]);
}

void map_const_y_neon(const double* x, double y, double* out, std::size_t n) {
    const float64x2_t yv = vdupq_n_f64(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(out + i, f2(vld1q_f64(x + i), yv));
    for (; i < n; ++i) out[i] = edge_weight_raw(x[i], y);
}

// Two 2-lane accumulators reproduce the canonical four-lane schedule:
// lanes of accA hold indices = 0,1 (mod 4), accB the 2,3 (mod 4) ones.
double sum_pairs_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t accA = vdupq_n_f64(0.0), accB = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        accA = vaddq_f64(accA, f2(vld1q_f64(x + i), vld1q_f64(y + i)));
        accB = vaddq_f64(accB, f2(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
    }
    double acc[4] = {vgetq_lane_f64(accA, 0), vgetq_lane_f64(accA, 1),
                     vgetq_lane_f64(accB, 0), vgetq_lane_f64(accB, 1)};
    for (; i < n; ++i) acc[i & 3] += edge_weight_raw(x[i], y[i]);
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace

const WeightKernel* neon_kernel() {
    static const WeightKernel k{"neon", map_pairs_neon, map_const_x_neon,
                                map_const_y_neon, sum_pairs_neon};
    return &k;
}

}  // namespace abc

#else

namespace abc {
const WeightKernel* neon_kernel() { return nullptr; }
}  // namespace abc

#endif
