#include "abc/weights.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace abc {
namespace {

__attribute__((target("avx2"))) inline __m256d f4(__m256d x, __m256d y) {
    const __m256d two = _mm256_set1_pd(2.0);
    __m256d num = _mm256_sub_pd(_mm256_add_pd(x, y), two);
    return _mm256_sqrt_pd(_mm256_div_pd(num, _mm256_mul_pd(x, y)));
}

__attribute__((target("avx2")))
void map_pairs_avx2(const double* x, const double* y, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, f4(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) out[i] = edge_weight_raw(x[i], y[i]);
}

__attribute__((target("avx2")))
void map_const_x_avx2(double x, const double* y, double* out, std::size_t n) {
    const __m256d xv = _mm256_set1_pd(x);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, f4(xv, _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) out[i] = edge_weight_raw(x, y[i]);
}

__attribute__((target("avx2")))
void map_const_y_avx2(const double* x, double y, double* out, std::size_t n) {
    const __m256d yv = _mm256_set1_pd(y);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, f4(_mm256_loadu_pd(x + i), yv));
    for (; i < n; ++i) out[i] = edge_weight_raw(x[i], y);
}

__attribute__((target("avx2")))
double sum_pairs_avx2(const double* x, const double* y, std::size_t n) {
    __m256d accv = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        accv = _mm256_add_pd(accv, f4(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    alignas(32) double acc[4];
    _mm256_store_pd(acc, accv);
    for (; i < n; ++i) acc[i & 3] += edge_weight_raw(x[i], y[i]);
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace

const WeightKernel* avx2_kernel() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const WeightKernel k{"avx2", map_pairs_avx2, map_const_x_avx2,
                                map_const_y_avx2, sum_pairs_avx2};
    return &k;
}

}  // namespace abc

#else

namespace abc {
const WeightKernel* avx2_kernel() { return nullptr; }
}  // namespace abc

#endif
