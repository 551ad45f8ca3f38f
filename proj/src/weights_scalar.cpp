#include "abc/weights.hpp"

#include <stdexcept>
#include <string>

namespace abc {

double edge_weight(long long x, long long y) {
    if (x <= 0 || y <= 0) {
        throw std::domain_error("edge_weight: degrees must be positive, got (" +
                                std::to_string(x) + ", " + std::to_string(y) + ")");
    }
    return edge_weight_raw(static_cast<double>(x), static_cast<double>(y));
}

namespace {

void map_pairs_scalar(const double* x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = edge_weight_raw(x[i], y[i]);
}

void map_const_x_scalar(double x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = edge_weight_raw(x, y[i]);
}

void map_const_y_scalar(const double* x, double y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = edge_weight_raw(x[i], y);
}

double sum_pairs_scalar(const double* x, const double* y, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc[i & 3] += edge_weight_raw(x[i], y[i]);
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace

const WeightKernel& scalar_kernel() {
    static const WeightKernel k{"scalar", map_pairs_scalar, map_const_x_scalar,
                                map_const_y_scalar, sum_pairs_scalar};
    return k;
}

}  // namespace abc
