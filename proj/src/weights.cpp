#include "abc/weights.hpp"

#include <cstdlib>
#include <cstring>

namespace abc {

namespace {

const WeightKernel& pick_kernel() {
    const char* forced = std::getenv("ABC_KERNEL");
    if (forced != nullptr) {
        if (std::strcmp(forced, "scalar") == 0) return scalar_kernel();
        if (std::strcmp(forced, "avx2") == 0 && avx2_kernel() != nullptr) return *avx2_kernel();
        if (std::strcmp(forced, "neon") == 0 && neon_kernel() != nullptr) return *neon_kernel();
        return scalar_kernel();
    }
    if (const WeightKernel* k = avx2_kernel()) return *k;
    if (const WeightKernel* k = neon_kernel()) return *k;
    return scalar_kernel();
}

}  // namespace

const WeightKernel& active_kernel() {
    static const WeightKernel& k = pick_kernel();
    return k;
}

}  // namespace abc
