#include "wilsonx/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace wilsonx::kernels {

bool avx2_supported() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend forced_backend() {
    static const Backend cached = [] {
        const char* env = std::getenv("WILSONX_KERNEL");
        if (env == nullptr) return Backend::autodetect;
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
        return Backend::autodetect;
    }();
    return cached;
}

namespace {

bool avx2_usable(uint64_t max_modulus) {
    return avx2_supported() && max_modulus <= kF64ModulusLimit;
}

// The coefficient-lane kernel only pays for itself once a vector is full;
// autodetect keeps c < 3 on the scalar path.
bool pick_avx2_single(uint64_t n, uint64_t c) {
    switch (forced_backend()) {
        case Backend::scalar: return false;
        case Backend::avx2: return avx2_usable(n);
        case Backend::autodetect: return avx2_usable(n) && c >= 3;
    }
    return false;
}

bool pick_avx2_batch(uint64_t max_modulus) {
    return forced_backend() != Backend::scalar && avx2_usable(max_modulus);
}

}  // namespace

const char* backend_name(uint64_t max_modulus, uint64_t c) {
    return pick_avx2_single(max_modulus, c) ? "avx2" : "scalar";
}

uint64_t product(uint64_t n, uint64_t c, uint64_t* out) {
    if (pick_avx2_single(n, c)) return product_avx2(n, c, out);
    return product_scalar(n, c, out);
}

void product_batch(const uint64_t* ns, std::size_t lanes, uint64_t c,
                   uint64_t* out) {
    if (lanes == 0) return;
    const uint64_t max_modulus = *std::max_element(ns, ns + lanes);
    if (pick_avx2_batch(max_modulus)) {
        product_batch_avx2(ns, lanes, c, out);
    } else {
        product_batch_scalar(ns, lanes, c, out);
    }
}

}  // namespace wilsonx::kernels
