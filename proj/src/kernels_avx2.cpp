// AVX2+FMA variants of the truncated-product kernel. This translation unit is
// compiled with -mavx2 -mfma; nothing here may run unless avx2_supported()
// returned true.
//
// Residues live in double lanes. All inputs stay below kF64ModulusLimit =
// 2^26, so a*m + b <= (n-1)*n < 2^53 and every product, FMA and difference
// below is an exactly representable integer: the kernels are bit-exact.

#include "wilsonx/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace wilsonx::kernels {

namespace {

// v mod n per lane for integer-valued v in [0, 2^53). floor(v/n) estimated
// through the precomputed reciprocal can be off by one either way, hence the
// two fixups.
inline __m256d mod_reduce(__m256d v, __m256d n, __m256d inv_n) {
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, inv_n));
    __m256d r = _mm256_fnmadd_pd(q, n, v);  // v - q*n, exact
    __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(neg, n));
    __m256d big = _mm256_cmp_pd(r, n, _CMP_GE_OQ);
    r = _mm256_sub_pd(r, _mm256_and_pd(big, n));
    return r;
}

}  // namespace

// Lanes are the coefficients a[0..c], padded up to a multiple of four. One
// guard slot below degree 0 holds a permanent zero so the lowest block can
// use the same shifted load as the rest. Blocks are updated from high degree
// to low so each shifted load still sees the previous step's values.
uint64_t product_avx2(uint64_t n, uint64_t c, uint64_t* out) {
    const std::size_t width = static_cast<std::size_t>(c) + 1;
    const std::size_t padded = (width + 3) & ~std::size_t{3};
    std::vector<double> buf(padded + 1, 0.0);
    double* a = buf.data() + 1;
    a[0] = 1.0;

    const __m256d nv = _mm256_set1_pd(static_cast<double>(n));
    const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(n));
    for (uint64_t m = 1; m < n; ++m) {
        const __m256d mv = _mm256_set1_pd(static_cast<double>(m));
        for (std::size_t j = padded; j != 0;) {
            j -= 4;
            const __m256d cur = _mm256_loadu_pd(a + j);
            const __m256d below = _mm256_loadu_pd(a + j - 1);
            _mm256_storeu_pd(a + j, mod_reduce(_mm256_fmadd_pd(cur, mv, below), nv, inv));
        }
    }
    for (std::size_t j = 0; j < width; ++j)
        out[j] = static_cast<uint64_t>(a[j]);
    return (n - 1) * (c + 1);
}

// Four moduli at a time, one per lane; coefficient j of all four lives in
// cf[j]. m runs to the largest n-1 in the group; lanes whose n is already
// exhausted keep their final coefficients through the blend.
void product_batch_avx2(const uint64_t* ns, std::size_t lanes, uint64_t c,
                        uint64_t* out) {
    const std::size_t width = static_cast<std::size_t>(c) + 1;
    std::vector<__m256d> cf(width);

    for (std::size_t base = 0; base < lanes; base += 4) {
        const std::size_t group = std::min<std::size_t>(4, lanes - base);
        alignas(32) double nd[4];
        uint64_t n_max = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            const uint64_t ni = ns[base + (i < group ? i : group - 1)];
            nd[i] = static_cast<double>(ni);
            n_max = std::max(n_max, ni);
        }
        const __m256d nv = _mm256_load_pd(nd);
        const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), nv);
        const __m256d m_limit = _mm256_sub_pd(nv, _mm256_set1_pd(1.0));

        cf[0] = _mm256_set1_pd(1.0);
        for (std::size_t j = 1; j < width; ++j) cf[j] = _mm256_setzero_pd();

        for (uint64_t m = 1; m < n_max; ++m) {
            const __m256d mv = _mm256_set1_pd(static_cast<double>(m));
            const __m256d active = _mm256_cmp_pd(mv, m_limit, _CMP_LE_OQ);
            for (std::size_t j = width; j-- > 1;) {
                const __m256d r =
                    mod_reduce(_mm256_fmadd_pd(cf[j], mv, cf[j - 1]), nv, inv);
                cf[j] = _mm256_blendv_pd(cf[j], r, active);
            }
            const __m256d r0 = mod_reduce(_mm256_mul_pd(cf[0], mv), nv, inv);
            cf[0] = _mm256_blendv_pd(cf[0], r0, active);
        }

        alignas(32) double tmp[4];
        for (std::size_t j = 0; j < width; ++j) {
            _mm256_store_pd(tmp, cf[j]);
            for (std::size_t i = 0; i < group; ++i)
                out[(base + i) * width + j] = static_cast<uint64_t>(tmp[i]);
        }
    }
}

}  // namespace wilsonx::kernels

#else  // !__x86_64__

namespace wilsonx::kernels {

uint64_t product_avx2(uint64_t n, uint64_t c, uint64_t* out) {
    return product_scalar(n, c, out);
}

void product_batch_avx2(const uint64_t* ns, std::size_t lanes, uint64_t c,
                        uint64_t* out) {
    product_batch_scalar(ns, lanes, c, out);
}

}  // namespace wilsonx::kernels

#endif
