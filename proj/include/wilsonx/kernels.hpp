#pragma once

#include <cstddef>
#include <cstdint>

// Inner-loop kernels for the truncated shifted product
//
//     prod_{m=1}^{n-1} (x + m)  mod (n, x^{c+1})
//
// computed by multiplying one factor at a time. Each step maps the
// coefficient vector a[0..c] to
//
//     a[j] <- a[j]*m + a[j-1]  (mod n),      a[0] <- a[0]*m  (mod n),
//
// one modular multiply-add per coefficient, so a full run performs exactly
// (n-1)*(c+1) of them. The scalar kernel is the reference; the AVX2 variants
// must agree with it bit for bit on their supported modulus range and are
// selected at runtime.

namespace wilsonx::kernels {

// The f64 kernels keep residues in doubles. With n <= 2^26 every intermediate
// a*m + b is an integer below 2^52 + 2^26 < 2^53, so all products, FMAs and
// the final subtraction in the reduction are exact.
inline constexpr uint64_t kF64ModulusLimit = uint64_t{1} << 26;

// Reference kernel, exact for any modulus < 2^62. Writes coefficients of
// degree 0..c into out[0..c]. Returns the multiply-add count (n-1)*(c+1).
uint64_t product_scalar(uint64_t n, uint64_t c, uint64_t* out);

// One independent modulus per lane; out is lane-major: out[lane*(c+1) + j].
void product_batch_scalar(const uint64_t* ns, std::size_t lanes, uint64_t c,
                          uint64_t* out);

// True when the CPU can run the AVX2+FMA kernels.
bool avx2_supported();

// AVX2 kernels. Require every modulus <= kF64ModulusLimit and c <= n-1 per
// lane. Outside x86-64 they delegate to the scalar path.
uint64_t product_avx2(uint64_t n, uint64_t c, uint64_t* out);
void product_batch_avx2(const uint64_t* ns, std::size_t lanes, uint64_t c,
                        uint64_t* out);

enum class Backend { autodetect, scalar, avx2 };

// Diagnostic override from WILSONX_KERNEL=scalar|avx2|auto. An override is
// honored only where the kernel is applicable; otherwise scalar runs.
Backend forced_backend();

// Name of the kernel product()/product_batch() would select.
const char* backend_name(uint64_t max_modulus, uint64_t c);

// Runtime-dispatched entry points. Preconditions: 2 <= n < 2^62, c <= n-1.
uint64_t product(uint64_t n, uint64_t c, uint64_t* out);
void product_batch(const uint64_t* ns, std::size_t lanes, uint64_t c,
                   uint64_t* out);

}  // namespace wilsonx::kernels
