#pragma once

#include <cstdint>
#include <vector>

#include "wilsonx/residue.hpp"

namespace wilsonx {

// Deterministic and exact for all 64-bit inputs: trial division below 10^6,
// strong-pseudoprime test with a witness set proven complete for 64 bits
// above.
bool is_prime(uint64_t n);

std::vector<uint64_t> primes_up_to(uint64_t limit);

// p^a || n together with the largest x such that p^x <= n < p^{x+1}.
struct PrimePower {
    uint64_t p;
    uint32_t a;
    uint32_t x;
    uint64_t n;

    bool operator==(const PrimePower&) const = default;
};

// Full factorization of n as PrimePower records, ascending in p.
// The product of the p^a reconstructs n; each record satisfies a <= x.
std::vector<PrimePower> prime_power_decompose(uint64_t n);

// nu_p(m!) = floor(m/p) + floor(m/p^2) + ..., the exponent of the largest
// power of p dividing m!. Throws std::domain_error if p is not prime.
uint64_t legendre_valuation(uint64_t m, uint64_t p);

struct FactorialValuation {
    uint64_t m;
    uint64_t p;
    uint64_t nu;

    bool operator==(const FactorialValuation&) const = default;
};

FactorialValuation factorial_valuation(uint64_t m, uint64_t p);

// prod_{m < n, p !| m} m  (mod modulus). Requires p prime, p <= n.
Residue restricted_factorial_mod(uint64_t n, uint64_t p, uint64_t modulus);

// Verdict of an analytic inequality check. When the two sides land within
// 1e-9 relative of each other, the comparison is re-verified exactly on a
// logarithm-free integer form where possible; `boundary` is set when no
// exact certificate could decide and the verdict rests on extended-precision
// floating point.
struct LemmaCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool boundary = false;
};

// 15n/16 > (sqrt(n)+1) ln(n) / (2 ln 2). Requires n >= 1. True for every
// n >= 25.
LemmaCheck lemma1_holds(uint64_t n);

// (n/p - 1) * ln(p)/ln(n) >= (sqrt(n)-1)/2 for primes 3 <= p <= sqrt(n).
// Throws std::domain_error when p < 3, p is not prime, or p^2 > n.
LemmaCheck lemma2_holds(uint64_t n, uint64_t p);

// Expands (x-1)(x-2)...(x-(p-1)) with exact big-integer coefficients and
// checks coefficient-wise congruence with x^{p-1} - 1 mod p. True for every
// prime; may be (and for p = 4 is) false for composites. Requires p >= 2.
bool falling_factorial_congruence_check(uint64_t p);

// floor((n-1)/k) >= n/k - 1 for n, k >= 2, compared exactly in integers as
// k*(floor((n-1)/k) + 1) >= n.
bool floor_property3_check(uint64_t n, uint64_t k);

}  // namespace wilsonx
