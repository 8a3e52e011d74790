#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wilsonx/poly.hpp"
#include "wilsonx/residue.hpp"

namespace wilsonx {

// Brute-force subset enumeration is refused above this universe bound
// (C(15,7) = 6435 subsets worst case, products up to 15! fit in 64 bits).
inline constexpr uint64_t kEnumerationBound = 16;

// The pair (n, c): modulus/universe bound and co-size parameter. Criterion
// operations need c <= n-2 so the subset size k = n-1-c stays >= 1.
struct CriterionInput {
    uint64_t n;
    uint64_t c;

    void validate() const;

    bool operator==(const CriterionInput&) const = default;
};

// Sum over all products of k-subsets of {1,...,n-1}, i.e. the elementary
// symmetric polynomial e_k(1,...,n-1) mod n. k = 0 is the empty product, 1.
Residue elem_sym_sum_mod(uint64_t n, uint64_t k);

struct SubsetProductSum {
    CriterionInput input;  // c = n-1-k
    uint64_t k;
    Residue value;

    bool operator==(const SubsetProductSum&) const = default;
};

SubsetProductSum subset_product_sum(uint64_t n, uint64_t k);

// S(n,c) = e_{n-1-c}(1,...,n-1) mod n, the degree-c coefficient of the
// truncated shifted product. Requires c <= n-1.
Residue s_residue(uint64_t n, uint64_t c);

// ((-1)^c + S(n,c)) * (c+1) mod n, with (-1)^c normalized into [0, n).
// Requires c <= n-2.
Residue extended_wilson_residue(uint64_t n, uint64_t c);

enum class FormKind { c_plus_one_times_prime, other };

struct Classification {
    FormKind kind = FormKind::other;
    uint64_t p = 0;           // the prime n/(c+1); 0 when kind is other
    bool applicable = false;  // n >= (2c+3)^2

    bool operator==(const Classification&) const = default;
};

Classification classify_form(uint64_t n, uint64_t c);

struct ScanRecord {
    uint64_t n = 0;
    uint64_t c = 0;
    uint64_t s_mod_n = 0;
    uint64_t criterion_mod_n = 0;
    Classification classification;
    bool criterion_passes = false;
    // Set only when applicable; below threshold the theory makes no claim.
    std::optional<bool> agrees_with_theory;

    bool operator==(const ScanRecord&) const = default;
};

// Assembles the full per-n verdict row. Never throws on disagreement; use
// criterion_verdict when a refutation must be surfaced as an error.
ScanRecord make_scan_record(uint64_t n, uint64_t c);

// As make_scan_record, reusing an already computed S(n,c) mod n.
ScanRecord record_from_s(uint64_t n, uint64_t c, uint64_t s_mod_n);

// Library-mode criterion check: throws theory_violation when the verdict
// contradicts the criterion on an applicable input.
ScanRecord criterion_verdict(uint64_t n, uint64_t c);

// Enumeration oracle: sums the products of all k-subsets of {1,...,n-1}
// with exact wide integers, then reduces mod n. Requires n <= 16.
Residue brute_force_sum(uint64_t n, uint64_t k);

// The multiset N_1[c]: products of c-subsets of {1,...,n-1} divisible by the
// product of all multiples of p below n, as exact integers in ascending
// order. Empty whenever there are more than c such multiples. Requires
// n <= 16, p prime, p <= n.
std::vector<uint64_t> build_restricted_products(uint64_t n, uint64_t c,
                                                uint64_t p);

// Eq-check: sum over N[n-1-c] of M is congruent mod p to the sum over
// N_1[c] of (n-1)!/M. Requires n <= 16 and p a prime dividing n.
bool eq3_congruence_check(uint64_t n, uint64_t c, uint64_t p);

// Exact integer identity: sum over N[n-1-c] of M equals the sum over N[c]
// of (n-1)!/M. Requires n <= 16.
bool complement_identity_check(uint64_t n, uint64_t c);

// (n-1)! mod n by running product; equals n-1 iff n is prime (n > 1).
Residue classic_wilson_residue(uint64_t n);

}  // namespace wilsonx
