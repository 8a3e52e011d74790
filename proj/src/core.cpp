#include "wilsonx/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wilsonx/errors.hpp"
#include "wilsonx/numtheory.hpp"

namespace wilsonx {

namespace {

// Visits every k-subset of {1,...,limit} in lexicographic order as a sorted
// index vector. Caller guarantees the count is small (limit <= 15 here).
template <typename Visit>
void for_each_subset(uint64_t limit, uint64_t k, Visit&& visit) {
    if (k > limit) return;
    std::vector<uint64_t> idx(k);
    std::iota(idx.begin(), idx.end(), uint64_t{1});
    const auto& view = idx;
    for (;;) {
        visit(view);
        if (k == 0) return;
        size_t i = k;
        while (i > 0 && idx[i - 1] == limit - (k - i)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

uint64_t subset_product(const std::vector<uint64_t>& idx) {
    uint64_t prod = 1;
    for (uint64_t m : idx) prod *= m;  // <= 15! for limit <= 15
    return prod;
}

// Exact sum over all products of k-subsets of {1,...,limit}; fits well
// inside 128 bits (at most C(15,7) * 15! ~ 2^53 terms-bits).
unsigned __int128 exact_subset_sum(uint64_t limit, uint64_t k) {
    unsigned __int128 sum = 0;
    for_each_subset(limit, k,
                    [&](const std::vector<uint64_t>& idx) { sum += subset_product(idx); });
    return sum;
}

void require_enumerable(uint64_t n, const char* who) {
    if (n > kEnumerationBound)
        throw refusal_error(std::string(who) + ": n exceeds enumeration bound " +
                            std::to_string(kEnumerationBound));
}

uint64_t criterion_from_s(uint64_t n, uint64_t c, uint64_t s_mod_n) {
    const uint64_t sign = (c % 2 == 0) ? 1 % n : n - 1;
    const uint64_t base = (sign + s_mod_n) % n;
    return mulmod_u64(base, (c + 1) % n, n);
}

}  // namespace

void CriterionInput::validate() const {
    checked_modulus(n);
    if (c > n - 2)
        throw std::domain_error("criterion input: c <= n-2 required (got c=" +
                                std::to_string(c) + ", n=" + std::to_string(n) +
                                ")");
}

Residue elem_sym_sum_mod(uint64_t n, uint64_t k) {
    checked_modulus(n);
    if (k > n - 1)
        throw std::domain_error("elem_sym_sum_mod: k <= n-1 required");
    if (k == 0) return Residue(1, n);
    const uint64_t c = n - 1 - k;
    return truncated_shifted_product(n, c).coeff(c);
}

SubsetProductSum subset_product_sum(uint64_t n, uint64_t k) {
    Residue value = elem_sym_sum_mod(n, k);
    return SubsetProductSum{CriterionInput{n, n - 1 - k}, k, value};
}

Residue s_residue(uint64_t n, uint64_t c) {
    checked_modulus(n);
    if (c > n - 1)
        throw std::domain_error("s_residue: c <= n-1 required");
    return truncated_shifted_product(n, c).coeff(c);
}

Residue extended_wilson_residue(uint64_t n, uint64_t c) {
    CriterionInput{n, c}.validate();
    const uint64_t s = s_residue(n, c).value();
    return Residue(static_cast<int64_t>(criterion_from_s(n, c, s)), n);
}

Classification classify_form(uint64_t n, uint64_t c) {
    checked_modulus(n);
    Classification out;
    const unsigned __int128 root = 2 * static_cast<unsigned __int128>(c) + 3;
    const unsigned __int128 threshold = root * root;
    out.applicable = static_cast<unsigned __int128>(n) >= threshold;
    const uint64_t divisor = c + 1;
    if (divisor <= n && n % divisor == 0) {
        const uint64_t q = n / divisor;
        if (is_prime(q)) {
            out.kind = FormKind::c_plus_one_times_prime;
            out.p = q;
        }
    }
    return out;
}

ScanRecord record_from_s(uint64_t n, uint64_t c, uint64_t s_mod_n) {
    ScanRecord rec;
    rec.n = n;
    rec.c = c;
    rec.s_mod_n = s_mod_n;
    rec.criterion_mod_n = criterion_from_s(n, c, s_mod_n);
    rec.classification = classify_form(n, c);
    rec.criterion_passes = rec.criterion_mod_n == 0;
    if (rec.classification.applicable) {
        const bool predicted =
            rec.classification.kind == FormKind::c_plus_one_times_prime;
        rec.agrees_with_theory = (rec.criterion_passes == predicted);
    }
    return rec;
}

ScanRecord make_scan_record(uint64_t n, uint64_t c) {
    CriterionInput{n, c}.validate();
    return record_from_s(n, c, s_residue(n, c).value());
}

ScanRecord criterion_verdict(uint64_t n, uint64_t c) {
    ScanRecord rec = make_scan_record(n, c);
    if (rec.agrees_with_theory.has_value() && !*rec.agrees_with_theory) {
        throw theory_violation(
            n, c,
            "criterion verdict contradicts theory at n=" + std::to_string(n) +
                ", c=" + std::to_string(c) + " (criterion " +
                (rec.criterion_passes ? "passes" : "fails") + ", form " +
                (rec.classification.kind == FormKind::c_plus_one_times_prime
                     ? "(c+1)p"
                     : "other") +
                ")");
    }
    return rec;
}

Residue brute_force_sum(uint64_t n, uint64_t k) {
    checked_modulus(n);
    require_enumerable(n, "brute_force_sum");
    if (k > n - 1)
        throw std::domain_error("brute_force_sum: k <= n-1 required");
    const unsigned __int128 sum = exact_subset_sum(n - 1, k);
    return Residue(static_cast<int64_t>(sum % n), n);
}

std::vector<uint64_t> build_restricted_products(uint64_t n, uint64_t c,
                                                uint64_t p) {
    checked_modulus(n);
    require_enumerable(n, "build_restricted_products");
    if (!is_prime(p) || p > n)
        throw std::domain_error(
            "build_restricted_products: p must be a prime <= n");
    if (c > n - 1)
        throw std::domain_error("build_restricted_products: c <= n-1 required");

    const uint64_t multiple_count = (n - 1) / p;
    if (multiple_count > c) return {};
    uint64_t required = 1;
    for (uint64_t m = p; m < n; m += p) required *= m;

    std::vector<uint64_t> out;
    for_each_subset(n - 1, c, [&](const std::vector<uint64_t>& idx) {
        const uint64_t prod = subset_product(idx);
        if (prod % required == 0) out.push_back(prod);
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool eq3_congruence_check(uint64_t n, uint64_t c, uint64_t p) {
    checked_modulus(n);
    require_enumerable(n, "eq3_congruence_check");
    if (!is_prime(p) || n % p != 0)
        throw std::domain_error(
            "eq3_congruence_check: p must be a prime divisor of n");
    if (c > n - 1)
        throw std::domain_error("eq3_congruence_check: c <= n-1 required");

    const unsigned __int128 lhs = exact_subset_sum(n - 1, n - 1 - c);

    uint64_t factorial = 1;
    for (uint64_t m = 2; m < n; ++m) factorial *= m;
    unsigned __int128 rhs = 0;
    for (uint64_t prod : build_restricted_products(n, c, p))
        rhs += factorial / prod;

    return lhs % p == rhs % p;
}

bool complement_identity_check(uint64_t n, uint64_t c) {
    checked_modulus(n);
    require_enumerable(n, "complement_identity_check");
    if (c > n - 1)
        throw std::domain_error("complement_identity_check: c <= n-1 required");

    const unsigned __int128 lhs = exact_subset_sum(n - 1, n - 1 - c);

    uint64_t factorial = 1;
    for (uint64_t m = 2; m < n; ++m) factorial *= m;
    unsigned __int128 rhs = 0;
    for_each_subset(n - 1, c, [&](const std::vector<uint64_t>& idx) {
        rhs += factorial / subset_product(idx);
    });
    return lhs == rhs;
}

Residue classic_wilson_residue(uint64_t n) {
    checked_modulus(n);
    uint64_t acc = 1 % n;
    for (uint64_t m = 2; m < n; ++m) acc = mulmod_u64(acc, m % n, n);
    return Residue(static_cast<int64_t>(acc), n);
}

}  // namespace wilsonx
