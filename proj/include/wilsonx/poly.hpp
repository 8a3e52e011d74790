#pragma once

#include <cstdint>
#include <vector>

#include "wilsonx/residue.hpp"

namespace wilsonx {

// Coefficients of a polynomial over Z/nZ truncated to degree <= c.
// coeffs()[j] is the coefficient of x^j, canonical in [0, modulus).
class TruncatedPoly {
public:
    TruncatedPoly(uint64_t modulus, uint64_t degree_bound,
                  std::vector<uint64_t> coeffs);

    uint64_t modulus() const { return modulus_; }
    uint64_t degree_bound() const { return degree_bound_; }
    const std::vector<uint64_t>& coeffs() const { return coeffs_; }

    Residue coeff(uint64_t j) const;

    bool operator==(const TruncatedPoly&) const = default;

private:
    uint64_t modulus_;
    uint64_t degree_bound_;
    std::vector<uint64_t> coeffs_;
};

// prod_{m=1}^{n-1} (x + m) mod (n, x^{c+1}). The coefficient of x^j equals
// e_{n-1-j}(1, ..., n-1) mod n, the sum over all products of (n-1-j)-subsets
// of {1, ..., n-1}. O(n*c) multiply-adds, O(c) space; the exact multiply-add
// count is stored in *op_count when given.
// Requires 2 <= n < 2^62 and c <= n-1.
TruncatedPoly truncated_shifted_product(uint64_t n, uint64_t c,
                                        uint64_t* op_count = nullptr);

}  // namespace wilsonx
