#include "wilsonx/poly.hpp"

#include <stdexcept>
#include <utility>

#include "wilsonx/kernels.hpp"

namespace wilsonx {

TruncatedPoly::TruncatedPoly(uint64_t modulus, uint64_t degree_bound,
                             std::vector<uint64_t> coeffs)
    : modulus_(checked_modulus(modulus)),
      degree_bound_(degree_bound),
      coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != degree_bound_ + 1)
        throw usage_error("TruncatedPoly: need degree_bound + 1 coefficients");
    for (uint64_t v : coeffs_) {
        if (v >= modulus_)
            throw std::domain_error("TruncatedPoly: coefficient not reduced");
    }
}

Residue TruncatedPoly::coeff(uint64_t j) const {
    if (j > degree_bound_)
        throw std::domain_error("TruncatedPoly: degree out of range");
    return Residue(static_cast<int64_t>(coeffs_[j]), modulus_);
}

TruncatedPoly truncated_shifted_product(uint64_t n, uint64_t c,
                                        uint64_t* op_count) {
    checked_modulus(n);
    if (c > n - 1)
        throw std::domain_error(
            "truncated_shifted_product: c <= n-1 required "
            "(subset size would be negative)");
    std::vector<uint64_t> coeffs(c + 1);
    const uint64_t ops = kernels::product(n, c, coeffs.data());
    if (op_count != nullptr) *op_count = ops;
    return TruncatedPoly(n, c, std::move(coeffs));
}

}  // namespace wilsonx
