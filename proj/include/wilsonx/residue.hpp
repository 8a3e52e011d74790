#pragma once

#include <cstdint>
#include <stdexcept>

#include "wilsonx/errors.hpp"

namespace wilsonx {

// Moduli must be strictly below 2^62 so that a*b fits a 128-bit intermediate
// with headroom and every residue is representable as a signed 64-bit value.
inline constexpr uint64_t kModulusLimit = uint64_t{1} << 62;

inline uint64_t checked_modulus(uint64_t modulus) {
    if (modulus < 2) throw std::domain_error("modulus must be >= 2");
    if (modulus >= kModulusLimit)
        throw width_error("modulus must be < 2^62");
    return modulus;
}

// Canonical representative of an integer class modulo an explicit modulus.
// Always stored in [0, modulus); signed inputs are normalized on construction,
// so equality is bit-exact.
class Residue {
public:
    Residue() = default;

    Residue(int64_t value, uint64_t modulus) : m_(checked_modulus(modulus)) {
        int64_t r = value % static_cast<int64_t>(m_);
        if (r < 0) r += static_cast<int64_t>(m_);
        v_ = static_cast<uint64_t>(r);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return m_; }

    bool operator==(const Residue&) const = default;

private:
    uint64_t v_ = 0;
    uint64_t m_ = 2;
};

// (a*b) mod m through a 128-bit intermediate; exact for all supported moduli.
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline Residue mulmod(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus())
        throw usage_error("mulmod: operands have different moduli");
    return Residue(static_cast<int64_t>(mulmod_u64(a.value(), b.value(), a.modulus())),
                   a.modulus());
}

}  // namespace wilsonx
