#pragma once

#include <stdexcept>
#include <string>

namespace wilsonx {

// Bad call shape: mismatched moduli, malformed CLI arguments, invalid scan
// configuration. Maps to exit code 1 in the CLI.
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Modulus beyond the supported integer width. Exit code 1.
struct width_error : std::domain_error {
    explicit width_error(const std::string& msg) : std::domain_error(msg) {}
};

// Input past the brute-force enumeration bound. Exit code 1.
struct refusal_error : std::domain_error {
    explicit refusal_error(const std::string& msg) : std::domain_error(msg) {}
};

// A computed verdict contradicts the criterion on its applicable domain.
// Mathematically impossible; raised so an implementation bug cannot pass
// silently. Exit code 2.
struct theory_violation : std::runtime_error {
    theory_violation(uint64_t n, uint64_t c, const std::string& msg)
        : std::runtime_error(msg), n(n), c(c) {}
    uint64_t n;
    uint64_t c;
};

}  // namespace wilsonx
