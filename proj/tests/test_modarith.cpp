#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wilsonx/core.hpp"
#include "wilsonx/errors.hpp"
#include "wilsonx/poly.hpp"
#include "wilsonx/residue.hpp"

using namespace wilsonx;

namespace {

// Double-and-add reference: never multiplies two wide values, so it cannot
// share an overflow bug with mulmod_u64.
uint64_t mulmod_reference(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t result = 0;
    a %= m;
    while (b > 0) {
        if (b & 1) {
            result += a;
            if (result >= m || result < a) result -= m;
        }
        b >>= 1;
        uint64_t doubled = a + a;
        if (doubled >= m || doubled < a) doubled -= m;
        a = doubled;
    }
    return result;
}

uint64_t factorial_mod(uint64_t n) {
    uint64_t acc = 1 % n;
    for (uint64_t m = 2; m < n; ++m) acc = mulmod_u64(acc, m, n);
    return acc;
}

}  // namespace

TEST_CASE("residues normalize into [0, modulus)") {
    CHECK(Residue(13, 5).value() == 3);
    CHECK(Residue(-1, 7) == Residue(6, 7));
    CHECK(Residue(-15, 7).value() == 6);
    CHECK(Residue(0, 2).value() == 0);
    CHECK(Residue(3, 5) != Residue(3, 7));
}

TEST_CASE("modulus width limits") {
    CHECK_THROWS_AS(Residue(0, 0), std::domain_error);
    CHECK_THROWS_AS(Residue(0, 1), std::domain_error);
    CHECK_THROWS_AS(Residue(0, uint64_t{1} << 62), width_error);
    CHECK_THROWS_AS(Residue(0, (uint64_t{1} << 62) + 5), width_error);
    CHECK_NOTHROW(Residue(0, (uint64_t{1} << 62) - 1));
    CHECK(checked_modulus(2) == 2);
}

TEST_CASE("mulmod basics") {
    CHECK(mulmod(Residue(7, 10), Residue(8, 10)) == Residue(6, 10));
    CHECK(mulmod(Residue(0, 97), Residue(55, 97)) == Residue(0, 97));
    CHECK(mulmod(Residue(41, 97), Residue(1, 97)) == Residue(41, 97));
    CHECK_THROWS_AS(mulmod(Residue(1, 5), Residue(1, 7)), usage_error);
}

TEST_CASE("mulmod is exact up to the width limit") {
    std::mt19937_64 rng(20230711);
    const uint64_t top = (uint64_t{1} << 62) - 1;
    for (int i = 0; i < 2000; ++i) {
        const uint64_t m = 2 + rng() % (top - 1);
        const uint64_t a = rng() % m;
        const uint64_t b = rng() % m;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(m);
        REQUIRE(mulmod_u64(a, b, m) == mulmod_reference(a, b, m));
    }
}

TEST_CASE("mulmod commutes and associates") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 500; ++i) {
        const uint64_t m = 2 + rng() % ((uint64_t{1} << 62) - 2);
        Residue a(static_cast<int64_t>(rng() % m), m);
        Residue b(static_cast<int64_t>(rng() % m), m);
        Residue c(static_cast<int64_t>(rng() % m), m);
        CHECK(mulmod(a, b) == mulmod(b, a));
        CHECK(mulmod(mulmod(a, b), c) == mulmod(a, mulmod(b, c)));
    }
}

TEST_CASE("truncated poly validates its invariants") {
    TruncatedPoly poly(7, 2, {1, 0, 3});
    CHECK(poly.modulus() == 7);
    CHECK(poly.degree_bound() == 2);
    CHECK(poly.coeff(2) == Residue(3, 7));
    CHECK_THROWS_AS(TruncatedPoly(7, 2, {1, 0}), usage_error);
    CHECK_THROWS_AS(TruncatedPoly(7, 1, {1, 9}), std::domain_error);
    CHECK_THROWS_AS(poly.coeff(3), std::domain_error);
    CHECK_THROWS_AS(TruncatedPoly(1, 0, {0}), std::domain_error);
}

TEST_CASE("truncated shifted product: known rows") {
    const TruncatedPoly p51 = truncated_shifted_product(5, 1);
    CHECK(p51.coeffs() == std::vector<uint64_t>{4, 0});

    const TruncatedPoly p50 = truncated_shifted_product(5, 0);
    CHECK(p50.coeffs() == std::vector<uint64_t>{4});

    // e_8(1..9) = 1026576, so the degree-1 coefficient is 6 mod 10
    CHECK(truncated_shifted_product(10, 1).coeff(1) == Residue(6, 10));
}

TEST_CASE("truncated shifted product: error paths") {
    CHECK_THROWS_AS(truncated_shifted_product(5, 5), std::domain_error);
    CHECK_THROWS_AS(truncated_shifted_product(1, 0), std::domain_error);
    CHECK_THROWS_AS(truncated_shifted_product(uint64_t{1} << 62, 0),
                    width_error);
}

TEST_CASE("degree-0 coefficient is (n-1)! mod n") {
    for (uint64_t n = 2; n <= 200; ++n) {
        const uint64_t c = std::min<uint64_t>(n - 1, 4);
        CAPTURE(n);
        REQUIRE(truncated_shifted_product(n, c).coeff(0).value() ==
                factorial_mod(n));
    }
}

TEST_CASE("every coefficient matches the subset-enumeration oracle") {
    for (uint64_t n = 2; n <= 14; ++n) {
        for (uint64_t c = 0; c <= n - 1; ++c) {
            const TruncatedPoly poly = truncated_shifted_product(n, c);
            for (uint64_t j = 0; j <= c; ++j) {
                CAPTURE(n);
                CAPTURE(c);
                CAPTURE(j);
                REQUIRE(poly.coeff(j) == brute_force_sum(n, n - 1 - j));
            }
        }
    }
}

TEST_CASE("multiply-add count is (n-1)*(c+1)") {
    uint64_t ops = 0;
    truncated_shifted_product(10, 0, &ops);
    CHECK(ops == 9);
    truncated_shifted_product(1000, 3, &ops);
    CHECK(ops == 999 * 4);
    truncated_shifted_product(2, 1, &ops);
    CHECK(ops == 2);
}
