#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "wilsonx/kernels.hpp"

using namespace wilsonx::kernels;

namespace {

std::vector<uint64_t> run_scalar(uint64_t n, uint64_t c) {
    std::vector<uint64_t> out(c + 1);
    product_scalar(n, c, out.data());
    return out;
}

std::vector<uint64_t> run_avx2(uint64_t n, uint64_t c) {
    std::vector<uint64_t> out(c + 1);
    product_avx2(n, c, out.data());
    return out;
}

}  // namespace

TEST_CASE("scalar kernel reproduces enumerated coefficient rows") {
    // full rows e_{n-1-j}(1..n-1) mod n, cross-checked by subset enumeration
    CHECK(run_scalar(12, 11) ==
          std::vector<uint64_t>{0, 0, 0, 4, 6, 11, 6, 3, 6, 5, 6, 1});
    CHECK(run_scalar(14, 13) ==
          std::vector<uint64_t>{0, 8, 0, 0, 0, 0, 7, 5, 7, 7, 7, 7, 7, 1});
}

TEST_CASE("scalar kernel op count and edge cases") {
    std::vector<uint64_t> out(1);
    CHECK(product_scalar(2, 0, out.data()) == 1);
    CHECK(out[0] == 1);  // 1! mod 2

    std::vector<uint64_t> out2(3);
    CHECK(product_scalar(5, 2, out2.data()) == 4 * 3);
    CHECK(out2 == std::vector<uint64_t>{4, 0, 0});  // e_4=24, e_3=50, e_2=35
}

TEST_CASE("avx2 single-modulus kernel agrees with scalar") {
    if (!avx2_supported()) return;

    for (uint64_t n : {2ull, 3ull, 4ull, 5ull, 7ull, 12ull, 100ull, 1009ull,
                       65537ull, 4000037ull}) {
        for (uint64_t c : {0ull, 1ull, 2ull, 3ull, 4ull, 7ull, 12ull}) {
            if (c > n - 1) continue;
            CAPTURE(n);
            CAPTURE(c);
            REQUIRE(run_avx2(n, c) == run_scalar(n, c));
        }
    }
}

TEST_CASE("avx2 kernel is exact at the f64 modulus limit") {
    if (!avx2_supported()) return;
    // largest supported double-lane modulus and a prime just below it
    CHECK(run_avx2(kF64ModulusLimit, 1) == run_scalar(kF64ModulusLimit, 1));
    CHECK(run_avx2(67108859, 1) == run_scalar(67108859, 1));
}

TEST_CASE("avx2 kernel reports the same op count") {
    if (!avx2_supported()) return;
    std::vector<uint64_t> out(5);
    CHECK(product_avx2(1000, 4, out.data()) == 999 * 5);
}

TEST_CASE("batch kernels agree lane for lane") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        const uint64_t c = rng() % 6;
        const std::size_t lanes = 1 + rng() % 9;
        std::vector<uint64_t> ns(lanes);
        for (auto& n : ns) n = c + 2 + rng() % 50000;

        std::vector<uint64_t> batch(lanes * (c + 1));
        product_batch_scalar(ns.data(), lanes, c, batch.data());
        for (std::size_t i = 0; i < lanes; ++i) {
            CAPTURE(round);
            CAPTURE(i);
            std::vector<uint64_t> lane(batch.begin() + i * (c + 1),
                                       batch.begin() + (i + 1) * (c + 1));
            REQUIRE(lane == run_scalar(ns[i], c));
        }

        if (avx2_supported()) {
            std::vector<uint64_t> vec(lanes * (c + 1));
            product_batch_avx2(ns.data(), lanes, c, vec.data());
            REQUIRE(vec == batch);
        }
    }
}

TEST_CASE("batch kernels at the f64 modulus limit") {
    if (!avx2_supported()) return;
    const std::vector<uint64_t> ns{kF64ModulusLimit, 67108859};
    std::vector<uint64_t> scalar(ns.size() * 2), vec(ns.size() * 2);
    product_batch_scalar(ns.data(), ns.size(), 1, scalar.data());
    product_batch_avx2(ns.data(), ns.size(), 1, vec.data());
    CHECK(vec == scalar);
}

TEST_CASE("batch kernels: exhaustive small moduli") {
    for (uint64_t c = 0; c <= 4; ++c) {
        std::vector<uint64_t> ns;
        for (uint64_t n = c + 2; n < c + 2 + 23; ++n) ns.push_back(n);
        std::vector<uint64_t> scalar(ns.size() * (c + 1));
        product_batch_scalar(ns.data(), ns.size(), c, scalar.data());
        if (avx2_supported()) {
            std::vector<uint64_t> vec(ns.size() * (c + 1));
            product_batch_avx2(ns.data(), ns.size(), c, vec.data());
            CAPTURE(c);
            REQUIRE(vec == scalar);
        }
    }
}

TEST_CASE("dispatched entry points match the reference") {
    for (uint64_t n : {2ull, 17ull, 1000ull, 123457ull}) {
        for (uint64_t c : {0ull, 1ull, 3ull, 5ull}) {
            if (c > n - 1) continue;
            std::vector<uint64_t> got(c + 1);
            const uint64_t ops = product(n, c, got.data());
            CHECK(ops == (n - 1) * (c + 1));
            CHECK(got == run_scalar(n, c));
        }
    }

    std::vector<uint64_t> ns{10, 11, 12, 13, 14, 15, 16};
    std::vector<uint64_t> got(ns.size() * 3), want(ns.size() * 3);
    product_batch(ns.data(), ns.size(), 2, got.data());
    product_batch_scalar(ns.data(), ns.size(), 2, want.data());
    CHECK(got == want);
    product_batch(ns.data(), 0, 2, got.data());  // no lanes: no-op
}

TEST_CASE("dispatch never picks avx2 beyond the f64 limit") {
    CHECK(std::strcmp(backend_name(kF64ModulusLimit + 1, 5), "scalar") == 0);
    const char* name = backend_name(1000, 3);
    const bool known = std::strcmp(name, "scalar") == 0 ||
                       std::strcmp(name, "avx2") == 0;
    CHECK(known);
    if (forced_backend() == Backend::autodetect && avx2_supported()) {
        CHECK(std::strcmp(backend_name(1000, 3), "avx2") == 0);
        CHECK(std::strcmp(backend_name(1000, 1), "scalar") == 0);
    }
}
