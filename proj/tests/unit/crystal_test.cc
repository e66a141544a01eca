#include "pisot/crystal.h"

#include <numeric>
#include <random>

#include "gtest/gtest.h"

using namespace pisot;

TEST(hiller, table_rows) {
    const std::vector<std::uint64_t> expected = {0, 0, 2,  2, 4,  2, 6,  4,  6, 4,  10, 4,  12, 6, 6,  8, 16, 6,
                                                 18, 6, 8, 10, 22, 6, 20, 12, 18, 8, 28, 6, 30, 16, 12, 16, 10, 8};
    for (std::uint64_t n = 1; n <= 36; ++n) {
        ASSERT_EQ(hiller(n), expected[n - 1]) << n;
    }
}

TEST(hiller, prime_powers) {
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
        std::uint64_t q = p;
        for (int a = 1; a <= 4; ++a, q *= p) ASSERT_EQ(hiller(q), euler_phi(q));
    }
    ASSERT_EQ(hiller(2), 0u);
    for (std::uint64_t q = 4; q <= 1024; q *= 2) ASSERT_EQ(hiller(q), euler_phi(q));
    ASSERT_THROW(hiller(0), std::invalid_argument);
}

TEST(euler_phi, matches_gcd_count) {
    for (std::uint64_t n = 1; n <= 500; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
        ASSERT_EQ(euler_phi(n), count) << n;
    }
}

TEST(factorize, large_inputs) {
    std::uint64_t big_prime = 9223372036854775783ULL;  // largest prime below 2^63
    ASSERT_TRUE(is_prime(big_prime));
    ASSERT_EQ(factorize(big_prime), (std::vector<FactorizationEntry>{{big_prime, 1}}));
    std::uint64_t semiprime = 3037000493ULL * 3037000453ULL;
    ASSERT_EQ(factorize(semiprime), (std::vector<FactorizationEntry>{{3037000453ULL, 1}, {3037000493ULL, 1}}));
    ASSERT_THROW(factorize(kMaxCrystalInput + 1), std::out_of_range);
    ASSERT_TRUE(factorize(1).empty());

    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        std::uint64_t n = 1 + rng() % kMaxCrystalInput;
        std::uint64_t prod = 1;
        for (const auto &e : factorize(n)) {
            ASSERT_TRUE(is_prime(e.prime));
            for (unsigned i = 0; i < e.exponent; ++i) prod *= e.prime;
        }
        ASSERT_EQ(prod, n);
    }
}

TEST(allowed_orders, crystallographic_restriction) {
    ASSERT_EQ(allowed_orders(3, 36), (std::set<std::uint64_t>{1, 2, 3, 4, 6}));
    ASSERT_EQ(allowed_orders(2, 36), (std::set<std::uint64_t>{1, 2, 3, 4, 6}));
    ASSERT_EQ(allowed_orders(4, 12), (std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 10, 12}));
    ASSERT_EQ(allowed_orders(0, 36), (std::set<std::uint64_t>{1, 2}));
    ASSERT_FALSE(is_crystallographic_order(5, 3));
    ASSERT_TRUE(is_crystallographic_order(5, 4));
}
