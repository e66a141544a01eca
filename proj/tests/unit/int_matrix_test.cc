#include "pisot/int_matrix.h"

#include <random>

#include "gtest/gtest.h"

using namespace pisot;

namespace {

// Determinant by rational Gaussian elimination.
mpq_class determinant(const IntMatrix &m) {
    std::size_t n = m.dimension();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            mpq_class f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t n, long lo, long hi) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    return m;
}

bool brute_force_primitive(const IntMatrix &m) {
    std::size_t n = m.dimension();
    IntMatrix p = m;
    for (std::size_t k = 1; k <= n * n + 1; ++k) {
        bool positive = true;
        for (std::size_t i = 0; i < n && positive; ++i)
            for (std::size_t j = 0; j < n && positive; ++j) positive = p(i, j) > 0;
        if (positive) return true;
        p = p * m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p(i, j) > 0) p(i, j) = 1;
    }
    return false;
}

}  // namespace

TEST(int_matrix, basic_operations) {
    IntMatrix f{{1, 1}, {1, 0}};
    ASSERT_EQ(f.to_string(), "[[1,1],[1,0]]");
    ASSERT_EQ(f.power(10), (IntMatrix{{89, 55}, {55, 34}}));
    ASSERT_EQ(f.trace(), 1);
    ASSERT_EQ(f.apply({1, 0}), (std::vector<mpz_class>{1, 1}));
    ASSERT_EQ(f * IntMatrix::identity(2), f);
    ASSERT_EQ(f + f, f * mpz_class(2));
}

TEST(char_poly, matches_determinant_oracle) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, n, -4, 4);
        IntPolynomial p = char_poly(m);
        ASSERT_EQ(p.degree(), static_cast<int>(n));
        for (long x = -3; x <= 3; ++x) {
            IntMatrix shifted = IntMatrix::identity(n) * mpz_class(x);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) shifted(i, j) -= m(i, j);
            ASSERT_EQ(mpq_class(p.evaluate(mpz_class(x))), determinant(shifted));
        }
    }
}

TEST(char_poly, substitution_matrices) {
    ASSERT_EQ(char_poly(IntMatrix{{1, 1}, {1, 0}}), (IntPolynomial{-1, -1, 1}));
    ASSERT_EQ(char_poly(IntMatrix{{1, 2}, {1, 1}}), (IntPolynomial{-1, -2, 1}));
    ASSERT_EQ(char_poly(IntMatrix{{0, 0, 1}, {1, 0, 0}, {1, 1, 0}}), (IntPolynomial{-1, -1, 0, 1}));
}

TEST(adjugate, times_shifted_matrix_is_char_poly) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, n, -3, 3);
        auto b = adjugate_coefficients(m);
        IntPolynomial p = char_poly(m);
        ASSERT_EQ(b.size(), n);
        for (long x = -2; x <= 2; ++x) {
            IntMatrix adj(n);
            mpz_class xp = 1;
            for (std::size_t k = n; k-- > 0;) {
                adj = adj + b[k] * xp;
                xp *= x;
            }
            IntMatrix shifted = IntMatrix::identity(n) * mpz_class(x);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) shifted(i, j) -= m(i, j);
            ASSERT_EQ(shifted * adj, IntMatrix::identity(n) * p.evaluate(mpz_class(x)));
        }
    }
}

TEST(primitivity, matches_brute_force) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, n, 0, 1);
        ASSERT_EQ(is_primitive(m), brute_force_primitive(m)) << m.to_string();
    }
    ASSERT_TRUE(is_primitive(IntMatrix{{1, 1}, {1, 0}}));
    ASSERT_FALSE(is_primitive(IntMatrix{{0, 1}, {1, 0}}));
    ASSERT_THROW(is_primitive(IntMatrix{{1, -1}, {1, 0}}), std::invalid_argument);
}
