#include "pisot/algebraic.h"

#include <random>

#include "boost/multiprecision/cpp_int.hpp"
#include "gtest/gtest.h"
#include "root_oracle.h"

using namespace pisot;
using pisot_test::BigComplex;
using pisot_test::BigFloat;

namespace {

IntPolynomial random_monic(std::mt19937_64 &rng, int max_degree, long bound) {
    int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_degree));
    std::vector<mpz_class> c(static_cast<std::size_t>(d + 1));
    for (auto &x : c) x = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
    c.back() = 1;
    return IntPolynomial(c);
}

mpq_class to_q(const BigFloat &x) {
    // Exact dyadic rational within 2^-200 of x.
    BigFloat scaled = round(ldexp(x, 200));
    mpq_class q(mpz_class(static_cast<boost::multiprecision::cpp_int>(scaled).str()), mpz_class(1) << 200);
    q.canonicalize();
    return q;
}

}  // namespace

TEST(schur_cohn, hand_checked_counts) {
    ASSERT_EQ(unit_circle_counts(IntPolynomial{-1, -1, 1}), (RootCount{1, 0, 1}));
    ASSERT_EQ(unit_circle_counts(IntPolynomial{-1, -1, 0, 1}), (RootCount{2, 0, 1}));
    ASSERT_EQ(unit_circle_counts(IntPolynomial{1, 1, 1}), (RootCount{0, 2, 0}));
    ASSERT_EQ(unit_circle_counts(IntPolynomial{-1, 0, 0, 0, 0, 1}), (RootCount{0, 5, 0}));
    ASSERT_EQ(unit_circle_counts(IntPolynomial{1, 0, 4}), (RootCount{2, 0, 0}));
    ASSERT_EQ(unit_circle_counts(IntPolynomial{0, 0, 1}), (RootCount{2, 0, 0}));
    // (x + 1)^2 (x - 3)
    IntPolynomial p = IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{-3, 1};
    ASSERT_EQ(unit_circle_counts(p), (RootCount{0, 2, 1}));
    ASSERT_THROW(schur_cohn(p), std::invalid_argument);
}

TEST(schur_cohn, agrees_with_high_precision_oracle) {
    std::mt19937_64 rng(99);
    std::vector<IntPolynomial> cyclotomic = {{-1, 1}, {1, 1}, {1, 1, 1}, {1, 0, 1}, {1, -1, 1}, {1, 1, 1, 1, 1}};
    for (int t = 0; t < 300; ++t) {
        IntPolynomial p = random_monic(rng, 6, 5);
        if (t % 3 == 0) {
            const auto &f = cyclotomic[rng() % cyclotomic.size()];
            if (p.degree() + f.degree() <= 6) p = p * f;
        }
        ASSERT_EQ(unit_circle_counts(p), pisot_test::oracle_counts(p)) << p.to_string();
    }
}

TEST(irreducibility, known_cases) {
    ASSERT_EQ(irreducibility(IntPolynomial{-1, -1, 1}), Irreducibility::irreducible);
    ASSERT_EQ(irreducibility(IntPolynomial{-4, 0, 1}), Irreducibility::reducible);
    ASSERT_EQ(irreducibility(IntPolynomial{4, 0, 0, 0, 1}), Irreducibility::reducible);
    ASSERT_EQ(irreducibility(IntPolynomial{1, 0, 1, 0, 1}), Irreducibility::reducible);
    ASSERT_EQ(irreducibility(IntPolynomial{-1, 0, -1, 0, 1}), Irreducibility::irreducible);
    ASSERT_EQ(irreducibility(IntPolynomial{-1, -1, 0, 0, 0, 1}), Irreducibility::irreducible);
    ASSERT_EQ(irreducibility(IntPolynomial{1, 0, 0, 0, 0, 1}), Irreducibility::reducible);
    // Product of two irreducible cubics without rational roots.
    IntPolynomial prod = IntPolynomial{-1, -1, 0, 1} * IntPolynomial{-2, 0, 0, 1};
    ASSERT_NE(irreducibility(prod), Irreducibility::irreducible);
}

TEST(certify_pv, classical_examples) {
    ASSERT_TRUE(is_pv(IntPolynomial{-1, -1, 1}));
    ASSERT_TRUE(is_pv(IntPolynomial{-1, -1, 0, 1}));
    ASSERT_TRUE(is_pv(IntPolynomial{-1, -2, 1}));
    ASSERT_FALSE(is_pv(IntPolynomial{-3, 0, 1}));
    // x^4 - x^3 - 1 has a conjugate pair outside... check it is classified
    // consistently with the oracle.
    IntPolynomial q{-1, 0, 0, -1, 1};
    RootCount c = pisot_test::oracle_counts(q);
    ASSERT_EQ(is_pv(q), c.outside == 1 && c.on_circle == 0);
    PvCertificate cert = certify_pv(IntPolynomial{-3, 0, 1});
    ASSERT_EQ(cert.verdict, PvVerdict::not_pv);
    ASSERT_FALSE(cert.reason.empty());
    ASSERT_THROW(certify_pv(IntPolynomial{-1, -1, 2}), std::invalid_argument);
    // Reducible: (x - 2)(x^2 - x - 1).
    ASSERT_FALSE(is_pv(IntPolynomial{-2, 1} * IntPolynomial{-1, -1, 1}));
}

TEST(power_sums, match_oracle_roots) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        IntPolynomial p = random_monic(rng, 5, 3);
        auto roots = pisot_test::oracle_roots(p);
        auto sums = power_sums(p, 12);
        for (unsigned long n = 1; n <= 12; ++n) {
            BigComplex s = 0;
            for (const auto &z : roots) s += pow(z, static_cast<int>(n));
            BigFloat expected(sums[n - 1].get_str());
            ASSERT_LT(abs(s - BigComplex(expected)), BigFloat("1e-20")) << p.to_string() << " n=" << n;
        }
    }
    // Lucas numbers from x^2 - x - 1.
    ASSERT_EQ(power_sums(IntPolynomial{-1, -1, 1}, 5), (std::vector<mpz_class>{1, 3, 4, 7, 11}));
}

TEST(algebraic_real, approximates_golden_ratio) {
    AlgebraicReal tau = largest_real_root(IntPolynomial{-1, -1, 1});
    Interval i = tau.approximate(100);
    BigFloat exact = (1 + sqrt(BigFloat(5))) / 2;
    mpq_class slack = i.width() / 2 + mpq_class(1) / (mpq_class(1) << 150);
    ASSERT_LE(abs(i.midpoint() - to_q(exact)), slack);
    ASSERT_LE(i.width(), mpq_class(1) / (mpq_class(1) << 100));
    ASSERT_NEAR(tau.to_double(), 1.618033988749895, 1e-15);
}

TEST(pv_decay, golden_ratio_matches_inverse_powers) {
    IntPolynomial p{-1, -1, 1};
    BigFloat tau = (1 + sqrt(BigFloat(5))) / 2;
    for (unsigned long n = 1; n <= 40; ++n) {
        Interval d = pv_decay(p, n);
        BigFloat expected = pow(tau, -static_cast<int>(n));
        mpq_class e = to_q(expected);
        ASSERT_LE(abs(d.lower() - e), e * mpq_class(1, 1000000000)) << n;
        ASSERT_LE(abs(d.upper() - e), e * mpq_class(1, 1000000000)) << n;
    }
}

TEST(pv_decay, silver_and_plastic_envelopes) {
    // |s_n - lambda^n| is bounded by (d - 1) m^n, m the largest conjugate modulus.
    for (const auto &[p, m] : {std::pair{IntPolynomial{-1, -2, 1}, 0.41421356237309515},
                              std::pair{IntPolynomial{-1, -1, 0, 1}, 0.8688369618327097}}) {
        for (unsigned long n = 1; n <= 40; ++n) {
            double bound = (p.degree() - 1) * std::pow(m, static_cast<double>(n)) * (1 + 1e-9);
            ASSERT_LE(pv_decay(p, n).upper_d(), bound) << p.to_string() << " n=" << n;
        }
    }
    ASSERT_NEAR(pv_decay(IntPolynomial{-1, -2, 1}, 8).mid_d(), 8.6655e-4, 1e-7);
}

TEST(max_conjugate_modulus, known_values) {
    Interval m = max_conjugate_modulus(IntPolynomial{-1, -1, 0, 1});
    ASSERT_NEAR(m.mid_d(), 0.8688369618327097, 1e-10);
    Interval g = max_conjugate_modulus(IntPolynomial{-1, -1, 1});
    ASSERT_NEAR(g.mid_d(), 0.6180339887498949, 1e-10);
}

TEST(recurrence, sequences_and_ratio) {
    auto fib = recurrence_terms(Recurrence::fibonacci(), 10);
    ASSERT_EQ(fib, (std::vector<mpz_class>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
    auto pad = recurrence_terms(Recurrence::padovan(), 9);
    ASSERT_EQ(pad, (std::vector<mpz_class>{1, 1, 1, 2, 2, 3, 4, 5, 7, 9}));
    auto pell = recurrence_terms(Recurrence::pell(), 6);
    ASSERT_EQ(pell, (std::vector<mpz_class>{0, 1, 2, 5, 12, 29, 70}));
    ASSERT_EQ(Recurrence::fibonacci().characteristic(), (IntPolynomial{-1, -1, 1}));
    Interval err = ratio_limit_check(Recurrence::fibonacci(), IntPolynomial{-1, -1, 1}, 40);
    ASSERT_LT(err.upper_d(), 1e-12);
}
