#include "pisot/spacing.h"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "gtest/gtest.h"
#include "root_oracle.h"

using namespace pisot;
using pisot_test::BigFloat;

TEST(angles, validation_and_distance) {
    ASSERT_THROW(AngleList({kTwoPi}), std::out_of_range);
    ASSERT_THROW(AngleList({-0.1}), std::out_of_range);
    ASSERT_EQ(mod_two_pi(-1e-300), 0.0);
    ASSERT_NEAR(mod_two_pi(7.0), 7.0 - kTwoPi, 1e-15);
    ASSERT_NEAR(geodesic_distance(0.1, kTwoPi - 0.1), 0.2, 1e-12);
    ASSERT_NEAR(geodesic_distance(1.0, 2.5), 1.5, 1e-15);
}

TEST(roots_of_unity, exact_optimum) {
    for (std::size_t n = 2; n <= 200; ++n) {
        GapStats g = gap_statistics(roots_of_unity(n));
        ASSERT_EQ(g.variance, 0.0);
        ASSERT_EQ(g.mean, kTwoPi / static_cast<double>(n));
        ASSERT_EQ(g.distinct_gaps, 1u);
    }
    ASSERT_THROW(roots_of_unity(1), std::invalid_argument);
}

TEST(cyclotomic_sum, vanishes) {
    for (std::size_t n = 2; n <= 2000; n += 37) {
        ASSERT_LT(std::abs(cyclotomic_sum(n)), 1e-9);
    }
}

TEST(gap_statistics, three_distance_theorem) {
    // For an irrational rotation the first N points split the circle into
    // arcs of at most three lengths, the largest being the sum of the others.
    double alpha = (std::sqrt(5.0) - 1) / 2;
    for (std::size_t n = 2; n <= 300; n += 7) {
        std::vector<double> a;
        for (std::size_t k = 1; k <= n; ++k) a.push_back(kTwoPi * std::fmod(static_cast<double>(k) * alpha, 1.0));
        GapStats g = gap_statistics(AngleList(a), 1e-9);
        ASSERT_LE(g.distinct_gaps, 3u) << n;
        if (g.distinct_gaps == 3) {
            std::vector<double> s = g.gaps;
            std::sort(s.begin(), s.end());
            double mid = 0;
            for (double x : s) {
                if (x - s.front() > 1e-9 && s.back() - x > 1e-9) mid = x;
            }
            ASSERT_NEAR(s.back(), s.front() + mid, 1e-8);
        }
    }
}

TEST(diagonal_polygon, pentagon_self_similarity) {
    DiagonalPolygon p = diagonal_polygon(5);
    ASSERT_EQ(p.intersections.size(), 5u);
    ASSERT_EQ(p.inner_ring.size(), 5u);
    ASSERT_TRUE(p.self_similar.has_value());
    double tau = (1 + std::sqrt(5.0)) / 2;
    ASSERT_NEAR(p.self_similar->scaling, tau / (1 + 2 * tau), 1e-9);
    ASSERT_NEAR(p.self_similar->scaling, 1 / (tau * tau), 1e-9);
    ASSERT_NEAR(p.self_similar->rotation, kPi, 1e-9);
}

TEST(diagonal_polygon, larger_polygons) {
    DiagonalPolygon hept = diagonal_polygon(7);
    ASSERT_TRUE(hept.self_similar.has_value());
    // The innermost heptagon points at the outer vertices, so the rotation is a
    // multiple of 2 pi / 7.
    double step = kTwoPi / 7;
    double r = std::fmod(hept.self_similar->rotation, step);
    ASSERT_LT(std::min(r, step - r), 1e-9);
    // Even n: the long diagonals all meet at the centre, so there is no ring.
    ASSERT_FALSE(diagonal_polygon(6).self_similar.has_value());
    ASSERT_THROW(diagonal_polygon(4), std::invalid_argument);
}

TEST(cusp_curve, matches_big_float_powers) {
    BigFloat tau = (1 + sqrt(BigFloat(5))) / 2;
    AngleList a = cusp_curve(IntPolynomial{-1, -1, 1}, 60);
    BigFloat power = 1;
    for (std::size_t k = 1; k <= 60; ++k) {
        power *= tau;
        BigFloat frac = power - floor(power);
        double expected = static_cast<double>(frac * 2 * boost::math::constants::pi<BigFloat>());
        ASSERT_NEAR(a[k - 1], expected, 1e-12) << k;
    }
    // theta_k tends to 0 on the circle.
    ASSERT_LT(geodesic_distance(a[59], 0.0), 1e-9);
}

TEST(cusp_curve, rejects_non_pv) {
    ASSERT_THROW(cusp_curve(IntPolynomial{-3, 0, 1}, 5), std::domain_error);
    ASSERT_THROW(cusp_curve(IntPolynomial{-1, -1, 1}, 0), std::invalid_argument);
}

TEST(substitution_spacing, counts_form_agrees) {
    double tau = named_constant("tau");
    for (const auto &s : {Substitution::fibonacci(), Substitution::pell()}) {
        AngleList a = substitution_spacing(s, tau, 1.0, 5000);
        AngleList b = substitution_spacing_counts(s, tau, 1.0, 5000);
        for (std::size_t k = 0; k < a.size(); ++k) {
            ASSERT_LT(geodesic_distance(a[k], b[k]), 1e-9);
        }
    }
    ASSERT_THROW(substitution_spacing(Substitution(digit_alphabet(2), {{0, 1, 1}, {0, 0}}), tau, 1.0, 10),
                 std::invalid_argument);
    ASSERT_THROW(substitution_spacing(Substitution::padovan(), tau, 1.0, 10), std::invalid_argument);
    ASSERT_THROW(substitution_spacing(Substitution::fibonacci(), 7.0, 1.0, 10), std::out_of_range);
}

TEST(named_constant, resolves) {
    ASSERT_NEAR(named_constant("tau"), 1.6180339887498949, 1e-15);
    ASSERT_NEAR(named_constant("rho"), 1.3247179572447460, 1e-15);
    ASSERT_NEAR(named_constant("silver"), 2.4142135623730951, 1e-15);
    ASSERT_EQ(named_constant("0.5"), 0.5);
    ASSERT_THROW(named_constant("golden"), std::invalid_argument);
    ASSERT_THROW(named_constant("1.5x"), std::invalid_argument);
}
