#include "pisot/quantum.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace pisot;

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

QuantumState equal_superposition(const std::vector<Word> &words) {
    std::map<Word, Amplitude> amps;
    double a = 1 / std::sqrt(static_cast<double>(words.size()));
    for (const auto &w : words) amps[w] += a;
    return QuantumState(std::move(amps));
}

}  // namespace

TEST(quantum_state, basics) {
    auto bin = digit_alphabet(2);
    QuantumState psi = equal_superposition({Word::parse(bin, "0"), Word::parse(bin, "1")});
    ASSERT_EQ(psi.support_size(), 2u);
    ASSERT_NEAR(psi.norm_squared(), 1.0, 1e-15);
    ASSERT_EQ(psi.amplitude(Word::parse(bin, "00")), Amplitude(0));
    ASSERT_NEAR(std::abs(psi.inner_product(psi) - Amplitude(1)), 0.0, 1e-15);
    ASSERT_THROW(QuantumState().normalized(), std::domain_error);
    ASSERT_THROW(QuantumState({{Word::parse(bin, "0"), 1.0}, {Word::parse(digit_alphabet(3), "2"), 1.0}}),
                 std::invalid_argument);
}

TEST(first_kind, fibonacci_superposition) {
    Substitution f = Substitution::fibonacci();
    auto bin = f.alphabet();
    QuantumState psi = equal_superposition({Word::parse(bin, "0"), Word::parse(bin, "1")});
    for (unsigned n = 1; n <= 15; ++n) {
        FirstKindResult r = apply_first_kind(f, psi);
        ASSERT_FALSE(r.non_isometric);
        psi = r.state;
        ASSERT_EQ(psi.support_size(), 2u);
        ASSERT_EQ(psi.amplitude(iterate(f, 0, n)), Amplitude(kInvSqrt2));
        ASSERT_EQ(psi.amplitude(iterate(f, 0, n - 1)), Amplitude(kInvSqrt2));
    }
}

TEST(first_kind, collision_renormalizes) {
    // sigma(0) = sigma(1) = 0 collapses the support.
    Substitution s(digit_alphabet(2), {{0}, {0}});
    auto bin = s.alphabet();
    QuantumState psi = equal_superposition({Word::parse(bin, "0"), Word::parse(bin, "1")});
    FirstKindResult r = apply_first_kind(s, psi);
    ASSERT_TRUE(r.non_isometric);
    ASSERT_EQ(r.state.support_size(), 1u);
    ASSERT_NEAR(std::abs(r.state.amplitude(Word::parse(bin, "0"))), 1.0, 1e-15);
}

TEST(quantum_complexity, ghz_state) {
    auto bin = digit_alphabet(2);
    for (std::size_t len = 2; len <= 20; ++len) {
        QuantumState ghz = equal_superposition({Word(bin, std::vector<Letter>(len, 0)), Word(bin, std::vector<Letter>(len, 1))});
        for (std::size_t n = 1; n <= len; ++n) {
            ASSERT_EQ(quantum_complexity(ghz, n), 1.0);
            ASSERT_EQ(quantum_entropy_estimate(ghz, n), 0.0);
        }
    }
}

TEST(quantum_complexity, symmetric_state) {
    auto bin = digit_alphabet(2);
    QuantumState s = symmetric_state(bin, 3);
    ASSERT_EQ(s.support_size(), 8u);
    ASSERT_NEAR(s.norm_squared(), 1.0, 1e-14);
    // Average number of distinct letters over all 3-letter binary words.
    ASSERT_NEAR(quantum_complexity(s, 1), (2 * 1 + 6 * 2) / 8.0, 1e-14);
    ASSERT_THROW(symmetric_state(bin, 30), std::length_error);
    ASSERT_THROW(quantum_complexity(s, 4), std::invalid_argument);
}

TEST(second_kind, pell_probabilities) {
    SecondKindLimit lim = second_kind_limit(incidence_matrix(Substitution::pell()), 0);
    ASSERT_TRUE(lim.converged);
    ASSERT_NEAR(lim.probabilities[0], 2.0 / 3.0, 1e-12);
    ASSERT_NEAR(lim.probabilities[1], 1.0 / 3.0, 1e-12);
    ASSERT_TRUE(lim.exact_probabilities[0].contains(mpq_class(2, 3)));
    ASSERT_TRUE(lim.exact_probabilities[1].contains(mpq_class(1, 3)));
}

TEST(second_kind, fibonacci_and_padovan) {
    double tau = (1 + std::sqrt(5.0)) / 2;
    SecondKindLimit fib = second_kind_limit(incidence_matrix(Substitution::fibonacci()), 0);
    ASSERT_NEAR(fib.probabilities[0], tau * tau / (tau + 2), 1e-12);
    ASSERT_NEAR(fib.probabilities[0], fib.exact_probabilities[0].mid_d(), 1e-12);

    SecondKindLimit pad = second_kind_limit(incidence_matrix(Substitution::padovan()), 0);
    ASSERT_TRUE(pad.converged);
    double sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        ASSERT_NEAR(pad.probabilities[i], pad.exact_probabilities[i].mid_d(), 1e-12);
        sum += pad.probabilities[i];
    }
    ASSERT_NEAR(sum, 1.0, 1e-14);
}

TEST(second_kind, residuals_decay_and_nonprimitive_rejected) {
    SecondKindLimit lim = second_kind_limit(incidence_matrix(Substitution::fibonacci()), 1);
    ASSERT_GE(lim.residuals.size(), 5u);
    // Ratio of successive residuals approaches |tau'| / tau.
    double ratio = lim.residuals[4] / lim.residuals[3];
    ASSERT_NEAR(ratio, 1 / (1.6180339887498949 * 1.6180339887498949), 0.05);
    ASSERT_THROW(second_kind_limit(IntMatrix{{0, 1}, {1, 0}}, 0), std::invalid_argument);
}

TEST(quantum_spacing, reproducible_and_rate) {
    Substitution f = Substitution::fibonacci();
    QuantumSpacingRun a = quantum_spacing_simulate(f, 1.6180339887498949, 1.0, 10000, 42);
    QuantumSpacingRun b = quantum_spacing_simulate(f, 1.6180339887498949, 1.0, 10000, 42);
    ASSERT_EQ(a.outcomes, b.outcomes);
    ASSERT_EQ(a.angles.radians(), b.angles.radians());
    double tau = (1 + std::sqrt(5.0)) / 2;
    ASSERT_NEAR(a.zero_rate, tau * tau / (tau + 2), 0.02);
    QuantumSpacingRun c = quantum_spacing_simulate(f, 1.6180339887498949, 1.0, 10000, 43);
    ASSERT_NE(a.outcomes, c.outcomes);
    ASSERT_EQ(a.outcomes.front(), Letter{0});
}
