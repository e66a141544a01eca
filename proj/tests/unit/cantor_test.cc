#include "pisot/cantor.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace pisot;

TEST(numeric_value, examples) {
    ASSERT_EQ(numeric_value(Word::parse(digit_alphabet(2), "1")), Rational(1, 2));
    ASSERT_EQ(numeric_value(Word::parse(digit_alphabet(10), "25")), Rational(1, 4));
    ASSERT_EQ(numeric_value(Word::parse(digit_alphabet(3), "202")), Rational(20, 27));
    ASSERT_THROW(numeric_value(Word(digit_alphabet(2), {})), std::invalid_argument);
}

TEST(representation, nonterminating_choice) {
    ASSERT_EQ(representation(digit_alphabet(2), Rational(1, 2), 4).str(), "0111");
    ASSERT_EQ(representation(digit_alphabet(10), Rational(1, 5), 3).str(), "199");
    ASSERT_EQ(representation(digit_alphabet(3), Rational(0), 5).str(), "00000");
    ASSERT_EQ(representation(digit_alphabet(3), Rational(1), 3).str(), "222");
    ASSERT_EQ(representation(digit_alphabet(3), Rational(1, 2), 4).str(), "1111");
    ASSERT_THROW(representation(digit_alphabet(2), Rational(3, 2), 4), std::out_of_range);
    ASSERT_THROW(representation(digit_alphabet(2), Rational(-1, 2), 4), std::out_of_range);
}

TEST(representation, round_trip_bound) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        std::size_t base = 2 + rng() % 9;
        unsigned long den = 1 + rng() % 1000;
        Rational q(static_cast<unsigned long>(rng() % (den + 1)), den);
        q.canonicalize();
        std::size_t digits = 1 + rng() % 30;
        if (q == 0) continue;
        Rational v = numeric_value(representation(digit_alphabet(base), q, digits));
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), base, digits);
        ASSERT_LE(v, q);
        ASSERT_LE(q - v, Rational(1) / Rational(scale));
        // Nonterminating: never equal to q.
        ASSERT_LT(v, q);
    }
}

TEST(non_injectivity, closed_forms_agree) {
    // v(w a_i a_max^inf) = v(w a_{i+1} a_0^inf): with k trailing max digits the
    // difference to the limit is |A|^-(|w|+1+k).
    auto ter = digit_alphabet(3);
    Word w = Word::parse(ter, "21");
    Rational left_limit = numeric_value(concat(w, Word::parse(ter, "0"))) + Rational(1, 27);
    Rational right_limit = numeric_value(concat(w, Word::parse(ter, "1")));
    ASSERT_EQ(left_limit, right_limit);
    Rational partial = numeric_value(concat(w, Word::parse(ter, "02222")));
    ASSERT_EQ(left_limit - partial, Rational(1, 2187));
}

TEST(alphabet_transition, conversions) {
    TransitionResult t = alphabet_transition(digit_alphabet(3), Word::parse(digit_alphabet(2), "1"), 3);
    ASSERT_EQ(t.word.str(), "111");
    ASSERT_EQ(t.truncation_bound, Rational(1, 2));
    TransitionResult b = alphabet_transition(digit_alphabet(2), Word::parse(digit_alphabet(3), "202"), 10);
    Rational v = numeric_value(b.word);
    ASSERT_LE(Rational(20, 27) - v, Rational(1, 1024));
    ASSERT_LT(v, Rational(20, 27));
    TransitionResult same = alphabet_transition(digit_alphabet(3), Word::parse(digit_alphabet(3), "12"), 2);
    ASSERT_EQ(same.word.str(), "11");
}

TEST(hausdorff_dimension, values) {
    for (std::size_t a = 3; a <= 10; ++a) {
        Interval d = hausdorff_dimension(CantorSpec(digit_alphabet(a), 1));
        double expected = std::log(static_cast<double>(a - 1)) / std::log(static_cast<double>(a));
        ASSERT_NEAR(d.mid_d(), expected, 1e-15);
        ASSERT_LT(d.width(), Rational(1, 1) / (Rational(1) << 120));
    }
    Interval mt = hausdorff_dimension(CantorSpec::middle_third());
    ASSERT_NEAR(mt.mid_d(), 0.6309297535714574, 1e-12);
    ASSERT_THROW(hausdorff_dimension(CantorSpec(digit_alphabet(2), 1)), std::invalid_argument);
}

TEST(cantor_function, examples) {
    CantorSpec spec = CantorSpec::middle_third();
    auto ter = spec.alphabet();
    ASSERT_EQ(cantor_function_value(spec, Word::parse(ter, "0")), Rational(1, 2));
    ASSERT_EQ(cantor_function_value(spec, Word::parse(ter, "2")), Rational(1));
    ASSERT_EQ(cantor_function_value(spec, Word::parse(ter, "00")), Rational(1, 4));
    ASSERT_EQ(cantor_function_value(spec, Word::parse(ter, "000")), Rational(1, 8));
    ASSERT_THROW(cantor_function_value(spec, Word::parse(ter, "01")), std::invalid_argument);
    ASSERT_THROW(cantor_function_value(CantorSpec(ter, 0), Word::parse(ter, "1")), std::invalid_argument);
    ASSERT_THROW(cantor_function_value(CantorSpec(ter, 2), Word::parse(ter, "1")), std::invalid_argument);
}

TEST(cantor_function, plateau_shared_by_removed_interval) {
    CantorSpec spec = CantorSpec::middle_third();
    // Every q in the removed middle third (1/3, 2/3) maps to 1/2.
    for (const auto &q : {Rational(2, 5), Rational(1, 2), Rational(3, 5), Rational(5, 8)}) {
        StaircaseValue v = cantor_staircase(spec, q, 20);
        ASSERT_EQ(v.value, Rational(1, 2)) << q.get_str();
        ASSERT_EQ(v.error_bound, 0);
    }
    // q = 1/4 = 0.0202... ternary lies in the Cantor set: f(1/4) = 1/3.
    StaircaseValue quarter = cantor_staircase(spec, Rational(1, 4), 40);
    ASSERT_LE(Rational(1, 3) - quarter.value, quarter.error_bound);
    ASSERT_GE(Rational(1, 3), quarter.value);
}

TEST(cantor_function, monotone_up_to_length_six) {
    for (std::size_t a = 3; a <= 5; ++a) {
        for (Letter ex = 1; ex + 1 < a; ++ex) {
            MonotonicityReport r = check_cantor_monotonicity(CantorSpec(digit_alphabet(a), ex), a == 3 ? 6 : 4);
            ASSERT_TRUE(r.monotone) << a << " " << ex;
        }
    }
    MonotonicityReport mt = check_cantor_monotonicity(CantorSpec::middle_third(), 6);
    ASSERT_EQ(mt.words_checked, 126u);
    ASSERT_GT(mt.plateaus, 0u);
}
