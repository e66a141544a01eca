#ifndef PISOT_CANTOR_H
#define PISOT_CANTOR_H

#include <cstddef>

#include "pisot/interval.h"
#include "pisot/words.h"

namespace pisot {

/// sum_n lex(x_n) / |A|^n over the (nonempty) prefix.
Rational numeric_value(const Word &prefix);

/// First `digits` letters of the nonterminating base-|A| expansion of q in
/// [0, 1]: a terminating expansion ...d 0 0 0 is replaced by ...(d-1) m m m
/// with m the last letter. q = 0 gives all first letters.
Word representation(const AlphabetRef &alphabet, const Rational &q, std::size_t digits);

struct TransitionResult {
    Word word;
    /// The source prefix determines its value only up to |A_1|^-|prefix|.
    Rational truncation_bound;
};

/// representation(A_2, numeric_value(prefix), digits).
TransitionResult alphabet_transition(const AlphabetRef &target, const Word &prefix, std::size_t digits);

/// Alphabet A with one excluded letter a; B = A - {a} keeps the order of A.
class CantorSpec {
   public:
    CantorSpec(AlphabetRef alphabet, Letter excluded);
    /// {0, 1, 2} without 1.
    static CantorSpec middle_third();

    const AlphabetRef &alphabet() const { return alphabet_; }
    Letter excluded() const { return excluded_; }
    const AlphabetRef &reduced_alphabet() const { return reduced_; }
    /// 0 < lex(a) < |A| - 1, required by the Cantor-function operations.
    bool has_interior_excluded() const;

    /// The B-word with the same symbols as an A-word avoiding a.
    Word to_reduced(const Word &w) const;
    bool avoids_excluded(const Word &w) const;

   private:
    AlphabetRef alphabet_;
    Letter excluded_;
    AlphabetRef reduced_;
};

/// Certified interval for log(|A| - 1) / log |A|; needs |A| >= 3.
Interval hausdorff_dimension(const CantorSpec &spec, unsigned bits = 128);

/// v_B(x) + |B| / |B|^{|x|+1} for an A-word x avoiding the excluded letter.
Rational cantor_function_value(const CantorSpec &spec, const Word &prefix);

struct StaircaseValue {
    Rational value;
    /// The exact value lies in [value, value + error_bound].
    Rational error_bound;
};

/// The Cantor staircase at q: q is expanded in A; at the first excluded
/// digit q lies in a removed gap, where the staircase is constant. Without
/// an excluded digit among the first `digits`, the B-value of the prefix is
/// returned with its truncation bound.
StaircaseValue cantor_staircase(const CantorSpec &spec, const Rational &q, std::size_t digits);

struct MonotonicityReport {
    bool monotone = true;
    std::size_t words_checked = 0;
    /// Adjacent words with the same A-order key and the same value.
    std::size_t plateaus = 0;
};

/// Checks that cantor_function_value is nondecreasing over all B-words of
/// length 1..max_length, ordered by the A-value of w followed by the largest
/// letter of B repeated forever.
MonotonicityReport check_cantor_monotonicity(const CantorSpec &spec, std::size_t max_length);

}  // namespace pisot

#endif
