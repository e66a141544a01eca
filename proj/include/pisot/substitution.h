#ifndef PISOT_SUBSTITUTION_H
#define PISOT_SUBSTITUTION_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pisot/algebraic.h"
#include "pisot/int_matrix.h"
#include "pisot/interval.h"
#include "pisot/polynomial.h"
#include "pisot/words.h"

namespace pisot {

/// A substitution sigma: A -> A^+, one nonempty image word per letter.
class Substitution {
   public:
    Substitution(AlphabetRef alphabet, std::vector<std::vector<Letter>> rules);

    /// 0 -> 01, 1 -> 0
    static Substitution fibonacci();
    /// 0 -> 01, 1 -> 001
    static Substitution pell();
    /// 0 -> 12, 1 -> 2, 2 -> 0
    static Substitution padovan();
    /// 0 -> 01, 1 -> 10
    static Substitution thue_morse();

    const AlphabetRef &alphabet() const { return alphabet_; }
    std::size_t size() const { return rules_.size(); }
    const std::vector<Letter> &rule(Letter letter) const;
    Word image(Letter letter) const { return Word(alphabet_, rule(letter)); }

    Word apply(const Word &w) const;
    void apply_into(std::span<const Letter> letters, std::vector<Letter> &out) const;

    /// sigma^k as a substitution.
    Substitution power(unsigned k) const;
    /// Conjugate by a relabeling: letter a becomes perm[a].
    Substitution relabeled(const std::vector<Letter> &perm) const;

    bool operator==(const Substitution &other) const;

   private:
    AlphabetRef alphabet_;
    std::vector<std::vector<Letter>> rules_;
};

/// (a o b)(x) = a(b(x)).
Substitution compose(const Substitution &a, const Substitution &b);

/// sigma^k(a); k = 0 gives the one-letter word a.
Word iterate(const Substitution &sigma, Letter a, unsigned k);

/// Length of sigma^k(a) without building the word.
mpz_class iterate_length(const Substitution &sigma, Letter a, unsigned k);

/// Thrown when sigma(a) does not start with a or has length 1.
class FixedPointError : public std::invalid_argument {
   public:
    FixedPointError(const std::string &what, std::optional<unsigned> suggested_power)
        : std::invalid_argument(what), suggested_power_(suggested_power) {}
    /// Smallest p <= |A| + 1 such that sigma^p(a) starts with a and has length
    /// at least 2, if any.
    std::optional<unsigned> suggested_power() const { return suggested_power_; }

   private:
    std::optional<unsigned> suggested_power_;
};

/// Smallest p in 1..|A|+1 with sigma^p(a) starting with a and |sigma^p(a)| >= 2.
std::optional<unsigned> fixed_point_power(const Substitution &sigma, Letter a);

/// The fixed point of sigma starting with a, as a lazily extended stream.
PrefixStream fixed_point(const Substitution &sigma, Letter a);
/// Its prefix of length L.
Word fixed_point_prefix(const Substitution &sigma, Letter a, std::size_t length);

/// (M)_{ij} = number of occurrences of letter i in sigma(j).
IntMatrix incidence_matrix(const Substitution &sigma);

enum class PisotMode { loose, strict };

struct PisotReport {
    bool primitive = false;
    Interval leading_eigenvalue;
    Interval conjugate_moduli_bound;
    RootCount root_counts;
    IntPolynomial char_poly;
    /// Unset when irreducibility could not be decided.
    std::optional<bool> irreducible;
    bool pisot_loose = false;
    bool pisot_strict = false;
    /// Verdict in the requested mode.
    bool pisot = false;
    /// Perron eigenvector normalized to sum 1; empty when not primitive.
    std::vector<Interval> frequencies;
    /// Sup-norm difference between the exact frequencies and a floating-point
    /// power iteration; negative when not computed.
    double frequency_crosscheck_error = -1;
};

PisotReport classify_pisot(const Substitution &sigma, PisotMode mode = PisotMode::strict, unsigned bits = 64);

/// Positive right eigenvector for the simple real eigenvalue given by
/// `lambda`, normalized to sum 1, from a column of adj(lambda I - M).
std::vector<Interval> perron_frequencies(const IntMatrix &m, const Interval &lambda);

/// L1-normalized power iteration in double precision.
std::vector<double> power_iteration_frequencies(const IntMatrix &m, std::size_t max_iterations = 10000,
                                                double tolerance = 1e-15);

struct SubstitutionEntropy {
    double value = 0;
    /// Letters whose fixed points were summed.
    std::vector<Letter> letters;
    /// Power of sigma used (1 unless no letter admits a fixed point of sigma).
    unsigned power = 1;
    /// Set when a power of sigma was used; this goes beyond the plain
    /// definition, which only covers letters with fixed points of sigma.
    bool extension = false;
    /// Set when any summand is a truncated estimate.
    bool truncated = false;
};

/// Finite-n estimate: sum of entropy_estimate(prefix of length L, n) over the
/// fixed points of sigma starting with eligible letters.
SubstitutionEntropy substitution_entropy(const Substitution &sigma, std::size_t n, std::size_t prefix_length);

}  // namespace pisot

#endif
