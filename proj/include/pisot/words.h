#ifndef PISOT_WORDS_H
#define PISOT_WORDS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pisot {

using Letter = std::uint32_t;
using Rational = mpq_class;
using Integer = mpz_class;

/// An ordered finite alphabet. The lexicographic index of a symbol is its
/// position in the list.
class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> symbols);

    /// The alphabet {"0", "1", ..., "size-1"}.
    static Alphabet digits(std::size_t size);

    std::size_t size() const { return symbols_.size(); }
    const std::string &symbol(Letter letter) const;
    const std::vector<std::string> &symbols() const { return symbols_; }
    std::optional<Letter> index_of(std::string_view symbol) const;
    /// True when every symbol is a single character; words then serialize
    /// without separators.
    bool single_char() const { return single_char_; }

    bool operator==(const Alphabet &other) const { return symbols_ == other.symbols_; }

   private:
    std::vector<std::string> symbols_;
    bool single_char_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::vector<std::string> symbols);
AlphabetRef digit_alphabet(std::size_t size);

/// A finite word over a shared alphabet. The empty word is representable.
class Word {
   public:
    Word() = default;
    Word(AlphabetRef alphabet, std::vector<Letter> letters);

    /// Parses "01001" (single-char alphabets) or "a,bb,a" (otherwise).
    static Word parse(AlphabetRef alphabet, std::string_view text);

    const AlphabetRef &alphabet() const { return alphabet_; }
    const std::vector<Letter> &letters() const { return letters_; }
    std::span<const Letter> view() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    /// Serialized form: tokens joined without separator for single-char
    /// alphabets, with commas otherwise.
    std::string str() const;
    /// "{0,1,0}" listing form.
    std::string braced() const;

    bool operator==(const Word &other) const;
    bool operator<(const Word &other) const { return letters_ < other.letters_; }

   private:
    AlphabetRef alphabet_;
    std::vector<Letter> letters_;
};

bool same_alphabet(const AlphabetRef &a, const AlphabetRef &b);

Word concat(const Word &w1, const Word &w2);

/// Number of (possibly overlapping) occurrences of needle in haystack.
std::size_t occurrences(const Word &haystack, const Word &needle);

/// The set of distinct length-n factors of the prefix.
std::set<Word> factors(const Word &prefix, std::size_t n);

/// Distinct factor counts p_1..p_max for a letter sequence, computed with a
/// suffix automaton. Result index i holds p_{i+1}.
std::vector<std::uint64_t> factor_counts(std::span<const Letter> letters, std::size_t alphabet_size,
                                         std::size_t max_n);

/// Number of distinct length-n factors of the prefix.
std::uint64_t complexity(const Word &prefix, std::size_t n);

struct ComplexityProfile {
    std::vector<std::uint64_t> values;  // values[i] = p_{i+1}
    std::size_t prefix_length = 0;
    std::size_t alphabet_size = 0;

    std::uint64_t at(std::size_t n) const { return values.at(n - 1); }
    std::size_t max_n() const { return values.size(); }
};

ComplexityProfile complexity_profile(const Word &prefix, std::size_t max_n);

struct EntropyEstimate {
    double value = 0;
    /// Set when |A|^n exceeds the number of length-n windows, so the value is
    /// only a lower bound for the finite-n estimator.
    bool truncated = false;
};

/// log_{|A|}(p_n) / n for the prefix.
EntropyEstimate entropy_estimate(const Word &prefix, std::size_t n);
EntropyEstimate entropy_from_count(std::uint64_t count, std::size_t alphabet_size, std::size_t n,
                                   std::size_t prefix_length);

/// Per-letter occurrence counts divided by the prefix length.
std::vector<Rational> empirical_frequencies(const Word &prefix);

/// True iff p_n = n + 1 for all 1 <= n <= max_n. Requires |prefix| >= 2 max_n.
bool sturmian_check(const Word &prefix, std::size_t max_n);

/// Smallest n <= |prefix| / 2 with p_n <= n, if any.
std::optional<std::size_t> morse_hedlund_witness(const Word &prefix);

/// An infinite letter sequence materialized on demand. Copies share the
/// cache; extension is serialized by an internal mutex.
class PrefixStream {
   public:
    /// Called with the current cache; must append at least one letter, and
    /// must be deterministic.
    using Extender = std::function<void(std::vector<Letter> &cache)>;

    PrefixStream(AlphabetRef alphabet, Extender extender);

    const AlphabetRef &alphabet() const;
    Word prefix(std::size_t length) const;
    Letter at(std::size_t index) const;

    static PrefixStream periodic(const Word &period);
    /// Champernowne stream: all words over the alphabet concatenated in
    /// length-lexicographic order.
    static PrefixStream champernowne(AlphabetRef alphabet);

   private:
    struct State;
    std::shared_ptr<State> state_;
};

}  // namespace pisot

#endif
