#include "pisot/words.h"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace pisot {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)), single_char_(true) {
    if (symbols_.size() < 2) {
        throw std::invalid_argument("alphabet needs at least two symbols");
    }
    std::unordered_set<std::string> seen;
    for (const auto &s : symbols_) {
        if (s.empty()) {
            throw std::invalid_argument("alphabet symbols must be nonempty");
        }
        if (s.find(',') != std::string::npos) {
            throw std::invalid_argument("alphabet symbols must not contain ','");
        }
        if (!seen.insert(s).second) {
            throw std::invalid_argument("duplicate alphabet symbol '" + s + "'");
        }
        if (s.size() != 1) {
            single_char_ = false;
        }
    }
}

Alphabet Alphabet::digits(std::size_t size) {
    std::vector<std::string> symbols;
    symbols.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        symbols.push_back(std::to_string(i));
    }
    return Alphabet(std::move(symbols));
}

const std::string &Alphabet::symbol(Letter letter) const {
    if (letter >= symbols_.size()) {
        throw std::out_of_range("letter index outside alphabet");
    }
    return symbols_[letter];
}

std::optional<Letter> Alphabet::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == symbol) {
            return static_cast<Letter>(i);
        }
    }
    return std::nullopt;
}

AlphabetRef make_alphabet(std::vector<std::string> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

AlphabetRef digit_alphabet(std::size_t size) { return std::make_shared<const Alphabet>(Alphabet::digits(size)); }

bool same_alphabet(const AlphabetRef &a, const AlphabetRef &b) {
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return *a == *b;
}

Word::Word(AlphabetRef alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) {
        throw std::invalid_argument("word requires an alphabet");
    }
    for (Letter l : letters_) {
        if (l >= alphabet_->size()) {
            throw std::out_of_range("letter index outside alphabet");
        }
    }
}

Word Word::parse(AlphabetRef alphabet, std::string_view text) {
    std::vector<Letter> letters;
    if (alphabet->single_char()) {
        for (char c : text) {
            auto idx = alphabet->index_of(std::string_view(&c, 1));
            if (!idx) {
                throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
            }
            letters.push_back(*idx);
        }
    } else if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            auto end = text.find(',', start);
            auto token = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
            auto idx = alphabet->index_of(token);
            if (!idx) {
                throw std::invalid_argument("unknown symbol '" + std::string(token) + "'");
            }
            letters.push_back(*idx);
            if (end == std::string_view::npos) {
                break;
            }
            start = end + 1;
        }
    }
    return Word(std::move(alphabet), std::move(letters));
}

std::string Word::str() const {
    std::string out;
    bool sep = alphabet_ && !alphabet_->single_char();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (sep && i > 0) {
            out += ',';
        }
        out += alphabet_->symbol(letters_[i]);
    }
    return out;
}

std::string Word::braced() const {
    std::string out = "{";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += alphabet_->symbol(letters_[i]);
    }
    out += '}';
    return out;
}

bool Word::operator==(const Word &other) const {
    return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
}

Word concat(const Word &w1, const Word &w2) {
    if (!same_alphabet(w1.alphabet(), w2.alphabet())) {
        throw std::invalid_argument("concat: alphabet mismatch");
    }
    std::vector<Letter> letters;
    letters.reserve(w1.size() + w2.size());
    letters.insert(letters.end(), w1.letters().begin(), w1.letters().end());
    letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
    return Word(w1.alphabet(), std::move(letters));
}

std::size_t occurrences(const Word &haystack, const Word &needle) {
    if (needle.empty()) {
        throw std::invalid_argument("occurrences: empty needle");
    }
    if (!same_alphabet(haystack.alphabet(), needle.alphabet())) {
        throw std::invalid_argument("occurrences: alphabet mismatch");
    }
    if (needle.size() > haystack.size()) {
        return 0;
    }
    const auto &h = haystack.letters();
    const auto &n = needle.letters();
    std::size_t count = 0;
    for (std::size_t i = 0; i + n.size() <= h.size(); ++i) {
        if (std::equal(n.begin(), n.end(), h.begin() + static_cast<std::ptrdiff_t>(i))) {
            ++count;
        }
    }
    return count;
}

static void check_range(const Word &prefix, std::size_t n) {
    if (n < 1 || n > prefix.size()) {
        throw std::out_of_range("factor length " + std::to_string(n) + " outside [1, " +
                                std::to_string(prefix.size()) + "]");
    }
}

std::set<Word> factors(const Word &prefix, std::size_t n) {
    check_range(prefix, n);
    std::set<std::vector<Letter>> windows;
    const auto &l = prefix.letters();
    for (std::size_t i = 0; i + n <= l.size(); ++i) {
        windows.emplace(l.begin() + static_cast<std::ptrdiff_t>(i), l.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
    std::set<Word> out;
    for (auto &w : windows) {
        out.emplace(prefix.alphabet(), w);
    }
    return out;
}

namespace {

// Suffix automaton with flat transition tables. Each state v stands for the
// factors of lengths (len(link v), len v], so a difference array over those
// ranges yields every p_n in linear time.
class SuffixAutomaton {
   public:
    SuffixAutomaton(std::size_t sigma, std::size_t capacity) : sigma_(sigma) {
        len_.reserve(capacity);
        link_.reserve(capacity);
        next_.reserve(capacity * sigma);
        add_state(0, -1);
    }

    void extend(Letter c) {
        int cur = add_state(len_[last_] + 1, -1);
        int p = last_;
        while (p != -1 && edge(p, c) == -1) {
            edge(p, c) = cur;
            p = link_[p];
        }
        if (p == -1) {
            link_[cur] = 0;
        } else {
            int q = edge(p, c);
            if (len_[p] + 1 == len_[q]) {
                link_[cur] = q;
            } else {
                int clone = add_state(len_[p] + 1, link_[q]);
                std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(q * sigma_), sigma_,
                            next_.begin() + static_cast<std::ptrdiff_t>(clone * sigma_));
                while (p != -1 && edge(p, c) == q) {
                    edge(p, c) = clone;
                    p = link_[p];
                }
                link_[q] = clone;
                link_[cur] = clone;
            }
        }
        last_ = cur;
    }

    std::vector<std::uint64_t> counts(std::size_t max_n) const {
        std::vector<std::int64_t> diff(max_n + 2, 0);
        for (std::size_t v = 1; v < len_.size(); ++v) {
            std::size_t lo = static_cast<std::size_t>(len_[link_[v]]) + 1;
            std::size_t hi = static_cast<std::size_t>(len_[v]);
            if (lo > max_n) {
                continue;
            }
            diff[lo] += 1;
            diff[std::min(hi, max_n) + 1] -= 1;
        }
        std::vector<std::uint64_t> out(max_n);
        std::int64_t running = 0;
        for (std::size_t n = 1; n <= max_n; ++n) {
            running += diff[n];
            out[n - 1] = static_cast<std::uint64_t>(running);
        }
        return out;
    }

   private:
    int add_state(int len, int link) {
        len_.push_back(len);
        link_.push_back(link);
        next_.resize(next_.size() + sigma_, -1);
        return static_cast<int>(len_.size()) - 1;
    }
    int &edge(int state, Letter c) { return next_[static_cast<std::size_t>(state) * sigma_ + c]; }

    std::size_t sigma_;
    std::vector<int> len_;
    std::vector<int> link_;
    std::vector<int> next_;
    int last_ = 0;
};

}  // namespace

std::vector<std::uint64_t> factor_counts(std::span<const Letter> letters, std::size_t alphabet_size,
                                         std::size_t max_n) {
    if (max_n > letters.size()) {
        throw std::out_of_range("factor length exceeds prefix length");
    }
    std::size_t capacity = 2 * letters.size() + 2;
    if (alphabet_size * capacity > (std::size_t{1} << 28)) {
        throw std::length_error("factor_counts: alphabet too large for the flat automaton");
    }
    SuffixAutomaton sam(alphabet_size, capacity);
    for (Letter c : letters) {
        sam.extend(c);
    }
    return sam.counts(max_n);
}

std::uint64_t complexity(const Word &prefix, std::size_t n) {
    check_range(prefix, n);
    return factor_counts(prefix.view(), prefix.alphabet()->size(), n).back();
}

ComplexityProfile complexity_profile(const Word &prefix, std::size_t max_n) {
    check_range(prefix, max_n);
    ComplexityProfile profile;
    profile.values = factor_counts(prefix.view(), prefix.alphabet()->size(), max_n);
    profile.prefix_length = prefix.size();
    profile.alphabet_size = prefix.alphabet()->size();
    return profile;
}

EntropyEstimate entropy_from_count(std::uint64_t count, std::size_t alphabet_size, std::size_t n,
                                   std::size_t prefix_length) {
    EntropyEstimate e;
    e.value = std::log2(static_cast<double>(count)) / std::log2(static_cast<double>(alphabet_size)) /
              static_cast<double>(n);
    // |A|^n > L - n + 1, evaluated without overflow.
    std::size_t windows = prefix_length - n + 1;
    double log_words = static_cast<double>(n) * std::log2(static_cast<double>(alphabet_size));
    if (log_words >= 63) {
        e.truncated = true;
    } else {
        std::uint64_t words = 1;
        for (std::size_t i = 0; i < n; ++i) {
            words *= alphabet_size;
        }
        e.truncated = words > windows;
    }
    return e;
}

EntropyEstimate entropy_estimate(const Word &prefix, std::size_t n) {
    return entropy_from_count(complexity(prefix, n), prefix.alphabet()->size(), n, prefix.size());
}

std::vector<Rational> empirical_frequencies(const Word &prefix) {
    if (prefix.empty()) {
        throw std::invalid_argument("empirical_frequencies: empty prefix");
    }
    std::vector<std::uint64_t> counts(prefix.alphabet()->size(), 0);
    for (Letter l : prefix.letters()) {
        ++counts[l];
    }
    std::vector<Rational> out;
    out.reserve(counts.size());
    for (auto c : counts) {
        Rational q(Integer(static_cast<unsigned long>(c)), Integer(static_cast<unsigned long>(prefix.size())));
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

bool sturmian_check(const Word &prefix, std::size_t max_n) {
    if (max_n < 1 || prefix.size() < 2 * max_n) {
        throw std::invalid_argument("sturmian_check: prefix shorter than 2N");
    }
    auto counts = factor_counts(prefix.view(), prefix.alphabet()->size(), max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (counts[n - 1] != n + 1) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> morse_hedlund_witness(const Word &prefix) {
    if (prefix.size() < 2) {
        throw std::invalid_argument("morse_hedlund_witness: prefix shorter than 2");
    }
    std::size_t limit = prefix.size() / 2;
    auto counts = factor_counts(prefix.view(), prefix.alphabet()->size(), limit);
    for (std::size_t n = 1; n <= limit; ++n) {
        if (counts[n - 1] <= n) {
            return n;
        }
    }
    return std::nullopt;
}

struct PrefixStream::State {
    AlphabetRef alphabet;
    Extender extender;
    std::mutex mutex;
    std::vector<Letter> cache;
};

PrefixStream::PrefixStream(AlphabetRef alphabet, Extender extender) : state_(std::make_shared<State>()) {
    state_->alphabet = std::move(alphabet);
    state_->extender = std::move(extender);
}

const AlphabetRef &PrefixStream::alphabet() const { return state_->alphabet; }

Word PrefixStream::prefix(std::size_t length) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto &cache = state_->cache;
    while (cache.size() < length) {
        auto before = cache.size();
        state_->extender(cache);
        if (cache.size() == before) {
            throw std::logic_error("prefix stream extender made no progress");
        }
    }
    return Word(state_->alphabet, std::vector<Letter>(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(length)));
}

Letter PrefixStream::at(std::size_t index) const { return prefix(index + 1)[index]; }

PrefixStream PrefixStream::periodic(const Word &period) {
    if (period.empty()) {
        throw std::invalid_argument("periodic stream needs a nonempty period");
    }
    auto letters = period.letters();
    return PrefixStream(period.alphabet(), [letters](std::vector<Letter> &cache) {
        cache.insert(cache.end(), letters.begin(), letters.end());
    });
}

PrefixStream PrefixStream::champernowne(AlphabetRef alphabet) {
    auto base = static_cast<Letter>(alphabet->size());
    auto block = std::make_shared<std::vector<Letter>>(std::vector<Letter>{0});
    return PrefixStream(alphabet, [block, base](std::vector<Letter> &cache) {
        auto &w = *block;
        cache.insert(cache.end(), w.begin(), w.end());
        // Increment w as a base-|A| counter; on overflow move to the next length.
        std::size_t i = w.size();
        while (i > 0) {
            --i;
            if (++w[i] < base) {
                return;
            }
            w[i] = 0;
        }
        w.assign(w.size() + 1, 0);
    });
}

}  // namespace pisot
