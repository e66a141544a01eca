#include "pisot/cantor.h"

#include <algorithm>
#include <stdexcept>

#include <mpfr.h>

namespace pisot {

namespace {

mpz_class ui_pow(unsigned long base, std::size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

Rational value_of(std::span<const Letter> letters, std::size_t base) {
    // Horner over the digits: sum d_n base^{len-n}, then divide once.
    mpz_class num = 0;
    for (Letter l : letters) {
        num = num * static_cast<unsigned long>(base) + l;
    }
    Rational r(num, ui_pow(base, letters.size()));
    r.canonicalize();
    return r;
}

}  // namespace

Rational numeric_value(const Word &prefix) {
    if (prefix.empty()) {
        throw std::invalid_argument("numeric value of an empty word");
    }
    return value_of(prefix.view(), prefix.alphabet()->size());
}

Word representation(const AlphabetRef &alphabet, const Rational &q, std::size_t digits) {
    if (q < 0 || q > 1) {
        throw std::out_of_range("representation needs 0 <= q <= 1");
    }
    auto base = static_cast<unsigned long>(alphabet->size());
    std::vector<Letter> out;
    out.reserve(digits);
    if (q == 0) {
        out.assign(digits, 0);
        return Word(alphabet, std::move(out));
    }
    mpz_class num = q.get_num();
    const mpz_class &den = q.get_den();
    for (std::size_t i = 0; i < digits; ++i) {
        // d = ceil(x b) - 1 keeps the remainder x b - d in (0, 1].
        num *= base;
        mpz_class d;
        mpz_cdiv_q(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        d -= 1;
        out.push_back(static_cast<Letter>(d.get_ui()));
        num -= d * den;
    }
    return Word(alphabet, std::move(out));
}

TransitionResult alphabet_transition(const AlphabetRef &target, const Word &prefix, std::size_t digits) {
    Rational v = numeric_value(prefix);
    TransitionResult result;
    result.word = representation(target, v, digits);
    result.truncation_bound = Rational(1, ui_pow(prefix.alphabet()->size(), prefix.size()));
    result.truncation_bound.canonicalize();
    return result;
}

CantorSpec::CantorSpec(AlphabetRef alphabet, Letter excluded) : alphabet_(std::move(alphabet)), excluded_(excluded) {
    if (excluded_ >= alphabet_->size()) {
        throw std::out_of_range("excluded letter outside the alphabet");
    }
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
        if (i != excluded_) symbols.push_back(alphabet_->symbol(static_cast<Letter>(i)));
    }
    if (symbols.size() >= 2) {
        reduced_ = make_alphabet(std::move(symbols));
    }
}

CantorSpec CantorSpec::middle_third() { return CantorSpec(digit_alphabet(3), 1); }

bool CantorSpec::has_interior_excluded() const { return excluded_ > 0 && excluded_ + 1 < alphabet_->size(); }

bool CantorSpec::avoids_excluded(const Word &w) const {
    return std::find(w.letters().begin(), w.letters().end(), excluded_) == w.letters().end();
}

Word CantorSpec::to_reduced(const Word &w) const {
    if (!reduced_) {
        throw std::invalid_argument("reduced alphabet needs |A| >= 3");
    }
    if (!same_alphabet(w.alphabet(), alphabet_)) {
        throw std::invalid_argument("word is not over the Cantor alphabet");
    }
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w.letters()) {
        if (l == excluded_) {
            throw std::invalid_argument("word uses the excluded letter");
        }
        out.push_back(l < excluded_ ? l : l - 1);
    }
    return Word(reduced_, std::move(out));
}

Interval hausdorff_dimension(const CantorSpec &spec, unsigned bits) {
    std::size_t a = spec.alphabet()->size();
    if (a < 3) {
        throw std::invalid_argument("Hausdorff dimension needs |A| >= 3");
    }
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 16;
    mpfr_t log_b_lo, log_b_hi, log_a_lo, log_a_hi, lo, hi;
    for (mpfr_ptr x : {log_b_lo, log_b_hi, log_a_lo, log_a_hi, lo, hi}) mpfr_init2(x, prec);
    mpfr_set_ui(log_b_lo, static_cast<unsigned long>(a - 1), MPFR_RNDN);
    mpfr_set_ui(log_a_lo, static_cast<unsigned long>(a), MPFR_RNDN);
    mpfr_log(log_b_hi, log_b_lo, MPFR_RNDU);
    mpfr_log(log_b_lo, log_b_lo, MPFR_RNDD);
    mpfr_log(log_a_hi, log_a_lo, MPFR_RNDU);
    mpfr_log(log_a_lo, log_a_lo, MPFR_RNDD);
    mpfr_div(lo, log_b_lo, log_a_hi, MPFR_RNDD);
    mpfr_div(hi, log_b_hi, log_a_lo, MPFR_RNDU);
    mpq_class qlo, qhi;
    mpfr_get_q(qlo.get_mpq_t(), lo);
    mpfr_get_q(qhi.get_mpq_t(), hi);
    for (mpfr_ptr x : {log_b_lo, log_b_hi, log_a_lo, log_a_hi, lo, hi}) mpfr_clear(x);
    return Interval(qlo, qhi);
}

Rational cantor_function_value(const CantorSpec &spec, const Word &prefix) {
    if (!spec.has_interior_excluded()) {
        throw std::invalid_argument("Cantor function needs 0 < lex(a) < |A| - 1");
    }
    if (prefix.empty()) {
        throw std::invalid_argument("Cantor function is defined on nonempty words");
    }
    Word b = spec.to_reduced(prefix);
    std::size_t nb = spec.reduced_alphabet()->size();
    Rational tail(1, ui_pow(nb, b.size()));
    tail.canonicalize();
    return numeric_value(b) + tail;
}

StaircaseValue cantor_staircase(const CantorSpec &spec, const Rational &q, std::size_t digits) {
    if (!spec.has_interior_excluded()) {
        throw std::invalid_argument("Cantor function needs 0 < lex(a) < |A| - 1");
    }
    Word r = representation(spec.alphabet(), q, digits);
    std::vector<Letter> prefix;
    for (Letter l : r.letters()) {
        if (l == spec.excluded()) {
            // Inside a removed gap: the staircase equals its value at the
            // left end, reached through the letter just below a.
            prefix.push_back(spec.excluded() - 1);
            return {cantor_function_value(spec, Word(spec.alphabet(), prefix)), Rational(0)};
        }
        prefix.push_back(l);
    }
    std::size_t nb = spec.reduced_alphabet()->size();
    Rational bound(1, ui_pow(nb, digits));
    bound.canonicalize();
    if (digits == 0) {
        return {Rational(0), Rational(1)};
    }
    return {numeric_value(spec.to_reduced(Word(spec.alphabet(), prefix))), bound};
}

MonotonicityReport check_cantor_monotonicity(const CantorSpec &spec, std::size_t max_length) {
    if (!spec.has_interior_excluded()) {
        throw std::invalid_argument("Cantor function needs 0 < lex(a) < |A| - 1");
    }
    std::size_t na = spec.alphabet()->size();
    std::vector<Letter> b_letters;
    for (std::size_t i = 0; i < na; ++i) {
        if (i != spec.excluded()) b_letters.push_back(static_cast<Letter>(i));
    }
    Letter b_max = b_letters.back();
    struct Entry {
        Rational key;
        Rational value;
    };
    std::vector<Entry> entries;
    std::vector<Letter> w;
    // Enumerate B-words by length with a mixed-radix counter over b_letters.
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            w.clear();
            for (std::size_t i : idx) w.push_back(b_letters[i]);
            Word word(spec.alphabet(), w);
            Rational tail(b_max, ui_pow(na, len) * static_cast<unsigned long>(na - 1));
            tail.canonicalize();
            entries.push_back({numeric_value(word) + tail, cantor_function_value(spec, word)});
            std::size_t k = len;
            while (k > 0 && ++idx[k - 1] == b_letters.size()) {
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry &x, const Entry &y) { return x.key < y.key; });
    MonotonicityReport report;
    report.words_checked = entries.size();
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const auto &prev = entries[i - 1];
        const auto &cur = entries[i];
        if (cur.value < prev.value || (cur.key == prev.key && cur.value != prev.value)) {
            report.monotone = false;
        }
        if (cur.key == prev.key && cur.value == prev.value) {
            ++report.plateaus;
        }
    }
    return report;
}

}  // namespace pisot
