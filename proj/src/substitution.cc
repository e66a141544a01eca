#include "pisot/substitution.h"

#include <algorithm>
#include <cmath>
#include <memory>

namespace pisot {

Substitution::Substitution(AlphabetRef alphabet, std::vector<std::vector<Letter>> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    if (!alphabet_) {
        throw std::invalid_argument("substitution needs an alphabet");
    }
    if (rules_.size() != alphabet_->size()) {
        throw std::invalid_argument("substitution needs exactly one rule per letter");
    }
    for (std::size_t a = 0; a < rules_.size(); ++a) {
        if (rules_[a].empty()) {
            throw std::invalid_argument("empty image for letter '" + alphabet_->symbol(static_cast<Letter>(a)) + "'");
        }
        for (Letter b : rules_[a]) {
            if (b >= alphabet_->size()) {
                throw std::invalid_argument("rule uses a letter outside the alphabet");
            }
        }
    }
}

Substitution Substitution::fibonacci() { return Substitution(digit_alphabet(2), {{0, 1}, {0}}); }
Substitution Substitution::pell() { return Substitution(digit_alphabet(2), {{0, 1}, {0, 0, 1}}); }
Substitution Substitution::padovan() { return Substitution(digit_alphabet(3), {{1, 2}, {2}, {0}}); }
Substitution Substitution::thue_morse() { return Substitution(digit_alphabet(2), {{0, 1}, {1, 0}}); }

const std::vector<Letter> &Substitution::rule(Letter letter) const {
    if (letter >= rules_.size()) {
        throw std::out_of_range("letter outside the alphabet");
    }
    return rules_[letter];
}

void Substitution::apply_into(std::span<const Letter> letters, std::vector<Letter> &out) const {
    for (Letter a : letters) {
        const auto &r = rule(a);
        out.insert(out.end(), r.begin(), r.end());
    }
}

Word Substitution::apply(const Word &w) const {
    if (!w.alphabet() && w.empty()) {
        return Word(alphabet_, {});
    }
    if (!same_alphabet(w.alphabet(), alphabet_)) {
        throw std::invalid_argument("word and substitution use different alphabets");
    }
    std::vector<Letter> out;
    apply_into(w.view(), out);
    return Word(alphabet_, std::move(out));
}

Substitution Substitution::power(unsigned k) const {
    std::vector<std::vector<Letter>> rules;
    for (std::size_t a = 0; a < rules_.size(); ++a) {
        rules.push_back(iterate(*this, static_cast<Letter>(a), k).letters());
    }
    return Substitution(alphabet_, std::move(rules));
}

Substitution Substitution::relabeled(const std::vector<Letter> &perm) const {
    std::size_t n = rules_.size();
    if (perm.size() != n) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<bool> seen(n, false);
    for (Letter p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[p] = true;
    }
    std::vector<std::string> symbols(n);
    std::vector<std::vector<Letter>> rules(n);
    for (std::size_t a = 0; a < n; ++a) {
        symbols[perm[a]] = alphabet_->symbol(static_cast<Letter>(a));
        for (Letter b : rules_[a]) {
            rules[perm[a]].push_back(perm[b]);
        }
    }
    return Substitution(make_alphabet(std::move(symbols)), std::move(rules));
}

bool Substitution::operator==(const Substitution &other) const {
    return *alphabet_ == *other.alphabet_ && rules_ == other.rules_;
}

Substitution compose(const Substitution &a, const Substitution &b) {
    if (!same_alphabet(a.alphabet(), b.alphabet())) {
        throw std::invalid_argument("composing substitutions over different alphabets");
    }
    std::vector<std::vector<Letter>> rules;
    for (std::size_t x = 0; x < b.size(); ++x) {
        std::vector<Letter> out;
        a.apply_into(b.rule(static_cast<Letter>(x)), out);
        rules.push_back(std::move(out));
    }
    return Substitution(a.alphabet(), std::move(rules));
}

Word iterate(const Substitution &sigma, Letter a, unsigned k) {
    std::vector<Letter> cur{a};
    sigma.rule(a);
    for (unsigned i = 0; i < k; ++i) {
        std::vector<Letter> next;
        sigma.apply_into(cur, next);
        cur = std::move(next);
    }
    return Word(sigma.alphabet(), std::move(cur));
}

mpz_class iterate_length(const Substitution &sigma, Letter a, unsigned k) {
    IntMatrix m = incidence_matrix(sigma);
    std::vector<mpz_class> v(sigma.size(), 0);
    v.at(a) = 1;
    for (unsigned i = 0; i < k; ++i) {
        v = m.apply(v);
    }
    mpz_class total = 0;
    for (const auto &x : v) total += x;
    return total;
}

std::optional<unsigned> fixed_point_power(const Substitution &sigma, Letter a) {
    std::size_t n = sigma.size();
    Letter first = a;
    for (unsigned p = 1; p <= n + 1; ++p) {
        first = sigma.rule(first).front();
        if (first == a && iterate_length(sigma, a, p) >= 2) {
            return p;
        }
    }
    return std::nullopt;
}

PrefixStream fixed_point(const Substitution &sigma, Letter a) {
    const auto &image = sigma.rule(a);
    if (image.front() != a || image.size() < 2) {
        auto p = fixed_point_power(sigma, a);
        std::string msg = "sigma(" + sigma.alphabet()->symbol(a) + ") ";
        msg += image.front() != a ? "does not start with the letter" : "has length 1";
        if (p) {
            msg += "; sigma^" + std::to_string(*p) + " has a fixed point starting with it";
        }
        throw FixedPointError(msg, p);
    }
    // Position r of the fixed point expands to sigma(x_r), which is appended
    // once positions 0..r-1 have been expanded.
    auto expanded = std::make_shared<std::size_t>(0);
    Substitution s = sigma;
    return PrefixStream(sigma.alphabet(), [s, a, expanded](std::vector<Letter> &cache) {
        if (cache.empty()) {
            cache = s.rule(a);
            *expanded = 1;
            return;
        }
        const auto &r = s.rule(cache[*expanded]);
        cache.insert(cache.end(), r.begin(), r.end());
        ++*expanded;
    });
}

Word fixed_point_prefix(const Substitution &sigma, Letter a, std::size_t length) {
    return fixed_point(sigma, a).prefix(length);
}

IntMatrix incidence_matrix(const Substitution &sigma) {
    IntMatrix m(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        for (Letter i : sigma.rule(static_cast<Letter>(j))) {
            m(i, j) += 1;
        }
    }
    return m;
}

std::vector<Interval> perron_frequencies(const IntMatrix &m, const Interval &lambda) {
    std::size_t n = m.dimension();
    auto adj = adjugate_coefficients(m);
    // adj(lambda I - M) = sum_k B_k lambda^{n-1-k}
    std::vector<Interval> powers(n);
    powers[0] = Interval(mpq_class(1));
    for (std::size_t k = 1; k < n; ++k) {
        powers[k] = powers[k - 1] * lambda;
    }
    auto entry = [&](std::size_t i, std::size_t j) {
        Interval acc(mpq_class(0));
        for (std::size_t k = 0; k < n; ++k) {
            const mpz_class &b = adj[k](i, j);
            if (b != 0) {
                acc = acc + powers[n - 1 - k] * Interval(mpq_class(b));
            }
        }
        return acc;
    };
    std::size_t best = 0;
    double best_norm = -1;
    for (std::size_t j = 0; j < n; ++j) {
        double norm = 0;
        for (std::size_t i = 0; i < n; ++i) norm += std::fabs(entry(i, j).mid_d());
        if (norm > best_norm) {
            best_norm = norm;
            best = j;
        }
    }
    std::vector<Interval> v;
    Interval sum(mpq_class(0));
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(entry(i, best));
        sum = sum + v.back();
    }
    if (sum.contains_zero()) {
        throw std::domain_error("eigenvalue is not simple or its interval is too wide");
    }
    for (auto &x : v) {
        x = x / sum;
    }
    return v;
}

std::vector<double> power_iteration_frequencies(const IntMatrix &m, std::size_t max_iterations, double tolerance) {
    std::size_t n = m.dimension();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_d();
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    for (std::size_t it = 0; it < max_iterations; ++it) {
        std::vector<double> w(n, 0.0);
        double sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) w[i] += a[i * n + j] * v[j];
            sum += w[i];
        }
        double diff = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] /= sum;
            diff = std::max(diff, std::fabs(w[i] - v[i]));
        }
        v = std::move(w);
        if (diff < tolerance) break;
    }
    return v;
}

PisotReport classify_pisot(const Substitution &sigma, PisotMode mode, unsigned bits) {
    PisotReport report;
    IntMatrix m = incidence_matrix(sigma);
    report.primitive = is_primitive(m);
    report.char_poly = char_poly(m);
    report.root_counts = unit_circle_counts(report.char_poly);
    Irreducibility irr = irreducibility(report.char_poly);
    if (irr != Irreducibility::unknown) {
        report.irreducible = irr == Irreducibility::irreducible;
    }
    AlgebraicReal lambda = largest_real_root(report.char_poly);
    report.leading_eigenvalue = lambda.approximate(bits);
    report.conjugate_moduli_bound = max_conjugate_modulus(report.char_poly, std::min(bits, 40u));
    bool dominant_above_one = count_real_roots(report.char_poly, mpq_class(1), cauchy_bound(report.char_poly)) >= 1;
    report.pisot_loose =
        report.root_counts.outside == 1 && report.root_counts.on_circle == 0 && dominant_above_one;
    report.pisot_strict = report.pisot_loose && report.irreducible.value_or(false);
    report.pisot = mode == PisotMode::loose ? report.pisot_loose : report.pisot_strict;
    if (report.primitive) {
        report.frequencies = perron_frequencies(m, report.leading_eigenvalue);
        auto approx = power_iteration_frequencies(m);
        double err = 0;
        for (std::size_t i = 0; i < approx.size(); ++i) {
            err = std::max(err, std::fabs(approx[i] - report.frequencies[i].mid_d()));
        }
        report.frequency_crosscheck_error = err;
    }
    return report;
}

SubstitutionEntropy substitution_entropy(const Substitution &sigma, std::size_t n, std::size_t prefix_length) {
    SubstitutionEntropy result;
    auto accumulate = [&](const Substitution &s) {
        for (std::size_t a = 0; a < s.size(); ++a) {
            const auto &image = s.rule(static_cast<Letter>(a));
            if (image.front() != a || image.size() < 2) continue;
            Word prefix = fixed_point_prefix(s, static_cast<Letter>(a), prefix_length);
            EntropyEstimate e = entropy_estimate(prefix, n);
            result.value += e.value;
            result.truncated = result.truncated || e.truncated;
            result.letters.push_back(static_cast<Letter>(a));
        }
    };
    accumulate(sigma);
    if (!result.letters.empty()) {
        return result;
    }
    // No letter has a fixed point of sigma itself: use the smallest common
    // power that gives one for some letter.
    std::optional<unsigned> best;
    for (std::size_t a = 0; a < sigma.size(); ++a) {
        auto p = fixed_point_power(sigma, static_cast<Letter>(a));
        if (p && (!best || *p < *best)) best = p;
    }
    if (!best) {
        throw std::domain_error("no power of sigma up to |A|+1 has a fixed point");
    }
    result.power = *best;
    result.extension = true;
    accumulate(sigma.power(*best));
    return result;
}

}  // namespace pisot
