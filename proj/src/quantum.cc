#include "pisot/quantum.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "pisot/algebraic.h"

namespace pisot {

QuantumState::QuantumState(std::map<Word, Amplitude> amplitudes) {
    const Alphabet *alphabet = nullptr;
    for (auto &[w, a] : amplitudes) {
        if (!w.alphabet()) {
            throw std::invalid_argument("quantum state word without an alphabet");
        }
        if (alphabet && !(*alphabet == *w.alphabet())) {
            throw std::invalid_argument("quantum state mixes alphabets");
        }
        alphabet = w.alphabet().get();
        if (a != Amplitude(0)) {
            amps_.emplace(w, a);
        }
    }
}

QuantumState QuantumState::basis(const Word &w) { return QuantumState({{w, Amplitude(1)}}); }

Amplitude QuantumState::amplitude(const Word &w) const {
    auto it = amps_.find(w);
    return it == amps_.end() ? Amplitude(0) : it->second;
}

const AlphabetRef &QuantumState::alphabet() const {
    if (amps_.empty()) {
        throw std::logic_error("empty quantum state has no alphabet");
    }
    return amps_.begin()->first.alphabet();
}

double QuantumState::norm_squared() const {
    double s = 0;
    for (const auto &[w, a] : amps_) s += std::norm(a);
    return s;
}

QuantumState QuantumState::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero state");
    }
    std::map<Word, Amplitude> out;
    for (const auto &[w, a] : amps_) out.emplace(w, a / n);
    return QuantumState(std::move(out));
}

Amplitude QuantumState::inner_product(const QuantumState &other) const {
    Amplitude s = 0;
    for (const auto &[w, a] : amps_) {
        s += std::conj(a) * other.amplitude(w);
    }
    return s;
}

FirstKindResult apply_first_kind(const Substitution &sigma, const QuantumState &psi) {
    if (psi.empty()) {
        throw std::invalid_argument("first-kind operator needs a nonempty support");
    }
    FirstKindResult result;
    std::map<Word, Amplitude> out;
    for (const auto &[w, a] : psi.amplitudes()) {
        auto [it, inserted] = out.emplace(sigma.apply(w), a);
        if (!inserted) {
            it->second += a;
            result.non_isometric = true;
        }
    }
    result.state = QuantumState(std::move(out));
    if (result.non_isometric && !result.state.empty()) {
        result.state = result.state.normalized();
    }
    return result;
}

QuantumState symmetric_state(const AlphabetRef &alphabet, std::size_t n, std::size_t support_cap) {
    std::size_t k = alphabet->size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > support_cap / k) {
            throw std::length_error("symmetric state support exceeds the cap");
        }
        total *= k;
    }
    if (total > support_cap) {
        throw std::length_error("symmetric state support exceeds the cap");
    }
    Amplitude amp(1.0 / std::sqrt(static_cast<double>(total)), 0.0);
    std::map<Word, Amplitude> out;
    std::vector<Letter> letters(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t v = idx;
        for (std::size_t i = n; i-- > 0;) {
            letters[i] = static_cast<Letter>(v % k);
            v /= k;
        }
        out.emplace_hint(out.end(), Word(alphabet, letters), amp);
    }
    return QuantumState(std::move(out));
}

double quantum_complexity(const QuantumState &psi, std::size_t n) {
    if (psi.empty()) {
        throw std::invalid_argument("quantum complexity of an empty state");
    }
    double weighted = 0;
    for (const auto &[w, a] : psi.amplitudes()) {
        if (w.size() < n || n == 0) {
            throw std::invalid_argument("support word shorter than n");
        }
        weighted += std::norm(a) * static_cast<double>(complexity(w, n));
    }
    return weighted / psi.norm_squared();
}

double quantum_entropy_estimate(const QuantumState &psi, std::size_t n) {
    double q = quantum_complexity(psi, n);
    return std::log2(q) / std::log2(static_cast<double>(psi.alphabet()->size())) / static_cast<double>(n);
}

std::vector<Amplitude> second_kind_step(const IntMatrix &m, const std::vector<Amplitude> &v) {
    std::size_t n = m.dimension();
    if (v.size() != n) {
        throw std::invalid_argument("letter vector dimension mismatch");
    }
    std::vector<Amplitude> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i] += m(i, j).get_d() * v[j];
        }
    }
    return out;
}

std::vector<Interval> exact_measurement_distribution(const IntMatrix &m, unsigned bits) {
    IntPolynomial p = char_poly(m);
    Interval lambda = largest_real_root(p).approximate(bits);
    std::vector<Interval> f = perron_frequencies(m, lambda);
    Interval total(mpq_class(0));
    for (const auto &x : f) total = total + x * x;
    std::vector<Interval> out;
    for (const auto &x : f) out.push_back(((x * x) / total).round_outward(bits));
    return out;
}

SecondKindLimit second_kind_limit(const IntMatrix &m, Letter start, std::size_t max_iterations, double tolerance) {
    std::size_t n = m.dimension();
    if (start >= n) {
        throw std::out_of_range("start letter outside the alphabet");
    }
    if (!is_primitive(m)) {
        throw std::invalid_argument("second-kind limit needs a primitive matrix");
    }
    SecondKindLimit result;
    std::vector<double> v(n, 0.0);
    v[start] = 1.0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        std::vector<double> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j).get_d() * v[j];
        double norm = 0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        double diff = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] /= norm;
            diff += (w[i] - v[i]) * (w[i] - v[i]);
        }
        diff = std::sqrt(diff);
        v = std::move(w);
        result.residuals.push_back(diff);
        result.iterations = it + 1;
        if (diff < tolerance) {
            result.converged = true;
            break;
        }
    }
    result.vector = v;
    for (double x : v) result.probabilities.push_back(x * x);
    result.exact_probabilities = exact_measurement_distribution(m);
    return result;
}

QuantumSpacingRun quantum_spacing_simulate(const Substitution &sigma, double beta0, double beta1, std::size_t count,
                                           std::uint64_t seed) {
    if (sigma.size() != 2) {
        throw std::invalid_argument("quantum spacing needs a binary substitution");
    }
    if (!(beta0 >= 0 && beta0 < kTwoPi && beta1 >= 0 && beta1 < kTwoPi)) {
        throw std::out_of_range("beta outside [0, 2pi)");
    }
    if (!classify_pisot(sigma, PisotMode::loose).pisot_loose) {
        throw std::invalid_argument("quantum spacing needs a substitution of Pisot type");
    }
    IntMatrix m = incidence_matrix(sigma);
    double m00 = m(0, 0).get_d(), m01 = m(0, 1).get_d(), m10 = m(1, 0).get_d(), m11 = m(1, 1).get_d();
    std::mt19937_64 rng(seed);
    QuantumSpacingRun run;
    run.outcomes.reserve(count);
    std::vector<double> angles;
    angles.reserve(count);
    double v0 = 1.0, v1 = 0.0;
    double theta = 0;
    std::size_t zeros = 0;
    for (std::size_t k = 1; k <= count; ++k) {
        double p0 = v0 * v0 / (v0 * v0 + v1 * v1);
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        Letter outcome = u < p0 ? 0 : 1;
        run.outcomes.push_back(outcome);
        if (outcome == 0) ++zeros;
        theta = mod_two_pi(theta + (outcome == 0 ? beta0 : beta1));
        angles.push_back(theta);
        double w0 = m00 * v0 + m01 * v1;
        double w1 = m10 * v0 + m11 * v1;
        double norm = std::sqrt(w0 * w0 + w1 * w1);
        v0 = w0 / norm;
        v1 = w1 / norm;
    }
    run.angles = AngleList(std::move(angles));
    run.zero_rate = count ? static_cast<double>(zeros) / static_cast<double>(count) : 0.0;
    return run;
}

}  // namespace pisot
