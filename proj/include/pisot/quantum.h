#ifndef PISOT_QUANTUM_H
#define PISOT_QUANTUM_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "pisot/int_matrix.h"
#include "pisot/interval.h"
#include "pisot/spacing.h"
#include "pisot/substitution.h"
#include "pisot/words.h"

namespace pisot {

using Amplitude = std::complex<double>;

/// Finite superposition of words over one alphabet. Words are orthonormal
/// basis labels; zero amplitudes are dropped.
class QuantumState {
   public:
    QuantumState() = default;
    explicit QuantumState(std::map<Word, Amplitude> amplitudes);

    static QuantumState basis(const Word &w);

    const std::map<Word, Amplitude> &amplitudes() const { return amps_; }
    Amplitude amplitude(const Word &w) const;
    std::size_t support_size() const { return amps_.size(); }
    bool empty() const { return amps_.empty(); }
    const AlphabetRef &alphabet() const;

    double norm_squared() const;
    QuantumState normalized() const;
    /// Sum over common words of conj(a) b.
    Amplitude inner_product(const QuantumState &other) const;

   private:
    std::map<Word, Amplitude> amps_;
};

struct FirstKindResult {
    QuantumState state;
    /// Set when two support words had the same image; their amplitudes were
    /// added and the state renormalized.
    bool non_isometric = false;
};

/// |x> -> |sigma(x)> extended linearly.
FirstKindResult apply_first_kind(const Substitution &sigma, const QuantumState &psi);

/// Equal superposition of all |A|^n words of length n.
QuantumState symmetric_state(const AlphabetRef &alphabet, std::size_t n, std::size_t support_cap = std::size_t{1} << 20);

/// sum |a_x|^2 p_n(x) / sum |a_x|^2 over the support.
double quantum_complexity(const QuantumState &psi, std::size_t n);

/// log_{|A|}(quantum_complexity) / n.
double quantum_entropy_estimate(const QuantumState &psi, std::size_t n);

/// M v, without normalization.
std::vector<Amplitude> second_kind_step(const IntMatrix &m, const std::vector<Amplitude> &v);

struct SecondKindLimit {
    /// Unit (Euclidean) Perron vector from normalized power iteration.
    std::vector<double> vector;
    /// |<a|e>|^2 from the iteration.
    std::vector<double> probabilities;
    /// The same probabilities from the exact eigenvector.
    std::vector<Interval> exact_probabilities;
    std::size_t iterations = 0;
    /// ||v_{k+1} - v_k|| per iteration.
    std::vector<double> residuals;
    bool converged = false;
};

/// Normalized power iteration v <- M v / ||M v|| from the basis vector of
/// `start`. Throws std::invalid_argument for non-primitive matrices.
SecondKindLimit second_kind_limit(const IntMatrix &m, Letter start, std::size_t max_iterations = 1000,
                                  double tolerance = 1e-15);

/// Probabilities |v_a|^2 / ||v||^2 of the exact Perron vector.
std::vector<Interval> exact_measurement_distribution(const IntMatrix &m, unsigned bits = 128);

struct QuantumSpacingRun {
    AngleList angles;
    std::vector<Letter> outcomes;
    double zero_rate = 0;
};

/// At step k = 1..N a letter is drawn from the normalized distribution of
/// M^{k-1} |0>, and theta advances by beta_0 or beta_1. The generator is
/// std::mt19937_64 seeded with `seed`; uniforms are (x >> 11) * 2^-53.
QuantumSpacingRun quantum_spacing_simulate(const Substitution &sigma, double beta0, double beta1, std::size_t count,
                                           std::uint64_t seed);

}  // namespace pisot

#endif
