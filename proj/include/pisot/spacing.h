#ifndef PISOT_SPACING_H
#define PISOT_SPACING_H

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pisot/polynomial.h"
#include "pisot/substitution.h"

namespace pisot {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

/// Angles in [0, 2 pi). When every angle is a rational number of turns the
/// exact turns are kept alongside, so statistics can be computed exactly.
class AngleList {
   public:
    AngleList() = default;
    explicit AngleList(std::vector<double> radians);
    /// Angles 2 pi t for rational t in [0, 1).
    static AngleList from_turns(std::vector<mpq_class> turns);

    const std::vector<double> &radians() const { return radians_; }
    const std::optional<std::vector<mpq_class>> &turns() const { return turns_; }
    std::size_t size() const { return radians_.size(); }
    double operator[](std::size_t i) const { return radians_[i]; }

    /// Adds a constant angle to every entry, reducing modulo 2 pi. Exact turns
    /// are dropped.
    AngleList rotated(double by) const;

   private:
    std::vector<double> radians_;
    std::optional<std::vector<mpq_class>> turns_;
};

/// Reduces x modulo 2 pi into [0, 2 pi).
double mod_two_pi(double x);

/// min(|a - b|, 2 pi - |a - b|) for a, b in [0, 2 pi).
double geodesic_distance(double a, double b);

/// Angles 2 pi k / n for k = 1..n (the last one reduced to 0).
AngleList roots_of_unity(std::size_t n);

/// Sum of the n-th roots of unity, evaluated in double precision.
std::complex<double> cyclotomic_sum(std::size_t n);

struct GapStats {
    std::size_t count = 0;
    double mean = 0;
    double variance = 0;
    double min_gap = 0;
    double max_gap = 0;
    std::size_t distinct_gaps = 0;
    std::vector<double> gaps;
};

/// Cyclic gap statistics of the sorted angles, including the wraparound gap.
/// Gap values within `tolerance` of their sorted neighbour share a cluster.
GapStats gap_statistics(const AngleList &angles, double tolerance = 1e-9);

struct PlanarPoint {
    double x = 0;
    double y = 0;
};

struct SelfSimilarity {
    double scaling = 0;
    double rotation = 0;
};

struct DiagonalPolygon {
    std::vector<PlanarPoint> vertices;
    /// Distinct proper crossings of diagonals.
    std::vector<PlanarPoint> intersections;
    /// Intersections at minimal distance from the origin, sorted by angle.
    std::vector<PlanarPoint> inner_ring;
    std::optional<SelfSimilarity> self_similar;
};

/// Regular n-gon on the unit circle, its diagonal crossings, and whether the
/// innermost crossings form a scaled and rotated copy of the n-gon.
DiagonalPolygon diagonal_polygon(std::size_t n, double tolerance = 1e-9);

/// theta_k = 2 pi frac(lambda^k) for k = 1..K, lambda the PV root of p.
/// `extra_bits` is added to the working precision K log2(lambda) + 64.
AngleList cusp_curve(const IntPolynomial &p, std::size_t count, unsigned extra_bits = 64);

/// theta_0 = 0, theta_k = theta_{k-1} + beta_{x_k} mod 2 pi along the fixed
/// point x of a binary substitution starting with letter 0. Returns
/// theta_1..theta_N.
AngleList substitution_spacing(const Substitution &sigma, double beta0, double beta1, std::size_t count);

/// Same angles from letter counts: theta_k = c_0(k) beta_0 + c_1(k) beta_1 mod 2 pi.
AngleList substitution_spacing_counts(const Substitution &sigma, double beta0, double beta1, std::size_t count);

/// Resolves "tau", "rho", "silver" (1 + sqrt 2), "pi" or a decimal literal.
double named_constant(std::string_view name);

}  // namespace pisot

#endif
