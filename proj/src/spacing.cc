#include "pisot/spacing.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pisot/algebraic.h"

namespace pisot {

namespace {

double turns_to_radians(const mpq_class &t) { return (kTwoPi * t.get_num().get_d()) / t.get_den().get_d(); }

void check_angle(double a) {
    if (!(a >= 0 && a < kTwoPi)) {
        throw std::out_of_range("angle " + std::to_string(a) + " outside [0, 2pi)");
    }
}

}  // namespace

AngleList::AngleList(std::vector<double> radians) : radians_(std::move(radians)) {
    for (double a : radians_) {
        check_angle(a);
    }
}

AngleList AngleList::from_turns(std::vector<mpq_class> turns) {
    std::vector<double> radians;
    radians.reserve(turns.size());
    for (const auto &t : turns) {
        if (t < 0 || t >= 1) {
            throw std::out_of_range("turn value outside [0, 1)");
        }
        radians.push_back(turns_to_radians(t));
    }
    AngleList list(std::move(radians));
    list.turns_ = std::move(turns);
    return list;
}

AngleList AngleList::rotated(double by) const {
    std::vector<double> out;
    out.reserve(radians_.size());
    for (double a : radians_) {
        out.push_back(mod_two_pi(a + by));
    }
    return AngleList(std::move(out));
}

double mod_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0;
    return r;
}

double geodesic_distance(double a, double b) {
    check_angle(a);
    check_angle(b);
    double d = std::fabs(a - b);
    return std::min(d, kTwoPi - d);
}

AngleList roots_of_unity(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("roots_of_unity needs n >= 2");
    }
    std::vector<mpq_class> turns;
    turns.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mpq_class t(static_cast<unsigned long>(k % n), static_cast<unsigned long>(n));
        t.canonicalize();
        turns.push_back(t);
    }
    return AngleList::from_turns(std::move(turns));
}

std::complex<double> cyclotomic_sum(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("cyclotomic_sum needs n >= 2");
    }
    std::complex<double> sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        sum += std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return sum;
}

GapStats gap_statistics(const AngleList &angles, double tolerance) {
    std::size_t n = angles.size();
    if (n < 2) {
        throw std::invalid_argument("gap statistics need at least two angles");
    }
    GapStats stats;
    stats.count = n;
    if (angles.turns()) {
        std::vector<mpq_class> t = *angles.turns();
        std::sort(t.begin(), t.end());
        std::vector<mpq_class> gaps;
        for (std::size_t i = 0; i < n; ++i) {
            mpq_class g = i + 1 < n ? mpq_class(t[i + 1] - t[i]) : mpq_class(1 - t[n - 1] + t[0]);
            if (g > mpq_class(1, 2)) g = 1 - g;
            gaps.push_back(g);
        }
        mpq_class mean = 0;
        for (const auto &g : gaps) mean += g;
        mean /= static_cast<unsigned long>(n);
        mpq_class var = 0;
        for (const auto &g : gaps) var += (g - mean) * (g - mean);
        var /= static_cast<unsigned long>(n);
        stats.mean = turns_to_radians(mean);
        stats.variance = var.get_d() * kTwoPi * kTwoPi;
        for (const auto &g : gaps) stats.gaps.push_back(turns_to_radians(g));
    } else {
        std::vector<double> a = angles.radians();
        std::sort(a.begin(), a.end());
        for (std::size_t i = 0; i < n; ++i) {
            double d = i + 1 < n ? a[i + 1] - a[i] : kTwoPi - a[n - 1] + a[0];
            stats.gaps.push_back(std::min(d, kTwoPi - d));
        }
        double sum = 0;
        for (double g : stats.gaps) sum += g;
        stats.mean = sum / static_cast<double>(n);
        double var = 0;
        for (double g : stats.gaps) var += (g - stats.mean) * (g - stats.mean);
        stats.variance = var / static_cast<double>(n);
    }
    std::vector<double> sorted = stats.gaps;
    std::sort(sorted.begin(), sorted.end());
    stats.min_gap = sorted.front();
    stats.max_gap = sorted.back();
    stats.distinct_gaps = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] > tolerance) ++stats.distinct_gaps;
    }
    return stats;
}

DiagonalPolygon diagonal_polygon(std::size_t n, double tolerance) {
    if (n < 5) {
        throw std::invalid_argument("diagonal_polygon needs n >= 5");
    }
    DiagonalPolygon poly;
    for (std::size_t k = 0; k < n; ++k) {
        double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        poly.vertices.push_back({std::cos(theta), std::sin(theta)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> diagonals;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            diagonals.emplace_back(i, j);
        }
    }
    auto add_point = [&](PlanarPoint p) {
        for (const auto &q : poly.intersections) {
            if (std::hypot(p.x - q.x, p.y - q.y) <= tolerance) return;
        }
        poly.intersections.push_back(p);
    };
    for (std::size_t u = 0; u < diagonals.size(); ++u) {
        auto [a, b] = diagonals[u];
        for (std::size_t v = u + 1; v < diagonals.size(); ++v) {
            auto [c, d] = diagonals[v];
            // Chords of a convex polygon cross properly iff their endpoints interleave.
            bool cross = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if (!cross) continue;
            const PlanarPoint &p1 = poly.vertices[a], &p2 = poly.vertices[b];
            const PlanarPoint &p3 = poly.vertices[c], &p4 = poly.vertices[d];
            double d1x = p2.x - p1.x, d1y = p2.y - p1.y;
            double d2x = p4.x - p3.x, d2y = p4.y - p3.y;
            double den = d1x * d2y - d1y * d2x;
            double t = ((p3.x - p1.x) * d2y - (p3.y - p1.y) * d2x) / den;
            add_point({p1.x + t * d1x, p1.y + t * d1y});
        }
    }
    double r_min = INFINITY;
    for (const auto &p : poly.intersections) r_min = std::min(r_min, std::hypot(p.x, p.y));
    for (const auto &p : poly.intersections) {
        if (std::hypot(p.x, p.y) - r_min <= tolerance * std::max(1.0, r_min)) {
            poly.inner_ring.push_back(p);
        }
    }
    auto angle_of = [](const PlanarPoint &p) { return mod_two_pi(std::atan2(p.y, p.x)); };
    std::sort(poly.inner_ring.begin(), poly.inner_ring.end(),
              [&](const PlanarPoint &p, const PlanarPoint &q) { return angle_of(p) < angle_of(q); });
    const auto &ring = poly.inner_ring;
    if (ring.size() != n || r_min <= tolerance) {
        return poly;
    }
    std::vector<double> sides;
    for (std::size_t i = 0; i < n; ++i) {
        const auto &p = ring[i];
        const auto &q = ring[(i + 1) % n];
        sides.push_back(std::hypot(p.x - q.x, p.y - q.y));
    }
    auto [lo, hi] = std::minmax_element(sides.begin(), sides.end());
    if (*hi - *lo > tolerance * *hi) {
        return poly;
    }
    // Rotations taking vertex 0 to some ring point; the one closest to pi is
    // reported (it maps the polygon onto the ring for every odd n).
    double best = 0;
    double best_dist = INFINITY;
    for (const auto &p : ring) {
        double phi = angle_of(p);
        double dist = std::fabs(phi - kPi);
        if (dist < best_dist) {
            best_dist = dist;
            best = phi;
        }
    }
    poly.self_similar = SelfSimilarity{r_min, best};
    return poly;
}

AngleList cusp_curve(const IntPolynomial &p, std::size_t count, unsigned extra_bits) {
    if (count < 1) {
        throw std::invalid_argument("cusp_curve needs K >= 1");
    }
    if (certify_pv(p).verdict == PvVerdict::not_pv) {
        throw std::domain_error("cusp_curve requires a PV polynomial");
    }
    AlgebraicReal lambda = largest_real_root(p);
    double log2_lambda = std::log2(lambda.to_double());
    unsigned bits = static_cast<unsigned>(std::ceil(static_cast<double>(count) * log2_lambda)) + 64 + extra_bits;
    std::vector<double> angles;
    while (true) {
        Interval lam = lambda.approximate(bits);
        Interval power(mpq_class(1));
        angles.clear();
        bool ambiguous = false;
        for (std::size_t k = 1; k <= count; ++k) {
            power = (power * lam).round_outward(bits + 16);
            mpz_class fl = floor_q(power.lower());
            if (fl != floor_q(power.upper())) {
                ambiguous = true;
                break;
            }
            mpq_class frac = power.midpoint() - fl;
            double theta = kTwoPi * frac.get_d();
            if (theta >= kTwoPi) theta = std::nextafter(kTwoPi, 0.0);
            angles.push_back(theta);
        }
        if (!ambiguous) break;
        if (bits > 1u << 20) {
            throw std::runtime_error("cusp_curve: could not separate lambda^k from an integer");
        }
        bits *= 2;
    }
    return AngleList(std::move(angles));
}

namespace {

Word spacing_prefix(const Substitution &sigma, double beta0, double beta1, std::size_t count) {
    if (sigma.size() != 2) {
        throw std::invalid_argument("substitution spacing needs a binary substitution");
    }
    check_angle(beta0);
    check_angle(beta1);
    if (!classify_pisot(sigma, PisotMode::loose).pisot_loose) {
        throw std::invalid_argument("substitution spacing needs a substitution of Pisot type");
    }
    return fixed_point_prefix(sigma, 0, count);
}

}  // namespace

AngleList substitution_spacing(const Substitution &sigma, double beta0, double beta1, std::size_t count) {
    Word x = spacing_prefix(sigma, beta0, beta1, count);
    std::vector<double> out;
    out.reserve(count);
    double theta = 0;
    for (std::size_t k = 0; k < count; ++k) {
        theta = mod_two_pi(theta + (x[k] == 0 ? beta0 : beta1));
        out.push_back(theta);
    }
    return AngleList(std::move(out));
}

AngleList substitution_spacing_counts(const Substitution &sigma, double beta0, double beta1, std::size_t count) {
    Word x = spacing_prefix(sigma, beta0, beta1, count);
    std::vector<double> out;
    out.reserve(count);
    unsigned long c0 = 0, c1 = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (std::size_t k = 0; k < count; ++k) {
        (x[k] == 0 ? c0 : c1) += 1;
        long double v = std::fmod(static_cast<long double>(c0) * beta0 + static_cast<long double>(c1) * beta1, two_pi);
        out.push_back(mod_two_pi(static_cast<double>(v)));
    }
    return AngleList(std::move(out));
}

double named_constant(std::string_view name) {
    if (name == "tau") return largest_real_root(IntPolynomial{-1, -1, 1}).to_double();
    if (name == "rho") return largest_real_root(IntPolynomial{-1, -1, 0, 1}).to_double();
    if (name == "silver") return largest_real_root(IntPolynomial{-1, -2, 1}).to_double();
    if (name == "pi") return kPi;
    std::string s(name);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("not a number or named constant: '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("not a number or named constant: '" + s + "'");
    }
    return v;
}

}  // namespace pisot
