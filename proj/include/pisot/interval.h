#ifndef PISOT_INTERVAL_H
#define PISOT_INTERVAL_H

#include <string>

#include <gmpxx.h>

namespace pisot {

/// A closed interval [lower, upper] with rational endpoints. Arithmetic is
/// exact; `round_outward` trims endpoint denominators when they grow.
class Interval {
   public:
    Interval() : lo_(0), hi_(0) {}
    explicit Interval(const mpq_class &point) : lo_(point), hi_(point) {}
    Interval(mpq_class lower, mpq_class upper);

    const mpq_class &lower() const { return lo_; }
    const mpq_class &upper() const { return hi_; }
    mpq_class width() const { return hi_ - lo_; }
    mpq_class midpoint() const;
    bool contains(const mpq_class &x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
    bool is_positive() const { return lo_ > 0; }

    double lower_d() const { return lo_.get_d(); }
    double upper_d() const { return hi_.get_d(); }
    double mid_d() const { return midpoint().get_d(); }

    /// Widens the endpoints to multiples of 2^-bits.
    Interval round_outward(unsigned bits) const;

    Interval operator-() const { return Interval(-hi_, -lo_); }
    friend Interval operator+(const Interval &a, const Interval &b);
    friend Interval operator-(const Interval &a, const Interval &b);
    friend Interval operator*(const Interval &a, const Interval &b);
    friend Interval operator/(const Interval &a, const Interval &b);

    Interval pow(unsigned long exponent) const;
    Interval abs() const;

    /// "[lo, hi]" with 17 significant digits.
    std::string to_string() const;

   private:
    mpq_class lo_;
    mpq_class hi_;
};

/// Certified real approximation: a rational interval known to contain the value.
using RealApprox = Interval;

mpq_class floor_to_bits(const mpq_class &x, unsigned bits);
mpq_class ceil_to_bits(const mpq_class &x, unsigned bits);
mpz_class floor_q(const mpq_class &x);

}  // namespace pisot

#endif
