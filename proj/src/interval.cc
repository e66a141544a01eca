#include "pisot/interval.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace pisot {

Interval::Interval(mpq_class lower, mpq_class upper) : lo_(std::move(lower)), hi_(std::move(upper)) {
    if (lo_ > hi_) {
        throw std::invalid_argument("interval lower bound exceeds upper bound");
    }
}

mpq_class Interval::midpoint() const {
    mpq_class m = (lo_ + hi_) / 2;
    m.canonicalize();
    return m;
}

mpz_class floor_q(const mpq_class &x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

mpq_class floor_to_bits(const mpq_class &x, unsigned bits) {
    mpz_class scaled_num = x.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    mpq_class r(q, den);
    r.canonicalize();
    return r;
}

mpq_class ceil_to_bits(const mpq_class &x, unsigned bits) {
    mpz_class scaled_num = x.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    mpq_class r(q, den);
    r.canonicalize();
    return r;
}

Interval Interval::round_outward(unsigned bits) const {
    return Interval(floor_to_bits(lo_, bits), ceil_to_bits(hi_, bits));
}

Interval operator+(const Interval &a, const Interval &b) { return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_); }

Interval operator-(const Interval &a, const Interval &b) { return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_); }

Interval operator*(const Interval &a, const Interval &b) {
    mpq_class p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    mpq_class lo = p[0], hi = p[0];
    for (int i = 1; i < 4; ++i) {
        if (p[i] < lo) lo = p[i];
        if (p[i] > hi) hi = p[i];
    }
    return Interval(lo, hi);
}

Interval operator/(const Interval &a, const Interval &b) {
    if (b.contains_zero()) {
        throw std::domain_error("interval division by an interval containing zero");
    }
    mpq_class inv_lo = 1 / b.hi_;
    mpq_class inv_hi = 1 / b.lo_;
    return a * Interval(inv_lo, inv_hi);
}

static mpq_class qpow(const mpq_class &x, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), e);
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

Interval Interval::pow(unsigned long exponent) const {
    if (exponent == 0) {
        return Interval(mpq_class(1));
    }
    if (exponent % 2 == 1 || lo_ >= 0) {
        return Interval(qpow(lo_, exponent), qpow(hi_, exponent));
    }
    if (hi_ <= 0) {
        return Interval(qpow(hi_, exponent), qpow(lo_, exponent));
    }
    // Even power of a sign-straddling interval.
    mpq_class m = std::max(mpq_class(-lo_), hi_);
    return Interval(mpq_class(0), qpow(m, exponent));
}

Interval Interval::abs() const {
    if (lo_ >= 0) {
        return *this;
    }
    if (hi_ <= 0) {
        return -*this;
    }
    return Interval(0, std::max(mpq_class(-lo_), hi_));
}

std::string Interval::to_string() const {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", lo_.get_d(), hi_.get_d());
    return buf;
}

}  // namespace pisot
