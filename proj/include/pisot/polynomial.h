#ifndef PISOT_POLYNOMIAL_H
#define PISOT_POLYNOMIAL_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pisot/interval.h"

namespace pisot {

/// Polynomial with integer coefficients, constant term first. Trailing zero
/// coefficients are stripped, so the zero polynomial has no coefficients and
/// degree -1.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    /// Parses "1,-1,-1" (constant term first).
    static IntPolynomial parse(std::string_view text);
    static IntPolynomial monomial(long degree, const mpz_class &coefficient = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<mpz_class> &coefficients() const { return c_; }
    const mpz_class &leading() const { return c_.back(); }
    mpz_class coefficient(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : mpz_class(0); }

    mpz_class evaluate(const mpz_class &x) const;
    mpq_class evaluate(const mpq_class &x) const;
    Interval evaluate(const Interval &x) const;
    int sign_at(const mpq_class &x) const;
    /// Sign of p(x) as x -> +inf (positive = true) or -inf.
    int sign_at_infinity(bool positive) const;

    IntPolynomial derivative() const;
    /// z^d p(1/z).
    IntPolynomial reversed() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const;
    mpz_class content() const;

    /// "1,-1,-1" (constant term first).
    std::string to_csv() const;
    /// Human-readable form, e.g. "x^2 - x - 1".
    std::string to_string() const;

    bool operator==(const IntPolynomial &other) const { return c_ == other.c_; }

    friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
    IntPolynomial operator*(const mpz_class &k) const;

   private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Exact division a / b; throws if b does not divide a over Z[x].
IntPolynomial exact_divide(const IntPolynomial &a, const IntPolynomial &b);

/// Remainder of a modulo b over Q[x], scaled by a positive rational to a
/// primitive integer polynomial. Positive scaling preserves signs, which is
/// what Sturm chains need.
IntPolynomial scaled_remainder(const IntPolynomial &a, const IntPolynomial &b);

/// Primitive gcd over Q[x] with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial &a, const IntPolynomial &b);

/// Square-free factorization p = c * prod f_i^i. Returns pairs (f_i, i) with
/// nonconstant primitive f_i.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial &p);
IntPolynomial squarefree_part(const IntPolynomial &p);
bool is_squarefree(const IntPolynomial &p);

/// Sturm chain p, p', -rem(...), ...
std::vector<IntPolynomial> sturm_chain(const IntPolynomial &p);
/// Generalized chain starting from (f0, f1), used for Cauchy indices.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial &f0, const IntPolynomial &f1);
int sign_variations_at(const std::vector<IntPolynomial> &chain, const mpq_class &x);
int sign_variations_at_infinity(const std::vector<IntPolynomial> &chain, bool positive);

/// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots(const IntPolynomial &p, const mpq_class &a, const mpq_class &b);
int count_real_roots(const IntPolynomial &p);

/// Cauchy bound: every complex root has modulus < bound.
mpq_class cauchy_bound(const IntPolynomial &p);

/// p(r z) scaled to integer coefficients, for rational r > 0.
IntPolynomial scale_argument(const IntPolynomial &p, const mpq_class &r);

}  // namespace pisot

#endif
