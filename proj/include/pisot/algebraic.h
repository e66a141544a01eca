#ifndef PISOT_ALGEBRAIC_H
#define PISOT_ALGEBRAIC_H

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pisot/interval.h"
#include "pisot/polynomial.h"

namespace pisot {

/// Numbers of complex roots strictly inside, on, and strictly outside the
/// unit circle.
struct RootCount {
    int inside = 0;
    int on_circle = 0;
    int outside = 0;

    int total() const { return inside + on_circle + outside; }
    bool operator==(const RootCount &other) const = default;
};

/// Exact unit-circle root counts of a squarefree polynomial. Throws
/// std::invalid_argument if p has a repeated root.
RootCount schur_cohn(const IntPolynomial &p);

/// Unit-circle root counts with multiplicity; deflates via the squarefree
/// decomposition and sums the per-factor counts.
RootCount unit_circle_counts(const IntPolynomial &p);

enum class Irreducibility { irreducible, reducible, unknown };

std::string to_string(Irreducibility value);

/// Irreducibility over Q. Exact for degree <= 4; for higher degree a
/// rational-root test followed by distinct-degree factorization modulo small
/// primes, which either certifies irreducibility or gives up with unknown.
Irreducibility irreducibility(const IntPolynomial &p);

enum class PvVerdict { pv, not_pv, conditional };

std::string to_string(PvVerdict verdict);

struct PvCertificate {
    PvVerdict verdict = PvVerdict::not_pv;
    RootCount counts;
    Irreducibility irreducible = Irreducibility::unknown;
    /// Short reason for a negative verdict; empty when PV.
    std::string reason;
};

/// Certifies whether the dominant root of a monic p is a PV number. A
/// polynomial whose root data pass but whose irreducibility could not be
/// decided gets the conditional verdict. Throws on non-monic input.
PvCertificate certify_pv(const IntPolynomial &p);

/// True iff certify_pv gives the pv verdict.
bool is_pv(const IntPolynomial &p);

/// s_n, the sum of the n-th powers of all roots of a monic p (Newton's
/// identities).
mpz_class power_sum(const IntPolynomial &p, unsigned long n);
/// s_1..s_n.
std::vector<mpz_class> power_sums(const IntPolynomial &p, unsigned long n);

/// A real algebraic number given by a squarefree integer polynomial and an
/// interval containing exactly one of its roots.
class AlgebraicReal {
   public:
    AlgebraicReal(IntPolynomial polynomial, Interval isolating);

    const IntPolynomial &polynomial() const { return poly_; }
    const Interval &isolating_interval() const { return iso_; }

    /// An interval of width at most 2^-bits containing the number.
    Interval approximate(unsigned bits) const;
    double to_double() const;

   private:
    IntPolynomial poly_;
    Interval iso_;
};

/// The largest real root of p. Throws std::domain_error if p has no real root.
AlgebraicReal largest_real_root(const IntPolynomial &p);

/// Interval for |s_n - lambda^n| = |sum of conjugates^n| where lambda is the
/// PV root of p. precision_bits = 0 selects 2 n log2(lambda) + 64.
Interval pv_decay(const IntPolynomial &p, unsigned long n, unsigned precision_bits = 0);

/// Interval (lo, hi] for the largest modulus among all roots of p other than
/// one root of largest modulus, with hi - lo <= 2^-bits.
Interval max_conjugate_modulus(const IntPolynomial &p, unsigned bits = 40);

/// f_n = c_1 f_{n-1} + ... + c_d f_{n-d} with given f_0..f_{d-1}.
struct Recurrence {
    std::vector<mpz_class> coefficients;  // c_1..c_d
    std::vector<mpz_class> initial;       // f_0..f_{d-1}

    static Recurrence fibonacci();
    static Recurrence padovan();
    static Recurrence pell();

    std::size_t order() const { return coefficients.size(); }
    /// x^d - c_1 x^{d-1} - ... - c_d.
    IntPolynomial characteristic() const;
};

mpz_class recurrence_term(const Recurrence &r, unsigned long n);
/// f_0..f_n.
std::vector<mpz_class> recurrence_terms(const Recurrence &r, unsigned long n);

/// Interval for |f_n / f_{n-1} - lambda|, lambda the largest real root of p.
Interval ratio_limit_check(const Recurrence &r, const IntPolynomial &p, unsigned long n, unsigned bits = 128);

}  // namespace pisot

#endif
