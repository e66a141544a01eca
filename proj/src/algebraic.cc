#include "pisot/algebraic.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pisot {

namespace {

// z^m h(z + 1/z) = g(z) for a palindromic g of degree 2m. Uses the Dickson
// polynomials D_k(x) = z^k + z^-k, D_0 = 2, D_1 = x, D_k = x D_{k-1} - D_{k-2}.
IntPolynomial palindromic_to_trace(const IntPolynomial &g) {
    int m = g.degree() / 2;
    const IntPolynomial x{0, 1};
    IntPolynomial prev{2};
    IntPolynomial cur = x;
    IntPolynomial h{0};
    h = h + IntPolynomial{1} * g.coefficient(m);
    for (int k = 1; k <= m; ++k) {
        h = h + cur * g.coefficient(m + k);
        IntPolynomial next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return h;
}

// Q(w) = (1 - w)^d r((1 + w) / (1 - w)). Roots of r inside the unit disk map
// to roots of Q in the open left half-plane.
IntPolynomial cayley_transform(const IntPolynomial &r) {
    int d = r.degree();
    const IntPolynomial one_plus{1, 1};
    const IntPolynomial one_minus{1, -1};
    std::vector<IntPolynomial> plus_pow{IntPolynomial{1}};
    std::vector<IntPolynomial> minus_pow{IntPolynomial{1}};
    for (int k = 1; k <= d; ++k) {
        plus_pow.push_back(plus_pow.back() * one_plus);
        minus_pow.push_back(minus_pow.back() * one_minus);
    }
    IntPolynomial q;
    for (int k = 0; k <= d; ++k) {
        const mpz_class &c = r.coefficients()[static_cast<std::size_t>(k)];
        if (c != 0) {
            q = q + plus_pow[static_cast<std::size_t>(k)] * minus_pow[static_cast<std::size_t>(d - k)] * c;
        }
    }
    return q;
}

// Roots of a polynomial with no roots on the imaginary axis, counted in the
// open left half-plane, via the Cauchy index of Im Q(iy) / Re Q(iy).
int left_half_plane_roots(const IntPolynomial &q) {
    int d = q.degree();
    std::vector<mpz_class> a_coeffs(static_cast<std::size_t>(d) + 1, 0);
    std::vector<mpz_class> b_coeffs(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        mpz_class c = q.coefficients()[static_cast<std::size_t>(k)];
        // i^k: 1, i, -1, -i
        switch (k % 4) {
            case 0: a_coeffs[static_cast<std::size_t>(k)] = c; break;
            case 1: b_coeffs[static_cast<std::size_t>(k)] = c; break;
            case 2: a_coeffs[static_cast<std::size_t>(k)] = -c; break;
            case 3: b_coeffs[static_cast<std::size_t>(k)] = -c; break;
        }
    }
    IntPolynomial a(std::move(a_coeffs));
    IntPolynomial b(std::move(b_coeffs));
    if (a.is_zero()) {
        throw std::logic_error("left_half_plane_roots: root on the imaginary axis");
    }
    int diff = 0;  // n_left - n_right
    if (!b.is_zero()) {
        auto chain = sturm_chain(a, b);
        int index = sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
        int ends = 0;
        if (b.degree() > a.degree()) {
            int plus = b.sign_at_infinity(true) * a.sign_at_infinity(true);
            int minus = b.sign_at_infinity(false) * a.sign_at_infinity(false);
            ends = (plus - minus) / 2;
        }
        diff = ends - index;
    }
    if ((d + diff) % 2 != 0) {
        throw std::logic_error("left_half_plane_roots: parity mismatch");
    }
    return (d + diff) / 2;
}

// Positive divisors of |n|, or nothing if |n| is too large to enumerate.
std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class &n) {
    mpz_class m = abs(n);
    if (m == 0) {
        return std::vector<mpz_class>{};
    }
    if (m > mpz_class("100000000000000")) {
        return std::nullopt;
    }
    std::uint64_t v = m.get_ui();
    std::vector<mpz_class> small, large;
    for (std::uint64_t k = 1; k * k <= v; ++k) {
        if (v % k == 0) {
            small.emplace_back(static_cast<unsigned long>(k));
            if (k * k != v) {
                large.emplace_back(static_cast<unsigned long>(v / k));
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// nullopt when the candidate set could not be enumerated.
std::optional<bool> has_rational_root(const IntPolynomial &p) {
    if (p.coefficient(0) == 0) {
        return true;
    }
    auto num = positive_divisors(p.coefficient(0));
    auto den = positive_divisors(p.leading());
    if (!num || !den) {
        return std::nullopt;
    }
    for (const auto &a : *num) {
        for (const auto &b : *den) {
            mpq_class r(a, b);
            r.canonicalize();
            if (r.get_den() != b) {
                continue;
            }
            if (p.sign_at(r) == 0 || p.sign_at(mpq_class(-r)) == 0) {
                return true;
            }
        }
    }
    return false;
}

// a_n^{n-1} p(x / a_n): monic with integer coefficients, same factorization
// pattern as p.
IntPolynomial monic_transform(const IntPolynomial &p) {
    int n = p.degree();
    const mpz_class &lead = p.leading();
    std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        mpz_class scale;
        int e = n - 1 - k;
        if (e >= 0) {
            mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(e));
            out[static_cast<std::size_t>(k)] = p.coefficient(k) * scale;
        } else {
            out[static_cast<std::size_t>(k)] = 1;
        }
    }
    return IntPolynomial(std::move(out));
}

bool is_perfect_square(const mpz_class &x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

// Monic quartic with no rational roots: does it split into two integer
// quadratics x^2 + b x + c and x^2 + e x + f?
std::optional<bool> quartic_has_quadratic_factor(const IntPolynomial &p) {
    const mpz_class p0 = p.coefficient(0), p1 = p.coefficient(1), p2 = p.coefficient(2), p3 = p.coefficient(3);
    auto divisors = positive_divisors(p0);
    if (!divisors) {
        return std::nullopt;
    }
    for (const auto &d : *divisors) {
        for (int s : {1, -1}) {
            mpz_class c = d * s;
            mpz_class f = p0 / c;
            if (c != f) {
                mpz_class num = p1 - c * p3;
                mpz_class den = f - c;
                if (num % den != 0) {
                    continue;
                }
                mpz_class b = num / den;
                mpz_class e = p3 - b;
                if (b * e == p2 - c - f) {
                    return true;
                }
            } else {
                if (p1 != c * p3) {
                    continue;
                }
                // b + e = p3, b e = p2 - 2c
                mpz_class disc = p3 * p3 - 4 * (p2 - 2 * c);
                if (is_perfect_square(disc)) {
                    return true;
                }
            }
        }
    }
    return false;
}

// Dense polynomials over Z/pZ, constant term first.
using ModPoly = std::vector<std::uint64_t>;

void mod_trim(ModPoly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

// Quotient and remainder of a by b (b nonzero).
std::pair<ModPoly, ModPoly> mod_divmod(ModPoly a, const ModPoly &b, std::uint64_t p) {
    mod_trim(a);
    std::size_t db = b.size() - 1;
    std::uint64_t inv = mod_inv(b.back(), p);
    if (a.size() < b.size()) {
        return {ModPoly{}, a};
    }
    ModPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        std::uint64_t f = a[k] * inv % p;
        if (f == 0) continue;
        std::size_t shift = k - db;
        q[shift] = f;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
        }
    }
    mod_trim(a);
    mod_trim(q);
    return {q, a};
}

ModPoly mod_mulmod(const ModPoly &a, const ModPoly &b, const ModPoly &f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
    }
    return mod_divmod(std::move(c), f, p).second;
}

ModPoly mod_powmod(ModPoly base, std::uint64_t e, const ModPoly &f, std::uint64_t p) {
    ModPoly r{1};
    base = mod_divmod(base, f, p).second;
    while (e) {
        if (e & 1) r = mod_mulmod(r, base, f, p);
        base = mod_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    mod_trim(a);
    mod_trim(b);
    while (!b.empty()) {
        ModPoly r = mod_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = mod_inv(a.back(), p);
        for (auto &c : a) c = c * inv % p;
    }
    return a;
}

ModPoly mod_derivative(const ModPoly &a, std::uint64_t p) {
    ModPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) {
        d.push_back(a[k] * (k % p) % p);
    }
    mod_trim(d);
    return d;
}

// Degrees of the irreducible factors of a squarefree monic f over Z/pZ.
std::vector<int> distinct_degree_pattern(ModPoly f, std::uint64_t p) {
    std::vector<int> degrees;
    ModPoly h{0, 1};
    for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
        h = mod_powmod(h, p, f, p);
        ModPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        mod_trim(hx);
        ModPoly g = mod_gcd(f, hx, p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int j = 0; j < dg / i; ++j) degrees.push_back(i);
            f = mod_divmod(f, g, p).first;
            h = mod_divmod(h, f, p).second;
        }
    }
    if (f.size() > 1) {
        degrees.push_back(static_cast<int>(f.size()) - 1);
    }
    return degrees;
}

std::vector<bool> subset_sums(const std::vector<int> &parts, int n) {
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[0] = true;
    for (int d : parts) {
        for (int s = n; s >= d; --s) {
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
        }
    }
    return reach;
}

Irreducibility modular_irreducibility(const IntPolynomial &p, bool no_linear_factor) {
    int n = p.degree();
    // possible[k]: a factor of degree k over Q has not been ruled out.
    std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
    if (no_linear_factor) {
        possible[1] = false;
        possible[static_cast<std::size_t>(n - 1)] = false;
    }
    static const std::uint64_t primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,
                                           53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109,
                                           113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191};
    for (std::uint64_t prime : primes) {
        mpz_class lead_mod = p.leading() % static_cast<unsigned long>(prime);
        if (lead_mod == 0) continue;
        ModPoly f(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), p.coefficient(k).get_mpz_t(), prime);
            f[static_cast<std::size_t>(k)] = r.get_ui();
        }
        std::uint64_t inv = mod_inv(f.back(), prime);
        for (auto &c : f) c = c * inv % prime;
        if (mod_gcd(f, mod_derivative(f, prime), prime).size() != 1) continue;
        auto reach = subset_sums(distinct_degree_pattern(f, prime), n);
        bool any = false;
        for (int k = 1; k < n; ++k) {
            possible[static_cast<std::size_t>(k)] = possible[static_cast<std::size_t>(k)] && reach[static_cast<std::size_t>(k)];
            any = any || possible[static_cast<std::size_t>(k)];
        }
        if (!any) return Irreducibility::irreducible;
    }
    return Irreducibility::unknown;
}

}  // namespace

RootCount schur_cohn(const IntPolynomial &p) {
    RootCount rc;
    if (p.degree() < 1) {
        return rc;
    }
    if (!is_squarefree(p)) {
        throw std::invalid_argument("schur_cohn requires a squarefree polynomial; deflate first");
    }
    IntPolynomial q = p.primitive_part();
    for (long z : {1L, -1L}) {
        if (q.evaluate(mpz_class(z)) == 0) {
            q = exact_divide(q, IntPolynomial{-z, 1});
            ++rc.on_circle;
        }
    }
    if (q.degree() < 1) {
        return rc;
    }
    // Roots closed under z -> 1/z: every root on the circle, plus reciprocal pairs.
    IntPolynomial g = gcd(q, q.reversed());
    if (g.degree() > 0) {
        if (g.degree() % 2 != 0) {
            throw std::logic_error("schur_cohn: odd self-reciprocal factor");
        }
        IntPolynomial h = palindromic_to_trace(g);
        int on = 2 * count_real_roots(h, mpq_class(-2), mpq_class(2));
        rc.on_circle += on;
        rc.inside += (g.degree() - on) / 2;
        rc.outside += (g.degree() - on) / 2;
        q = exact_divide(q, g);
    }
    if (q.degree() > 0) {
        int inside = left_half_plane_roots(cayley_transform(q));
        rc.inside += inside;
        rc.outside += q.degree() - inside;
    }
    return rc;
}

RootCount unit_circle_counts(const IntPolynomial &p) {
    RootCount total;
    for (const auto &[factor, multiplicity] : squarefree_decomposition(p)) {
        RootCount rc = schur_cohn(factor);
        total.inside += multiplicity * rc.inside;
        total.on_circle += multiplicity * rc.on_circle;
        total.outside += multiplicity * rc.outside;
    }
    return total;
}

std::string to_string(Irreducibility value) {
    switch (value) {
        case Irreducibility::irreducible: return "irreducible";
        case Irreducibility::reducible: return "reducible";
        case Irreducibility::unknown: return "unknown";
    }
    return "unknown";
}

Irreducibility irreducibility(const IntPolynomial &p) {
    int n = p.degree();
    if (n < 1) {
        throw std::invalid_argument("irreducibility of a constant polynomial");
    }
    if (n == 1) {
        return Irreducibility::irreducible;
    }
    IntPolynomial f = p.primitive_part();
    if (!is_squarefree(f)) {
        return Irreducibility::reducible;
    }
    auto rational = has_rational_root(f);
    if (rational && *rational) {
        return Irreducibility::reducible;
    }
    if (n <= 3 && rational) {
        return Irreducibility::irreducible;
    }
    if (n == 4 && rational) {
        auto quad = quartic_has_quadratic_factor(monic_transform(f));
        if (quad) {
            return *quad ? Irreducibility::reducible : Irreducibility::irreducible;
        }
    }
    return modular_irreducibility(f, rational.has_value());
}

std::string to_string(PvVerdict verdict) {
    switch (verdict) {
        case PvVerdict::pv: return "pv";
        case PvVerdict::not_pv: return "not_pv";
        case PvVerdict::conditional: return "conditional";
    }
    return "not_pv";
}

PvCertificate certify_pv(const IntPolynomial &p) {
    if (!p.is_monic()) {
        throw std::invalid_argument("PV certification requires a monic polynomial");
    }
    PvCertificate cert;
    cert.counts = unit_circle_counts(p);
    cert.irreducible = irreducibility(p);
    if (cert.irreducible == Irreducibility::reducible) {
        cert.reason = "reducible over Q";
    } else if (cert.counts.on_circle > 0) {
        cert.reason = "root on the unit circle";
    } else if (cert.counts.outside != 1) {
        cert.reason = std::to_string(cert.counts.outside) + " roots outside the unit circle";
    } else if (count_real_roots(p, mpq_class(1), cauchy_bound(p)) < 1) {
        cert.reason = "dominant root is not greater than 1";
    }
    if (cert.reason.empty()) {
        cert.verdict = cert.irreducible == Irreducibility::irreducible ? PvVerdict::pv : PvVerdict::conditional;
    } else {
        cert.verdict = PvVerdict::not_pv;
    }
    return cert;
}

bool is_pv(const IntPolynomial &p) { return certify_pv(p).verdict == PvVerdict::pv; }

std::vector<mpz_class> power_sums(const IntPolynomial &p, unsigned long n) {
    if (!p.is_monic()) {
        throw std::invalid_argument("power sums require a monic polynomial");
    }
    int d = p.degree();
    // x^d + a_{d-1} x^{d-1} + ... + a_0
    auto a = [&](int k) { return p.coefficient(k); };
    std::vector<mpz_class> s(n + 1, 0);
    s[0] = d;
    for (unsigned long k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        long kk = static_cast<long>(k);
        for (long j = 1; j <= std::min<long>(kk - 1, d); ++j) {
            acc += a(d - static_cast<int>(j)) * s[static_cast<std::size_t>(kk - j)];
        }
        if (kk <= d) {
            acc += a(d - static_cast<int>(kk)) * kk;
        }
        s[k] = -acc;
    }
    s.erase(s.begin());
    return s;
}

mpz_class power_sum(const IntPolynomial &p, unsigned long n) {
    if (n == 0) {
        return p.degree();
    }
    return power_sums(p, n).back();
}

AlgebraicReal::AlgebraicReal(IntPolynomial polynomial, Interval isolating)
    : poly_(std::move(polynomial)), iso_(std::move(isolating)) {
    int lo = poly_.sign_at(iso_.lower());
    int hi = poly_.sign_at(iso_.upper());
    bool point = iso_.lower() == iso_.upper();
    if ((point && lo != 0) || (!point && lo * hi > 0)) {
        throw std::invalid_argument("interval does not isolate a root");
    }
}

Interval AlgebraicReal::approximate(unsigned bits) const {
    mpq_class lo = iso_.lower();
    mpq_class hi = iso_.upper();
    int slo = poly_.sign_at(lo);
    if (slo == 0) return Interval(lo);
    if (poly_.sign_at(hi) == 0) return Interval(hi);
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    mpq_class target(1, den);
    while (hi - lo > target) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        int s = poly_.sign_at(mid);
        if (s == 0) return Interval(mid);
        if (s == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return Interval(lo, hi);
}

double AlgebraicReal::to_double() const { return approximate(60).mid_d(); }

AlgebraicReal largest_real_root(const IntPolynomial &p) {
    IntPolynomial sf = squarefree_part(p);
    if (sf.degree() < 1) {
        throw std::domain_error("constant polynomial has no roots");
    }
    auto chain = sturm_chain(sf);
    auto count = [&](const mpq_class &a, const mpq_class &b) {
        return sign_variations_at(chain, a) - sign_variations_at(chain, b);
    };
    mpq_class hi = cauchy_bound(sf);
    mpq_class lo = -hi;
    if (count(lo, hi) == 0) {
        throw std::domain_error("polynomial has no real root");
    }
    while (true) {
        if (sf.sign_at(hi) == 0) {
            return AlgebraicReal(sf, Interval(hi));
        }
        if (count(lo, hi) == 1 && sf.sign_at(lo) != 0) {
            return AlgebraicReal(sf, Interval(lo, hi));
        }
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        if (count(mid, hi) >= 1) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

Interval pv_decay(const IntPolynomial &p, unsigned long n, unsigned precision_bits) {
    if (certify_pv(p).verdict == PvVerdict::not_pv) {
        throw std::domain_error("pv_decay requires a PV polynomial");
    }
    AlgebraicReal lambda = largest_real_root(p);
    if (precision_bits == 0) {
        double log2_lambda = std::log2(lambda.to_double());
        precision_bits = static_cast<unsigned>(std::ceil(2.0 * static_cast<double>(n) * log2_lambda)) + 64;
    }
    Interval power = lambda.approximate(precision_bits).pow(n);
    Interval sn{mpq_class(power_sum(p, n))};
    return (sn - power).abs();
}

Interval max_conjugate_modulus(const IntPolynomial &p, unsigned bits) {
    if (p.degree() <= 1) {
        return Interval(mpq_class(0));
    }
    auto at_most_one_outside = [&](const mpq_class &r) {
        return unit_circle_counts(scale_argument(p, r)).outside <= 1;
    };
    mpq_class lo = 0;
    mpq_class hi = cauchy_bound(p);
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    mpq_class target(1, den);
    while (hi - lo > target) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        if (at_most_one_outside(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return Interval(lo, hi);
}

Recurrence Recurrence::fibonacci() { return Recurrence{{1, 1}, {0, 1}}; }
Recurrence Recurrence::padovan() { return Recurrence{{0, 1, 1}, {1, 1, 1}}; }
Recurrence Recurrence::pell() { return Recurrence{{2, 1}, {0, 1}}; }

IntPolynomial Recurrence::characteristic() const {
    std::size_t d = coefficients.size();
    std::vector<mpz_class> c(d + 1);
    c[d] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        c[d - k] = -coefficients[k - 1];
    }
    return IntPolynomial(std::move(c));
}

std::vector<mpz_class> recurrence_terms(const Recurrence &r, unsigned long n) {
    std::size_t d = r.order();
    if (d == 0 || r.initial.size() != d) {
        throw std::invalid_argument("recurrence needs matching coefficient and initial-term counts");
    }
    std::vector<mpz_class> f(r.initial.begin(), r.initial.end());
    while (f.size() <= n) {
        mpz_class next = 0;
        std::size_t m = f.size();
        for (std::size_t k = 1; k <= d; ++k) {
            next += r.coefficients[k - 1] * f[m - k];
        }
        f.push_back(next);
    }
    f.resize(n + 1);
    return f;
}

mpz_class recurrence_term(const Recurrence &r, unsigned long n) { return recurrence_terms(r, n).back(); }

Interval ratio_limit_check(const Recurrence &r, const IntPolynomial &p, unsigned long n, unsigned bits) {
    if (n == 0) {
        throw std::invalid_argument("ratio_limit_check needs n >= 1");
    }
    auto f = recurrence_terms(r, n);
    if (f[n - 1] == 0) {
        throw std::domain_error("ratio_limit_check: f_{n-1} is zero");
    }
    mpq_class ratio(f[n], f[n - 1]);
    ratio.canonicalize();
    Interval lambda = largest_real_root(p).approximate(bits);
    return (Interval(ratio) - lambda).abs();
}

}  // namespace pisot
