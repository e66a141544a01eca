#include "pisot/polynomial.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pisot {

namespace {

using QPoly = std::vector<mpq_class>;

QPoly to_q(const IntPolynomial &p) {
    QPoly out;
    out.reserve(p.coefficients().size());
    for (const auto &c : p.coefficients()) {
        out.emplace_back(c);
    }
    return out;
}

void trim_q(QPoly &p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// Positive rescaling of a rational polynomial into a primitive integer one.
IntPolynomial from_q_positive(const QPoly &p) {
    mpz_class l = 1;
    for (const auto &c : p) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<mpz_class> out;
    out.reserve(p.size());
    for (const auto &c : p) {
        out.push_back(c.get_num() * (l / c.get_den()));
    }
    IntPolynomial ip(std::move(out));
    mpz_class g = ip.content();
    if (g == 0) {
        return ip;
    }
    std::vector<mpz_class> reduced;
    for (const auto &c : ip.coefficients()) {
        reduced.push_back(c / g);
    }
    return IntPolynomial(std::move(reduced));
}

QPoly q_remainder(QPoly a, const QPoly &b) {
    if (b.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        mpq_class factor = a.back() / b.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] -= factor * b[i];
        }
        a.pop_back();
        trim_q(a);
    }
    return a;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) {
        c_.emplace_back(c);
    }
    trim();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::vector<mpz_class> coeffs;
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
        auto first = token.find_first_not_of(" \t");
        auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw std::invalid_argument("empty coefficient in polynomial '" + std::string(text) + "'");
        }
        token = token.substr(first, last - first + 1);
        if (token[0] == '+') {
            token = token.substr(1);
        }
        mpz_class c;
        if (c.set_str(token, 10) != 0) {
            throw std::invalid_argument("bad coefficient '" + token + "'");
        }
        coeffs.push_back(c);
    }
    IntPolynomial p(std::move(coeffs));
    if (p.is_zero()) {
        throw std::invalid_argument("zero polynomial");
    }
    return p;
}

IntPolynomial IntPolynomial::monomial(long degree, const mpz_class &coefficient) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coefficient;
    return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::evaluate(const mpz_class &x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class &x) const {
    // Horner on numerator/denominator: d^n p(n/d) stays integral.
    const mpz_class &num = x.get_num();
    const mpz_class &den = x.get_den();
    mpz_class acc = 0;
    mpz_class den_pow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        den_pow *= den;
    }
    if (c_.empty()) {
        return 0;
    }
    mpz_class denominator;
    mpz_pow_ui(denominator.get_mpz_t(), den.get_mpz_t(), c_.size() - 1);
    mpq_class r(acc, denominator);
    r.canonicalize();
    return r;
}

Interval IntPolynomial::evaluate(const Interval &x) const {
    Interval acc(mpq_class(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + Interval(mpq_class(*it));
    }
    return acc;
}

int IntPolynomial::sign_at(const mpq_class &x) const { return sgn(evaluate(x)); }

int IntPolynomial::sign_at_infinity(bool positive) const {
    if (c_.empty()) {
        return 0;
    }
    int s = sgn(c_.back());
    if (!positive && degree() % 2 == 1) {
        s = -s;
    }
    return s;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d.push_back(c_[k] * static_cast<unsigned long>(k));
    }
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto &c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) {
        return *this;
    }
    mpz_class g = content();
    if (c_.back() < 0) {
        g = -g;
    }
    std::vector<mpz_class> out;
    out.reserve(c_.size());
    for (const auto &c : c_) {
        out.push_back(c / g);
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_csv() const {
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += c_[i].get_str();
    }
    return out;
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class &c = c_[static_cast<std::size_t>(k)];
        if (c == 0) {
            continue;
        }
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) {
            out += mag.get_str();
        }
        if (k >= 1) {
            out += "x";
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
    if (a.c_.empty() || b.c_.empty()) {
        return IntPolynomial();
    }
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const mpz_class &k) const {
    std::vector<mpz_class> c = c_;
    for (auto &x : c) {
        x *= k;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial &a, const IntPolynomial &b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<mpz_class> rem = a.coefficients();
    const auto &bc = b.coefficients();
    int db = b.degree();
    if (a.degree() < db) {
        if (a.is_zero()) return IntPolynomial();
        throw std::domain_error("exact_divide: divisor does not divide dividend");
    }
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    for (int k = a.degree() - db; k >= 0; --k) {
        mpz_class &top = rem[static_cast<std::size_t>(k + db)];
        if (top % bc.back() != 0) {
            throw std::domain_error("exact_divide: divisor does not divide dividend");
        }
        mpz_class f = top / bc.back();
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(k + i)] -= f * bc[static_cast<std::size_t>(i)];
        }
    }
    for (const auto &r : rem) {
        if (r != 0) {
            throw std::domain_error("exact_divide: nonzero remainder");
        }
    }
    return IntPolynomial(std::move(q));
}

IntPolynomial scaled_remainder(const IntPolynomial &a, const IntPolynomial &b) {
    return from_q_positive(q_remainder(to_q(a), to_q(b)));
}

IntPolynomial gcd(const IntPolynomial &a, const IntPolynomial &b) {
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    while (!y.is_zero()) {
        IntPolynomial r = scaled_remainder(x, y);
        x = y;
        y = r.primitive_part();
    }
    return x.primitive_part();
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial &p) {
    // Repeated-gcd form of Yun's algorithm with primitive representatives.
    std::vector<std::pair<IntPolynomial, int>> out;
    if (p.degree() < 1) {
        return out;
    }
    IntPolynomial f = p.primitive_part();
    IntPolynomial g = gcd(f, f.derivative());
    IntPolynomial w = exact_divide(f * g.leading(), g).primitive_part();
    int i = 1;
    while (w.degree() > 0) {
        IntPolynomial y = gcd(w, g);
        IntPolynomial z = exact_divide(w * y.leading(), y).primitive_part();
        if (z.degree() > 0) {
            out.emplace_back(z, i);
        }
        w = y;
        g = exact_divide(g * y.leading(), y).primitive_part();
        ++i;
    }
    return out;
}

IntPolynomial squarefree_part(const IntPolynomial &p) {
    if (p.degree() < 1) {
        return p.primitive_part();
    }
    IntPolynomial f = p.primitive_part();
    IntPolynomial g = gcd(f, f.derivative());
    return exact_divide(f * g.leading(), g).primitive_part();
}

bool is_squarefree(const IntPolynomial &p) {
    if (p.degree() < 1) {
        return true;
    }
    return gcd(p, p.derivative()).degree() == 0;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial &f0, const IntPolynomial &f1) {
    std::vector<IntPolynomial> chain{f0, f1};
    if (f1.is_zero()) {
        chain.pop_back();
        return chain;
    }
    while (true) {
        IntPolynomial r = scaled_remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) {
            break;
        }
        chain.push_back(r * mpz_class(-1));
    }
    return chain;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial &p) { return sturm_chain(p, p.derivative()); }

static int count_variations(const std::vector<int> &signs) {
    int variations = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int sign_variations_at(const std::vector<IntPolynomial> &chain, const mpq_class &x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto &f : chain) {
        signs.push_back(f.sign_at(x));
    }
    return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<IntPolynomial> &chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto &f : chain) {
        signs.push_back(f.sign_at_infinity(positive));
    }
    return count_variations(signs);
}

int count_real_roots(const IntPolynomial &p, const mpq_class &a, const mpq_class &b) {
    if (p.degree() < 1) {
        return 0;
    }
    auto chain = sturm_chain(squarefree_part(p));
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots(const IntPolynomial &p) {
    if (p.degree() < 1) {
        return 0;
    }
    auto chain = sturm_chain(squarefree_part(p));
    return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

mpq_class cauchy_bound(const IntPolynomial &p) {
    if (p.degree() < 1) {
        return 1;
    }
    mpz_class m = 0;
    for (int k = 0; k < p.degree(); ++k) {
        mpz_class a = abs(p.coefficients()[static_cast<std::size_t>(k)]);
        if (a > m) m = a;
    }
    mpq_class bound(m, abs(p.leading()));
    bound.canonicalize();
    return bound + 1;
}

IntPolynomial scale_argument(const IntPolynomial &p, const mpq_class &r) {
    if (r <= 0) {
        throw std::invalid_argument("scale_argument needs r > 0");
    }
    const mpz_class &num = r.get_num();
    const mpz_class &den = r.get_den();
    int d = p.degree();
    std::vector<mpz_class> out;
    out.reserve(p.coefficients().size());
    for (int k = 0; k <= d; ++k) {
        mpz_class nk, dk;
        mpz_pow_ui(nk.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(dk.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d - k));
        out.push_back(p.coefficients()[static_cast<std::size_t>(k)] * nk * dk);
    }
    return IntPolynomial(std::move(out));
}

}  // namespace pisot
