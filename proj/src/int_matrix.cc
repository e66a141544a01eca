#include "pisot/int_matrix.h"

#include <stdexcept>

namespace pisot {

IntMatrix::IntMatrix(std::size_t dimension) : n_(dimension), a_(dimension * dimension, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    for (const auto &row : rows) {
        if (row.size() != n_) {
            throw std::invalid_argument("IntMatrix must be square");
        }
        for (long v : row) {
            a_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t dimension) {
    IntMatrix m(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    std::size_t n = a.n_;
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const mpz_class &aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) {
        c.a_[i] += b.a_[i];
    }
    return c;
}

IntMatrix IntMatrix::operator*(const mpz_class &k) const {
    IntMatrix c = *this;
    for (auto &x : c.a_) {
        x *= k;
    }
    return c;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class> &v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("vector dimension mismatch");
    }
    std::vector<mpz_class> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

IntMatrix IntMatrix::power(unsigned long k) const {
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

mpz_class IntMatrix::trace() const {
    mpz_class t = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) out += ",";
            out += (*this)(i, j).get_str();
        }
        out += "]";
    }
    return out + "]";
}

namespace {

// Faddeev-LeVerrier: M_1 = I, c_{n-1} = -tr(M)...; returns (coefficients of
// the characteristic polynomial, constant first; adjugate coefficient matrices).
std::pair<std::vector<mpz_class>, std::vector<IntMatrix>> faddeev_leverrier(const IntMatrix &m) {
    std::size_t n = m.dimension();
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    std::vector<IntMatrix> adj;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        adj.push_back(mk);
        IntMatrix am = m * mk;
        mpz_class tr = am.trace();
        if (tr % static_cast<unsigned long>(k) != 0) {
            throw std::logic_error("Faddeev-LeVerrier: non-integral trace quotient");
        }
        c[n - k] = -tr / static_cast<unsigned long>(k);
        mk = am + IntMatrix::identity(n) * c[n - k];
    }
    return {c, adj};
}

}  // namespace

IntPolynomial char_poly(const IntMatrix &m) {
    if (m.dimension() == 0) {
        throw std::invalid_argument("char_poly of an empty matrix");
    }
    return IntPolynomial(faddeev_leverrier(m).first);
}

std::vector<IntMatrix> adjugate_coefficients(const IntMatrix &m) { return faddeev_leverrier(m).second; }

bool is_primitive(const IntMatrix &m) {
    std::size_t n = m.dimension();
    if (n == 0) {
        throw std::invalid_argument("is_primitive of an empty matrix");
    }
    std::vector<char> b(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) < 0) {
                throw std::invalid_argument("is_primitive requires nonnegative entries");
            }
            b[i * n + j] = m(i, j) > 0;
        }
    }
    auto multiply = [n](const std::vector<char> &x, const std::vector<char> &y) {
        std::vector<char> z(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (x[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (y[k * n + j]) z[i * n + j] = 1;
        return z;
    };
    auto positive = [](const std::vector<char> &x) {
        for (char v : x)
            if (!v) return false;
        return true;
    };
    // Once some power is positive all higher ones are too (a primitive matrix
    // has no zero row), so squaring past the Wielandt bound is enough.
    std::size_t bound = (n - 1) * (n - 1) + 1;
    std::vector<char> p = b;
    std::size_t k = 1;
    while (true) {
        if (positive(p)) return true;
        if (k >= bound) return false;
        p = multiply(p, p);
        k *= 2;
    }
}

}  // namespace pisot
