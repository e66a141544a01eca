#ifndef PISOT_INT_MATRIX_H
#define PISOT_INT_MATRIX_H

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pisot/polynomial.h"

namespace pisot {

/// Square matrix of big integers, row-major.
class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dimension);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t dimension);

    std::size_t dimension() const { return n_; }
    mpz_class &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const mpz_class &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const IntMatrix &other) const { return n_ == other.n_ && a_ == other.a_; }
    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
    IntMatrix operator*(const mpz_class &k) const;
    std::vector<mpz_class> apply(const std::vector<mpz_class> &v) const;
    IntMatrix power(unsigned long k) const;
    mpz_class trace() const;

    /// "[[1,1],[1,0]]"
    std::string to_string() const;

   private:
    std::size_t n_ = 0;
    std::vector<mpz_class> a_;
};

/// det(x I - M), computed with the Faddeev-LeVerrier recurrence.
IntPolynomial char_poly(const IntMatrix &m);

/// Matrices B_0..B_{n-1} with adj(x I - M) = sum_k B_k x^{n-1-k}.
std::vector<IntMatrix> adjugate_coefficients(const IntMatrix &m);

/// True iff some power M^k, k <= (d-1)^2 + 1, is entrywise positive. Throws on
/// negative entries.
bool is_primitive(const IntMatrix &m);

}  // namespace pisot

#endif
