#pragma once

#include <vector>

#include "coxos/rational.hpp"

namespace coxos {

/// Dense rational matrices, sized for the small exact linear algebra this
/// project needs (reflection representations, descent matrices, the
/// exterior-quotient oracle). Row-major.
struct RatMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static RatMatrix identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    COXOS_CHECK(cols == o.rows, "matrix: shape mismatch");
    RatMatrix r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) {
        const Rational& v = at(i, k);
        if (v.is_zero()) continue;
        for (size_t j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  bool operator==(const RatMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

/// In-place row reduction to reduced echelon form; returns pivot columns.
std::vector<size_t> rref(RatMatrix& m);

size_t rank(RatMatrix m);

/// Basis of the right kernel {x : m x = 0}, one column vector per element.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);

Rational determinant(RatMatrix m);

/// Solves m x = b; fails if inconsistent or underdetermined.
std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& b);

}  // namespace coxos
