#include "coxos/matrix.hpp"

namespace coxos {

std::vector<size_t> rref(RatMatrix& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> kernel(const RatMatrix& m) {
  RatMatrix e = m;
  std::vector<size_t> pivots = rref(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(m.cols);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix inverse(const RatMatrix& m) {
  COXOS_CHECK(m.rows == m.cols, "inverse: not square");
  size_t n = m.rows;
  RatMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  COXOS_CHECK(pivots.size() == n && pivots.back() == n - 1,
              "inverse: singular matrix");
  RatMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Rational determinant(RatMatrix m) {
  COXOS_CHECK(m.rows == m.cols, "determinant: not square");
  size_t n = m.rows;
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m.at(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rational inv = Rational(1) / m.at(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c) * inv;
      for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& b) {
  COXOS_CHECK(b.size() == m.rows, "solve: shape mismatch");
  RatMatrix aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  COXOS_CHECK(pivots.empty() || pivots.back() < m.cols, "solve: inconsistent system");
  COXOS_CHECK(pivots.size() == m.cols, "solve: underdetermined system");
  std::vector<Rational> x(m.cols);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

}  // namespace coxos
