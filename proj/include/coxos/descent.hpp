#pragma once

#include <map>

#include "coxos/coxgroup.hpp"

namespace coxos {

/// Subsets of a fixed generator set L, indexed in binary-counter order on
/// characteristic vectors (bit i of the counter toggles the i-th lowest
/// member of L).
struct SubsetIndex {
  unsigned l_mask = 0;
  std::vector<unsigned> masks;           // compressed index -> expanded mask
  std::map<unsigned, int> index_of_map;  // expanded mask -> compressed index

  explicit SubsetIndex(unsigned l_mask_ = 0);
  size_t size() const { return masks.size(); }
  int index_of(unsigned mask) const { return index_of_map.at(mask); }
};

/// The matrix M with (K,J)-entry |{x in X_K : J^x simple}| for K containing
/// J (0 otherwise) together with its exact inverse N, rows and columns over
/// the subsets of L.
struct DescentMatrix {
  SubsetIndex subsets;
  RatMatrix m;
  RatMatrix n;
};

DescentMatrix descent_matrix(const Grp& l_grp);

/// Sparse exact vector in the group algebra.
struct Gav {
  BoxPtr box;
  std::map<uint32_t, Rational> c;

  void add(uint32_t g, const Rational& q) {
    if (q.is_zero()) return;
    auto [it, fresh] = c.emplace(g, q);
    if (!fresh) {
      it->second += q;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  Gav& operator+=(const Gav& o) {
    for (auto& [g, q] : o.c) add(g, q);
    return *this;
  }
  Gav& operator*=(const Rational& q) {
    if (q.is_zero()) {
      c.clear();
      return *this;
    }
    for (auto& [g, v] : c) v *= q;
    return *this;
  }
  bool operator==(const Gav& o) const { return c == o.c; }
  bool is_identity_element() const {
    return c.size() == 1 && c.begin()->first == box->identity() &&
           c.begin()->second == Rational(1);
  }
};

/// Sum of the transversal X_J^L inside the group algebra.
Gav transversal_sum(const Grp& l_grp, unsigned j_mask);

/// Quasi-idempotent e_J^L = sum_K n_JK x_K^L.
Gav quasi_idempotent(const Grp& l_grp, const DescentMatrix& dm, unsigned j_mask);

/// W-conjugacy classes of subsets of S.
struct Shape {
  std::vector<unsigned> members;  // sorted by index-list lex order
  unsigned rep = 0;               // lexicographically least member
};

std::vector<Shape> shapes(const Grp& w);

/// Coordinates of e_lambda = sum of e_L over the shape, in the x_J basis of
/// the ambient descent algebra.
std::vector<Rational> shape_idempotent_xcoords(const DescentMatrix& dm,
                                               const Shape& shape);

/// Expands x-coordinates into a group algebra vector. The coefficient of w
/// in x_J depends only on the descent set of w.
Gav gav_from_xcoords(const Grp& w, const DescentMatrix& dm,
                     const std::vector<Rational>& xc);

/// Exact convolution product. Uses the multiplication table for groups of
/// at most 4000 elements and a Cayley-graph translation scheme above that
/// (capped; intended for sampled checks).
Gav gav_mul(const Gav& a, const Gav& b);

/// Structure constants of the descent algebra: x_J x_K = sum over the
/// distinguished double coset representatives d of x_{(J^d) cap K}.
struct SolomonTable {
  SubsetIndex subsets;
  std::vector<uint32_t> counts;  // [J][K][M], compressed indices

  uint32_t count(int j, int k, int m) const {
    size_t s = subsets.size();
    return counts[((size_t)j * s + k) * s + m];
  }
};

SolomonTable solomon_table(const Grp& w);

std::vector<Rational> descent_product(const SolomonTable& t,
                                      const std::vector<Rational>& a,
                                      const std::vector<Rational>& b);

/// Character of e_lambda C[scope] at w via the full trace v -> e_lambda v w
/// on the group algebra of the scope; desk-scale oracle.
Rational rho_lambda_direct(const Gav& e_lambda, uint32_t w, const Grp& scope);

/// The extension of the top-component character of CW_L to N_W(W_L),
/// evaluated through the twisted-conjugation orbit formula; one value per
/// class of n_grp, in its class order.
std::vector<Rational> rho_tilde(const Grp& l_grp, const DescentMatrix& dm,
                                const Grp& n_grp);

/// Independent check: dense trace of v -> n^-1 e_L^L v w n on CW_L.
std::vector<Rational> rho_tilde_oracle(const Grp& l_grp,
                                       const DescentMatrix& dm,
                                       const Grp& n_grp);

}  // namespace coxos
