#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxos/matrix.hpp"
#include "coxos/rational.hpp"

namespace coxos {

/// Group element as a permutation of the 2N roots (indices 0..N-1 the
/// positive roots, i+N the negative of root i). Only the images of the
/// positive roots are stored; negation symmetry determines the rest.
/// Products compose left-to-right: in w = u*v the permutation of u acts
/// first.
struct Element {
  std::vector<uint8_t> img;

  static Element identity(size_t n_pos) {
    Element e;
    e.img.resize(n_pos);
    for (size_t i = 0; i < n_pos; ++i) e.img[i] = (uint8_t)i;
    return e;
  }

  size_t n_pos() const { return img.size(); }

  /// Image of any root index in [0, 2N).
  unsigned image(unsigned i) const {
    unsigned n = img.size();
    if (i < n) return img[i];
    unsigned j = img[i - n] + n;
    return j >= 2 * n ? j - 2 * n : j;
  }

  bool is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  unsigned length() const {
    unsigned n = img.size(), l = 0;
    for (size_t i = 0; i < n; ++i)
      if (img[i] >= n) ++l;
    return l;
  }

  bool operator==(const Element& o) const { return img == o.img; }
  bool operator!=(const Element& o) const { return img != o.img; }
  bool operator<(const Element& o) const { return img < o.img; }
};

inline Element compose(const Element& a, const Element& b) {
  Element r;
  size_t n = a.img.size();
  r.img.resize(n);
  for (size_t i = 0; i < n; ++i) r.img[i] = (uint8_t)b.image(a.img[i]);
  return r;
}

inline Element inverse(const Element& a) {
  Element r;
  size_t n = a.img.size();
  r.img.resize(n);
  for (size_t i = 0; i < n; ++i) {
    unsigned j = a.img[i];
    if (j < n)
      r.img[j] = (uint8_t)i;
    else
      r.img[j - n] = (uint8_t)(i + n);
  }
  return r;
}

/// Order of the element as a group element.
unsigned element_order(const Element& a);

enum class Family { A, B, D, E };

enum class RootOrder {
  Canonical,    // height ascending, ties by descending lex on coordinates
  ReversedTie,  // height ascending, ties by ascending lex (test variant)
};

/// Crystallographic root system plus reflection representation data for a
/// finite Coxeter group. Immutable after construction.
///
/// Generator numbering follows the diagrams documented in the README:
/// type A is the chain 1-2-...-n; type B carries the double bond between
/// nodes 1 and 2 with node 1 short; type D forks at node 3 with end nodes
/// 1' and 2; type E6/7/8 has the chain 1-3-4-5-6(-7)(-8) with node 2
/// attached to node 4.
struct CoxeterDatum {
  Family family;
  int rank = 0;
  int n_pos = 0;  // number of positive roots N
  RootOrder order = RootOrder::Canonical;

  std::vector<std::vector<long long>> cartan;  // cartan[i][j] = <a_j, a_i^v>
  std::vector<std::vector<Rational>> bform;    // (a_i, a_j)
  std::vector<std::vector<long long>> roots;   // positive roots, simple basis
  std::map<std::vector<long long>, int> root_index;
  std::vector<int> gen_root;        // generator -> root index of its simple root
  std::vector<std::string> gen_labels;
  std::vector<Element> simple_perm;

  std::string name() const;  // e.g. "B5"

  int root_of_vector(const std::vector<long long>& v) const;  // index or i+N for -v
  Rational pairing(const std::vector<long long>& u,
                   const std::vector<long long>& v) const;

  /// Index of the highest root (maximal height; unique for irreducible types).
  int highest_root() const;
};

/// Builds the datum for an irreducible family; errors on unsupported ranks
/// (A: n>=1, B: n>=2, D: n>=4, E: 6..8).
CoxeterDatum build_coxeter_datum(Family family, int rank,
                                 RootOrder order = RootOrder::Canonical);

CoxeterDatum build_datum_from_cartan(
    const std::vector<std::vector<long long>>& cartan,
    const std::vector<Rational>& root_norms,
    const std::vector<std::string>& labels, Family family, int rank,
    RootOrder order = RootOrder::Canonical);

Element simple_reflection(const CoxeterDatum& d, int gen);  // 0-based
Element reflection_for_root(const CoxeterDatum& d, int root);

Element element_from_word(const CoxeterDatum& d, const std::vector<int>& word);

/// Left descent set as a generator bitmask: {i : l(s_i w) < l(w)}.
unsigned descent_mask(const CoxeterDatum& d, const Element& w);

/// Lexicographically least reduced word (0-based generator indices).
std::vector<int> lex_least_word(const CoxeterDatum& d, Element w);

/// Matrix of w acting on the reflection representation, columns are the
/// images of the simple roots in the simple-root basis.
RatMatrix matrix_on_v(const CoxeterDatum& d, const Element& w);

/// Basis of the fixed space {v : w v = v} in the simple-root basis.
std::vector<std::vector<Rational>> fixed_space(const CoxeterDatum& d,
                                               const Element& w);

/// Common fixed space of several elements.
std::vector<std::vector<Rational>> fixed_space(
    const CoxeterDatum& d, const std::vector<Element>& ws);

std::string family_letter(Family f);

/// Degrees d_1..d_n of the invariant ring; |W| is their product.
std::vector<int> reflection_degrees(Family f, int rank);

}  // namespace coxos
