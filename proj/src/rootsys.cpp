#include "coxos/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace coxos {

unsigned element_order(const Element& a) {
  Element p = a;
  unsigned k = 1;
  while (!p.is_identity()) {
    p = compose(p, a);
    ++k;
    COXOS_CHECK(k < 100000, "element_order: runaway");
  }
  return k;
}

std::string family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

std::string CoxeterDatum::name() const {
  return family_letter(family) + std::to_string(rank);
}

std::vector<int> reflection_degrees(Family f, int rank) {
  std::vector<int> d;
  switch (f) {
    case Family::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
    case Family::E:
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      else if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      else fail("reflection_degrees: bad E rank");
      break;
  }
  return d;
}

namespace {

long long height(const std::vector<long long>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

bool root_before(const std::vector<long long>& a,
                 const std::vector<long long>& b, RootOrder order) {
  long long ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  if (order == RootOrder::Canonical) return a > b;  // descending lex on ties
  return a < b;
}

std::vector<long long> reflect_coords(const CoxeterDatum& d, int gen,
                                      const std::vector<long long>& v) {
  long long pairing = 0;
  for (int j = 0; j < d.rank; ++j) pairing += d.cartan[gen][j] * v[j];
  std::vector<long long> w = v;
  w[gen] -= pairing;
  return w;
}

}  // namespace

int CoxeterDatum::root_of_vector(const std::vector<long long>& v) const {
  auto it = root_index.find(v);
  if (it != root_index.end()) return it->second;
  std::vector<long long> neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  it = root_index.find(neg);
  COXOS_CHECK(it != root_index.end(), "root_of_vector: not a root");
  return it->second + n_pos;
}

Rational CoxeterDatum::pairing(const std::vector<long long>& u,
                               const std::vector<long long>& v) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (v[j] == 0) continue;
      s += Rational(u[i]) * Rational(v[j]) * bform[i][j];
    }
  }
  return s;
}

int CoxeterDatum::highest_root() const {
  int best = 0;
  for (int i = 1; i < n_pos; ++i)
    if (height(roots[i]) > height(roots[best])) best = i;
  return best;
}

CoxeterDatum build_datum_from_cartan(
    const std::vector<std::vector<long long>>& cartan,
    const std::vector<Rational>& root_norms,
    const std::vector<std::string>& labels, Family family, int rank,
    RootOrder order) {
  CoxeterDatum d;
  d.family = family;
  d.rank = rank;
  d.order = order;
  d.cartan = cartan;
  d.gen_labels = labels;

  d.bform.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      d.bform[i][j] = Rational(cartan[i][j]) * root_norms[i] / Rational(2);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      COXOS_CHECK(d.bform[i][j] == d.bform[j][i],
                  "cartan data not symmetrizable");

  // close the simple roots under the simple reflections
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<long long> v(rank, 0);
    v[i] = 1;
    seen.insert(v);
    queue.push_back(v);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    for (int i = 0; i < rank; ++i) {
      std::vector<long long> w = reflect_coords(d, i, queue[q]);
      bool positive = true;
      for (long long c : w)
        if (c < 0) positive = false;
      if (!positive) continue;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }

  d.roots.assign(seen.begin(), seen.end());
  std::sort(d.roots.begin(), d.roots.end(),
            [&](const auto& a, const auto& b) { return root_before(a, b, order); });
  d.n_pos = (int)d.roots.size();
  COXOS_CHECK(d.n_pos <= 127, "root system too large for element encoding");
  for (int i = 0; i < d.n_pos; ++i) d.root_index[d.roots[i]] = i;

  d.gen_root.resize(rank);
  for (int i = 0; i < rank; ++i) {
    std::vector<long long> v(rank, 0);
    v[i] = 1;
    d.gen_root[i] = d.root_index.at(v);
  }

  for (int i = 0; i < rank; ++i) {
    Element e;
    e.img.resize(d.n_pos);
    for (int r = 0; r < d.n_pos; ++r) {
      std::vector<long long> w = reflect_coords(d, i, d.roots[r]);
      e.img[r] = (uint8_t)d.root_of_vector(w);
    }
    d.simple_perm.push_back(std::move(e));
  }
  return d;
}

CoxeterDatum build_coxeter_datum(Family family, int rank, RootOrder order) {
  std::vector<std::vector<long long>> c(rank, std::vector<long long>(rank, 0));
  std::vector<Rational> norms(rank, Rational(2));
  std::vector<std::string> labels(rank);
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  for (int i = 0; i < rank; ++i) labels[i] = std::to_string(i + 1);
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };

  switch (family) {
    case Family::A:
      COXOS_CHECK(rank >= 1, "type A needs rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case Family::B:
      COXOS_CHECK(rank >= 2, "type B needs rank >= 2");
      for (int i = 1; i + 1 < rank; ++i) link(i, i + 1);
      c[0][1] = -2;  // node 1 short
      c[1][0] = -1;
      norms[0] = Rational(1);
      break;
    case Family::D:
      COXOS_CHECK(rank >= 4, "type D needs rank >= 4");
      link(0, 2);
      link(1, 2);
      for (int i = 2; i + 1 < rank; ++i) link(i, i + 1);
      labels[0] = "1'";
      for (int i = 1; i < rank; ++i) labels[i] = std::to_string(i + 1);
      break;
    case Family::E:
      COXOS_CHECK(rank >= 6 && rank <= 8, "type E needs rank 6..8");
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      for (int i = 5; i + 1 < rank; ++i) link(i, i + 1);
      break;
  }
  CoxeterDatum d = build_datum_from_cartan(c, norms, labels, family, rank, order);

  int expected = 0;
  switch (family) {
    case Family::A: expected = rank * (rank + 1) / 2; break;
    case Family::B: expected = rank * rank; break;
    case Family::D: expected = rank * (rank - 1); break;
    case Family::E: expected = rank == 6 ? 36 : (rank == 7 ? 63 : 120); break;
  }
  COXOS_CHECK(d.n_pos == expected, "unexpected number of positive roots");
  if (order == RootOrder::Canonical)
    for (int i = 0; i < rank; ++i)
      COXOS_CHECK(d.gen_root[i] == i, "canonical order: simple roots first");
  return d;
}

Element simple_reflection(const CoxeterDatum& d, int gen) {
  COXOS_CHECK(gen >= 0 && gen < d.rank, "simple_reflection: index out of range");
  return d.simple_perm[gen];
}

Element reflection_for_root(const CoxeterDatum& d, int root) {
  COXOS_CHECK(root >= 0 && root < d.n_pos,
              "reflection_for_root: index out of range");
  const std::vector<long long>& r = d.roots[root];
  Rational rr = d.pairing(r, r);
  Element e;
  e.img.resize(d.n_pos);
  for (int j = 0; j < d.n_pos; ++j) {
    Rational coef = Rational(2) * d.pairing(d.roots[j], r) / rr;
    COXOS_CHECK(coef.is_integer(), "reflection_for_root: non-integral pairing");
    long long k = coef.to_int();
    std::vector<long long> w = d.roots[j];
    for (int t = 0; t < d.rank; ++t) w[t] -= k * r[t];
    e.img[j] = (uint8_t)d.root_of_vector(w);
  }
  return e;
}

Element element_from_word(const CoxeterDatum& d, const std::vector<int>& word) {
  Element e = Element::identity(d.n_pos);
  for (int g : word) {
    COXOS_CHECK(g >= 0 && g < d.rank, "element_from_word: bad generator");
    e = compose(e, d.simple_perm[g]);
  }
  return e;
}

unsigned descent_mask(const CoxeterDatum& d, const Element& w) {
  unsigned m = 0;
  for (int i = 0; i < d.rank; ++i)
    if (w.img[d.gen_root[i]] >= (unsigned)d.n_pos) m |= 1u << i;
  return m;
}

std::vector<int> lex_least_word(const CoxeterDatum& d, Element w) {
  std::vector<int> word;
  for (;;) {
    unsigned m = descent_mask(d, w);
    if (!m) break;
    int i = std::countr_zero(m);
    word.push_back(i);
    w = compose(d.simple_perm[i], w);
  }
  return word;
}

RatMatrix matrix_on_v(const CoxeterDatum& d, const Element& w) {
  Element winv = inverse(w);
  RatMatrix m(d.rank, d.rank);
  for (int j = 0; j < d.rank; ++j) {
    unsigned im = winv.image(d.gen_root[j]);
    long long sign = 1;
    if (im >= (unsigned)d.n_pos) {
      im -= d.n_pos;
      sign = -1;
    }
    for (int i = 0; i < d.rank; ++i)
      m.at(i, j) = Rational(sign * d.roots[im][i]);
  }
  return m;
}

std::vector<std::vector<Rational>> fixed_space(const CoxeterDatum& d,
                                               const Element& w) {
  return fixed_space(d, std::vector<Element>{w});
}

std::vector<std::vector<Rational>> fixed_space(
    const CoxeterDatum& d, const std::vector<Element>& ws) {
  RatMatrix stack((size_t)d.rank * ws.size(), d.rank);
  for (size_t k = 0; k < ws.size(); ++k) {
    RatMatrix m = matrix_on_v(d, ws[k]);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j)
        stack.at(k * d.rank + i, j) =
            m.at(i, j) - (i == j ? Rational(1) : Rational(0));
  }
  return kernel(stack);
}

}  // namespace coxos
