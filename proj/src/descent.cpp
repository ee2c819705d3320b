#include "coxos/descent.hpp"

#include <algorithm>
#include <numeric>

namespace coxos {

SubsetIndex::SubsetIndex(unsigned l_mask_) : l_mask(l_mask_) {
  std::vector<int> bits;
  for (int i = 0; i < 32; ++i)
    if (l_mask & (1u << i)) bits.push_back(i);
  size_t count = 1u << bits.size();
  masks.resize(count);
  for (size_t k = 0; k < count; ++k) {
    unsigned m = 0;
    for (size_t b = 0; b < bits.size(); ++b)
      if (k & (1u << b)) m |= 1u << bits[b];
    masks[k] = m;
    index_of_map[m] = (int)k;
  }
}

namespace {

// for each generator s, the generator its reflection is carried to by
// conjugation with w (or -1 when the image is not simple)
void simple_images(const GroupBox& box, uint32_t w, int* img) {
  const CoxeterDatum& d = box.datum();
  const uint8_t* p = box.perm(w);
  for (int s = 0; s < d.rank; ++s) {
    unsigned im = p[d.gen_root[s]];
    if (im >= (unsigned)d.n_pos) im -= d.n_pos;
    img[s] = -1;
    for (int t = 0; t < d.rank; ++t)
      if ((unsigned)d.gen_root[t] == im) img[s] = t;
  }
}

}  // namespace

DescentMatrix descent_matrix(const Grp& l_grp) {
  COXOS_CHECK(l_grp.parabolic_mask >= 0, "descent_matrix: not a parabolic");
  const GroupBox& box = *l_grp.box;
  unsigned l_mask = (unsigned)l_grp.parabolic_mask;
  DescentMatrix dm{SubsetIndex(l_mask), {}, {}};
  size_t sz = dm.subsets.size();

  // acc[K][A]: elements of X_K whose simple-conjugation set meets K in A
  std::vector<uint64_t> acc(sz * sz, 0);
  int img[32];
  for (uint32_t w : l_grp.members) {
    unsigned dmask = box.descents(w) & l_mask;
    unsigned free_mask = l_mask & ~dmask;
    unsigned ok = 0;
    simple_images(box, w, img);
    for (int s = 0; s < box.datum().rank; ++s)
      if ((l_mask & (1u << s)) && img[s] >= 0 && (l_mask & (1u << img[s])))
        ok |= 1u << s;
    // w lies in X_K exactly for K avoiding the descents of w
    unsigned k = free_mask;
    for (;;) {
      int ki = dm.subsets.index_of(k);
      int ai = dm.subsets.index_of(k & ok);
      acc[(size_t)ki * sz + ai]++;
      if (k == 0) break;
      k = (k - 1) & free_mask;
    }
  }

  dm.m = RatMatrix(sz, sz);
  for (size_t ki = 0; ki < sz; ++ki) {
    unsigned kmask = dm.subsets.masks[ki];
    unsigned a = kmask;
    for (;;) {
      uint64_t cnt = acc[ki * sz + dm.subsets.index_of(a)];
      if (cnt) {
        // contributes to every J inside A
        unsigned j = a;
        for (;;) {
          dm.m.at(ki, dm.subsets.index_of(j)) += Rational((long long)cnt);
          if (j == 0) break;
          j = (j - 1) & a;
        }
      }
      if (a == 0) break;
      a = (a - 1) & kmask;
    }
  }

  // invert by forward substitution in (popcount, value) order; the matrix is
  // triangular with respect to subset inclusion
  std::vector<size_t> order(sz);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    int pa = std::popcount(dm.subsets.masks[a]);
    int pb = std::popcount(dm.subsets.masks[b]);
    if (pa != pb) return pa < pb;
    return dm.subsets.masks[a] < dm.subsets.masks[b];
  });
  dm.n = RatMatrix(sz, sz);
  for (size_t col = 0; col < sz; ++col) {
    // solve M y = e_col in the permuted triangular order
    std::vector<Rational> y(sz);
    for (size_t oi = 0; oi < sz; ++oi) {
      size_t row = order[oi];
      Rational rhs = row == col ? Rational(1) : Rational(0);
      for (size_t oj = 0; oj < oi; ++oj) {
        size_t k = order[oj];
        if (!dm.m.at(row, k).is_zero() && !y[k].is_zero())
          rhs -= dm.m.at(row, k) * y[k];
      }
      COXOS_CHECK(!dm.m.at(row, row).is_zero(), "descent matrix singular");
      y[row] = rhs / dm.m.at(row, row);
    }
    for (size_t row = 0; row < sz; ++row) dm.n.at(row, col) = y[row];
  }
  return dm;
}

Gav transversal_sum(const Grp& l_grp, unsigned j_mask) {
  Gav v;
  v.box = l_grp.box;
  for (uint32_t x : parabolic_transversal(l_grp, j_mask))
    v.c.emplace(x, Rational(1));
  return v;
}

Gav quasi_idempotent(const Grp& l_grp, const DescentMatrix& dm,
                     unsigned j_mask) {
  const GroupBox& box = *l_grp.box;
  unsigned l_mask = (unsigned)l_grp.parabolic_mask;
  int j = dm.subsets.index_of(j_mask);
  // coefficient of w depends only on its descent set within L
  size_t sz = dm.subsets.size();
  std::vector<Rational> by_descents(sz);
  for (size_t di = 0; di < sz; ++di) {
    unsigned dmask = dm.subsets.masks[di];
    unsigned free_mask = l_mask & ~dmask;
    Rational sum = 0;
    unsigned k = free_mask;
    for (;;) {
      sum += dm.n.at(j, dm.subsets.index_of(k));
      if (k == 0) break;
      k = (k - 1) & free_mask;
    }
    by_descents[di] = sum;
  }
  Gav v;
  v.box = l_grp.box;
  for (uint32_t w : l_grp.members) {
    Rational q = by_descents[dm.subsets.index_of(box.descents(w) & l_mask)];
    if (!q.is_zero()) v.c.emplace(w, q);
  }
  return v;
}

namespace {

bool mask_list_lex_less(unsigned a, unsigned b) {
  while (a && b) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

std::vector<Shape> shapes(const Grp& w) {
  const GroupBox& box = *w.box;
  int n = box.datum().rank;
  size_t count = 1u << n;
  std::vector<int> dsu(count);
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](int a) {
    while (dsu[a] != a) a = dsu[a] = dsu[dsu[a]];
    return a;
  };

  int img[32];
  for (uint32_t s = 0; s < box.size(); ++s) {
    simple_images(box, s, img);
    unsigned good = 0;
    for (int i = 0; i < n; ++i)
      if (img[i] >= 0) good |= 1u << i;
    unsigned k = good;
    for (;;) {
      unsigned target = 0;
      for (int i = 0; i < n; ++i)
        if (k & (1u << i)) target |= 1u << img[i];
      int a = find((int)k), b = find((int)target);
      if (a != b) dsu[a] = b;
      if (k == 0) break;
      k = (k - 1) & good;
    }
  }

  std::map<int, std::vector<unsigned>> groups;
  for (unsigned m = 0; m < count; ++m) groups[find((int)m)].push_back(m);
  std::vector<Shape> out;
  for (auto& [root, members] : groups) {
    Shape s;
    s.members = members;
    std::sort(s.members.begin(), s.members.end(), mask_list_lex_less);
    s.rep = s.members.front();
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) {
    if (std::popcount(a.rep) != std::popcount(b.rep))
      return std::popcount(a.rep) < std::popcount(b.rep);
    return mask_list_lex_less(a.rep, b.rep);
  });
  return out;
}

std::vector<Rational> shape_idempotent_xcoords(const DescentMatrix& dm,
                                               const Shape& shape) {
  size_t sz = dm.subsets.size();
  std::vector<Rational> xc(sz);
  for (unsigned l : shape.members) {
    int li = dm.subsets.index_of(l);
    for (size_t k = 0; k < sz; ++k) xc[k] += dm.n.at(li, k);
  }
  return xc;
}

Gav gav_from_xcoords(const Grp& w, const DescentMatrix& dm,
                     const std::vector<Rational>& xc) {
  const GroupBox& box = *w.box;
  unsigned l_mask = (unsigned)w.parabolic_mask;
  size_t sz = dm.subsets.size();
  std::vector<Rational> by_descents(sz);
  for (size_t di = 0; di < sz; ++di) {
    unsigned free_mask = l_mask & ~dm.subsets.masks[di];
    Rational sum = 0;
    unsigned k = free_mask;
    for (;;) {
      sum += xc[dm.subsets.index_of(k)];
      if (k == 0) break;
      k = (k - 1) & free_mask;
    }
    by_descents[di] = sum;
  }
  Gav v;
  v.box = w.box;
  for (uint32_t s : w.members) {
    Rational q = by_descents[dm.subsets.index_of(box.descents(s) & l_mask)];
    if (!q.is_zero()) v.c.emplace(s, q);
  }
  return v;
}

namespace {

int128 lcm128(int128 a, int128 b) { return checked_mul(a / gcd128(a, b), b); }

struct ScaledVec {
  int128 denom = 1;
  std::vector<uint32_t> support;
  std::vector<int128> value;
};

ScaledVec scale_gav(const Gav& g) {
  ScaledVec v;
  for (auto& [s, q] : g.c) v.denom = lcm128(v.denom, q.den());
  v.support.reserve(g.c.size());
  v.value.reserve(g.c.size());
  for (auto& [s, q] : g.c) {
    v.support.push_back(s);
    v.value.push_back(checked_mul(q.num(), v.denom / q.den()));
  }
  return v;
}

Gav unscale(BoxPtr box, const std::vector<int128>& acc, int128 denom) {
  Gav r;
  r.box = box;
  for (uint32_t s = 0; s < acc.size(); ++s)
    if (acc[s] != 0) r.c.emplace(s, Rational(acc[s], denom));
  return r;
}

Gav gav_mul_table(const Gav& a, const Gav& b) {
  const GroupBox& box = *a.box;
  const std::vector<uint16_t>& mt = box.mult_table();
  ScaledVec av = scale_gav(a), bv = scale_gav(b);
  std::vector<int128> acc(box.size(), 0);
  size_t n = box.size();
  for (size_t i = 0; i < av.support.size(); ++i) {
    const uint16_t* row = mt.data() + (size_t)av.support[i] * n;
    int128 x = av.value[i];
    for (size_t j = 0; j < bv.support.size(); ++j)
      acc[row[bv.support[j]]] = checked_add(acc[row[bv.support[j]]],
                                            checked_mul(x, bv.value[j]));
  }
  return unscale(a.box, acc, checked_mul(av.denom, bv.denom));
}

Gav gav_mul_translate(const Gav& a, const Gav& b) {
  const GroupBox& box = *a.box;
  size_t n = box.size();
  COXOS_CHECK(n <= 25000, "convolution too large; use descent coordinates");
  int rank = box.datum().rank;

  // spanning tree of the right Cayley graph
  std::vector<std::vector<std::pair<uint32_t, int>>> children(n);
  for (uint32_t s = 0; s < n; ++s) {
    if (s == box.identity()) continue;
    uint32_t p = box.parent(s);
    int g = -1;
    for (int i = 0; i < rank; ++i)
      if (box.right_gen(p, i) == s) {
        g = i;
        break;
      }
    COXOS_CHECK(g >= 0, "translate: broken parent link");
    children[p].push_back({s, g});
  }

  ScaledVec av = scale_gav(a), bv = scale_gav(b);
  std::vector<int128> cur(n, 0);  // a translated to the current tree node
  for (size_t i = 0; i < av.support.size(); ++i) cur[av.support[i]] = av.value[i];
  std::vector<int128> bdense(n, 0);
  for (size_t i = 0; i < bv.support.size(); ++i)
    bdense[bv.support[i]] = bv.value[i];
  std::vector<int128> acc(n, 0);

  auto translate = [&](int g) {
    // right translation by an involution: swap matched pairs
    for (uint32_t h = 0; h < n; ++h) {
      uint32_t k = box.right_gen(h, g);
      if (h < k) std::swap(cur[h], cur[k]);
    }
  };

  struct Frame {
    uint32_t node;
    size_t next_child;
  };
  std::vector<Frame> stack{{box.identity(), 0}};
  if (bdense[box.identity()] != 0) {
    int128 w = bdense[box.identity()];
    for (uint32_t h = 0; h < n; ++h)
      if (cur[h]) acc[h] = checked_add(acc[h], checked_mul(w, cur[h]));
  }
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_child == children[f.node].size()) {
      if (stack.size() > 1) {
        uint32_t p = box.parent(f.node);
        int g = -1;
        for (int i = 0; i < rank; ++i)
          if (box.right_gen(p, i) == f.node) g = i;
        translate(g);
      }
      stack.pop_back();
      continue;
    }
    auto [child, g] = children[f.node][f.next_child++];
    translate(g);
    if (bdense[child] != 0) {
      int128 w = bdense[child];
      for (uint32_t h = 0; h < n; ++h)
        if (cur[h]) acc[h] = checked_add(acc[h], checked_mul(w, cur[h]));
    }
    stack.push_back({child, 0});
  }
  return unscale(a.box, acc, checked_mul(av.denom, bv.denom));
}

}  // namespace

Gav gav_mul(const Gav& a, const Gav& b) {
  COXOS_CHECK(a.box == b.box, "gav_mul: different groups");
  if (a.box->size() <= 4000) return gav_mul_table(a, b);
  return gav_mul_translate(a, b);
}

SolomonTable solomon_table(const Grp& w) {
  const GroupBox& box = *w.box;
  COXOS_CHECK(w.size() == box.size(), "solomon_table: whole group expected");
  int n = box.datum().rank;
  SolomonTable t{SubsetIndex((1u << n) - 1), {}};
  size_t sz = t.subsets.size();
  t.counts.assign(sz * sz * sz, 0);

  int img[32];
  std::vector<unsigned> imgmask(sz);
  for (uint32_t d = 0; d < box.size(); ++d) {
    unsigned dl = box.descents(d);
    unsigned dr = box.descents(box.inv(d));
    unsigned jfree = ~dl & (sz - 1);
    unsigned kfree = ~dr & (sz - 1);
    simple_images(box, d, img);
    // image masks for all J avoiding the left descents
    unsigned j = jfree;
    for (;;) {
      unsigned m = 0;
      unsigned rest = j;
      while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        if (img[b] >= 0) m |= 1u << img[b];
      }
      imgmask[j] = m;
      if (j == 0) break;
      j = (j - 1) & jfree;
    }
    j = jfree;
    for (;;) {
      unsigned k = kfree;
      size_t base = (size_t)j * sz;
      for (;;) {
        t.counts[(base + k) * sz + (imgmask[j] & k)]++;
        if (k == 0) break;
        k = (k - 1) & kfree;
      }
      if (j == 0) break;
      j = (j - 1) & jfree;
    }
  }
  return t;
}

std::vector<Rational> descent_product(const SolomonTable& t,
                                      const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  size_t sz = t.subsets.size();
  std::vector<Rational> out(sz);
  for (size_t j = 0; j < sz; ++j) {
    if (a[j].is_zero()) continue;
    for (size_t k = 0; k < sz; ++k) {
      if (b[k].is_zero()) continue;
      Rational f = a[j] * b[k];
      for (size_t m = 0; m < sz; ++m) {
        uint32_t c = t.count((int)j, (int)k, (int)m);
        if (c) out[m] += f * Rational((long long)c);
      }
    }
  }
  return out;
}

Rational rho_lambda_direct(const Gav& e_lambda, uint32_t w, const Grp& scope) {
  const GroupBox& box = *e_lambda.box;
  COXOS_CHECK(scope.size() <= 2000, "rho_lambda_direct: group too large");
  COXOS_CHECK(scope.contains(w), "rho_lambda_direct: element outside scope");
  Rational tr = 0;
  uint32_t winv = box.inv(w);
  for (uint32_t g : scope.members) {
    uint32_t y = box.mul(box.mul(g, winv), box.inv(g));
    auto it = e_lambda.c.find(y);
    if (it != e_lambda.c.end()) tr += it->second;
  }
  return tr;
}

namespace {

struct WnParts {
  uint32_t w;
  uint32_t n;
};

WnParts split_normalizer_element(const GroupBox& box, unsigned l_mask,
                                 uint32_t g) {
  auto [u, x] = parabolic_coordinates(box, g, l_mask);
  std::vector<uint32_t> img_ok;  // x must stabilize L
  const CoxeterDatum& d = box.datum();
  for (int s = 0; s < d.rank; ++s) {
    if (!(l_mask & (1u << s))) continue;
    unsigned im = box.perm(x)[d.gen_root[s]];
    if (im >= (unsigned)d.n_pos) im -= d.n_pos;
    bool ok = false;
    for (int t = 0; t < d.rank; ++t)
      if ((l_mask & (1u << t)) && (unsigned)d.gen_root[t] == im) ok = true;
    COXOS_CHECK(ok, "element is not in the parabolic normalizer");
  }
  return {u, x};
}

}  // namespace

std::vector<Rational> rho_tilde(const Grp& l_grp, const DescentMatrix& dm,
                                const Grp& n_grp) {
  const GroupBox& box = *l_grp.box;
  unsigned l_mask = (unsigned)l_grp.parabolic_mask;
  size_t sz = dm.subsets.size();
  int lrow = dm.subsets.index_of(l_mask);

  std::vector<Rational> values;
  std::vector<uint64_t> hist(sz);
  for (const ConjClass& cls : n_grp.classes) {
    auto [w, nn] = split_normalizer_element(box, l_mask, cls.rep);
    uint32_t winv = box.inv(w);
    uint32_t ninv = box.inv(nn);

    // orbit of w^-1 under the twisted action y -> n z^-1 n^-1 y z
    std::fill(hist.begin(), hist.end(), 0);
    std::vector<uint8_t> seen(box.size(), 0);
    uint64_t orbit_size = 0;
    for (uint32_t z : l_grp.members) {
      uint32_t y = box.mul(
          box.mul(box.mul(box.mul(nn, box.inv(z)), ninv), winv), z);
      if (seen[y]) continue;
      seen[y] = 1;
      ++orbit_size;
      hist[dm.subsets.index_of(box.descents(y) & l_mask)]++;
    }
    COXOS_CHECK(l_grp.size() % orbit_size == 0, "orbit size must divide |W_L|");
    Rational centralizer_order((long long)(l_grp.size() / orbit_size));

    Rational sum = 0;
    for (size_t ji = 0; ji < sz; ++ji) {
      if (dm.n.at(lrow, ji).is_zero()) continue;
      unsigned jmask = dm.subsets.masks[ji];
      uint64_t count = 0;  // |orbit cap X_J^L|
      unsigned free_mask = l_mask & ~jmask;
      unsigned a = free_mask;
      for (;;) {
        count += hist[dm.subsets.index_of(a)];
        if (a == 0) break;
        a = (a - 1) & free_mask;
      }
      sum += dm.n.at(lrow, ji) * Rational((long long)count);
    }
    Rational v = centralizer_order * sum;
    COXOS_CHECK(v.is_integer(), "extension character must be integral");
    values.push_back(v);
  }
  return values;
}

std::vector<Rational> rho_tilde_oracle(const Grp& l_grp,
                                       const DescentMatrix& dm,
                                       const Grp& n_grp) {
  const GroupBox& box = *l_grp.box;
  COXOS_CHECK(l_grp.size() <= 2000, "rho_tilde_oracle: subgroup too large");
  unsigned l_mask = (unsigned)l_grp.parabolic_mask;
  Gav e = quasi_idempotent(l_grp, dm, l_mask);

  std::vector<Rational> values;
  for (const ConjClass& cls : n_grp.classes) {
    auto [w, nn] = split_normalizer_element(box, l_mask, cls.rep);
    uint32_t winv = box.inv(w);
    uint32_t ninv = box.inv(nn);
    Rational tr = 0;
    for (uint32_t g : l_grp.members) {
      uint32_t y = box.mul(
          box.mul(box.mul(box.mul(nn, g), ninv), winv), box.inv(g));
      auto it = e.c.find(y);
      if (it != e.c.end()) tr += it->second;
    }
    values.push_back(tr);
  }
  return values;
}

}  // namespace coxos
