#include "coxos/osalg.hpp"

#include <algorithm>
#include <thread>

namespace coxos {

RootCtx root_ctx(BoxPtr box, unsigned l_mask) {
  RootCtx ctx;
  ctx.box = box;
  ctx.l_mask = l_mask;
  const CoxeterDatum& d = box->datum();
  ctx.local_index.assign(d.n_pos, -1);
  for (int r = 0; r < d.n_pos; ++r) {
    bool supported = true;
    for (int i = 0; i < d.rank; ++i)
      if (d.roots[r][i] != 0 && !(l_mask & (1u << i))) supported = false;
    if (!supported) continue;
    ctx.local_index[r] = (int)ctx.roots.size();
    ctx.roots.push_back(r);
    ctx.vecs.push_back(d.roots[r]);
  }
  ctx.count = (int)ctx.roots.size();
  ctx.rank = std::popcount(l_mask);
  COXOS_CHECK(ctx.count <= 62, "arrangement too large for mask encoding");
  return ctx;
}

namespace {

// reduced echelon rows over the rational span of some root vectors
struct Echelon {
  std::vector<std::vector<Rational>> rows;  // each with leading 1
  std::vector<int> lead;

  bool reduce(std::vector<Rational>& v) const {  // true if v lands in span
    for (size_t i = 0; i < rows.size(); ++i) {
      if (v[lead[i]].is_zero()) continue;
      Rational f = v[lead[i]];
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
    }
    for (const Rational& q : v)
      if (!q.is_zero()) return false;
    return true;
  }

  bool contains(const std::vector<long long>& vec) const {
    std::vector<Rational> v(vec.begin(), vec.end());
    return reduce(v);
  }

  // returns false when the vector was already in the span
  bool insert(const std::vector<long long>& vec) {
    std::vector<Rational> v(vec.begin(), vec.end());
    if (reduce(v)) return false;
    int l = 0;
    while (v[l].is_zero()) ++l;
    Rational inv = Rational(1) / v[l];
    for (Rational& q : v) q *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][l].is_zero()) continue;
      Rational f = rows[i][l];
      for (size_t j = 0; j < v.size(); ++j) rows[i][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    lead.push_back(l);
    return true;
  }
};

// parity of the permutation sorting the sequence; 0 on repeated entries
int sort_sign(std::vector<int>& seq) {
  int sign = 1;
  for (size_t i = 1; i < seq.size(); ++i)
    for (size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  return sign;
}

std::vector<int> mask_bits(uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace

NBCStructure::NBCStructure(RootCtx ctx) : ctx_(std::move(ctx)) {
  levels_.resize(ctx_.rank + 1);
  // depth-first enumeration; a prefix stays NBC iff no root larger than the
  // last inserted one falls into its span
  struct Node {
    uint64_t mask;
    int last;
    Echelon ech;
    uint64_t in_span;
  };
  std::vector<Node> stack;
  stack.push_back({0, -1, Echelon{}, 0});
  levels_[0].basis.push_back(0);
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    int deg = std::popcount(node.mask);
    if (deg == ctx_.rank) continue;
    for (int r = ctx_.count - 1; r > node.last; --r) {
      if (node.in_span & (1ull << r)) continue;
      Echelon ech = node.ech;
      COXOS_CHECK(ech.insert(ctx_.vecs[r]), "nbc: span bookkeeping broken");
      uint64_t in_span = node.in_span | (1ull << r);
      bool reject = false;
      for (int r2 = 0; r2 < ctx_.count; ++r2) {
        if (in_span & (1ull << r2)) continue;
        if (ech.contains(ctx_.vecs[r2])) {
          if (r2 > r) {
            reject = true;
            break;
          }
          in_span |= 1ull << r2;
        }
      }
      if (reject) continue;
      uint64_t mask = node.mask | (1ull << r);
      levels_[deg + 1].basis.push_back(mask);
      stack.push_back({mask, r, std::move(ech), in_span});
    }
  }
  for (auto& level : levels_) {
    std::sort(level.basis.begin(), level.basis.end(),
              [](uint64_t a, uint64_t b) { return mask_lex_greater(b, a); });
    for (size_t i = 0; i < level.basis.size(); ++i)
      level.index_of[level.basis[i]] = (int)i;
  }
}

bool NBCStructure::is_nbc(int degree, uint64_t mask) const {
  return levels_[degree].index_of.count(mask) != 0;
}

const NBCStructure::Rewrite& NBCStructure::rewrite_of(uint64_t a_mask) {
  auto it = rewrites_.find(a_mask);
  if (it != rewrites_.end()) return it->second;

  std::vector<int> idx = mask_bits(a_mask);
  int d = (int)idx.size();

  // lexicographically first flagged subsequence plus its smallest witness
  std::vector<int> bc;
  int witness = -1;
  std::vector<int> chosen;
  auto search = [&](auto&& self, size_t start, Echelon& ech) -> bool {
    for (size_t p = start; p < idx.size(); ++p) {
      int r = idx[p];
      if (ech.contains(ctx_.vecs[r])) {
        // dependent tail: any larger root witnesses
        if (r + 1 < ctx_.count) {
          chosen.push_back(r);
          bc = chosen;
          witness = r + 1;
          return true;
        }
        continue;
      }
      Echelon ech2 = ech;
      ech2.insert(ctx_.vecs[r]);
      chosen.push_back(r);
      for (int r2 = r + 1; r2 < ctx_.count; ++r2)
        if (ech2.contains(ctx_.vecs[r2])) {
          bc = chosen;
          witness = r2;
          chosen.pop_back();
          return true;
        }
      if (self(self, p + 1, ech2)) {
        chosen.pop_back();
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  Echelon root_ech;
  bool found = search(search, 0, root_ech);
  COXOS_CHECK(found, "rewrite requested for an NBC monomial");

  int q = (int)bc.size();
  uint64_t bc_mask = 0;
  for (int b : bc) bc_mask |= 1ull << b;
  std::vector<int> rest = mask_bits(a_mask & ~bc_mask);

  std::vector<int> tau_seq = bc;
  tau_seq.insert(tau_seq.end(), rest.begin(), rest.end());
  int tau = sort_sign(tau_seq);
  COXOS_CHECK(tau != 0, "rewrite: malformed monomial");

  Rewrite rw;
  for (int k = 1; k <= q; ++k) {
    // drop the k-th member of the broken circuit, append the witness
    std::vector<int> replaced;
    for (int i = 0; i < q; ++i)
      if (i != k - 1) replaced.push_back(bc[i]);
    replaced.push_back(witness);
    std::vector<int> seq = replaced;
    seq.insert(seq.end(), rest.begin(), rest.end());
    int rho = sort_sign(seq);
    if (rho == 0) continue;  // witness already a factor elsewhere
    int sign = tau * rho * (((q + k) % 2 == 0) ? 1 : -1);
    uint64_t mask = 0;
    for (int v : seq) mask |= 1ull << v;
    rw.terms.push_back({mask, sign});
  }
  return rewrites_.emplace(a_mask, std::move(rw)).first->second;
}

Rational NBCStructure::coeff(int degree, uint64_t a_mask, uint64_t b_mask) {
  if (mask_lex_greater(a_mask, b_mask)) return Rational(0);
  const Level& level = levels_[degree];
  auto hit = level.index_of.find(a_mask);
  if (hit != level.index_of.end())
    return a_mask == b_mask ? Rational(1) : Rational(0);

  uint64_t key =
      (a_mask << 18) | ((uint64_t)degree << 14) | level.index_of.at(b_mask);
  auto mit = memo_.find(key);
  if (mit != memo_.end()) return mit->second;

  Rational sum = 0;
  const Rewrite& rw = rewrite_of(a_mask);
  for (const auto& [mask, sign] : rw.terms) {
    COXOS_CHECK(mask_lex_greater(mask, a_mask), "rewrite must increase");
    Rational c = coeff(degree, mask, b_mask);
    if (!c.is_zero()) sum += Rational(sign) * c;
  }
  memo_.emplace(key, sum);
  return sum;
}

Monomial NBCStructure::act(const Monomial& m, uint32_t g) const {
  const GroupBox& box = *ctx_.box;
  const uint8_t* p = box.perm(g);
  std::vector<int> seq;
  uint64_t rest = m.mask;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    unsigned im = p[ctx_.roots[i]];
    if (im >= (unsigned)box.datum().n_pos) im -= box.datum().n_pos;
    int loc = ctx_.local_index[im];
    COXOS_CHECK(loc >= 0, "action does not preserve the arrangement");
    seq.push_back(loc);
  }
  int s = sort_sign(seq);
  COXOS_CHECK(s != 0, "action produced a repeated factor");
  Monomial out;
  out.sign = m.sign * s;
  for (int v : seq) out.mask |= 1ull << v;
  return out;
}

Rational NBCStructure::trace(int degree, uint32_t g, bool early_cutoff) {
  Rational tr = 0;
  for (uint64_t b : levels_[degree].basis) {
    Monomial moved = act({b, 1}, g);
    if (moved.mask == b) {
      tr += Rational(moved.sign);
      continue;
    }
    if (early_cutoff && mask_lex_greater(moved.mask, b)) continue;
    Rational c = coeff(degree, moved.mask, b);
    if (!c.is_zero()) tr += Rational(moved.sign) * c;
  }
  return tr;
}

std::vector<long long> os_dimension_oracle(const RootCtx& ctx) {
  COXOS_CHECK(ctx.count <= 12, "dimension oracle: arrangement too large");
  std::vector<long long> dims;
  int n = ctx.count;

  // dependent subsets once
  std::vector<uint64_t> dependent;
  for (uint64_t t = 1; t < (1ull << n); ++t) {
    std::vector<int> bits = mask_bits(t);
    Echelon ech;
    bool dep = false;
    for (int b : bits)
      if (!ech.insert(ctx.vecs[b])) dep = true;
    if (dep) dependent.push_back(t);
  }

  for (int d = 0; d <= ctx.rank; ++d) {
    // all degree-d monomials
    std::vector<uint64_t> monos;
    std::vector<int> comb(d);
    auto rec = [&](auto&& self, int pos, int from, uint64_t mask) -> void {
      if (pos == d) {
        monos.push_back(mask);
        return;
      }
      for (int i = from; i < n; ++i)
        self(self, pos + 1, i + 1, mask | (1ull << i));
    };
    rec(rec, 0, 0, 0);
    std::map<uint64_t, int> mono_index;
    for (size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = (int)i;

    // ideal relations in degree d: boundaries of dependent sets times
    // disjoint monomials
    std::vector<std::vector<Rational>> rel_rows;
    for (uint64_t t : dependent) {
      std::vector<int> tb = mask_bits(t);
      int k = (int)tb.size();
      if (k - 1 > d) continue;
      int extra = d - (k - 1);
      std::vector<int> pool = mask_bits(~t & ((1ull << n) - 1));
      std::vector<int> pick(extra);
      auto rec2 = [&](auto&& self, int pos, int from) -> void {
        if (pos == extra) {
          std::vector<Rational> row(monos.size());
          for (int i = 1; i <= k; ++i) {
            std::vector<int> seq;
            for (int j = 0; j < k; ++j)
              if (j != i - 1) seq.push_back(tb[j]);
            for (int j = 0; j < extra; ++j) seq.push_back(pick[j]);
            int s = sort_sign(seq);
            if (s == 0) continue;
            uint64_t mask = 0;
            for (int v : seq) mask |= 1ull << v;
            row[mono_index.at(mask)] +=
                Rational(((i % 2) ? -1 : 1) * s);
          }
          rel_rows.push_back(std::move(row));
          return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
          pick[pos] = pool[i];
          self(self, pos + 1, (int)i + 1);
        }
      };
      rec2(rec2, 0, 0);
    }

    RatMatrix rel(rel_rows.size(), monos.size());
    for (size_t i = 0; i < rel_rows.size(); ++i)
      for (size_t j = 0; j < monos.size(); ++j) rel.at(i, j) = rel_rows[i][j];
    dims.push_back((long long)monos.size() - (long long)rank(rel));
  }
  return dims;
}

OracleExpansion oracle_expand(NBCStructure& nbc, int degree) {
  const RootCtx& ctx = nbc.ctx();
  COXOS_CHECK(ctx.count <= 12, "oracle expansion: arrangement too large");
  int n = ctx.count;
  const std::vector<uint64_t>& basis = nbc.basis(degree);

  std::vector<uint64_t> monos;
  auto rec = [&](auto&& self, int pos, int from, uint64_t mask, int d) -> void {
    if (d == 0) {
      monos.push_back(mask);
      return;
    }
    for (int i = from; i < n; ++i)
      self(self, pos + 1, i + 1, mask | (1ull << i), d - 1);
  };
  rec(rec, 0, 0, 0, degree);

  // order columns with non-NBC monomials first so the pivots avoid the basis
  std::vector<uint64_t> cols;
  for (uint64_t m : monos)
    if (!nbc.is_nbc(degree, m)) cols.push_back(m);
  size_t non_nbc = cols.size();
  for (uint64_t m : basis) cols.push_back(m);
  std::map<uint64_t, int> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = (int)i;

  std::vector<uint64_t> dependent;
  for (uint64_t t = 1; t < (1ull << n); ++t) {
    std::vector<int> bits = mask_bits(t);
    if ((int)bits.size() - 1 > degree) continue;
    Echelon ech;
    bool dep = false;
    for (int b : bits)
      if (!ech.insert(ctx.vecs[b])) dep = true;
    if (dep) dependent.push_back(t);
  }

  std::vector<std::vector<Rational>> rel_rows;
  for (uint64_t t : dependent) {
    std::vector<int> tb = mask_bits(t);
    int k = (int)tb.size();
    int extra = degree - (k - 1);
    if (extra < 0) continue;
    std::vector<int> pool = mask_bits(~t & ((1ull << n) - 1));
    std::vector<int> pick(extra);
    auto rec2 = [&](auto&& self, int pos, int from) -> void {
      if (pos == extra) {
        std::vector<Rational> row(cols.size());
        for (int i = 1; i <= k; ++i) {
          std::vector<int> seq;
          for (int j = 0; j < k; ++j)
            if (j != i - 1) seq.push_back(tb[j]);
          for (int j = 0; j < extra; ++j) seq.push_back(pick[j]);
          int s = sort_sign(seq);
          if (s == 0) continue;
          uint64_t mask = 0;
          for (int v : seq) mask |= 1ull << v;
          row[col_of.at(mask)] += Rational(((i % 2) ? -1 : 1) * s);
        }
        rel_rows.push_back(std::move(row));
        return;
      }
      for (size_t i = from; i < pool.size(); ++i) {
        pick[pos] = pool[i];
        self(self, pos + 1, (int)i + 1);
      }
    };
    rec2(rec2, 0, 0);
  }

  RatMatrix rel(rel_rows.size(), cols.size());
  for (size_t i = 0; i < rel_rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) rel.at(i, j) = rel_rows[i][j];
  std::vector<size_t> pivots = rref(rel);
  COXOS_CHECK(pivots.size() == non_nbc,
              "oracle: NBC set is not a basis of the quotient");
  for (size_t p : pivots)
    COXOS_CHECK(p < non_nbc, "oracle: pivot fell on an NBC column");

  OracleExpansion out;
  out.monos = monos;
  for (uint64_t m : monos) {
    std::vector<Rational> v(cols.size());
    v[col_of.at(m)] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (v[pivots[i]].is_zero()) continue;
      Rational f = v[pivots[i]];
      for (size_t j = 0; j < cols.size(); ++j) v[j] -= f * rel.at(i, j);
    }
    std::vector<Rational> coeffs(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) coeffs[j] = v[non_nbc + j];
    out.coeffs.push_back(std::move(coeffs));
  }
  return out;
}

namespace {

std::vector<Rational> per_class_traces(NBCStructure& nbc, const Grp& grp,
                                       bool top_only, int jobs) {
  std::vector<int> degrees;
  if (top_only)
    degrees.push_back(nbc.top_degree());
  else
    for (int d = 0; d <= nbc.top_degree(); ++d) degrees.push_back(d);

  size_t n = grp.classes.size();
  std::vector<Rational> out(n);
  auto run = [&](NBCStructure& local, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      Rational v = 0;
      for (int d : degrees) v += local.trace(d, grp.classes[i].rep);
      out[i] = v;
    }
  };
  if (jobs <= 1 || n <= 1) {
    run(nbc, 0, n);
  } else {
    size_t t = std::min((size_t)jobs, n);
    std::vector<std::thread> threads;
    std::vector<std::unique_ptr<NBCStructure>> locals;
    for (size_t k = 1; k < t; ++k)
      locals.push_back(std::make_unique<NBCStructure>(nbc.ctx()));
    size_t chunk = (n + t - 1) / t;
    for (size_t k = 1; k < t; ++k) {
      size_t b = k * chunk, e = std::min(n, (k + 1) * chunk);
      if (b >= e) continue;
      threads.emplace_back([&, k, b, e] { run(*locals[k - 1], b, e); });
    }
    run(nbc, 0, std::min(chunk, n));
    for (auto& th : threads) th.join();
  }
  return out;
}

}  // namespace

std::vector<Rational> omega_tilde(NBCStructure& nbc, const Grp& n_grp,
                                  int jobs) {
  return per_class_traces(nbc, n_grp, /*top_only=*/true, jobs);
}

std::vector<Rational> omega_character(NBCStructure& nbc, const Grp& grp,
                                      bool top_only, int jobs) {
  return per_class_traces(nbc, grp, top_only, jobs);
}

std::vector<Rational> omega_degrees(NBCStructure& nbc, uint32_t g) {
  std::vector<Rational> out;
  for (int d = 0; d <= nbc.top_degree(); ++d) out.push_back(nbc.trace(d, g));
  return out;
}

namespace {

Rational restriction_det(const CoxeterDatum& d,
                         const std::vector<std::vector<Rational>>& basis,
                         const Element& z) {
  size_t k = basis.size();
  if (k == 0) return Rational(1);
  RatMatrix m = matrix_on_v(d, z);
  // solve B R = M B columnwise
  RatMatrix aug(d.rank, k + k);
  for (size_t j = 0; j < k; ++j)
    for (int i = 0; i < d.rank; ++i) aug.at(i, j) = basis[j][i];
  for (size_t j = 0; j < k; ++j)
    for (int i = 0; i < d.rank; ++i) {
      Rational v = 0;
      for (int t = 0; t < d.rank; ++t) v += m.at(i, t) * basis[j][t];
      aug.at(i, k + j) = v;
    }
  std::vector<size_t> pivots = rref(aug);
  COXOS_CHECK(pivots.size() == k, "restriction: basis not independent");
  for (size_t p : pivots)
    COXOS_CHECK(p < k, "restriction: element does not preserve the space");
  RatMatrix r(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) r.at(i, j) = aug.at(i, k + j);
  return determinant(r);
}

}  // namespace

std::vector<Rational> alpha_character(const Grp& l_grp, const Grp& n_grp) {
  const GroupBox& box = *l_grp.box;
  const CoxeterDatum& d = box.datum();
  std::vector<Element> gens;
  for (uint32_t g : l_grp.gens) gens.push_back(box.element(g));
  std::vector<std::vector<Rational>> basis = fixed_space(d, gens);
  std::vector<Rational> out;
  for (const ConjClass& c : n_grp.classes) {
    Rational det = restriction_det(d, basis, box.element(c.rep));
    COXOS_CHECK(det == Rational(1) || det == Rational(-1),
                "determinant character must be a sign");
    out.push_back(det);
  }
  return out;
}

Rational alpha_w(const GroupBox& box, uint32_t w, uint32_t z) {
  COXOS_CHECK(box.mul(w, z) == box.mul(z, w), "alpha_w: z must centralize w");
  std::vector<std::vector<Rational>> basis =
      fixed_space(box.datum(), box.element(w));
  return restriction_det(box.datum(), basis, box.element(z));
}

std::vector<Rational> sign_character(const Grp& grp) {
  std::vector<Rational> out;
  for (const ConjClass& c : grp.classes)
    out.push_back(Rational(grp.box->length(c.rep) % 2 == 0 ? 1 : -1));
  return out;
}

}  // namespace coxos
