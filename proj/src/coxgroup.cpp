#include "coxos/coxgroup.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <unordered_map>

namespace coxos {

namespace {

uint64_t fnv1a(const uint8_t* p, size_t n) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

uint32_t GroupBox::find_slot(const uint8_t* p) const {
  uint64_t h = fnv1a(p, stride_) & slot_mask_;
  for (;;) {
    uint32_t s = slots_[h];
    if (s == 0) return UINT32_MAX;
    if (std::memcmp(perm(s - 1), p, stride_) == 0) return s - 1;
    h = (h + 1) & slot_mask_;
  }
}

uint32_t GroupBox::insert(const uint8_t* p) {
  uint32_t serial = (uint32_t)size_;
  arena_.insert(arena_.end(), p, p + stride_);
  ++size_;
  uint64_t h = fnv1a(p, stride_) & slot_mask_;
  while (slots_[h] != 0) h = (h + 1) & slot_mask_;
  slots_[h] = serial + 1;
  return serial;
}

GroupBox::GroupBox(CoxeterDatum datum, size_t cap) : datum_(std::move(datum)) {
  stride_ = datum_.n_pos;
  size_t slot_count = 4;
  while (slot_count < 4 * cap) slot_count <<= 1;
  slots_.assign(slot_count, 0);
  slot_mask_ = slot_count - 1;

  int n = datum_.rank;
  Element id = Element::identity(datum_.n_pos);
  insert(id.img.data());
  id_serial_ = 0;
  bfs_parent_.push_back(0);
  right_prod_.resize(n, UINT32_MAX);

  std::vector<uint8_t> buf(stride_);
  for (size_t q = 0; q < size_; ++q) {
    for (int i = 0; i < n; ++i) {
      const uint8_t* g = perm((uint32_t)q);
      const Element& s = datum_.simple_perm[i];
      for (size_t r = 0; r < stride_; ++r) buf[r] = (uint8_t)s.image(g[r]);
      uint32_t found = find_slot(buf.data());
      if (found == UINT32_MAX) {
        COXOS_CHECK(size_ < cap, "group too large for enumeration");
        found = insert(buf.data());
        bfs_parent_.push_back((uint32_t)q);
        right_prod_.resize((size_t)(found + 1) * n, UINT32_MAX);
      }
      right_prod_[q * n + i] = found;
    }
  }

  gen_serial_.resize(n);
  for (int i = 0; i < n; ++i) gen_serial_[i] = right_prod_[(size_t)id_serial_ * n + i];

  lengths_.resize(size_);
  descents_.resize(size_);
  orders_.resize(size_);
  inv_.resize(size_);
  for (uint32_t s = 0; s < size_; ++s) {
    Element e = element(s);
    lengths_[s] = (uint8_t)e.length();
    descents_[s] = (uint16_t)descent_mask(datum_, e);
    orders_[s] = (uint16_t)element_order(e);
    Element ei = inverse(e);
    uint32_t si = find_slot(ei.img.data());
    COXOS_CHECK(si != UINT32_MAX, "inverse not found");
    inv_[s] = si;
  }
}

Element GroupBox::element(uint32_t serial) const {
  Element e;
  const uint8_t* p = perm(serial);
  e.img.assign(p, p + stride_);
  return e;
}

uint32_t GroupBox::serial_of(const Element& e) const {
  uint32_t s = find_slot(e.img.data());
  COXOS_CHECK(s != UINT32_MAX, "element not in group");
  return s;
}

std::optional<uint32_t> GroupBox::try_serial(const Element& e) const {
  uint32_t s = find_slot(e.img.data());
  if (s == UINT32_MAX) return std::nullopt;
  return s;
}

uint32_t GroupBox::mul(uint32_t a, uint32_t b) const {
  const uint8_t* pa = perm(a);
  const uint8_t* pb = perm(b);
  unsigned n = (unsigned)stride_;
  uint8_t buf[128];
  for (unsigned i = 0; i < n; ++i) {
    unsigned j = pa[i];
    if (j < n)
      buf[i] = pb[j];
    else {
      unsigned k = pb[j - n] + n;
      buf[i] = (uint8_t)(k >= 2 * n ? k - 2 * n : k);
    }
  }
  uint32_t s = find_slot(buf);
  COXOS_CHECK(s != UINT32_MAX, "product not in group");
  return s;
}

const std::vector<uint16_t>& GroupBox::mult_table() const {
  COXOS_CHECK(size_ <= 4000, "multiplication table capped at 4000 elements");
  if (mult_table_.empty()) {
    mult_table_.resize(size_ * size_);
    int n = datum_.rank;
    // row for b = parent*gen reuses the parent's row
    std::vector<uint32_t> order_by_len(size_);
    std::iota(order_by_len.begin(), order_by_len.end(), 0u);
    std::stable_sort(order_by_len.begin(), order_by_len.end(),
                     [&](uint32_t a, uint32_t b) { return lengths_[a] < lengths_[b]; });
    for (uint32_t b : order_by_len) {
      if (b == id_serial_) {
        for (uint32_t a = 0; a < size_; ++a)
          mult_table_[(size_t)a * size_ + b] = (uint16_t)a;
        continue;
      }
      uint32_t par = bfs_parent_[b];
      int g = -1;
      for (int i = 0; i < n; ++i)
        if (right_prod_[(size_t)par * n + i] == b) { g = i; break; }
      COXOS_CHECK(g >= 0, "mult_table: broken parent link");
      const uint16_t* prow_base = mult_table_.data();
      for (uint32_t a = 0; a < size_; ++a) {
        uint32_t ap = prow_base[(size_t)a * size_ + par];
        mult_table_[(size_t)a * size_ + b] =
            (uint16_t)right_prod_[(size_t)ap * n + g];
      }
    }
  }
  return mult_table_;
}

BoxPtr build_group_box(CoxeterDatum datum, size_t cap) {
  return std::make_shared<GroupBox>(std::move(datum), cap);
}

namespace {

std::vector<int> rep_word(const GroupBox& box, uint32_t s) {
  return lex_least_word(box.datum(), box.element(s));
}

// orbit partition under conjugation by the subgroup generators
void classify(Grp& g) {
  const GroupBox& box = *g.box;
  g.class_of.assign(box.size(), -1);
  std::vector<ConjClass> classes;
  for (uint32_t m : g.members) {
    if (g.class_of[m] >= 0) continue;
    int idx = (int)classes.size();
    ConjClass cls;
    std::vector<uint32_t> queue{m};
    g.class_of[m] = idx;
    for (size_t q = 0; q < queue.size(); ++q) {
      for (uint32_t z : g.gens) {
        uint32_t c = box.conj(queue[q], z);
        if (g.class_of[c] < 0) {
          g.class_of[c] = idx;
          queue.push_back(c);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    cls.members = std::move(queue);
    cls.order = box.order(m);
    classes.push_back(std::move(cls));
  }

  size_t total = 0;
  for (auto& c : classes) total += c.members.size();
  COXOS_CHECK(total == g.members.size(), "classify: partition size mismatch");

  // minimal-length representative, ties by lexicographic word
  for (auto& c : classes) {
    unsigned best_len = UINT32_MAX;
    for (uint32_t m : c.members) best_len = std::min(best_len, box.length(m));
    uint32_t best = UINT32_MAX;
    std::vector<int> best_word;
    for (uint32_t m : c.members) {
      if (box.length(m) != best_len) continue;
      std::vector<int> w = rep_word(box, m);
      if (best == UINT32_MAX || w < best_word) {
        best = m;
        best_word = std::move(w);
      }
    }
    c.rep = best;
  }

  std::vector<size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> words(classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    words[i] = rep_word(box, classes[i].rep);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (classes[a].order != classes[b].order)
      return classes[a].order < classes[b].order;
    if (classes[a].members.size() != classes[b].members.size())
      return classes[a].members.size() < classes[b].members.size();
    return words[a] < words[b];
  });

  g.classes.clear();
  unsigned last_order = 0;
  int letter = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    ConjClass c = std::move(classes[perm[i]]);
    if (c.order != last_order) {
      last_order = c.order;
      letter = 0;
    }
    std::string suffix;
    int l = letter++;
    for (;;) {
      suffix = std::string(1, char('a' + l % 26)) + suffix;
      l = l / 26 - 1;
      if (l < 0) break;
    }
    c.label = std::to_string(c.order) + suffix;
    c.descent_hist.assign(1u << box.datum().rank, 0);
    for (uint32_t m : c.members) c.descent_hist[box.descents(m)]++;
    if (g.parabolic_mask >= 0)
      c.cuspidal = is_cuspidal_in(box, (unsigned)g.parabolic_mask, c.rep);
    g.classes.push_back(std::move(c));
  }
  for (size_t i = 0; i < g.classes.size(); ++i)
    for (uint32_t m : g.classes[i].members) g.class_of[m] = (int)i;
}

GrpPtr finish_grp(std::shared_ptr<Grp> g) {
  std::sort(g->members.begin(), g->members.end());
  g->is_member.assign(g->box->size(), 0);
  for (uint32_t m : g->members) g->is_member[m] = 1;
  classify(*g);
  return g;
}

std::vector<uint32_t> closure(const GroupBox& box,
                              const std::vector<uint32_t>& gens) {
  std::vector<uint8_t> seen(box.size(), 0);
  std::vector<uint32_t> queue{box.identity()};
  seen[box.identity()] = 1;
  for (size_t q = 0; q < queue.size(); ++q)
    for (uint32_t g : gens) {
      uint32_t p = box.mul(queue[q], g);
      if (!seen[p]) {
        seen[p] = 1;
        queue.push_back(p);
      }
    }
  return queue;
}

}  // namespace

GrpPtr whole_group(BoxPtr box) {
  auto g = std::make_shared<Grp>();
  g->box = box;
  g->name = box->datum().name();
  g->members.resize(box->size());
  std::iota(g->members.begin(), g->members.end(), 0u);
  for (int i = 0; i < box->datum().rank; ++i) g->gens.push_back(box->gen(i));
  g->parabolic_mask = (1 << box->datum().rank) - 1;
  return finish_grp(g);
}

GrpPtr parabolic_subgroup(BoxPtr box, unsigned gen_mask) {
  auto g = std::make_shared<Grp>();
  g->box = box;
  g->name = box->datum().name() + " W_L";
  for (int i = 0; i < box->datum().rank; ++i)
    if (gen_mask & (1u << i)) g->gens.push_back(box->gen(i));
  g->members = closure(*box, g->gens);
  g->parabolic_mask = (int)gen_mask;
  return finish_grp(g);
}

GrpPtr subgroup_generated(BoxPtr box, const std::vector<uint32_t>& gens,
                          const std::string& name) {
  auto g = std::make_shared<Grp>();
  g->box = box;
  g->name = name;
  g->gens = gens;
  g->members = closure(*box, gens);
  return finish_grp(g);
}

std::vector<uint32_t> parabolic_transversal(const Grp& l_grp, unsigned j_mask) {
  COXOS_CHECK(l_grp.parabolic_mask >= 0, "transversal: not a parabolic");
  COXOS_CHECK((j_mask & ~(unsigned)l_grp.parabolic_mask) == 0,
              "transversal: J not contained in L");
  std::vector<uint32_t> xs;
  for (uint32_t m : l_grp.members)
    if ((l_grp.box->descents(m) & j_mask) == 0) xs.push_back(m);
  return xs;
}

std::pair<uint32_t, uint32_t> parabolic_coordinates(const GroupBox& box,
                                                    uint32_t w,
                                                    unsigned l_mask) {
  uint32_t u = box.identity();
  uint32_t x = w;
  for (;;) {
    unsigned d = box.descents(x) & l_mask;
    if (!d) break;
    int i = std::countr_zero(d);
    u = box.right_gen(u, i);
    x = box.mul(box.inv(box.gen(i)), x);
  }
  COXOS_CHECK(box.length(u) + box.length(x) == box.length(w),
              "parabolic_coordinates: lengths must add");
  return {u, x};
}

namespace {

// does x^-1 L x = L as sets of reflections?
bool stabilizes_l(const GroupBox& box, unsigned l_mask, uint32_t x) {
  const CoxeterDatum& d = box.datum();
  const uint8_t* p = box.perm(x);
  for (int s = 0; s < d.rank; ++s) {
    if (!(l_mask & (1u << s))) continue;
    unsigned im = p[d.gen_root[s]];
    if (im >= (unsigned)d.n_pos) im -= d.n_pos;
    bool ok = false;
    for (int t = 0; t < d.rank; ++t)
      if ((l_mask & (1u << t)) && (unsigned)d.gen_root[t] == im) ok = true;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::vector<uint32_t> normalizer_complement(const GroupBox& box,
                                            unsigned l_mask) {
  std::vector<uint32_t> ns;
  for (uint32_t s = 0; s < box.size(); ++s) {
    if (box.descents(s) & l_mask) continue;
    if (stabilizes_l(box, l_mask, s)) ns.push_back(s);
  }
  return ns;
}

bool is_bulky(const GroupBox& box, unsigned l_mask) {
  std::vector<uint32_t> ns = normalizer_complement(box, l_mask);
  for (uint32_t n : ns)
    for (int i = 0; i < box.datum().rank; ++i) {
      if (!(l_mask & (1u << i))) continue;
      uint32_t g = box.gen(i);
      if (box.mul(n, g) != box.mul(g, n)) return false;
    }
  return true;
}

GrpPtr normalizer_of_parabolic(BoxPtr box, unsigned l_mask) {
  std::vector<uint32_t> ns = normalizer_complement(*box, l_mask);
  GrpPtr wl = parabolic_subgroup(box, l_mask);

  // members are exactly the products w * n; the factorization is unique
  auto g = std::make_shared<Grp>();
  g->box = box;
  g->name = "N_" + box->datum().name() + "(W_L)";
  g->is_member.assign(box->size(), 0);
  for (uint32_t w : wl->members)
    for (uint32_t n : ns) {
      uint32_t p = box->mul(w, n);
      COXOS_CHECK(!g->is_member[p], "normalizer: factorization not unique");
      g->is_member[p] = 1;
      g->members.push_back(p);
    }
  std::sort(g->members.begin(), g->members.end());

  // small generating set: L plus greedily chosen complement elements
  for (int i = 0; i < box->datum().rank; ++i)
    if (l_mask & (1u << i)) g->gens.push_back(box->gen(i));
  std::vector<uint8_t> closed(box->size(), 0);
  auto reclose = [&]() {
    std::fill(closed.begin(), closed.end(), 0);
    std::vector<uint32_t> queue{box->identity()};
    closed[box->identity()] = 1;
    for (size_t q = 0; q < queue.size(); ++q)
      for (uint32_t gen : g->gens) {
        uint32_t p = box->mul(queue[q], gen);
        if (!closed[p]) {
          closed[p] = 1;
          queue.push_back(p);
        }
      }
    return queue.size();
  };
  size_t have = reclose();
  for (uint32_t n : ns) {
    if (have == g->members.size()) break;
    if (closed[n]) continue;
    g->gens.push_back(n);
    have = reclose();
  }
  COXOS_CHECK(have == g->members.size(), "normalizer: generation failed");
  return finish_grp(g);
}

GrpPtr centralizer(const GrpPtr& scope, uint32_t w) {
  const GroupBox& box = *scope->box;
  COXOS_CHECK(scope->contains(w), "centralizer: element not in subgroup");
  std::vector<uint32_t> members;
  for (uint32_t m : scope->members)
    if (box.mul(m, w) == box.mul(w, m)) members.push_back(m);

  std::vector<uint32_t> gens;
  if (members.size() == scope->size()) {
    gens = scope->gens;  // w is central in the scope
  } else {
    std::vector<uint8_t> closed(box.size(), 0);
    closed[box.identity()] = 1;
    size_t closed_count = 1;
    for (uint32_t cand : members) {
      if (closed[cand]) continue;
      gens.push_back(cand);
      std::vector<uint32_t> queue{box.identity()};
      for (uint32_t m : members) closed[m] = 0;
      closed[box.identity()] = 1;
      closed_count = 1;
      for (size_t q = 0; q < queue.size(); ++q)
        for (uint32_t g : gens) {
          uint32_t p = box.mul(queue[q], g);
          if (!closed[p]) {
            closed[p] = 1;
            ++closed_count;
            queue.push_back(p);
          }
        }
      if (closed_count == members.size()) break;
    }
  }

  auto g = std::make_shared<Grp>();
  g->box = scope->box;
  g->name = "C(" + scope->name + ")";
  g->members = std::move(members);
  g->gens = std::move(gens);
  return finish_grp(g);
}

bool is_cuspidal_in(const GroupBox& box, unsigned l_mask, uint32_t w) {
  const CoxeterDatum& d = box.datum();
  size_t dim = fixed_space(d, box.element(w)).size();
  return dim == (size_t)(d.rank - std::popcount(l_mask));
}

std::vector<int> cuspidal_class_indices(const Grp& l_grp) {
  std::vector<int> out;
  for (size_t i = 0; i < l_grp.classes.size(); ++i)
    if (l_grp.classes[i].cuspidal) out.push_back((int)i);
  return out;
}

std::vector<int> class_fusion(const Grp& sub, const Grp& super) {
  std::vector<int> fusion(sub.classes.size());
  for (size_t i = 0; i < sub.classes.size(); ++i) {
    int c = super.class_index(sub.classes[i].rep);
    COXOS_CHECK(c >= 0, "class_fusion: not a subgroup");
    fusion[i] = c;
  }
  return fusion;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // parts non-decreasing
  auto rec = [&](auto&& self, int rest, int minpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = minpart; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

CuspidalRep bn_cuspidal_rep(int n, const std::vector<int>& partition) {
  int total = 0;
  for (size_t i = 0; i < partition.size(); ++i) {
    COXOS_CHECK(partition[i] >= 1, "bn_cuspidal_rep: bad part");
    COXOS_CHECK(i == 0 || partition[i] >= partition[i - 1],
                "bn_cuspidal_rep: parts must be non-decreasing");
    total += partition[i];
  }
  COXOS_CHECK(total == n, "bn_cuspidal_rep: not a partition of n");

  CuspidalRep rep;
  rep.partition = partition;
  int k = (int)partition.size();

  // negative cycle c_i, 1-based letters j+1, j, ..., 2, 1, 2, ..., j+lambda_i
  auto cycle_word = [&](int i) {
    int j = 0;
    for (int t = 0; t < i; ++t) j += partition[t];
    std::vector<int> w;
    for (int l = j + 1; l >= 1; --l) w.push_back(l - 1);
    for (int l = 2; l <= j + partition[i]; ++l) w.push_back(l - 1);
    return w;
  };

  for (int i = 0; i < k; ++i) {
    std::vector<int> w = cycle_word(i);
    rep.word.insert(rep.word.end(), w.begin(), w.end());
  }

  // c_{m(j)} for each distinct part j, m(j) the first index carrying it
  for (int i = 0; i < k; ++i) {
    if (i > 0 && partition[i] == partition[i - 1]) continue;
    rep.gen_words.push_back({"c" + std::to_string(i + 1), cycle_word(i)});
  }
  // x_i whenever lambda_i = lambda_{i+1}
  for (int i = 0; i + 1 < k; ++i) {
    if (partition[i] != partition[i + 1]) continue;
    int j = 0;
    for (int t = 0; t <= i; ++t) j += partition[t];
    int lam = partition[i];
    std::vector<int> w;
    for (int kk = 1; kk <= lam; ++kk)
      for (int l = j + kk; l >= j + kk - lam + 1; --l) w.push_back(l - 1);
    rep.gen_words.push_back({"x" + std::to_string(i + 1), w});
  }
  return rep;
}

std::vector<DnCuspidalRep> dn_cuspidal_reps(BoxPtr d_box) {
  const CoxeterDatum& dd = d_box->datum();
  COXOS_CHECK(dd.family == Family::D, "dn_cuspidal_reps: not type D");
  int n = dd.rank;

  CoxeterDatum bd = build_coxeter_datum(Family::B, n);
  // generator images under the reflection embedding W(D_n) -> W(B_n):
  // 1' -> 121, k -> k
  std::vector<Element> gen_img;
  gen_img.push_back(element_from_word(bd, {0, 1, 0}));
  for (int i = 1; i < n; ++i) gen_img.push_back(element_from_word(bd, {i}));

  // carry the embedding along the Cayley graph of the D-group
  std::vector<Element> img(d_box->size());
  img[d_box->identity()] = Element::identity(bd.n_pos);
  std::unordered_map<std::string, uint32_t> b_to_d;
  auto keyof = [](const Element& e) {
    return std::string(e.img.begin(), e.img.end());
  };
  b_to_d[keyof(img[d_box->identity()])] = d_box->identity();
  for (uint32_t s = 1; s < d_box->size(); ++s) {
    uint32_t par = d_box->parent(s);
    int g = -1;
    for (int i = 0; i < n; ++i)
      if (d_box->right_gen(par, i) == s) { g = i; break; }
    COXOS_CHECK(g >= 0, "dn_cuspidal_reps: broken parent link");
    img[s] = compose(img[par], gen_img[g]);
    b_to_d[keyof(img[s])] = s;
  }

  std::vector<DnCuspidalRep> out;
  for (const std::vector<int>& lam : partitions_of(n)) {
    if (lam.size() % 2 != 0) continue;
    CuspidalRep brep = bn_cuspidal_rep(n, lam);
    Element w = element_from_word(bd, brep.word);
    auto it = b_to_d.find(keyof(w));
    COXOS_CHECK(it != b_to_d.end(),
                "dn_cuspidal_reps: representative not in W(D_n)");
    DnCuspidalRep r;
    r.partition = lam;
    r.rep_serial = it->second;
    r.word = lex_least_word(dd, d_box->element(it->second));
    out.push_back(std::move(r));
  }
  return out;
}

Rational det_on_v(const CoxeterDatum& d, const Element& w) {
  return determinant(matrix_on_v(d, w));
}

std::string word_to_string(const CoxeterDatum& d, const std::vector<int>& word) {
  std::string s;
  for (int g : word) s += d.gen_labels[g];
  return s.empty() ? "e" : s;
}

}  // namespace coxos
