#include "coxos/charlib.hpp"

#include <algorithm>
#include <map>

namespace coxos {

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  COXOS_CHECK(carrier == o.carrier, "class function: carrier mismatch");
  std::vector<Cyclotomic> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] + o.values[i];
  return ClassFunction(carrier, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  COXOS_CHECK(carrier == o.carrier, "class function: carrier mismatch");
  std::vector<Cyclotomic> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] - o.values[i];
  return ClassFunction(carrier, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  COXOS_CHECK(carrier == o.carrier, "class function: carrier mismatch");
  std::vector<Cyclotomic> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] * o.values[i];
  return ClassFunction(carrier, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (carrier != o.carrier || values.size() != o.values.size()) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] != o.values[i]) return false;
  return true;
}

ClassFunction class_function_from_rationals(GrpPtr g,
                                            const std::vector<Rational>& v) {
  std::vector<Cyclotomic> vals(v.begin(), v.end());
  return ClassFunction(std::move(g), std::move(vals));
}

ClassFunction trivial_character(GrpPtr g) {
  std::vector<Cyclotomic> v(g->classes.size(), Cyclotomic(1));
  return ClassFunction(std::move(g), std::move(v));
}

ClassFunction regular_character(GrpPtr g) {
  std::vector<Cyclotomic> v(g->classes.size(), Cyclotomic(0));
  for (size_t i = 0; i < g->classes.size(); ++i)
    if (g->classes[i].rep == g->box->identity())
      v[i] = Cyclotomic((long long)g->size());
  return ClassFunction(std::move(g), std::move(v));
}

ClassFunction linear_character(const LinearCharacterSpec& spec) {
  const Grp& h = *spec.subgroup;
  const GroupBox& box = *h.box;
  for (auto& [g, v] : spec.gen_values)
    COXOS_CHECK(h.contains(g), "linear character: generator outside subgroup");

  std::vector<int> known(box.size(), -1);
  std::vector<Cyclotomic> value;
  std::vector<uint32_t> queue;
  auto set_value = [&](uint32_t s, const Cyclotomic& v) {
    known[s] = (int)value.size();
    value.push_back(v);
    queue.push_back(s);
  };
  set_value(box.identity(), Cyclotomic(1));
  for (size_t q = 0; q < queue.size(); ++q) {
    uint32_t s = queue[q];
    Cyclotomic vs = value[known[s]];  // copy: the table grows below
    for (auto& [g, vg] : spec.gen_values) {
      uint32_t t = box.mul(s, g);
      Cyclotomic vt = vs * vg;
      if (known[t] < 0) {
        set_value(t, vt);
      } else if (value[known[t]] != vt) {
        fail("linear character: inconsistent values (element " +
             word_to_string(box.datum(), lex_least_word(box.datum(),
                                                        box.element(t))) +
             " reached with conflicting values " + value[known[t]].str() +
             " and " + vt.str() + ")");
      }
    }
  }
  COXOS_CHECK(queue.size() == h.size(),
              "linear character: listed elements do not generate the subgroup");

  std::vector<Cyclotomic> on_classes;
  for (const ConjClass& c : h.classes) {
    COXOS_CHECK(known[c.rep] >= 0, "linear character: class not covered");
    on_classes.push_back(value[known[c.rep]]);
  }
  return ClassFunction(spec.subgroup, std::move(on_classes));
}

namespace {

// deterministic total order on cyclotomics, for sorting character lists
bool cyc_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == cb[i]) continue;
    return ca[i] < cb[i];
  }
  return false;
}

bool value_tuple_less(const std::vector<Cyclotomic>& a,
                      const std::vector<Cyclotomic>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return cyc_less(a[i].reduced(), b[i].reduced());
  }
  return false;
}

}  // namespace

std::vector<ClassFunction> linear_characters(GrpPtr h) {
  const GroupBox& box = *h->box;

  // commutator subgroup: normal closure of the generator commutators
  std::vector<uint32_t> kgens;
  for (uint32_t a : h->gens)
    for (uint32_t b : h->gens) {
      uint32_t c = box.mul(box.mul(box.inv(a), box.inv(b)), box.mul(a, b));
      kgens.push_back(c);
    }
  std::vector<uint8_t> in_k(box.size(), 0);
  std::vector<uint32_t> kmembers{box.identity()};
  in_k[box.identity()] = 1;
  for (;;) {
    // close as a subgroup
    for (size_t q = 0; q < kmembers.size(); ++q)
      for (uint32_t g : kgens) {
        uint32_t p = box.mul(kmembers[q], g);
        if (!in_k[p]) {
          in_k[p] = 1;
          kmembers.push_back(p);
        }
      }
    // extend by conjugates until normal
    bool grew = false;
    size_t before = kgens.size();
    for (uint32_t g : h->gens)
      for (size_t i = 0; i < before; ++i) {
        uint32_t c = box.conj(kgens[i], g);
        if (!in_k[c]) {
          kgens.push_back(c);
          grew = true;
        }
      }
    if (!grew) break;
  }

  // cosets of the commutator subgroup
  std::vector<int> coset_of(box.size(), -1);
  std::vector<uint32_t> coset_rep;
  for (uint32_t m : h->members) {
    if (coset_of[m] >= 0) continue;
    int id = (int)coset_rep.size();
    coset_rep.push_back(m);
    for (uint32_t k : kmembers) coset_of[box.mul(m, k)] = id;
  }
  size_t q = coset_rep.size();
  COXOS_CHECK(q * kmembers.size() == h->size(), "abelianization: bad cosets");

  std::vector<std::vector<int>> qmul(q, std::vector<int>(q));
  for (size_t a = 0; a < q; ++a)
    for (size_t b = 0; b < q; ++b)
      qmul[a][b] = coset_of[box.mul(coset_rep[a], coset_rep[b])];

  // quotient generators and their orders
  std::vector<int> qgens;
  for (uint32_t g : h->gens) {
    int img = coset_of[g];
    if (img != 0 &&
        std::find(qgens.begin(), qgens.end(), img) == qgens.end())
      qgens.push_back(img);
  }
  std::vector<int> qorder;
  for (int g : qgens) {
    int o = 1, cur = g;
    while (cur != 0) {
      cur = qmul[cur][g];
      ++o;
    }
    qorder.push_back(o);
  }

  // all value assignments on the quotient generators that extend to
  // homomorphisms
  std::vector<std::vector<Cyclotomic>> homs;  // values on cosets
  std::vector<int> pick(qgens.size(), 0);
  auto try_combo = [&]() {
    std::vector<int> kexp(q, -1);
    std::vector<Cyclotomic> val(q);
    val[0] = Cyclotomic(1);
    kexp[0] = 0;
    std::vector<int> queue{0};
    for (size_t i = 0; i < queue.size(); ++i)
      for (size_t gi = 0; gi < qgens.size(); ++gi) {
        int t = qmul[queue[i]][qgens[gi]];
        Cyclotomic v =
            val[queue[i]] * Cyclotomic::root_of_unity(qorder[gi], pick[gi]);
        if (kexp[t] < 0) {
          kexp[t] = 0;
          val[t] = v;
          queue.push_back(t);
        } else if (val[t] != v) {
          return;
        }
      }
    if (queue.size() == q) homs.push_back(std::move(val));
  };
  auto enumerate = [&](auto&& self, size_t gi) -> void {
    if (gi == qgens.size()) {
      try_combo();
      return;
    }
    for (pick[gi] = 0; pick[gi] < qorder[gi]; ++pick[gi])
      self(self, gi + 1);
    pick[gi] = 0;
  };
  enumerate(enumerate, 0);
  if (qgens.empty()) homs.push_back({Cyclotomic(1)});
  COXOS_CHECK(homs.size() == q, "abelianization: wrong character count");

  std::vector<ClassFunction> out;
  for (auto& hom : homs) {
    std::vector<Cyclotomic> vals;
    for (const ConjClass& c : h->classes) vals.push_back(hom[coset_of[c.rep]]);
    out.push_back(ClassFunction(h, std::move(vals)));
  }
  std::sort(out.begin(), out.end(),
            [&](const ClassFunction& a, const ClassFunction& b) {
              uint64_t ka = 0, kb = 0;
              for (size_t i = 0; i < a.values.size(); ++i) {
                if (a.values[i] == Cyclotomic(1))
                  ka += h->classes[i].members.size();
                if (b.values[i] == Cyclotomic(1))
                  kb += h->classes[i].members.size();
              }
              if (ka != kb) return ka > kb;  // larger kernel first
              return value_tuple_less(a.values, b.values);
            });
  return out;
}

ClassFunction induce(const ClassFunction& phi, GrpPtr g) {
  const Grp& h = *phi.carrier;
  COXOS_CHECK(h.box == g->box, "induce: different ambient groups");
  std::vector<int> fusion = class_fusion(h, *g);
  Rational index((long long)g->size(), (long long)h.size());
  std::vector<Cyclotomic> vals(g->classes.size(), Cyclotomic(0));
  for (size_t hc = 0; hc < h.classes.size(); ++hc) {
    int gc = fusion[hc];
    vals[gc] += Cyclotomic(Rational((long long)h.classes[hc].members.size())) *
                phi.values[hc];
  }
  for (size_t gc = 0; gc < g->classes.size(); ++gc) {
    Rational f = index / Rational((long long)g->classes[gc].members.size());
    vals[gc] = Cyclotomic(f) * vals[gc];
  }
  return ClassFunction(g, std::move(vals));
}

std::optional<std::vector<int>> solve_character_sum(
    const SolveInput& in, const std::vector<Cyclotomic>& target) {
  size_t nclasses = in.n_grp->classes.size();
  size_t nreps = in.induced.size();
  COXOS_CHECK(target.size() == nclasses, "solver: target size mismatch");

  // sparse nonzero supports per option
  struct Option {
    std::vector<std::pair<size_t, Cyclotomic>> nz;
  };
  std::vector<std::vector<Option>> opts(nreps);
  for (size_t k = 0; k < nreps; ++k) {
    COXOS_CHECK(!in.induced[k].empty(), "solver: a rep has no characters");
    for (const ClassFunction& f : in.induced[k]) {
      Option o;
      for (size_t c = 0; c < nclasses; ++c)
        if (!f.values[c].is_zero()) o.nz.push_back({c, f.values[c]});
      opts[k].push_back(std::move(o));
    }
  }

  // induced degrees are choice-independent; check the identity class early
  size_t id_class = (size_t)in.n_grp->class_index(in.n_grp->box->identity());
  Cyclotomic degree_sum(0);
  for (size_t k = 0; k < nreps; ++k) {
    const ClassFunction& f = in.induced[k].front();
    degree_sum += f.values[id_class];
  }
  if (degree_sum != target[id_class]) return std::nullopt;

  // the last rep whose centralizer can still touch a class; once passed,
  // the class value is final and must match the target
  std::vector<int> last_touch(nclasses, -1);
  for (size_t k = 0; k < nreps; ++k)
    for (const Option& o : opts[k])
      for (auto& [c, v] : o.nz) last_touch[c] = (int)k;
  for (size_t c = 0; c < nclasses; ++c)
    if (last_touch[c] < 0 && !target[c].is_zero()) return std::nullopt;

  std::vector<std::vector<size_t>> finalize_at(nreps);
  for (size_t c = 0; c < nclasses; ++c)
    if (last_touch[c] >= 0) finalize_at[last_touch[c]].push_back(c);

  std::vector<Cyclotomic> partial(nclasses, Cyclotomic(0));
  std::vector<int> choice(nreps, -1);
  auto dfs = [&](auto&& self, size_t k) -> bool {
    if (k == nreps) return true;
    for (size_t i = 0; i < opts[k].size(); ++i) {
      for (auto& [c, v] : opts[k][i].nz) partial[c] += v;
      bool ok = true;
      for (size_t c : finalize_at[k])
        if (partial[c] != target[c]) {
          ok = false;
          break;
        }
      if (ok && self(self, k + 1)) {
        choice[k] = (int)i;
        return true;
      }
      for (auto& [c, v] : opts[k][i].nz) partial[c] -= v;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return choice;
}

}  // namespace coxos
