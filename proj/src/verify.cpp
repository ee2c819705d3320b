#include "coxos/verify.hpp"

#include <algorithm>
#include <chrono>

namespace coxos {

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

std::string cyc_str(const Cyclotomic& v) { return v.str(); }

GroupContext::GroupContext(Family family, int rank) {
  box = build_group_box(build_coxeter_datum(family, rank));
  whole = whole_group(box);
  parabolics_[full_mask()] = whole;
  normalizers_[full_mask()] = whole;
  normalizers_[0] = whole;
}

GrpPtr GroupContext::parabolic(unsigned l_mask) {
  auto it = parabolics_.find(l_mask);
  if (it != parabolics_.end()) return it->second;
  return parabolics_[l_mask] = parabolic_subgroup(box, l_mask);
}

GrpPtr GroupContext::normalizer(unsigned l_mask) {
  auto it = normalizers_.find(l_mask);
  if (it != normalizers_.end()) return it->second;
  return normalizers_[l_mask] = normalizer_of_parabolic(box, l_mask);
}

const DescentMatrix& GroupContext::dmatrix(unsigned l_mask) {
  auto it = dmatrices_.find(l_mask);
  if (it != dmatrices_.end()) return it->second;
  return dmatrices_[l_mask] = descent_matrix(*parabolic(l_mask));
}

NBCStructure& GroupContext::nbc(unsigned l_mask) {
  auto it = nbcs_.find(l_mask);
  if (it != nbcs_.end()) return *it->second;
  auto s = std::make_unique<NBCStructure>(root_ctx(box, l_mask));
  return *(nbcs_[l_mask] = std::move(s));
}

std::string GroupContext::l_desc(unsigned l_mask) const {
  if (l_mask == full_mask()) return "S";
  std::string out;
  for (int g = 0; g < box->datum().rank; ++g)
    if (l_mask & (1u << g)) {
      if (!out.empty()) out += ",";
      out += box->datum().gen_labels[g];
    }
  return out;
}

ClassFunction rho_tilde_character(GroupContext& ctx, unsigned l_mask) {
  GrpPtr wl = ctx.parabolic(l_mask);
  GrpPtr n = ctx.normalizer(l_mask);
  std::vector<Rational> vals = rho_tilde(*wl, ctx.dmatrix(l_mask), *n);
  return class_function_from_rationals(n, vals);
}

namespace {

std::vector<uint32_t> cuspidal_reps(const Grp& wl) {
  std::vector<uint32_t> reps;
  for (int ci : cuspidal_class_indices(wl)) reps.push_back(wl.classes[ci].rep);
  return reps;
}

GrpPtr centralizer_in_whole(GroupContext& ctx, uint32_t rep, unsigned l_mask) {
  GrpPtr c = centralizer(ctx.whole, rep);
  GrpPtr n = ctx.normalizer(l_mask);
  for (uint32_t m : c->members)
    COXOS_CHECK(n->contains(m),
                "centralizer of a cuspidal element must lie in the "
                "parabolic normalizer");
  return c;
}

}  // namespace

std::optional<std::vector<AssignedCharacter>> solve_assignment(
    GroupContext& ctx, unsigned l_mask) {
  GrpPtr wl = ctx.parabolic(l_mask);
  GrpPtr n = ctx.normalizer(l_mask);
  ClassFunction target = rho_tilde_character(ctx, l_mask);

  std::vector<int> cusp = cuspidal_class_indices(*wl);
  SolveInput in;
  in.n_grp = n;
  std::vector<GrpPtr> cents;
  std::vector<std::string> labels;
  for (int ci : cusp) {
    uint32_t rep = wl->classes[ci].rep;
    GrpPtr c = centralizer_in_whole(ctx, rep, l_mask);
    std::vector<ClassFunction> opts = linear_characters(c);
    std::vector<ClassFunction> ind;
    for (const ClassFunction& phi : opts) ind.push_back(induce(phi, n));
    in.options.push_back(std::move(opts));
    in.induced.push_back(std::move(ind));
    cents.push_back(c);
    labels.push_back(wl->classes[ci].label);
  }

  auto choice = solve_character_sum(in, target.values);
  if (!choice) return std::nullopt;
  std::vector<AssignedCharacter> out;
  for (size_t k = 0; k < cusp.size(); ++k)
    out.push_back({labels[k], wl->classes[cusp[k]].rep, cents[k],
                   in.options[k][(*choice)[k]]});
  return out;
}

std::vector<AssignedCharacter> characters_from_table(GroupContext& ctx,
                                                     const TableFile& table) {
  GrpPtr wl = ctx.parabolic(table.l_mask);
  std::vector<int> cusp = cuspidal_class_indices(*wl);
  std::vector<int> covered;
  std::vector<AssignedCharacter> out;
  for (const TableEntry& e : table.entries) {
    int ci = wl->class_index(e.rep);
    COXOS_CHECK(ci >= 0, "table: representative not in W_L");
    COXOS_CHECK(wl->classes[ci].cuspidal, "table: class not cuspidal");
    COXOS_CHECK(std::find(covered.begin(), covered.end(), ci) == covered.end(),
                "table: duplicate cuspidal class " + e.label);
    covered.push_back(ci);
    GrpPtr c = centralizer_in_whole(ctx, e.rep, table.l_mask);
    ClassFunction phi = linear_character({c, e.gen_values});
    out.push_back({e.label, e.rep, c, std::move(phi)});
  }
  COXOS_CHECK(covered.size() == cusp.size(),
              "table: cuspidal classes not fully covered");
  return out;
}

std::vector<size_t> sampled_class_indices(const Grp& grp) {
  size_t n = grp.classes.size();
  std::vector<size_t> idx{0, std::min<size_t>(1, n - 1), n / 2, n - 1};
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

namespace {

void compare_class_functions(IdentityResult& res, const Grp& carrier,
                             const std::vector<Cyclotomic>& expected,
                             const std::vector<Cyclotomic>& got,
                             const std::vector<size_t>* only_classes) {
  res.pass = true;
  auto check_one = [&](size_t i) {
    if (expected[i] == got[i]) return;
    res.pass = false;
    res.diffs.push_back({carrier.classes[i].label, expected[i].str(),
                         got[i].str()});
  };
  if (only_classes)
    for (size_t i : *only_classes) check_one(i);
  else
    for (size_t i = 0; i < expected.size(); ++i) check_one(i);
}

ClassFunction sum_of_inductions(const std::vector<AssignedCharacter>& chars,
                                GrpPtr target_grp) {
  ClassFunction sum(target_grp, std::vector<Cyclotomic>(
                                    target_grp->classes.size(), Cyclotomic(0)));
  for (const AssignedCharacter& a : chars)
    sum = sum + induce(a.phi, target_grp);
  return sum;
}

}  // namespace

Report verify_theorem_c(GroupContext& ctx, unsigned l_mask,
                        const TableFile* table, const VerifyOptions& opt) {
  Report report;
  const std::string group = ctx.box->datum().name();
  const std::string ldesc = ctx.l_desc(l_mask);
  GrpPtr wl = ctx.parabolic(l_mask);
  GrpPtr n = ctx.normalizer(l_mask);

  double t0 = now_seconds();
  ClassFunction rho = rho_tilde_character(ctx, l_mask);

  // (i) the induced characters sum to the extension character
  {
    IdentityResult res;
    res.group = group;
    res.l_desc = ldesc;
    res.name = "ThmC-sum";
    std::optional<std::vector<AssignedCharacter>> chars;
    if (table)
      chars = characters_from_table(ctx, *table);
    else
      chars = solve_assignment(ctx, l_mask);
    if (!chars) {
      res.pass = false;
      res.diffs.push_back({"-", "an assignment", "NONE"});
    } else {
      ClassFunction sum = sum_of_inductions(*chars, n);
      compare_class_functions(res, *n, rho.values, sum.values, nullptr);
    }
    res.seconds = now_seconds() - t0;
    report.identities.push_back(std::move(res));
  }

  // (ii) rho~ = alpha eps omega~
  {
    double t1 = now_seconds();
    IdentityResult res;
    res.group = group;
    res.l_desc = ldesc;
    bool sampled = l_mask == ctx.full_mask() &&
                   ctx.box->datum().rank >= 6 && !opt.long_run;
    res.name = sampled ? "ThmC-omega-sampled" : "ThmC-omega";
    std::vector<Rational> eps = sign_character(*n);
    std::vector<Rational> alpha = alpha_character(*wl, *n);
    NBCStructure& nbc = ctx.nbc(l_mask);
    std::vector<size_t> sample = sampled_class_indices(*n);
    std::vector<Cyclotomic> lhs(n->classes.size(), Cyclotomic(0));
    std::vector<Cyclotomic> rhs(n->classes.size(), Cyclotomic(0));
    if (sampled) {
      for (size_t i : sample) {
        Rational w = nbc.trace(nbc.top_degree(), n->classes[i].rep);
        lhs[i] = rho.values[i];
        rhs[i] = Cyclotomic(alpha[i] * eps[i] * w);
      }
    } else {
      std::vector<Rational> omega = omega_tilde(nbc, *n, opt.jobs);
      for (size_t i = 0; i < n->classes.size(); ++i) {
        lhs[i] = rho.values[i];
        rhs[i] = Cyclotomic(alpha[i] * eps[i] * omega[i]);
      }
    }
    compare_class_functions(res, *n, lhs, rhs, sampled ? &sample : nullptr);
    res.seconds = now_seconds() - t1;
    report.identities.push_back(std::move(res));
  }

  if (opt.oracle && wl->size() <= 2000) {
    double t2 = now_seconds();
    IdentityResult res;
    res.group = group;
    res.l_desc = ldesc;
    res.name = "ThmC-rho-oracle";
    std::vector<Rational> fast = rho_tilde(*wl, ctx.dmatrix(l_mask), *n);
    std::vector<Rational> slow = rho_tilde_oracle(*wl, ctx.dmatrix(l_mask), *n);
    std::vector<Cyclotomic> lhs(fast.begin(), fast.end());
    std::vector<Cyclotomic> rhs(slow.begin(), slow.end());
    compare_class_functions(res, *n, lhs, rhs, nullptr);
    res.seconds = now_seconds() - t2;
    report.identities.push_back(std::move(res));
  }
  return report;
}

Report verify_theorem_a(GroupContext& ctx,
                        const std::vector<TableFile>& tables,
                        bool allow_solve, const VerifyOptions& opt) {
  Report report;
  const std::string group = ctx.box->datum().name();
  double t0 = now_seconds();

  std::vector<Shape> shs = shapes(*ctx.whole);
  std::vector<AssignedCharacter> all_chars;
  std::vector<unsigned> shape_l;  // the L used for each character
  for (const Shape& shape : shs) {
    const TableFile* table = nullptr;
    for (const TableFile& t : tables)
      if (std::find(shape.members.begin(), shape.members.end(), t.l_mask) !=
          shape.members.end())
        table = &t;
    std::vector<AssignedCharacter> chars;
    unsigned l_used;
    if (table) {
      chars = characters_from_table(ctx, *table);
      l_used = table->l_mask;
    } else {
      COXOS_CHECK(allow_solve, "no table covers the shape with representative L={" +
                                   ctx.l_desc(shape.rep) + "}");
      auto solved = solve_assignment(ctx, shape.rep);
      COXOS_CHECK(solved.has_value(), "solver found no assignment for L={" +
                                          ctx.l_desc(shape.rep) + "}");
      chars = std::move(*solved);
      l_used = shape.rep;
    }
    shape_l.insert(shape_l.end(), chars.size(), l_used);
    for (auto& c : chars) all_chars.push_back(std::move(c));
  }

  // the cuspidal classes across shapes enumerate the classes of W exactly
  {
    IdentityResult res;
    res.group = group;
    res.l_desc = "S";
    res.name = "ThmA-classes";
    std::vector<int> seen(ctx.whole->classes.size(), 0);
    for (const AssignedCharacter& a : all_chars)
      seen[ctx.whole->class_index(a.rep)]++;
    res.pass = true;
    for (size_t i = 0; i < seen.size(); ++i)
      if (seen[i] != 1) {
        res.pass = false;
        res.diffs.push_back({ctx.whole->classes[i].label, "1",
                             std::to_string(seen[i])});
      }
    res.seconds = now_seconds() - t0;
    report.identities.push_back(std::move(res));
  }

  // rho = sum of inductions
  {
    double t1 = now_seconds();
    IdentityResult res;
    res.group = group;
    res.l_desc = "S";
    res.name = "ThmA-rho";
    ClassFunction sum = sum_of_inductions(all_chars, ctx.whole);
    ClassFunction rho = regular_character(ctx.whole);
    compare_class_functions(res, *ctx.whole, rho.values, sum.values, nullptr);
    res.seconds = now_seconds() - t1;
    report.identities.push_back(std::move(res));
  }

  // omega = eps * sum of inductions of alpha_w phi_w
  {
    double t2 = now_seconds();
    IdentityResult res;
    res.group = group;
    res.l_desc = "S";
    bool sampled = ctx.box->datum().rank >= 6 && !opt.long_run;
    res.name = sampled ? "ThmA-omega-sampled" : "ThmA-omega";

    ClassFunction sum(ctx.whole, std::vector<Cyclotomic>(
                                     ctx.whole->classes.size(), Cyclotomic(0)));
    for (size_t k = 0; k < all_chars.size(); ++k) {
      const AssignedCharacter& a = all_chars[k];
      GrpPtr wl = ctx.parabolic(shape_l[k]);
      std::vector<Rational> alpha = alpha_character(*wl, *a.centralizer);
      ClassFunction alpha_phi =
          class_function_from_rationals(a.centralizer, alpha) * a.phi;
      sum = sum + induce(alpha_phi, ctx.whole);
    }
    std::vector<Rational> eps = sign_character(*ctx.whole);
    NBCStructure& nbc = ctx.nbc(ctx.full_mask());
    std::vector<size_t> sample = sampled_class_indices(*ctx.whole);
    std::vector<Cyclotomic> lhs(ctx.whole->classes.size(), Cyclotomic(0));
    std::vector<Cyclotomic> rhs(ctx.whole->classes.size(), Cyclotomic(0));
    if (sampled) {
      for (size_t i : sample) {
        Rational omega = 0;
        for (int d = 0; d <= nbc.top_degree(); ++d)
          omega += nbc.trace(d, ctx.whole->classes[i].rep);
        lhs[i] = Cyclotomic(omega);
        rhs[i] = Cyclotomic(eps[i]) * sum.values[i];
      }
    } else {
      std::vector<Rational> omega =
          omega_character(nbc, *ctx.whole, /*top_only=*/false, opt.jobs);
      for (size_t i = 0; i < ctx.whole->classes.size(); ++i) {
        lhs[i] = Cyclotomic(omega[i]);
        rhs[i] = Cyclotomic(eps[i]) * sum.values[i];
      }
    }
    compare_class_functions(res, *ctx.whole, lhs, rhs,
                            sampled ? &sample : nullptr);
    res.seconds = now_seconds() - t2;
    report.identities.push_back(std::move(res));
  }
  return report;
}

}  // namespace coxos
