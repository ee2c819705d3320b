#include "doctest.h"

#include "coxos/descent.hpp"

using namespace coxos;

namespace {

Gav identity_gav(BoxPtr box) {
  Gav v;
  v.box = box;
  v.c.emplace(box->identity(), Rational(1));
  return v;
}

std::vector<Gav> all_shape_idempotents(GrpPtr w, const DescentMatrix& dm) {
  std::vector<Gav> out;
  for (const Shape& s : shapes(*w))
    out.push_back(gav_from_xcoords(*w, dm, shape_idempotent_xcoords(dm, s)));
  return out;
}

}  // namespace

TEST_CASE("A1 descent matrix and quasi-idempotents") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::A, 1));
  GrpPtr w = whole_group(box);
  DescentMatrix dm = descent_matrix(*w);
  // rows/cols ordered {}, {s}
  CHECK(dm.m.at(0, 0) == Rational(2));
  CHECK(dm.m.at(0, 1) == Rational(0));
  CHECK(dm.m.at(1, 0) == Rational(1));
  CHECK(dm.m.at(1, 1) == Rational(1));
  CHECK(dm.n.at(0, 0) == Rational(1, 2));
  CHECK(dm.n.at(1, 0) == Rational(-1, 2));
  CHECK(dm.n.at(1, 1) == Rational(1));

  Gav e1 = quasi_idempotent(*w, dm, 1);  // J = {s}
  Gav e0 = quasi_idempotent(*w, dm, 0);  // J = {}
  uint32_t s = box->gen(0);
  CHECK(e1.c.at(box->identity()) == Rational(1, 2));
  CHECK(e1.c.at(s) == Rational(-1, 2));
  CHECK(e0.c.at(box->identity()) == Rational(1, 2));
  CHECK(e0.c.at(s) == Rational(1, 2));
}

TEST_CASE("descent matrix generic properties") {
  for (auto [fam, rank] : {std::pair{Family::A, 3}, {Family::B, 3}}) {
    GrpPtr w = whole_group(build_group_box(build_coxeter_datum(fam, rank)));
    DescentMatrix dm = descent_matrix(*w);
    size_t sz = dm.subsets.size();
    // M N = identity
    RatMatrix prod = dm.m * dm.n;
    CHECK(prod == RatMatrix::identity(sz));
    for (size_t k = 0; k < sz; ++k) {
      // m_{K,emptyset} = |X_K|, m_KK >= 1, zero unless K contains J
      CHECK(dm.m.at(k, 0) ==
            Rational((long long)parabolic_transversal(
                         *w, dm.subsets.masks[k]).size()));
      CHECK(!(dm.m.at(k, k) < Rational(1)));
      for (size_t j = 0; j < sz; ++j)
        if ((dm.subsets.masks[j] & ~dm.subsets.masks[k]) != 0)
          CHECK(dm.m.at(k, j) == Rational(0));
    }
  }
}

TEST_CASE("coefficient formula matches transversal construction") {
  // coefficient of y in e_L^L is the descent-set sum over the N-matrix row
  GrpPtr w = whole_group(build_group_box(build_coxeter_datum(Family::B, 3)));
  DescentMatrix dm = descent_matrix(*w);
  unsigned l_mask = 0b111;
  Gav direct;
  direct.box = w->box;
  int lrow = dm.subsets.index_of(l_mask);
  for (size_t k = 0; k < dm.subsets.size(); ++k) {
    Gav xs = transversal_sum(*w, dm.subsets.masks[k]);
    xs *= dm.n.at(lrow, (int)k);
    direct += xs;
  }
  CHECK(direct == quasi_idempotent(*w, dm, l_mask));
}

TEST_CASE("shapes of small groups") {
  GrpPtr a2 = whole_group(build_group_box(build_coxeter_datum(Family::A, 2)));
  CHECK(shapes(*a2).size() == 3);  // {}, {1}~{2}, {1,2}
  GrpPtr b2 = whole_group(build_group_box(build_coxeter_datum(Family::B, 2)));
  CHECK(shapes(*b2).size() == 4);  // two root lengths
}

TEST_CASE("shape idempotents: orthogonality and unity") {
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::A, 3},
                           {Family::B, 2}, {Family::B, 3}}) {
    BoxPtr box = build_group_box(build_coxeter_datum(fam, rank));
    GrpPtr w = whole_group(box);
    DescentMatrix dm = descent_matrix(*w);
    std::vector<Gav> es = all_shape_idempotents(w, dm);

    Gav sum;
    sum.box = box;
    for (const Gav& e : es) sum += e;
    CHECK(sum.is_identity_element());

    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = 0; j < es.size(); ++j) {
        Gav prod = gav_mul(es[i], es[j]);
        if (i == j)
          CHECK(prod == es[i]);
        else
          CHECK(prod.c.empty());
      }
  }
}

TEST_CASE("descent-coordinate product agrees with convolution") {
  for (auto [fam, rank] : {std::pair{Family::A, 3}, {Family::B, 3},
                           {Family::B, 2}, {Family::D, 4}}) {
    BoxPtr box = build_group_box(build_coxeter_datum(fam, rank));
    GrpPtr w = whole_group(box);
    DescentMatrix dm = descent_matrix(*w);
    SolomonTable st = solomon_table(*w);
    std::vector<Shape> sh = shapes(*w);
    for (size_t i = 0; i < sh.size(); ++i)
      for (size_t j = 0; j < sh.size(); ++j) {
        std::vector<Rational> xi = shape_idempotent_xcoords(dm, sh[i]);
        std::vector<Rational> xj = shape_idempotent_xcoords(dm, sh[j]);
        Gav via_table =
            gav_from_xcoords(*w, dm, descent_product(st, xi, xj));
        Gav via_conv = gav_mul(gav_from_xcoords(*w, dm, xi),
                               gav_from_xcoords(*w, dm, xj));
        CHECK(via_table == via_conv);
      }
  }
}

TEST_CASE("translated convolution equals table convolution") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 3));
  GrpPtr w = whole_group(box);
  DescentMatrix dm = descent_matrix(*w);
  std::vector<Shape> sh = shapes(*w);
  Gav a = gav_from_xcoords(*w, dm, shape_idempotent_xcoords(dm, sh[1]));
  Gav b = gav_from_xcoords(*w, dm, shape_idempotent_xcoords(dm, sh[2]));
  Gav t1 = gav_mul(a, b);
  // force the Cayley-translation path via the internal entry point:
  // recompute with the same inputs on a group just above the table cap is
  // not cheap here, so compare against the structure-constant route instead
  SolomonTable st = solomon_table(*w);
  Gav t2 = gav_from_xcoords(
      *w, dm,
      descent_product(st, shape_idempotent_xcoords(dm, sh[1]),
                      shape_idempotent_xcoords(dm, sh[2])));
  CHECK(t1 == t2);
}

TEST_CASE("regular character decomposition for A1") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::A, 1));
  GrpPtr w = whole_group(box);
  DescentMatrix dm = descent_matrix(*w);
  std::vector<Shape> sh = shapes(*w);
  REQUIRE(sh.size() == 2);
  // shape {} gives the trivial character, shape {s} the sign character
  std::vector<Gav> es = all_shape_idempotents(w, dm);
  uint32_t s = box->gen(0);
  CHECK(rho_lambda_direct(es[0], box->identity(), *w) == Rational(1));
  CHECK(rho_lambda_direct(es[0], s, *w) == Rational(1));
  CHECK(rho_lambda_direct(es[1], box->identity(), *w) == Rational(1));
  CHECK(rho_lambda_direct(es[1], s, *w) == Rational(-1));
}

TEST_CASE("rho_lambda sums to the regular character") {
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2},
                           {Family::B, 3}}) {
    BoxPtr box = build_group_box(build_coxeter_datum(fam, rank));
    GrpPtr w = whole_group(box);
    DescentMatrix dm = descent_matrix(*w);
    std::vector<Gav> es = all_shape_idempotents(w, dm);
    for (const ConjClass& c : w->classes) {
      Rational sum = 0;
      for (const Gav& e : es) sum += rho_lambda_direct(e, c.rep, *w);
      Rational expect =
          c.rep == box->identity() ? Rational((long long)box->size()) : Rational(0);
      CHECK(sum == expect);
      // dimension at identity is a nonnegative integer
      for (const Gav& e : es) {
        Rational dim = rho_lambda_direct(e, box->identity(), *w);
        CHECK(dim.is_integer());
        CHECK(!(dim < Rational(0)));
      }
    }
  }
}

TEST_CASE("rho_tilde equals its dense oracle on small parabolics") {
  // three pairs, including the rank-4 parabolic of B5
  struct Pair {
    Family fam;
    int rank;
    unsigned l;
  };
  for (Pair p : {Pair{Family::B, 5, 0b11011u}, Pair{Family::B, 5, 0b11001u},
                 Pair{Family::B, 4, 0b0111u}, Pair{Family::A, 3, 0b101u}}) {
    BoxPtr box = build_group_box(build_coxeter_datum(p.fam, p.rank));
    GrpPtr wl = parabolic_subgroup(box, p.l);
    DescentMatrix dm = descent_matrix(*wl);
    GrpPtr n = normalizer_of_parabolic(box, p.l);
    std::vector<Rational> fast = rho_tilde(*wl, dm, *n);
    std::vector<Rational> slow = rho_tilde_oracle(*wl, dm, *n);
    CHECK(fast == slow);
  }
}

TEST_CASE("rho_tilde for L = S is the top-component character") {
  // at the identity the value is the product of the exponents
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 3));
  GrpPtr w = whole_group(box);
  DescentMatrix dm = descent_matrix(*w);
  std::vector<Rational> rho_s = rho_tilde(*w, dm, *w);
  int id_class = w->class_index(box->identity());
  CHECK(rho_s[id_class] == Rational(1 * 3 * 5));

  // against the direct trace of e_S CW
  Gav e_s = quasi_idempotent(*w, dm, 0b111);
  for (size_t i = 0; i < w->classes.size(); ++i)
    CHECK(rho_s[i] == rho_lambda_direct(e_s, w->classes[i].rep, *w));
}

TEST_CASE("rho_tilde restricted to W_L matches the native top character") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 4));
  unsigned l = 0b1011;  // type A1 x B2
  GrpPtr wl = parabolic_subgroup(box, l);
  DescentMatrix dm = descent_matrix(*wl);
  GrpPtr n = normalizer_of_parabolic(box, l);
  std::vector<Rational> ext = rho_tilde(*wl, dm, *n);
  Gav e_l = quasi_idempotent(*wl, dm, l);
  for (size_t i = 0; i < wl->classes.size(); ++i) {
    uint32_t rep = wl->classes[i].rep;
    int nc = n->class_index(rep);
    REQUIRE(nc >= 0);
    CHECK(ext[nc] == rho_lambda_direct(e_l, rep, *wl));
  }
}
