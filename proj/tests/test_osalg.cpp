#include "doctest.h"

#include "coxos/descent.hpp"
#include "coxos/osalg.hpp"

using namespace coxos;

TEST_CASE("NBC bases for A2") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::A, 2));
  NBCStructure nbc(root_ctx(box, 0b11));
  CHECK(nbc.basis(0) == std::vector<uint64_t>{0});
  CHECK(nbc.basis(1).size() == 3);
  // degree 2: {1,3} and {2,3}; {1,2} is broken (0-based masks)
  std::vector<uint64_t> top = nbc.basis(2);
  REQUIRE(top.size() == 2);
  CHECK(top[0] == 0b101);
  CHECK(top[1] == 0b110);
  CHECK_FALSE(nbc.is_nbc(2, 0b011));
}

TEST_CASE("NBC counts match the dimension oracle in every degree") {
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2},
                           {Family::A, 3}, {Family::B, 3}}) {
    BoxPtr box = build_group_box(build_coxeter_datum(fam, rank));
    RootCtx ctx = root_ctx(box, (1u << rank) - 1);
    NBCStructure nbc(ctx);
    std::vector<long long> dims = os_dimension_oracle(ctx);
    REQUIRE((int)dims.size() == rank + 1);
    long long total = 0;
    for (int d = 0; d <= rank; ++d) {
      CHECK((long long)nbc.basis(d).size() == dims[d]);
      total += dims[d];
    }
    CHECK(total == (long long)box->size());
  }
}

TEST_CASE("A2 and B2 dimension oracle values") {
  BoxPtr a2 = build_group_box(build_coxeter_datum(Family::A, 2));
  CHECK(os_dimension_oracle(root_ctx(a2, 0b11)) ==
        std::vector<long long>{1, 3, 2});
  BoxPtr b2 = build_group_box(build_coxeter_datum(Family::B, 2));
  CHECK(os_dimension_oracle(root_ctx(b2, 0b11)) ==
        std::vector<long long>{1, 4, 3});
}

TEST_CASE("coeff on the A2 worked example") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::A, 2));
  NBCStructure nbc(root_ctx(box, 0b11));
  // r1 r2 = r1 r3 - r2 r3
  CHECK(nbc.coeff(2, 0b011, 0b101) == Rational(1));
  CHECK(nbc.coeff(2, 0b011, 0b110) == Rational(-1));
  // basis elements expand trivially
  CHECK(nbc.coeff(2, 0b101, 0b101) == Rational(1));
  CHECK(nbc.coeff(2, 0b101, 0b110) == Rational(0));
  // lexicographically larger monomials cannot contribute
  CHECK(nbc.coeff(2, 0b110, 0b101) == Rational(0));
}

TEST_CASE("coeff agrees with the dense quotient expansion") {
  for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 2},
                           {Family::A, 3}}) {
    BoxPtr box = build_group_box(build_coxeter_datum(fam, rank));
    NBCStructure nbc(root_ctx(box, (1u << rank) - 1));
    for (int d = 0; d <= rank; ++d) {
      OracleExpansion oe = oracle_expand(nbc, d);
      const std::vector<uint64_t>& basis = nbc.basis(d);
      for (size_t m = 0; m < oe.monos.size(); ++m)
        for (size_t b = 0; b < basis.size(); ++b)
          CHECK(nbc.coeff(d, oe.monos[m], basis[b]) == oe.coeffs[m][b]);
    }
  }
}

TEST_CASE("omega on A2") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::A, 2));
  GrpPtr w = whole_group(box);
  NBCStructure nbc(root_ctx(box, 0b11));
  // identity: sum over degrees is |W|
  std::vector<Rational> degs = omega_degrees(nbc, box->identity());
  CHECK(degs == std::vector<Rational>{1, 3, 2});

  // top-degree character on classes (e, transposition, 3-cycle) = (2, 0, -1)
  std::vector<Rational> top = omega_character(nbc, *w, /*top_only=*/true);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == Rational(2));
  CHECK(top[1] == Rational(0));
  CHECK(top[2] == Rational(-1));
}

TEST_CASE("omega values are independent of the root order tie-break") {
  for (auto [fam, rank] : {std::pair{Family::A, 3}, {Family::B, 3}}) {
    BoxPtr box1 = build_group_box(build_coxeter_datum(fam, rank));
    BoxPtr box2 = build_group_box(
        build_coxeter_datum(fam, rank, RootOrder::ReversedTie));
    GrpPtr w1 = whole_group(box1);
    GrpPtr w2 = whole_group(box2);
    NBCStructure nbc1(root_ctx(box1, (1u << rank) - 1));
    NBCStructure nbc2(root_ctx(box2, (1u << rank) - 1));
    for (int d = 0; d <= rank; ++d)
      CHECK(nbc1.basis(d).size() == nbc2.basis(d).size());

    // translate elements between the two indexings through root vectors
    const CoxeterDatum& d1 = box1->datum();
    const CoxeterDatum& d2 = box2->datum();
    for (const ConjClass& c : w1->classes) {
      Element e1 = box1->element(c.rep);
      Element e2 = Element::identity(d2.n_pos);
      for (int r = 0; r < d2.n_pos; ++r) {
        int src = d1.root_index.at(d2.roots[r]);
        unsigned im = e1.image(src);
        long long sign = 1;
        if (im >= (unsigned)d1.n_pos) {
          im -= d1.n_pos;
          sign = -1;
        }
        std::vector<long long> v = d1.roots[im];
        for (long long& x : v) x *= sign;
        e2.img[r] = (uint8_t)d2.root_of_vector(v);
      }
      uint32_t s2 = box2->serial_of(e2);
      for (int deg = 0; deg <= rank; ++deg)
        CHECK(nbc1.trace(deg, c.rep) == nbc2.trace(deg, s2));
    }
  }
}

TEST_CASE("early cutoff does not change traces") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 3));
  GrpPtr w = whole_group(box);
  NBCStructure nbc(root_ctx(box, 0b111));
  for (const ConjClass& c : w->classes)
    for (int d = 0; d <= 3; ++d)
      CHECK(nbc.trace(d, c.rep, true) == nbc.trace(d, c.rep, false));
}

TEST_CASE("B5 top NBC count is the product of the exponents") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 5));
  NBCStructure nbc(root_ctx(box, 0b11111));
  CHECK(nbc.basis(5).size() == 945);  // 1*3*5*7*9
}

TEST_CASE("parabolic arrangement inside B5") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 5));
  unsigned l = 0b11011;  // A2 x B2
  RootCtx ctx = root_ctx(box, l);
  CHECK(ctx.count == 7);  // 3 + 4 positive roots
  NBCStructure nbc(ctx);
  CHECK(nbc.basis(4).size() == 6);  // (1*2) * (1*3)

  // restriction of the extension character to W_L is the native top trace
  GrpPtr wl = parabolic_subgroup(box, l);
  GrpPtr n = normalizer_of_parabolic(box, l);
  std::vector<Rational> ext = omega_tilde(nbc, *n);
  for (const ConjClass& c : wl->classes) {
    int nc = n->class_index(c.rep);
    REQUIRE(nc >= 0);
    CHECK(ext[nc] == nbc.trace(4, c.rep));
  }
}

TEST_CASE("sign character and alpha") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 3));
  GrpPtr w = whole_group(box);
  std::vector<Rational> eps = sign_character(*w);
  for (size_t i = 0; i < w->classes.size(); ++i) {
    CHECK(eps[i] == det_on_v(box->datum(), box->element(w->classes[i].rep)));
  }

  // alpha for L = S is identically 1 (zero fixed space)
  std::vector<Rational> a_s = alpha_character(*w, *w);
  for (const Rational& v : a_s) CHECK(v == Rational(1));

  // alpha_L is 1 on W_L itself
  unsigned l = 0b011;
  GrpPtr wl = parabolic_subgroup(box, l);
  GrpPtr n = normalizer_of_parabolic(box, l);
  std::vector<Rational> a_l = alpha_character(*wl, *n);
  for (const ConjClass& c : wl->classes) {
    int nc = n->class_index(c.rep);
    CHECK(a_l[nc] == Rational(1));
  }
}

TEST_CASE("alpha_w equals alpha_L for cuspidal elements") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 4));
  unsigned l = 0b0011;  // B2
  GrpPtr wl = parabolic_subgroup(box, l);
  GrpPtr n = normalizer_of_parabolic(box, l);
  GrpPtr whole = whole_group(box);
  for (int ci : cuspidal_class_indices(*wl)) {
    uint32_t rep = wl->classes[ci].rep;
    GrpPtr c = centralizer(whole, rep);
    // centralizers of cuspidal elements lie in the parabolic normalizer
    for (uint32_t m : c->members) CHECK(n->contains(m));
    std::vector<Rational> a_l = alpha_character(*wl, *n);
    for (uint32_t z : c->members) {
      int nc = n->class_index(z);
      CHECK(alpha_w(*box, rep, z) == a_l[nc]);
    }
  }
}
