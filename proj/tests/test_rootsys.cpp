#include "doctest.h"

#include <map>

#include "coxos/coxgroup.hpp"
#include "coxos/rootsys.hpp"

using namespace coxos;

TEST_CASE("root counts per type") {
  CHECK(build_coxeter_datum(Family::A, 2).n_pos == 3);
  CHECK(build_coxeter_datum(Family::A, 4).n_pos == 10);
  CHECK(build_coxeter_datum(Family::B, 2).n_pos == 4);
  CHECK(build_coxeter_datum(Family::B, 5).n_pos == 25);
  CHECK(build_coxeter_datum(Family::D, 4).n_pos == 12);
  CHECK(build_coxeter_datum(Family::D, 5).n_pos == 20);
  CHECK(build_coxeter_datum(Family::E, 6).n_pos == 36);
  CHECK_THROWS(build_coxeter_datum(Family::E, 5));
  CHECK_THROWS(build_coxeter_datum(Family::D, 3));
}

TEST_CASE("A2 canonical root order") {
  CoxeterDatum d = build_coxeter_datum(Family::A, 2);
  // alpha1, alpha2, alpha1+alpha2
  CHECK(d.roots[0] == std::vector<long long>{1, 0});
  CHECK(d.roots[1] == std::vector<long long>{0, 1});
  CHECK(d.roots[2] == std::vector<long long>{1, 1});
}

TEST_CASE("simple reflections act as expected on A2") {
  CoxeterDatum d = build_coxeter_datum(Family::A, 2);
  Element s1 = simple_reflection(d, 0);
  CHECK(s1.length() == 1);
  CHECK(descent_mask(d, s1) == 1u);
  // s1 sends root 2 (alpha2, index 1) to root 3 (alpha1+alpha2, index 2)
  CHECK(s1.image(1) == 2);
  // and root 1 to its negative (index 1+N with N=3, 0-based: 0 -> 3)
  CHECK(s1.image(0) == 3);
  CHECK(compose(s1, s1).is_identity());
}

TEST_CASE("element negation symmetry and lengths") {
  CoxeterDatum d = build_coxeter_datum(Family::B, 2);
  Element w = element_from_word(d, {0, 1, 0, 1});
  CHECK(w.length() == 4);
  for (unsigned i = 0; i < (unsigned)d.n_pos; ++i) {
    unsigned a = w.image(i), b = w.image(i + d.n_pos);
    CHECK((a + d.n_pos) % (2 * d.n_pos) == b);
  }
  CHECK(element_from_word(d, {}).is_identity());
  // braid relation in A2
  CoxeterDatum a2 = build_coxeter_datum(Family::A, 2);
  CHECK(element_from_word(a2, {0, 1, 0}) == element_from_word(a2, {1, 0, 1}));
}

TEST_CASE("reflection_for_root") {
  CoxeterDatum d = build_coxeter_datum(Family::A, 2);
  for (int i = 0; i < d.rank; ++i)
    CHECK(reflection_for_root(d, d.gen_root[i]) == simple_reflection(d, i));
  // highest root of A2 is alpha1+alpha2 = word 121
  Element t = reflection_for_root(d, 2);
  CHECK(t == element_from_word(d, {0, 1, 0}));
  CHECK(compose(t, t).is_identity());
  // sends its defining root to its negative
  CHECK(t.image(2) == 2u + d.n_pos);

  CoxeterDatum b3 = build_coxeter_datum(Family::B, 3);
  for (int r = 0; r < b3.n_pos; ++r) {
    Element refl = reflection_for_root(b3, r);
    CHECK(compose(refl, refl).is_identity());
    CHECK(refl.image(r) == (unsigned)(r + b3.n_pos));
  }
}

TEST_CASE("length generating function matches degrees for rank <= 3") {
  for (auto [fam, rank] : {std::pair{Family::A, 3}, {Family::B, 3},
                           {Family::A, 2}, {Family::B, 2}}) {
    CoxeterDatum d = build_coxeter_datum(fam, rank);
    BoxPtr box = build_group_box(d);
    std::vector<int> degs = reflection_degrees(fam, rank);
    // product of (t^d - 1)/(t - 1)
    std::vector<long long> poly{1};
    for (int deg : degs) {
      std::vector<long long> factor(deg, 1);
      std::vector<long long> next(poly.size() + factor.size() - 1, 0);
      for (size_t i = 0; i < poly.size(); ++i)
        for (size_t j = 0; j < factor.size(); ++j) next[i + j] += poly[i];
      poly = next;
    }
    std::map<unsigned, long long> by_len;
    for (uint32_t s = 0; s < box->size(); ++s) by_len[box->length(s)]++;
    for (size_t k = 0; k < poly.size(); ++k) CHECK(by_len[k] == poly[k]);
    long long total = 1;
    for (int deg : degs) total *= deg;
    CHECK((long long)box->size() == total);
  }
}

TEST_CASE("fixed spaces") {
  CoxeterDatum d = build_coxeter_datum(Family::B, 2);
  Element id = Element::identity(d.n_pos);
  CHECK(fixed_space(d, id).size() == 2);
  Element w0 = element_from_word(d, {0, 1, 0, 1});
  CHECK(fixed_space(d, w0).empty());  // acts as -1
  Element cox = element_from_word(d, {0, 1});
  CHECK(fixed_space(d, cox).empty());
  Element s1 = simple_reflection(d, 0);
  auto fs = fixed_space(d, s1);
  CHECK(fs.size() == 1);
}

TEST_CASE("matrix_on_v is a homomorphism and det matches sign") {
  CoxeterDatum d = build_coxeter_datum(Family::B, 3);
  Element a = element_from_word(d, {0, 1, 2});
  Element b = element_from_word(d, {2, 0});
  CHECK(matrix_on_v(d, compose(a, b)) ==
        matrix_on_v(d, a) * matrix_on_v(d, b));
  BoxPtr box = build_group_box(d);
  for (uint32_t s = 0; s < box->size(); ++s) {
    Element w = box->element(s);
    Rational det = det_on_v(d, w);
    CHECK(det == Rational(w.length() % 2 == 0 ? 1 : -1));
  }
}
