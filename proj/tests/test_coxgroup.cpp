#include "doctest.h"

#include <set>

#include "coxos/coxgroup.hpp"

using namespace coxos;

namespace {

std::vector<int> word_of(const GroupBox& box, uint32_t s) {
  return lex_least_word(box.datum(), box.element(s));
}

}  // namespace

TEST_CASE("group sizes") {
  CHECK(build_group_box(build_coxeter_datum(Family::A, 2))->size() == 6);
  CHECK(build_group_box(build_coxeter_datum(Family::B, 2))->size() == 8);
  CHECK(build_group_box(build_coxeter_datum(Family::B, 4))->size() == 384);
  CHECK(build_group_box(build_coxeter_datum(Family::D, 4))->size() == 192);
}

TEST_CASE("B2 longest element via word 1212") {
  CoxeterDatum d = build_coxeter_datum(Family::B, 2);
  BoxPtr box = build_group_box(d);
  Element w0 = element_from_word(d, {0, 1, 0, 1});
  CHECK(w0.length() == 4);
  for (uint32_t s = 0; s < box->size(); ++s)
    CHECK(box->length(s) <= 4);
  CHECK(descent_mask(d, w0) == 0b11u);
}

TEST_CASE("parabolic transversal in B2") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 2));
  GrpPtr w = whole_group(box);
  // L = S, J = {1}: minimal coset representatives e, 2, 21, 212
  std::vector<uint32_t> xs = parabolic_transversal(*w, 0b01);
  std::set<std::vector<int>> words;
  for (uint32_t x : xs) words.insert(word_of(*box, x));
  std::set<std::vector<int>> expect = {{}, {1}, {1, 0}, {1, 0, 1}};
  CHECK(words == expect);
  CHECK(xs.size() * 2 == box->size());

  // J = empty: everything; J = L: identity only
  CHECK(parabolic_transversal(*w, 0).size() == box->size());
  CHECK(parabolic_transversal(*w, 0b11).size() == 1);
}

TEST_CASE("parabolic coordinates") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 2));
  const CoxeterDatum& d = box->datum();
  unsigned l_mask = 0b01;  // L = {1}
  uint32_t w0 = box->serial_of(element_from_word(d, {0, 1, 0, 1}));
  auto [u, x] = parabolic_coordinates(*box, w0, l_mask);
  CHECK(word_of(*box, u) == std::vector<int>{0});
  CHECK(word_of(*box, x) == std::vector<int>{1, 0, 1});
  CHECK(box->mul(u, x) == w0);

  // bijectivity and length additivity over the whole group
  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (uint32_t s = 0; s < box->size(); ++s) {
    auto [a, b] = parabolic_coordinates(*box, s, l_mask);
    CHECK(box->mul(a, b) == s);
    CHECK(box->length(a) + box->length(b) == box->length(s));
    CHECK((box->descents(b) & l_mask) == 0);
    seen.insert({a, b});
  }
  CHECK(seen.size() == box->size());
}

TEST_CASE("conjugacy classes of small groups") {
  GrpPtr s3 = whole_group(build_group_box(build_coxeter_datum(Family::A, 2)));
  REQUIRE(s3->classes.size() == 3);
  std::multiset<size_t> sizes;
  for (const auto& c : s3->classes) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 3, 2});

  GrpPtr b2 = whole_group(build_group_box(build_coxeter_datum(Family::B, 2)));
  CHECK(b2->classes.size() == 5);

  // representatives are minimal length, classes ordered by element order
  for (size_t i = 0; i + 1 < b2->classes.size(); ++i)
    CHECK(b2->classes[i].order <= b2->classes[i + 1].order);
  CHECK(b2->classes[0].rep == b2->box->identity());
  CHECK(b2->classes[0].label == "1a");
}

TEST_CASE("centralizers") {
  BoxPtr box = build_group_box(build_coxeter_datum(Family::B, 2));
  GrpPtr w = whole_group(box);
  GrpPtr cid = centralizer(w, box->identity());
  CHECK(cid->size() == 8);
  uint32_t w0 = box->serial_of(element_from_word(box->datum(), {0, 1, 0, 1}));
  CHECK(centralizer(w, w0)->size() == 8);  // w0 central in B2
  uint32_t s1 = box->gen(0);
  GrpPtr c1 = centralizer(w, s1);
  CHECK(c1->size() == 4);
  for (uint32_t m : c1->members) CHECK(box->mul(m, s1) == box->mul(s1, m));
}

TEST_CASE("normalizer complements and bulky test") {
  BoxPtr b5 = build_group_box(build_coxeter_datum(Family::B, 5));
  unsigned l = 0b11011;  // {1,2,4,5}
  CHECK_FALSE(is_bulky(*b5, l));
  GrpPtr n = normalizer_of_parabolic(b5, l);
  GrpPtr wl = parabolic_subgroup(b5, l);
  CHECK(wl->size() == 48);
  CHECK(n->size() % wl->size() == 0);

  // L = S: complement trivial, bulky
  unsigned s_mask = (1u << 5) - 1;
  CHECK(normalizer_complement(*b5, s_mask) ==
        std::vector<uint32_t>{b5->identity()});
  CHECK(is_bulky(*b5, s_mask));
}

TEST_CASE("cuspidal classes") {
  BoxPtr b2 = build_group_box(build_coxeter_datum(Family::B, 2));
  GrpPtr w = whole_group(b2);
  // cuspidal classes of B2: the Coxeter class and the longest element class
  std::vector<int> cusp = cuspidal_class_indices(*w);
  CHECK(cusp.size() == 2);
  // identity class is not cuspidal
  CHECK_FALSE(w->classes[0].cuspidal);

  BoxPtr b5 = build_group_box(build_coxeter_datum(Family::B, 5));
  uint32_t w0 = 0;
  for (uint32_t s = 0; s < b5->size(); ++s)
    if (b5->length(s) == 25) w0 = s;
  CHECK(is_cuspidal_in(*b5, (1u << 5) - 1, w0));  // acts as -1
}

TEST_CASE("bn cuspidal representatives") {
  // B2, lambda = (2): c1 = word 12
  CuspidalRep r2 = bn_cuspidal_rep(2, {2});
  CHECK(r2.word == std::vector<int>{0, 1});
  // B2, lambda = (1,1): w = 1 212 the longest element, x1 = word 2
  CuspidalRep r11 = bn_cuspidal_rep(2, {1, 1});
  CHECK(r11.word == std::vector<int>{0, 1, 0, 1});
  bool has_x1 = false;
  for (auto& [name, word] : r11.gen_words)
    if (name == "x1") {
      has_x1 = true;
      CHECK(word == std::vector<int>{1});
    }
  CHECK(has_x1);

  // B5, lambda = (5): c1 = 12345, centralizer cyclic of order 10
  CuspidalRep r5 = bn_cuspidal_rep(5, {5});
  CHECK(r5.word == std::vector<int>{0, 1, 2, 3, 4});
  BoxPtr b5 = build_group_box(build_coxeter_datum(Family::B, 5));
  GrpPtr w = whole_group(b5);
  uint32_t rep = b5->serial_of(element_from_word(b5->datum(), r5.word));
  GrpPtr c = centralizer(w, rep);
  CHECK(c->size() == 10);
  CHECK(b5->order(rep) == 10);

  // every standard generator centralizes the representative
  for (const std::vector<int>& lam : partitions_of(5)) {
    CuspidalRep r = bn_cuspidal_rep(5, lam);
    Element wl = element_from_word(b5->datum(), r.word);
    for (auto& [name, gw] : r.gen_words) {
      Element g = element_from_word(b5->datum(), gw);
      CHECK(compose(g, wl) == compose(wl, g));
    }
    CHECK(is_cuspidal_in(*b5, (1u << 5) - 1, b5->serial_of(wl)));
  }
}

TEST_CASE("dn cuspidal representatives") {
  BoxPtr d5 = build_group_box(build_coxeter_datum(Family::D, 5));
  std::vector<DnCuspidalRep> reps = dn_cuspidal_reps(d5);
  CHECK(reps.size() == 3);  // partitions of 5 with an even number of parts
  GrpPtr w = whole_group(d5);
  for (const auto& r : reps) {
    CHECK(is_cuspidal_in(*d5, (1u << 5) - 1, r.rep_serial));
  }
  // lambda = (1,4): w = 1'2345, centralizer of order 8
  for (const auto& r : reps) {
    if (r.partition == std::vector<int>{1, 4}) {
      CHECK(r.word == std::vector<int>{0, 1, 2, 3, 4});
      CHECK(centralizer(w, r.rep_serial)->size() == 8);
      CHECK(d5->order(r.rep_serial) == 8);
    }
  }
}

TEST_CASE("class fusion") {
  BoxPtr b2 = build_group_box(build_coxeter_datum(Family::B, 2));
  GrpPtr w = whole_group(b2);
  std::vector<int> self_fusion = class_fusion(*w, *w);
  for (size_t i = 0; i < self_fusion.size(); ++i) CHECK(self_fusion[i] == (int)i);

  GrpPtr triv = subgroup_generated(b2, {}, "1");
  CHECK(triv->size() == 1);
  std::vector<int> f = class_fusion(*triv, *w);
  REQUIRE(f.size() == 1);
  CHECK(w->classes[f[0]].rep == b2->identity());

  // A1 x A1 inside B2: 4 classes land in distinct-or-fewer B2 classes
  GrpPtr a1a1 = subgroup_generated(
      b2, {b2->gen(0), b2->serial_of(element_from_word(
                           b2->datum(), {1, 0, 1}))},
      "A1xA1");
  CHECK(a1a1->size() == 4);
  std::vector<int> f2 = class_fusion(*a1a1, *w);
  CHECK(f2.size() == 4);
}

TEST_CASE("transversal sizes multiply for rank <= 4") {
  for (auto [fam, rank] :
       {std::pair{Family::A, 3}, {Family::B, 3}, {Family::B, 4}}) {
    BoxPtr box = build_group_box(build_coxeter_datum(fam, rank));
    unsigned smask = (1u << rank) - 1;
    for (unsigned l = 0; l <= smask; ++l) {
      GrpPtr wl = parabolic_subgroup(box, l);
      for (unsigned j = l;; j = (j - 1) & l) {
        GrpPtr wj = parabolic_subgroup(box, j);
        CHECK(parabolic_transversal(*wl, j).size() * wj->size() == wl->size());
        if (j == 0) break;
      }
    }
  }
}
