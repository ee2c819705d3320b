#include "doctest.h"

#include "coxos/cyclotomic.hpp"
#include "coxos/matrix.hpp"
#include "coxos/rational.hpp"

using namespace coxos;

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational(7, 1).str() == "7");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("matrix inverse and kernel") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  RatMatrix inv = inverse(m);
  CHECK(inv.at(0, 0) == Rational(1, 2));
  CHECK(inv.at(1, 0) == Rational(-1, 2));
  CHECK(inv.at(1, 1) == Rational(1));
  CHECK((m * inv) == RatMatrix::identity(2));

  RatMatrix k(1, 2);
  k.at(0, 0) = 1;
  k.at(0, 1) = -1;
  auto basis = kernel(k);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == basis[0][1]);

  RatMatrix d(2, 2);
  d.at(0, 0) = 1;
  d.at(0, 1) = 2;
  d.at(1, 0) = 3;
  d.at(1, 1) = 4;
  CHECK(determinant(d) == Rational(-2));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclotomic arithmetic") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3);
  CHECK(z3 + z3.pow(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(4).pow(2) == Cyclotomic(-1));
  // primitive 6th root equals -zeta_3^2
  CHECK(Cyclotomic::root_of_unity(6) == -z3.pow(2));
  CHECK(z3.pow(3) == Cyclotomic(1));

  Cyclotomic sum = Cyclotomic(Rational(1, 2)) + Cyclotomic::root_of_unity(8);
  CHECK(sum - Cyclotomic::root_of_unity(8) == Cyclotomic(Rational(1, 2)));
  CHECK((z3 * z3.pow(2)).is_rational());
  CHECK((z3 * z3.pow(2)).rational_value() == Rational(1));
}

TEST_CASE("cyclotomic literals") {
  CHECK(Cyclotomic::parse("E(3)+E(3)^2") == Cyclotomic(-1));
  CHECK(Cyclotomic::parse("-1") == Cyclotomic(-1));
  CHECK(Cyclotomic::parse("1/2*E(4)") ==
        Cyclotomic(Rational(1, 2)) * Cyclotomic::root_of_unity(4));
  CHECK(Cyclotomic::parse("E(6)") == -Cyclotomic::root_of_unity(3).pow(2));
  CHECK(Cyclotomic::parse("2-E(4)") ==
        Cyclotomic(2) - Cyclotomic::root_of_unity(4));
  // printing round-trips through the parser
  Cyclotomic v = Cyclotomic(Rational(2, 3)) - Cyclotomic::root_of_unity(12).pow(7);
  CHECK(Cyclotomic::parse(v.str()) == v);
  CHECK(Cyclotomic::root_of_unity(6).reduced().conductor() == 3);
}
