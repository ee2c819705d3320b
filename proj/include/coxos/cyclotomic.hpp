#pragma once

#include <string>
#include <vector>

#include "coxos/rational.hpp"

namespace coxos {

/// Element of a cyclotomic field, stored as a rational polynomial in
/// zeta_n = e^(2*pi*i/n) of degree < phi(n), reduced modulo the n-th
/// cyclotomic polynomial. Two values are equal iff their reductions agree
/// after lifting to the lcm of the conductors, so equality is exact.
class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& q) : n_(1), c_{q} {}
  Cyclotomic(long long v) : n_(1), c_{Rational(v)} {}
  Cyclotomic(int v) : n_(1), c_{Rational(v)} {}

  /// zeta_n^k
  static Cyclotomic root_of_unity(long long n, long long k = 1);

  long long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // fails unless is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic pow(long long e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Rewrites the value over the smallest cyclotomic field containing it.
  Cyclotomic reduced() const;

  /// Canonical literal form, e.g. "-1/2+E(3)^2". Parseable by parse().
  std::string str() const;

  /// Parses the literal grammar: signed sums of terms `q`, `q*E(n)^k`
  /// or `E(n)^k` with q a rational `a/b`.
  static Cyclotomic parse(const std::string& text);

  /// Lift to a field with conductor m (n | m).
  Cyclotomic lifted(long long m) const;

private:
  Cyclotomic(long long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

  long long n_;               // conductor
  std::vector<Rational> c_;   // phi(n) coefficients on zeta_n^0..zeta_n^(phi(n)-1)

  friend struct CycOps;
};

/// Integer coefficients of the n-th cyclotomic polynomial (cached).
const std::vector<long long>& cyclotomic_polynomial(long long n);

long long euler_phi(long long n);

}  // namespace coxos
