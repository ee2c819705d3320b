#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxos {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

#define COXOS_CHECK(cond, msg) \
  do {                         \
    if (!(cond)) ::coxos::fail(msg); \
  } while (0)

using int128 = __int128;

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) fail("rational: 128-bit overflow");
  return r;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) fail("rational: 128-bit overflow");
  return r;
}

std::string int128_to_string(int128 v);
int128 int128_from_string(const std::string& s);

/// Exact rational number on 128-bit integers. All arithmetic is
/// overflow-checked; anything that would not fit throws.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

  static Rational from_string(const std::string& s);

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  long long to_int() const {
    COXOS_CHECK(den_ == 1, "rational: not an integer");
    COXOS_CHECK(num_ <= INT64_MAX && num_ >= INT64_MIN, "rational: too large");
    return (long long)num_;
  }

  Rational operator-() const { return Rational(-num_, den_, 0); }

  Rational operator+(const Rational& o) const {
    int128 g = gcd128(den_, o.den_);
    int128 dl = den_ / g;
    int128 dr = o.den_ / g;
    int128 n = checked_add(checked_mul(num_, dr), checked_mul(o.num_, dl));
    int128 d = checked_mul(den_, dr);
    return Rational(n, d);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    int128 g1 = gcd128(num_, o.den_);
    int128 g2 = gcd128(o.num_, den_);
    return Rational(checked_mul(num_ / g1, o.num_ / g2),
                    checked_mul(den_ / g2, o.den_ / g1), 0);
  }
  Rational operator/(const Rational& o) const {
    COXOS_CHECK(!o.is_zero(), "rational: division by zero");
    return *this * Rational(o.den_, o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
  }

  std::string str() const;

private:
  // no-normalize constructor for internal use (sign already settled, gcd 1)
  Rational(int128 n, int128 d, int) : num_(n), den_(d) {}

  void normalize() {
    COXOS_CHECK(den_ != 0, "rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    int128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  int128 num_;
  int128 den_;
};

inline Rational operator*(long long a, const Rational& b) {
  return Rational(a) * b;
}

}  // namespace coxos
