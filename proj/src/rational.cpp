#include "coxos/rational.hpp"

namespace coxos {

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u) {
    s += char('0' + (int)(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return std::string(s.rbegin(), s.rend());
}

int128 int128_from_string(const std::string& s) {
  COXOS_CHECK(!s.empty(), "empty integer literal");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  COXOS_CHECK(i < s.size(), "bad integer literal: " + s);
  int128 v = 0;
  for (; i < s.size(); ++i) {
    COXOS_CHECK(s[i] >= '0' && s[i] <= '9', "bad integer literal: " + s);
    v = checked_add(checked_mul(v, 10), s[i] - '0');
  }
  return neg ? -v : v;
}

std::string Rational::str() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(int128_from_string(s), 1);
  return Rational(int128_from_string(s.substr(0, slash)),
                  int128_from_string(s.substr(slash + 1)));
}

}  // namespace coxos
