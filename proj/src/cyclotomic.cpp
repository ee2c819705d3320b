#include "coxos/cyclotomic.hpp"

#include <map>
#include <numeric>

#include "coxos/matrix.hpp"

namespace coxos {

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// quotient of integer polynomials, exact division
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  COXOS_CHECK(!den.empty() && den.back() == 1, "poly division: non-monic");
  COXOS_CHECK(num.size() >= den.size(), "poly division: bad degrees");
  std::vector<long long> q(num.size() - den.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    long long c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (long long c : num) COXOS_CHECK(c == 0, "poly division: not exact");
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
  static std::map<long long, std::vector<long long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divide_exact(num, cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

namespace {

// reduce a rational polynomial modulo Phi_n, result has degree < phi(n)
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, long long n) {
  const std::vector<long long>& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;  // = euler_phi(n)
  for (size_t i = p.size(); i-- > deg;) {
    Rational c = p[i];
    if (c.is_zero()) continue;
    p[i] = 0;
    for (size_t j = 0; j < deg; ++j)
      p[i - deg + j] -= c * Rational(phi[j]);
  }
  p.resize(deg);
  return p;
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(long long n, long long k) {
  COXOS_CHECK(n >= 1, "root_of_unity: bad order");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> p(k + 1);
  p[k] = 1;
  return Cyclotomic(n, reduce_mod_phi(std::move(p), n));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& q : c_)
    if (!q.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  if (n_ == 1) return true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  // degree-0 residue mod Phi_n is the rational itself only if it equals
  // its own reduction; constant polynomials always are
  return true;
}

Rational Cyclotomic::rational_value() const {
  Cyclotomic r = reduced();
  COXOS_CHECK(r.n_ == 1, "cyclotomic: not rational");
  return r.c_[0];
}

Cyclotomic Cyclotomic::lifted(long long m) const {
  COXOS_CHECK(m % n_ == 0, "cyclotomic lift: conductor mismatch");
  if (m == n_) return *this;
  long long step = m / n_;
  std::vector<Rational> p(c_.size() ? (c_.size() - 1) * step + 1 : 1);
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return Cyclotomic(m, reduce_mod_phi(std::move(p), m));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long long m = std::lcm(n_, o.n_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rational& q : r.c_) q = -q;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long long m = std::lcm(n_, o.n_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<Rational> p(2 * a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      p[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyclotomic(m, reduce_mod_phi(std::move(p), m));
}

Cyclotomic Cyclotomic::pow(long long e) const {
  COXOS_CHECK(e >= 0, "cyclotomic pow: negative exponent");
  Cyclotomic r(Rational(1));
  Cyclotomic base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long long m = std::lcm(n_, o.n_);
  return lifted(m).c_ == o.lifted(m).c_;
}

Cyclotomic Cyclotomic::reduced() const {
  if (n_ == 1) return *this;
  if (is_zero()) return Cyclotomic(Rational(0));
  for (long long d = 1; d < n_; ++d) {
    if (n_ % d != 0) continue;
    // does the value lie in Q(zeta_d)? solve over the power basis of zeta_d
    long long pd = euler_phi(d);
    RatMatrix m(c_.size(), pd);
    for (long long j = 0; j < pd; ++j) {
      Cyclotomic basis = root_of_unity(d, j).lifted(n_);
      for (size_t i = 0; i < c_.size(); ++i) m.at(i, j) = basis.c_[i];
    }
    RatMatrix aug(c_.size(), pd + 1);
    for (size_t i = 0; i < c_.size(); ++i) {
      for (long long j = 0; j < pd; ++j) aug.at(i, j) = m.at(i, j);
      aug.at(i, pd) = c_[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == (size_t)pd) continue;  // inconsistent
    std::vector<Rational> sol(pd);
    for (size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = aug.at(i, pd);
    return Cyclotomic(d, std::move(sol));
  }
  return *this;
}

std::string Cyclotomic::str() const {
  Cyclotomic r = reduced();
  if (r.n_ == 1) return r.c_[0].str();
  std::string out;
  for (size_t k = 0; k < r.c_.size(); ++k) {
    const Rational& q = r.c_[k];
    if (q.is_zero()) continue;
    std::string term;
    if (k == 0) {
      term = q.str();
    } else {
      if (q == Rational(1))
        term = "";
      else if (q == Rational(-1))
        term = "-";
      else
        term = q.str() + "*";
      term += "E(" + std::to_string(r.n_) + ")";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

struct LiteralParser {
  const std::string& s;
  size_t pos = 0;

  explicit LiteralParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long parse_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    COXOS_CHECK(pos > start, "cyclotomic literal: expected integer at '" +
                                 s.substr(start) + "'");
    return (long long)int128_from_string(s.substr(start, pos - start));
  }

  Rational parse_rational() {
    long long num = parse_integer();
    if (eat('/')) return Rational(num, parse_integer());
    return Rational(num);
  }

  // E(n) or E(n)^k
  Cyclotomic parse_epow() {
    COXOS_CHECK(eat('E') && eat('('), "cyclotomic literal: expected E(");
    long long n = parse_integer();
    COXOS_CHECK(eat(')'), "cyclotomic literal: expected )");
    long long k = 1;
    if (eat('^')) k = parse_integer();
    return Cyclotomic::root_of_unity(n, k);
  }

  Cyclotomic parse_term(bool negate) {
    skip_ws();
    Cyclotomic t;
    if (pos < s.size() && s[pos] == 'E') {
      t = parse_epow();
    } else {
      Rational q = parse_rational();
      if (eat('*'))
        t = Cyclotomic(q) * parse_epow();
      else
        t = Cyclotomic(q);
    }
    return negate ? -t : t;
  }

  Cyclotomic parse_sum() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Cyclotomic acc = parse_term(neg);
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        acc += parse_term(false);
      else if (eat('-'))
        acc += parse_term(true);
      else
        fail("cyclotomic literal: unexpected '" + s.substr(pos) + "'");
    }
    return acc;
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(const std::string& text) {
  LiteralParser p(text);
  Cyclotomic v = p.parse_sum();
  return v.reduced();
}

}  // namespace coxos
