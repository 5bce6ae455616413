#pragma once

// Exact univariate rational functions over the rationals, used as the generic
// coefficient field for diagram-algebra constructions.  Fractions are kept
// reduced (monic denominator, gcd 1) so equality is structural.

#include "graphpoly/golden.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace graphpoly {

struct QPoly {
  std::vector<Rational> c;  // c[i] is the coefficient of d^i

  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static QPoly constant(const Rational& v) { return QPoly({v}); }
  static QPoly variable() { return QPoly({Rational(0), Rational(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& leading() const { return c.back(); }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  GoldenNum eval(const GoldenNum& x) const {
    GoldenNum acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + GoldenNum(*it);
    return acc;
  }
};

inline QPoly operator+(const QPoly& p, const QPoly& q) {
  std::vector<Rational> r(std::max(p.c.size(), q.c.size()), Rational(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
  return QPoly(std::move(r));
}

inline QPoly operator-(const QPoly& p, const QPoly& q) {
  std::vector<Rational> r(std::max(p.c.size(), q.c.size()), Rational(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] -= q.c[i];
  return QPoly(std::move(r));
}

inline QPoly operator*(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return QPoly();
  std::vector<Rational> r(p.c.size() + q.c.size() - 1, Rational(0));
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
  return QPoly(std::move(r));
}

inline bool operator==(const QPoly& p, const QPoly& q) { return p.c == q.c; }

// division with remainder: p = q * quot + rem
inline std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& p, const QPoly& q) {
  if (q.is_zero()) throw std::domain_error("qpoly_divmod: division by zero polynomial");
  std::vector<Rational> rem = p.c;
  std::vector<Rational> quot;
  int dq = q.degree();
  while (static_cast<int>(rem.size()) - 1 >= dq) {
    int dr = static_cast<int>(rem.size()) - 1;
    Rational f = rem.back() / q.leading();
    if (static_cast<int>(quot.size()) < dr - dq + 1) quot.resize(dr - dq + 1, Rational(0));
    quot[dr - dq] = f;
    for (int i = 0; i <= dq; ++i) rem[dr - dq + i] -= f * q.c[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

inline QPoly qpoly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = qpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rational inv_lead = Rational(1) / a.leading();
    for (auto& x : a.c) x *= inv_lead;  // monic normalization
  }
  return a;
}

// A reduced fraction of polynomials in one variable.
struct RatFunc {
  QPoly num, den;  // invariant: den monic, gcd(num, den) = 1; zero is 0/1

  RatFunc() : den(QPoly::constant(1)) {}
  RatFunc(int v) : num(QPoly::constant(Rational(v))), den(QPoly::constant(1)) { normalize(); }
  RatFunc(const Rational& v) : num(QPoly::constant(v)), den(QPoly::constant(1)) { normalize(); }
  RatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }
  static RatFunc variable() { return RatFunc(QPoly::variable(), QPoly::constant(1)); }

  void normalize() {
    if (num.is_zero()) {
      den = QPoly::constant(1);
      return;
    }
    QPoly g = qpoly_gcd(num, den);
    if (g.degree() > 0 || g.leading() != 1) {
      num = qpoly_divmod(num, g).first;
      den = qpoly_divmod(den, g).first;
    }
    Rational lead = den.leading();
    if (lead != 1) {
      Rational inv = Rational(1) / lead;
      for (auto& x : num.c) x *= inv;
      for (auto& x : den.c) x *= inv;
    }
  }

  bool is_zero() const { return num.is_zero(); }

  Rational eval(const Rational& x) const {
    Rational dv = den.eval(x);
    if (dv == 0) throw std::domain_error("RatFunc::eval: pole");
    return num.eval(x) / dv;
  }
  GoldenNum eval(const GoldenNum& x) const {
    GoldenNum dv = den.eval(x);
    if (dv.is_zero()) throw std::domain_error("RatFunc::eval: pole");
    return num.eval(x) / dv;
  }

  std::string to_string(const std::string& var = "d") const;
};

inline RatFunc operator+(const RatFunc& p, const RatFunc& q) {
  return RatFunc(p.num * q.den + q.num * p.den, p.den * q.den);
}
inline RatFunc operator-(const RatFunc& p, const RatFunc& q) {
  return RatFunc(p.num * q.den - q.num * p.den, p.den * q.den);
}
inline RatFunc operator-(const RatFunc& p) { return RatFunc() - p; }
inline RatFunc operator*(const RatFunc& p, const RatFunc& q) {
  return RatFunc(p.num * q.num, p.den * q.den);
}
inline RatFunc operator/(const RatFunc& p, const RatFunc& q) {
  if (q.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(p.num * q.den, p.den * q.num);
}
inline bool operator==(const RatFunc& p, const RatFunc& q) {
  return p.num == q.num && p.den == q.den;
}
inline bool operator!=(const RatFunc& p, const RatFunc& q) { return !(p == q); }

inline std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.c[i] == 0) continue;
    if (!s.empty()) s += (p.c[i] > 0 ? " + " : " - ");
    else if (p.c[i] < 0)
      s += "-";
    Rational mag = p.c[i] > 0 ? p.c[i] : Rational(-p.c[i]);
    bool unit = (mag == 1) && i > 0;
    if (!unit) s += rational_to_string(mag);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

inline std::string RatFunc::to_string(const std::string& var) const {
  if (den.degree() == 0 && den.leading() == 1) return qpoly_to_string(num, var);
  return "(" + qpoly_to_string(num, var) + ")/(" + qpoly_to_string(den, var) + ")";
}

}  // namespace graphpoly
