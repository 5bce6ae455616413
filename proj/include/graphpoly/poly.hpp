#pragma once

// Dense univariate and sparse bivariate polynomials with exact integer
// coefficients, evaluated over the golden field or over certified intervals.

#include "graphpoly/golden.hpp"
#include "graphpoly/interval.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphpoly {

struct UniPoly {
  std::vector<Integer> c;  // c[i] is the coefficient of x^i

  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Integer& v) { return UniPoly({v}); }
  static UniPoly x() { return UniPoly({Integer(0), Integer(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

  GoldenNum eval(const GoldenNum& x) const;
  Rational eval(const Rational& x) const;
  RealInterval eval(const RealInterval& x) const;

  std::string to_string(const std::string& var = "x") const;
};

UniPoly operator+(const UniPoly& p, const UniPoly& q);
UniPoly operator-(const UniPoly& p, const UniPoly& q);
UniPoly operator*(const UniPoly& p, const UniPoly& q);
UniPoly operator*(const Integer& k, const UniPoly& p);
bool operator==(const UniPoly& p, const UniPoly& q);
UniPoly uni_pow(const UniPoly& p, unsigned e);

struct BivarPoly {
  // (i, j) -> coefficient of x^i y^j; zero coefficients are absent.
  std::map<std::pair<int, int>, Integer> c;

  static BivarPoly constant(const Integer& v);
  static BivarPoly x();
  static BivarPoly y();

  bool is_zero() const { return c.empty(); }
  void add_term(int i, int j, const Integer& v);

  GoldenNum eval(const GoldenNum& x, const GoldenNum& y) const;
  // Substitute univariate polynomials for x and y.
  UniPoly eval_poly(const UniPoly& px, const UniPoly& py) const;

  std::string to_string() const;
};

BivarPoly operator+(const BivarPoly& p, const BivarPoly& q);
BivarPoly operator*(const BivarPoly& p, const BivarPoly& q);
bool operator==(const BivarPoly& p, const BivarPoly& q);
BivarPoly bivar_pow(const BivarPoly& p, unsigned e);

}  // namespace graphpoly
