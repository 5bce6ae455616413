#pragma once

// Exact arithmetic in the quadratic field Q(sqrt(5)) on the basis {1, phi},
// where phi = (1+sqrt(5))/2 satisfies phi^2 = phi + 1.  All comparisons are
// exact; there is no floating point anywhere on the decision paths.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace graphpoly {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

int sign_of(const Rational& r);
int sign_of(const Integer& z);
std::string rational_to_string(const Rational& r);

struct GoldenNum {
  Rational a{0};  // rational part
  Rational b{0};  // coefficient of phi

  GoldenNum() = default;
  GoldenNum(int v) : a(v) {}
  GoldenNum(long v) : a(v) {}
  GoldenNum(const Integer& v) : a(v) {}
  GoldenNum(const Rational& r) : a(r) {}
  GoldenNum(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static GoldenNum phi() { return GoldenNum(Rational(0), Rational(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
};

GoldenNum operator+(const GoldenNum& x, const GoldenNum& y);
GoldenNum operator-(const GoldenNum& x, const GoldenNum& y);
GoldenNum operator-(const GoldenNum& x);
GoldenNum operator*(const GoldenNum& x, const GoldenNum& y);
GoldenNum operator/(const GoldenNum& x, const GoldenNum& y);
GoldenNum& operator+=(GoldenNum& x, const GoldenNum& y);
GoldenNum& operator-=(GoldenNum& x, const GoldenNum& y);
GoldenNum& operator*=(GoldenNum& x, const GoldenNum& y);
bool operator==(const GoldenNum& x, const GoldenNum& y);
bool operator!=(const GoldenNum& x, const GoldenNum& y);

// Field conjugate: phi -> 1 - phi (i.e. sqrt(5) -> -sqrt(5)).
GoldenNum galois_conjugate(const GoldenNum& x);

// x * galois_conjugate(x), always rational; zero only for x = 0.
Rational field_norm(const GoldenNum& x);

GoldenNum golden_inverse(const GoldenNum& x);  // throws on zero
GoldenNum golden_pow(const GoldenNum& x, long e);  // negative e allowed for nonzero x

// Exact sign of a + b*phi as a real number (phi taken positive).  {-1, 0, +1}.
int golden_sign(const GoldenNum& x);

// Exact comparison x < y etc. via golden_sign(x - y).
bool operator<(const GoldenNum& x, const GoldenNum& y);
bool operator<=(const GoldenNum& x, const GoldenNum& y);
bool operator>(const GoldenNum& x, const GoldenNum& y);
bool operator>=(const GoldenNum& x, const GoldenNum& y);

GoldenNum golden_abs(const GoldenNum& x);

double to_double(const GoldenNum& x);

// Canonical printing: "p/q" when the phi-part vanishes, else "p/q + r/s*phi"
// (minus sign folded as "p/q - r/s*phi").  Denominator 1 printed without "/1".
std::string to_string(const GoldenNum& x);

// If x equals s*phi^k with s in {+1,-1} and |k| <= 256, return e.g. "-phi^2",
// "phi^-3", "1", "-1", "phi".  Used as a human-facing annotation.
std::optional<std::string> golden_power_form(const GoldenNum& x);

// Parse a small expression grammar over rationals and phi:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' ['-'] integer)?
//   atom   := rational | 'phi' | 'sqrt5' | '(' expr ')'
// Returns nullopt on malformed input.
std::optional<GoldenNum> parse_golden(const std::string& text);

}  // namespace graphpoly
