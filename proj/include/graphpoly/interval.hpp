#pragma once

// Certified real intervals with exact rational endpoints, plus the Beraha
// numbers B_n = 2 + 2 cos(2*pi/(n+1)).  Endpoints for the transcendental-free
// but non-quadratic values come from MPFR with directed rounding; every
// operation after that is exact rational arithmetic, so interval verdicts are
// certificates, not estimates.

#include "graphpoly/golden.hpp"

#include <string>
#include <variant>

namespace graphpoly {

struct RealInterval {
  Rational lo{0}, hi{0};

  RealInterval() = default;
  RealInterval(Rational l, Rational h);
  explicit RealInterval(const Rational& x) : lo(x), hi(x) {}

  Rational width() const { return hi - lo; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

RealInterval operator+(const RealInterval& x, const RealInterval& y);
RealInterval operator-(const RealInterval& x, const RealInterval& y);
RealInterval operator-(const RealInterval& x);
RealInterval operator*(const RealInterval& x, const RealInterval& y);
RealInterval interval_abs(const RealInterval& x);
RealInterval interval_pow(const RealInterval& x, unsigned e);

// Enclose a golden number in an interval (exact rational bounds on phi are
// derived from Fibonacci convergents at the requested tightness).
RealInterval golden_to_interval(const GoldenNum& x, unsigned bits = 128);

enum class Cert { kTrue, kFalse, kUndecided };

Cert cert_le(const RealInterval& x, const RealInterval& y);   // x <= y ?
Cert cert_lt(const RealInterval& x, const RealInterval& y);   // x <  y ?

std::string to_string(const RealInterval& x);

// Beraha number B_n, n >= 1.  Exact for n in {1,2,3,5,9} (rational) and n = 4
// (phi + 1), n = 9 (phi + 2); otherwise a certified interval computed at the
// given MPFR working precision.
using BerahaValue = std::variant<GoldenNum, RealInterval>;
BerahaValue beraha(unsigned n, unsigned bits = 128);

// Always-interval form (exact values become width-zero intervals).
RealInterval beraha_interval(unsigned n, unsigned bits = 128);

}  // namespace graphpoly
