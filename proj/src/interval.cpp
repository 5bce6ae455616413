#include "graphpoly/interval.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace graphpoly {

RealInterval::RealInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("RealInterval: lo > hi");
}

RealInterval operator+(const RealInterval& x, const RealInterval& y) {
  return RealInterval(x.lo + y.lo, x.hi + y.hi);
}

RealInterval operator-(const RealInterval& x, const RealInterval& y) {
  return RealInterval(x.lo - y.hi, x.hi - y.lo);
}

RealInterval operator-(const RealInterval& x) { return RealInterval(-x.hi, -x.lo); }

RealInterval operator*(const RealInterval& x, const RealInterval& y) {
  Rational p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return RealInterval(lo, hi);
}

RealInterval interval_abs(const RealInterval& x) {
  if (x.lo >= 0) return x;
  if (x.hi <= 0) return -x;
  return RealInterval(Rational(0), std::max(Rational(-x.lo), x.hi));
}

RealInterval interval_pow(const RealInterval& x, unsigned e) {
  RealInterval acc{Rational(1), Rational(1)};
  for (unsigned k = 0; k < e; ++k) acc = acc * x;
  return acc;
}

RealInterval golden_to_interval(const GoldenNum& x, unsigned bits) {
  if (x.b == 0) return RealInterval(x.a);
  // phi = lim F(k+1)/F(k); consecutive Fibonacci ratios bracket phi and the
  // bracket width is 1/(F(k) F(k+1)), far below 2^-bits for k ~ bits.
  Integer f0 = 1, f1 = 1;
  unsigned steps = std::max(8u, static_cast<unsigned>(bits * 3 / 4 + 8));
  for (unsigned k = 0; k < steps; ++k) {
    Integer f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
  // Ratios f1/f0 and (f0+f1)/f1 bracket phi (in some order); sort them.
  Rational r1(f1, f0), r2(f0 + f1, f1);
  Rational plo = std::min(r1, r2), phi_hi = std::max(r1, r2);
  RealInterval phi(plo, phi_hi);
  RealInterval b(x.b);
  RealInterval a(x.a);
  return a + b * phi;
}

Cert cert_le(const RealInterval& x, const RealInterval& y) {
  if (x.hi <= y.lo) return Cert::kTrue;
  if (x.lo > y.hi) return Cert::kFalse;
  return Cert::kUndecided;
}

Cert cert_lt(const RealInterval& x, const RealInterval& y) {
  if (x.hi < y.lo) return Cert::kTrue;
  if (x.lo >= y.hi) return Cert::kFalse;
  return Cert::kUndecided;
}

std::string to_string(const RealInterval& x) {
  return "[" + rational_to_string(x.lo) + ", " + rational_to_string(x.hi) + "]";
}

namespace {

// Exact rational value of an mpfr number (always representable: dyadic).
Rational mpfr_to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  mpz_t m;
  mpz_init(m);
  mpfr_exp_t e = mpfr_get_z_2exp(m, x);
  Integer mant(m);
  mpz_clear(m);
  Rational r(mant);
  if (e > 0) {
    for (mpfr_exp_t k = 0; k < e; ++k) r *= 2;
  } else {
    for (mpfr_exp_t k = 0; k < -e; ++k) r /= 2;
  }
  return r;
}

// Certified enclosure of cos(2*pi/m) for m >= 3 (angle in (0, 2pi/3], where
// cos is strictly decreasing), at the given precision.
RealInterval cos_two_pi_over(unsigned m, unsigned bits) {
  mpfr_t pi_lo, pi_hi, ang_lo, ang_hi, c_lo, c_hi;
  mpfr_inits2(bits, pi_lo, pi_hi, ang_lo, ang_hi, c_lo, c_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  // angle = 2*pi/m, enclosed by directed rounding at each step
  mpfr_mul_ui(ang_lo, pi_lo, 2, MPFR_RNDD);
  mpfr_div_ui(ang_lo, ang_lo, m, MPFR_RNDD);
  mpfr_mul_ui(ang_hi, pi_hi, 2, MPFR_RNDU);
  mpfr_div_ui(ang_hi, ang_hi, m, MPFR_RNDU);
  // cos decreasing on [0, pi]: lower bound from the upper angle and vice versa
  mpfr_cos(c_lo, ang_hi, MPFR_RNDD);
  mpfr_cos(c_hi, ang_lo, MPFR_RNDU);
  Rational lo = mpfr_to_rational(c_lo);
  Rational hi = mpfr_to_rational(c_hi);
  mpfr_clears(pi_lo, pi_hi, ang_lo, ang_hi, c_lo, c_hi, static_cast<mpfr_ptr>(nullptr));
  return RealInterval(lo, hi);
}

}  // namespace

BerahaValue beraha(unsigned n, unsigned bits) {
  if (n == 0) throw std::invalid_argument("beraha: n >= 1 required");
  switch (n) {
    case 1: return GoldenNum(Rational(0));                        // 2+2cos(pi) = 0
    case 2: return GoldenNum(Rational(1));                        // 2+2cos(2pi/3)
    case 3: return GoldenNum(Rational(2));                        // 2+2cos(pi/2)
    case 4: return GoldenNum(Rational(1), Rational(1));           // phi + 1
    case 5: return GoldenNum(Rational(3));                        // 2+2cos(pi/3)
    case 9: return GoldenNum(Rational(2), Rational(1));           // phi + 2
    default: break;
  }
  RealInterval c = cos_two_pi_over(n + 1, bits);
  RealInterval two(Rational(2));
  return two + two * c;
}

RealInterval beraha_interval(unsigned n, unsigned bits) {
  BerahaValue v = beraha(n, bits);
  if (std::holds_alternative<RealInterval>(v)) return std::get<RealInterval>(v);
  return golden_to_interval(std::get<GoldenNum>(v), bits);
}

}  // namespace graphpoly
