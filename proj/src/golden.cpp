#include "graphpoly/golden.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace graphpoly {

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

int sign_of(const Integer& z) {
  if (z > 0) return 1;
  if (z < 0) return -1;
  return 0;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

GoldenNum operator+(const GoldenNum& x, const GoldenNum& y) {
  return GoldenNum(x.a + y.a, x.b + y.b);
}

GoldenNum operator-(const GoldenNum& x, const GoldenNum& y) {
  return GoldenNum(x.a - y.a, x.b - y.b);
}

GoldenNum operator-(const GoldenNum& x) { return GoldenNum(-x.a, -x.b); }

GoldenNum operator*(const GoldenNum& x, const GoldenNum& y) {
  // (a1 + b1 phi)(a2 + b2 phi) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) phi
  Rational bb = x.b * y.b;
  return GoldenNum(x.a * y.a + bb, x.a * y.b + x.b * y.a + bb);
}

GoldenNum operator/(const GoldenNum& x, const GoldenNum& y) {
  return x * golden_inverse(y);
}

GoldenNum& operator+=(GoldenNum& x, const GoldenNum& y) { x = x + y; return x; }
GoldenNum& operator-=(GoldenNum& x, const GoldenNum& y) { x = x - y; return x; }
GoldenNum& operator*=(GoldenNum& x, const GoldenNum& y) { x = x * y; return x; }

bool operator==(const GoldenNum& x, const GoldenNum& y) {
  return x.a == y.a && x.b == y.b;
}

bool operator!=(const GoldenNum& x, const GoldenNum& y) { return !(x == y); }

GoldenNum galois_conjugate(const GoldenNum& x) {
  // phi -> 1 - phi
  return GoldenNum(x.a + x.b, -x.b);
}

Rational field_norm(const GoldenNum& x) {
  // (a + b phi)(a + b - b phi) = a^2 + a b - b^2
  return x.a * x.a + x.a * x.b - x.b * x.b;
}

GoldenNum golden_inverse(const GoldenNum& x) {
  if (x.is_zero()) throw std::domain_error("golden_inverse of zero");
  Rational n = field_norm(x);
  GoldenNum c = galois_conjugate(x);
  return GoldenNum(c.a / n, c.b / n);
}

GoldenNum golden_pow(const GoldenNum& x, long e) {
  if (e == 0) return GoldenNum(1);
  GoldenNum base = e > 0 ? x : golden_inverse(x);
  unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-(e + 1)) + 1ul;
  GoldenNum acc(1);
  while (k > 0) {
    if (k & 1ul) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

int golden_sign(const GoldenNum& x) {
  int sa = sign_of(x.a), sb = sign_of(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Mixed signs: the norm N = x * conj(x) decides.  conj(x) = (a+b) - b*phi has
  // the sign of a - b/phi; with a < 0 < b the conjugate is negative, so
  // x > 0 iff N < 0.  With b < 0 < a the conjugate is positive, so x > 0 iff
  // N > 0.  N = 0 cannot happen for nonzero x (norms are multiplicative).
  int sn = sign_of(field_norm(x));
  if (sb > 0) return -sn;
  return sn;
}

bool operator<(const GoldenNum& x, const GoldenNum& y) { return golden_sign(x - y) < 0; }
bool operator<=(const GoldenNum& x, const GoldenNum& y) { return golden_sign(x - y) <= 0; }
bool operator>(const GoldenNum& x, const GoldenNum& y) { return golden_sign(x - y) > 0; }
bool operator>=(const GoldenNum& x, const GoldenNum& y) { return golden_sign(x - y) >= 0; }

GoldenNum golden_abs(const GoldenNum& x) {
  return golden_sign(x) < 0 ? -x : x;
}

double to_double(const GoldenNum& x) {
  static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
  return x.a.convert_to<double>() + x.b.convert_to<double>() * kPhi;
}

std::string to_string(const GoldenNum& x) {
  if (x.b == 0) return rational_to_string(x.a);
  std::string head = rational_to_string(x.a);
  Rational babs = x.b < 0 ? Rational(-x.b) : x.b;
  std::string op = x.b < 0 ? " - " : " + ";
  return head + op + rational_to_string(babs) + "*phi";
}

std::optional<std::string> golden_power_form(const GoldenNum& x) {
  for (int s : {1, -1}) {
    GoldenNum target = s == 1 ? x : -x;
    GoldenNum p(1);
    GoldenNum inv = GoldenNum::phi() - GoldenNum(1);  // phi^-1 = phi - 1
    GoldenNum q(1);
    for (int k = 0; k <= 256; ++k) {
      auto name = [&](int expo) {
        std::string sgn = s == 1 ? "" : "-";
        if (expo == 0) return sgn + "1";
        std::string coef = s == 1 ? "" : "-1*";
        if (expo == 1) return coef + "phi";
        return coef + "phi^" + std::to_string(expo);
      };
      if (p == target) return name(k);
      if (k > 0 && q == target) return name(-k);
      p = p * GoldenNum::phi();
      q = q * inv;
    }
  }
  return std::nullopt;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  std::optional<GoldenNum> expr() {
    auto t = term();
    if (!t) return std::nullopt;
    GoldenNum acc = *t;
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++i;
        auto u = term();
        if (!u) return std::nullopt;
        acc = c == '+' ? acc + *u : acc - *u;
      } else {
        return acc;
      }
    }
  }

  std::optional<GoldenNum> term() {
    auto f = factor();
    if (!f) return std::nullopt;
    GoldenNum acc = *f;
    while (true) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++i;
        auto u = factor();
        if (!u) return std::nullopt;
        if (c == '/') {
          if (u->is_zero()) return std::nullopt;
          acc = acc / *u;
        } else {
          acc = acc * *u;
        }
      } else {
        return acc;
      }
    }
  }

  std::optional<GoldenNum> factor() {
    if (eat('-')) {
      auto f = factor();
      if (!f) return std::nullopt;
      return -*f;
    }
    auto a = atom();
    if (!a) return std::nullopt;
    if (eat('^')) {
      bool neg = eat('-');
      skip_ws();
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      if (digits.empty() || digits.size() > 4) return std::nullopt;
      long e = std::stol(digits);
      if (neg) e = -e;
      if (e < 0 && a->is_zero()) return std::nullopt;
      return golden_pow(*a, e);
    }
    return a;
  }

  std::optional<GoldenNum> atom() {
    skip_ws();
    if (eat('(')) {
      auto e = expr();
      if (!e || !eat(')')) return std::nullopt;
      return e;
    }
    if (match_word("phi")) return GoldenNum::phi();
    if (match_word("sqrt5")) return GoldenNum(Rational(-1), Rational(2));  // 2*phi - 1
    // rational literal: digits [ '/' digits ]  or decimal digits '.' digits
    std::string num;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
    if (num.empty()) return std::nullopt;
    if (i < s.size() && s[i] == '.') {
      ++i;
      std::string frac;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac += s[i++];
      if (frac.empty()) return std::nullopt;
      Integer numer(num + frac);
      Integer denom(1);
      for (size_t k = 0; k < frac.size(); ++k) denom *= 10;
      return GoldenNum(Rational(numer, denom));
    }
    if (i < s.size() && s[i] == '/') {
      size_t save = i;
      ++i;
      std::string den;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
      if (den.empty() || Integer(den) == 0) { i = save; return GoldenNum(Rational(Integer(num))); }
      return GoldenNum(Rational(Integer(num), Integer(den)));
    }
    return GoldenNum(Rational(Integer(num)));
  }

  bool match_word(const char* w) {
    skip_ws();
    size_t n = std::string(w).size();
    if (s.compare(i, n, w) != 0) return false;
    size_t after = i + n;
    if (after < s.size() && std::isalnum(static_cast<unsigned char>(s[after]))) return false;
    i = after;
    return true;
  }
};

}  // namespace

std::optional<GoldenNum> parse_golden(const std::string& text) {
  Parser p(text);
  auto e = p.expr();
  if (!e) return std::nullopt;
  p.skip_ws();
  if (p.i != text.size()) return std::nullopt;
  return e;
}

}  // namespace graphpoly
