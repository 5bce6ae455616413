#include "graphpoly/poly.hpp"

#include <sstream>

namespace graphpoly {

GoldenNum UniPoly::eval(const GoldenNum& x) const {
  GoldenNum acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + GoldenNum(Rational(*it));
  return acc;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

RealInterval UniPoly::eval(const RealInterval& x) const {
  RealInterval acc(Rational(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + RealInterval(Rational(*it));
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    Integer v = c[i];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0 || v != 1) os << v.str();
    if (i > 0) {
      if (v != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
  std::vector<Integer> r(std::max(p.c.size(), q.c.size()), Integer(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
  std::vector<Integer> r(std::max(p.c.size(), q.c.size()), Integer(0));
  for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
  for (size_t i = 0; i < q.c.size(); ++i) r[i] -= q.c[i];
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly();
  std::vector<Integer> r(p.c.size() + q.c.size() - 1, Integer(0));
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    for (size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const Integer& k, const UniPoly& p) {
  UniPoly r = p;
  for (auto& v : r.c) v *= k;
  r.trim();
  return r;
}

bool operator==(const UniPoly& p, const UniPoly& q) { return p.c == q.c; }

UniPoly uni_pow(const UniPoly& p, unsigned e) {
  UniPoly acc = UniPoly::constant(1);
  for (unsigned k = 0; k < e; ++k) acc = acc * p;
  return acc;
}

BivarPoly BivarPoly::constant(const Integer& v) {
  BivarPoly p;
  p.add_term(0, 0, v);
  return p;
}

BivarPoly BivarPoly::x() {
  BivarPoly p;
  p.add_term(1, 0, 1);
  return p;
}

BivarPoly BivarPoly::y() {
  BivarPoly p;
  p.add_term(0, 1, 1);
  return p;
}

void BivarPoly::add_term(int i, int j, const Integer& v) {
  if (v == 0) return;
  auto key = std::make_pair(i, j);
  auto it = c.find(key);
  if (it == c.end()) {
    c.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

GoldenNum BivarPoly::eval(const GoldenNum& x, const GoldenNum& y) const {
  GoldenNum acc(0);
  for (const auto& [ij, v] : c) {
    GoldenNum term{Rational(v)};
    term = term * golden_pow(x, ij.first) * golden_pow(y, ij.second);
    acc += term;
  }
  return acc;
}

UniPoly BivarPoly::eval_poly(const UniPoly& px, const UniPoly& py) const {
  UniPoly acc;
  for (const auto& [ij, v] : c) {
    UniPoly term = UniPoly::constant(v);
    term = term * uni_pow(px, static_cast<unsigned>(ij.first));
    term = term * uni_pow(py, static_cast<unsigned>(ij.second));
    acc = acc + term;
  }
  return acc;
}

std::string BivarPoly::to_string() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, v] : c) {
    Integer val = v;
    if (first) {
      if (val < 0) { os << "-"; val = -val; }
      first = false;
    } else {
      os << (val < 0 ? " - " : " + ");
      if (val < 0) val = -val;
    }
    bool has_var = ij.first > 0 || ij.second > 0;
    if (!has_var || val != 1) os << val.str();
    if (ij.first > 0) {
      if (val != 1) os << "*";
      os << "x";
      if (ij.first > 1) os << "^" << ij.first;
    }
    if (ij.second > 0) {
      if (val != 1 || ij.first > 0) os << "*";
      os << "y";
      if (ij.second > 1) os << "^" << ij.second;
    }
  }
  return os.str();
}

BivarPoly operator+(const BivarPoly& p, const BivarPoly& q) {
  BivarPoly r = p;
  for (const auto& [ij, v] : q.c) r.add_term(ij.first, ij.second, v);
  return r;
}

BivarPoly operator*(const BivarPoly& p, const BivarPoly& q) {
  BivarPoly r;
  for (const auto& [ij, v] : p.c)
    for (const auto& [kl, w] : q.c)
      r.add_term(ij.first + kl.first, ij.second + kl.second, v * w);
  return r;
}

bool operator==(const BivarPoly& p, const BivarPoly& q) { return p.c == q.c; }

BivarPoly bivar_pow(const BivarPoly& p, unsigned e) {
  BivarPoly acc = BivarPoly::constant(1);
  for (unsigned k = 0; k < e; ++k) acc = acc * p;
  return acc;
}

}  // namespace graphpoly
