#pragma once

// Diagram algebra on n strands: noncrossing perfect matchings of 2n boundary
// points of a rectangle, composed by vertical stacking, with closed circles
// erased against a factor d.  Elements carry exact coefficients from a field
// F (golden numbers, rationals, or rational functions in d for generic work).

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/golden.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/planar.hpp"

namespace graphpoly {

// Boundary points in circular order: top row left to right (positions
// 0..n-1), then bottom row right to left (bottom j at position 2n-1-j).  A
// matching is realizable without crossings iff its chords are noncrossing in
// this circular order, iff writing '(' at the smaller end of each chord and
// ')' at the larger gives a balanced parenthesis string.  That string is the
// canonical byte encoding of the diagram.
struct TLDiagram {
  int n = 0;
  std::vector<int> match;  // involution on 0..2n-1, no fixed points

  static TLDiagram identity(int n);
  static TLDiagram cupcap(int n, int i);  // joins strands i, i+1 (0-based); un-normalized

  static int top_pos(int /*n*/, int i) { return i; }
  static int bottom_pos(int n, int j) { return 2 * n - 1 - j; }

  bool valid() const;
  TLDiagram reflected() const;  // top-bottom mirror (bar involution)
  std::string paren_key() const;
  std::string to_string() const;  // human-readable pairing list
};

bool operator==(const TLDiagram& a, const TLDiagram& b);
bool operator<(const TLDiagram& a, const TLDiagram& b);

TLDiagram diagram_from_key(int n, const std::string& key);

// all noncrossing diagrams on n strands (Catalan(n) of them), sorted by key
std::vector<TLDiagram> all_diagrams(int n);

// a stacked over b (a's bottom glued to b's top): reduced diagram + circles
std::pair<TLDiagram, int> stack_diagrams(const TLDiagram& a, const TLDiagram& b);

// circles formed when top i is joined to bottom i for every strand
int closure_circles(const TLDiagram& a);

// close only the rightmost k strands: reduced (n-k)-diagram + circles
std::pair<TLDiagram, int> close_strands(const TLDiagram& a, int k);

// ---- linear combinations -----------------------------------------------------

template <class F>
struct TLElement {
  int n = 0;
  std::map<std::string, F> terms;  // paren key -> coefficient, no zeros stored

  static TLElement zero(int n) { return TLElement{n, {}}; }
  static TLElement identity(int n) {
    TLElement e{n, {}};
    e.add_term(TLDiagram::identity(n), F(1));
    return e;
  }
  static TLElement from_diagram(const TLDiagram& d, const F& c) {
    TLElement e{d.n, {}};
    e.add_term(d, c);
    return e;
  }

  void add_term(const TLDiagram& d, const F& c) {
    if (d.n != n) throw std::invalid_argument("TLElement: strand count mismatch");
    add_key(d.paren_key(), c);
  }
  void add_key(const std::string& key, const F& c) {
    auto it = terms.find(key);
    if (it == terms.end()) {
      if (!(c == F(0))) terms.emplace(key, c);
    } else {
      it->second = it->second + c;
      if (it->second == F(0)) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
};

template <class F>
TLElement<F> operator+(const TLElement<F>& a, const TLElement<F>& b) {
  if (a.n != b.n) throw std::invalid_argument("TL addition: degree mismatch");
  TLElement<F> out = a;
  for (const auto& [k, c] : b.terms) out.add_key(k, c);
  return out;
}

template <class F>
TLElement<F> operator-(const TLElement<F>& a, const TLElement<F>& b) {
  if (a.n != b.n) throw std::invalid_argument("TL subtraction: degree mismatch");
  TLElement<F> out = a;
  for (const auto& [k, c] : b.terms) out.add_key(k, F(0) - c);
  return out;
}

template <class F>
TLElement<F> operator*(const F& s, const TLElement<F>& a) {
  TLElement<F> out = TLElement<F>::zero(a.n);
  for (const auto& [k, c] : a.terms) out.add_key(k, s * c);
  return out;
}

template <class F>
bool operator==(const TLElement<F>& a, const TLElement<F>& b) {
  return a.n == b.n && a.terms == b.terms;
}

template <class F>
F field_pow(F base, int e) {
  F out(1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

// vertical stacking of linear combinations; circles become factors of d
template <class F>
TLElement<F> tl_mul(const TLElement<F>& a, const TLElement<F>& b, const F& d) {
  if (a.n != b.n) throw std::invalid_argument("TL multiplication: degree mismatch");
  TLElement<F> out = TLElement<F>::zero(a.n);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      auto [dgm, circles] = stack_diagrams(diagram_from_key(a.n, ka), diagram_from_key(b.n, kb));
      out.add_term(dgm, ca * cb * field_pow(d, circles));
    }
  return out;
}

template <class F>
TLElement<F> tl_bar(const TLElement<F>& a) {
  TLElement<F> out = TLElement<F>::zero(a.n);
  for (const auto& [k, c] : a.terms) out.add_term(diagram_from_key(a.n, k).reflected(), c);
  return out;
}

template <class F>
F markov_trace(const TLElement<F>& a, const F& d) {
  F out(0);
  for (const auto& [k, c] : a.terms)
    out = out + c * field_pow(d, closure_circles(diagram_from_key(a.n, k)));
  return out;
}

template <class F>
F inner_product(const TLElement<F>& a, const TLElement<F>& b, const F& d) {
  if (a.n != b.n) throw std::invalid_argument("TL inner product: degree mismatch");
  return markov_trace(tl_mul(a, tl_bar(b), d), d);
}

template <class F>
TLElement<F> tl_partial_trace(const TLElement<F>& a, int k, const F& d) {
  if (k < 0 || k > a.n) throw std::invalid_argument("partial trace: bad strand count");
  TLElement<F> out = TLElement<F>::zero(a.n - k);
  for (const auto& [key, c] : a.terms) {
    auto [dgm, circles] = close_strands(diagram_from_key(a.n, key), k);
    out.add_term(dgm, c * field_pow(d, circles));
  }
  return out;
}

// one extra through-strand on the right
template <class F>
TLElement<F> tensor_one(const TLElement<F>& a) {
  TLElement<F> out = TLElement<F>::zero(a.n + 1);
  for (const auto& [key, c] : a.terms) {
    const TLDiagram dgm = diagram_from_key(a.n, key);
    TLDiagram big;
    big.n = a.n + 1;
    big.match.assign(2 * big.n, -1);
    auto lift = [&](int p) { return p < a.n ? p : p + 2; };
    for (int p = 0; p < 2 * a.n; ++p) big.match[lift(p)] = lift(dgm.match[p]);
    big.match[a.n] = a.n + 1;
    big.match[a.n + 1] = a.n;
    out.add_term(big, c);
  }
  return out;
}

// normalized generator e_i = (1/d) * cupcap: idempotent when d != 0
template <class F>
TLElement<F> tl_generator(int n, int i, const F& d) {
  if (d == F(0)) throw std::domain_error("tl_generator: loop value is zero");
  return TLElement<F>::from_diagram(TLDiagram::cupcap(n, i), F(1) / d);
}

// Chebyshev-type loop weights: D0 = 1, D1 = d, Dk = d*D(k-1) - D(k-2)
template <class F>
std::vector<F> chebyshev_values(int upto, const F& d) {
  std::vector<F> v{F(1)};
  if (upto >= 1) v.push_back(d);
  for (int k = 2; k <= upto; ++k) v.push_back(d * v[k - 1] - v[k - 2]);
  return v;
}

// The projector on n strands: idempotent, annihilated by every cup-cap, with
// markov trace D_n.  Built by the standard recursion
//   P(1) = 1,   P(k+1) = P(k)x1 - (D(k-1)/D(k)) (P(k)x1) U_k (P(k)x1),
// which requires D_1..D_(n-1) to be nonzero at the loop value.
template <class F>
TLElement<F> jones_wenzl(int n, const F& d) {
  if (n < 1) throw std::invalid_argument("jones_wenzl: need at least one strand");
  std::vector<F> delta = chebyshev_values(n, d);
  for (int k = 1; k < n; ++k)
    if (delta[k] == F(0))
      throw std::domain_error("jones_wenzl: Delta_" + std::to_string(k) +
                              " vanishes at the given loop value");
  TLElement<F> p = TLElement<F>::identity(1);
  for (int k = 1; k < n; ++k) {
    TLElement<F> p1 = tensor_one(p);
    TLElement<F> u = TLElement<F>::from_diagram(TLDiagram::cupcap(k + 1, k - 1), F(1));
    TLElement<F> mid = tl_mul(tl_mul(p1, u, d), p1, d);
    F ratio = delta[k - 1] / delta[k];
    p = p1 - ratio * mid;
  }
  return p;
}

// ---- ribbon-graph evaluation ---------------------------------------------------

// Doubles every edge of an embedded cubic graph into a two-strand band,
// expands each band as (parallel) - (1/d)(turnback), joins strands around
// each vertex corner per the rotation, and evaluates circles against d:
//   d^(V/2) * sum over turnback subsets S of (-1/d)^|S| d^circles(S).
// Equals the nowhere-zero-flow count polynomial evaluated at d^2 when the
// rotation has genus zero.  Requires connected cubic input, genus-zero
// rotation, even vertex count, no free circles, and d != 0.
GoldenNum phi_trace(const MultiGraph& g, const RotationSystem& rot, const GoldenNum& d);

}  // namespace graphpoly
