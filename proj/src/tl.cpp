#include "graphpoly/tl.hpp"

#include <algorithm>

namespace graphpoly {

TLDiagram TLDiagram::identity(int n) {
  TLDiagram d;
  d.n = n;
  d.match.assign(2 * static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    d.match[i] = 2 * n - 1 - i;
    d.match[2 * n - 1 - i] = i;
  }
  return d;
}

TLDiagram TLDiagram::cupcap(int n, int i) {
  if (i < 0 || i + 1 >= n) throw std::invalid_argument("cupcap: strand index out of range");
  TLDiagram d = identity(n);
  d.match[i] = i + 1;
  d.match[i + 1] = i;
  d.match[2 * n - 1 - i] = 2 * n - 2 - i;
  d.match[2 * n - 2 - i] = 2 * n - 1 - i;
  return d;
}

bool TLDiagram::valid() const {
  int m = 2 * n;
  if (static_cast<int>(match.size()) != m) return false;
  for (int p = 0; p < m; ++p) {
    if (match[p] < 0 || match[p] >= m || match[p] == p) return false;
    if (match[match[p]] != p) return false;
  }
  // noncrossing <=> balanced parenthesis structure
  std::vector<int> stack;
  for (int p = 0; p < m; ++p) {
    if (match[p] > p)
      stack.push_back(p);
    else {
      if (stack.empty() || stack.back() != match[p]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

TLDiagram TLDiagram::reflected() const {
  TLDiagram r;
  r.n = n;
  r.match.assign(match.size(), -1);
  int m = 2 * n;
  for (int p = 0; p < m; ++p) r.match[m - 1 - p] = m - 1 - match[p];
  return r;
}

std::string TLDiagram::paren_key() const {
  std::string s(match.size(), ' ');
  for (size_t p = 0; p < match.size(); ++p) s[p] = match[p] > static_cast<int>(p) ? '(' : ')';
  return s;
}

std::string TLDiagram::to_string() const {
  // pairs in boundary terms: T<i> for top, B<j> for bottom
  auto name = [&](int p) {
    return p < n ? "T" + std::to_string(p) : "B" + std::to_string(2 * n - 1 - p);
  };
  std::string s = "{";
  bool first = true;
  for (int p = 0; p < 2 * n; ++p) {
    if (match[p] < p) continue;
    if (!first) s += ", ";
    first = false;
    s += name(p) + "-" + name(match[p]);
  }
  return s + "}";
}

bool operator==(const TLDiagram& a, const TLDiagram& b) {
  return a.n == b.n && a.match == b.match;
}

bool operator<(const TLDiagram& a, const TLDiagram& b) {
  if (a.n != b.n) return a.n < b.n;
  return a.match < b.match;
}

TLDiagram diagram_from_key(int n, const std::string& key) {
  if (static_cast<int>(key.size()) != 2 * n)
    throw std::invalid_argument("diagram_from_key: wrong length");
  TLDiagram d;
  d.n = n;
  d.match.assign(key.size(), -1);
  std::vector<int> stack;
  for (int p = 0; p < 2 * n; ++p) {
    if (key[p] == '(')
      stack.push_back(p);
    else if (key[p] == ')') {
      if (stack.empty()) throw std::invalid_argument("diagram_from_key: unbalanced");
      int q = stack.back();
      stack.pop_back();
      d.match[p] = q;
      d.match[q] = p;
    } else {
      throw std::invalid_argument("diagram_from_key: bad character");
    }
  }
  if (!stack.empty()) throw std::invalid_argument("diagram_from_key: unbalanced");
  return d;
}

std::vector<TLDiagram> all_diagrams(int n) {
  std::vector<TLDiagram> out;
  std::string cur;
  auto rec = [&](auto&& self, int open, int closed) -> void {
    if (static_cast<int>(cur.size()) == 2 * n) {
      out.push_back(diagram_from_key(n, cur));
      return;
    }
    if (open < n) {
      cur.push_back('(');
      self(self, open + 1, closed);
      cur.pop_back();
    }
    if (closed < open) {
      cur.push_back(')');
      self(self, open, closed + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

// Shared path tracer: nodes 0..total-1 carry a matching `mate`; `glue` links
// interior nodes in pairs (-1 on boundary nodes).  Starting from a boundary
// node, alternate mate/glue steps until another boundary node is reached.
// Cycles that never touch the boundary are counted separately.
struct Tracer {
  const std::vector<int>& mate;
  const std::vector<int>& glue;
  std::vector<char> seen;

  Tracer(const std::vector<int>& m, const std::vector<int>& g)
      : mate(m), glue(g), seen(m.size(), 0) {}

  int walk_from_boundary(int start) {
    int cur = start;
    seen[cur] = 1;
    while (true) {
      cur = mate[cur];
      seen[cur] = 1;
      if (glue[cur] == -1) return cur;
      cur = glue[cur];
      seen[cur] = 1;
    }
  }

  int closed_cycles() {
    int cycles = 0;
    for (size_t start = 0; start < mate.size(); ++start) {
      if (seen[start] || glue[start] == -1) continue;
      ++cycles;
      int cur = static_cast<int>(start);
      do {
        seen[cur] = 1;
        int nx = mate[cur];
        seen[nx] = 1;
        cur = glue[nx];
        if (cur == -1) throw std::logic_error("tracer: cycle hit boundary");
      } while (cur != static_cast<int>(start));
    }
    return cycles;
  }
};

}  // namespace

std::pair<TLDiagram, int> stack_diagrams(const TLDiagram& a, const TLDiagram& b) {
  if (a.n != b.n) throw std::invalid_argument("stack_diagrams: strand count mismatch");
  int n = a.n;
  int m = 2 * n;
  // nodes: a-points (0..2n-1), then b-points (2n..4n-1)
  std::vector<int> mate(2 * m), glue(2 * m, -1);
  for (int p = 0; p < m; ++p) {
    mate[p] = a.match[p];
    mate[m + p] = m + b.match[p];
  }
  for (int j = 0; j < n; ++j) {
    int abot = 2 * n - 1 - j;  // a's bottom j
    int btop = m + j;          // b's top j
    glue[abot] = btop;
    glue[btop] = abot;
  }
  TLDiagram out;
  out.n = n;
  out.match.assign(m, -1);
  Tracer tr(mate, glue);
  // boundary: a-tops keep their positions; b-bottoms map node m+p -> position p
  auto final_pos = [&](int node) { return node < m ? node : node - m; };
  for (int i = 0; i < n; ++i) {
    if (out.match[i] != -1) continue;
    int endn = tr.walk_from_boundary(i);
    out.match[i] = final_pos(endn);
    out.match[final_pos(endn)] = i;
  }
  for (int p = n; p < m; ++p) {  // remaining b-bottom starts
    if (out.match[p] != -1) continue;
    int endn = tr.walk_from_boundary(m + p);
    out.match[p] = final_pos(endn);
    out.match[final_pos(endn)] = p;
  }
  return {out, tr.closed_cycles()};
}

int closure_circles(const TLDiagram& a) {
  int m = 2 * a.n;
  std::vector<int> glue(m);
  for (int p = 0; p < m; ++p) glue[p] = m - 1 - p;  // top i to bottom i
  Tracer tr(a.match, glue);
  return tr.closed_cycles();
}

std::pair<TLDiagram, int> close_strands(const TLDiagram& a, int k) {
  if (k < 0 || k > a.n) throw std::invalid_argument("close_strands: bad strand count");
  int n = a.n, m = 2 * n;
  std::vector<int> glue(m, -1);
  for (int i = n - k; i < n; ++i) {
    glue[i] = m - 1 - i;
    glue[m - 1 - i] = i;
  }
  TLDiagram out;
  out.n = n - k;
  out.match.assign(2 * static_cast<size_t>(out.n), -1);
  Tracer tr(a.match, glue);
  auto final_pos = [&](int p) { return p < n - k ? p : p - 2 * k; };
  for (int p = 0; p < m; ++p) {
    if (glue[p] != -1) continue;  // interior
    int fp = final_pos(p);
    if (out.match[fp] != -1) continue;
    int endn = tr.walk_from_boundary(p);
    out.match[fp] = final_pos(endn);
    out.match[final_pos(endn)] = fp;
  }
  return {out, tr.closed_cycles()};
}

// ---- state-sum trace of the doubled-edge evaluation ---------------------------

GoldenNum phi_trace(const MultiGraph& g, const RotationSystem& rot, const GoldenNum& d) {
  if (!is_connected(g)) throw std::invalid_argument("phi_trace: graph must be connected");
  if (!g.is_cubic()) throw std::invalid_argument("phi_trace: graph must be cubic");
  if (g.free_circles != 0) throw std::invalid_argument("phi_trace: free circles not supported");
  if (g.nv % 2 != 0) throw std::invalid_argument("phi_trace: odd vertex count");
  if (euler_genus(g, rot) != 0)
    throw std::invalid_argument("phi_trace: rotation system must have genus zero");
  if (d.is_zero()) throw std::invalid_argument("phi_trace: loop value must be nonzero");
  int E = g.ne();
  if (E > 26) throw std::invalid_argument("phi_trace: state space too large");

  // strand ends: dart t carries ends 2t (left) and 2t+1 (right), sides taken
  // looking outward from the vertex with counterclockwise rotation
  int S = 4 * E;
  std::vector<int> mate_v(S, -1);
  for (int v = 0; v < g.nv; ++v) {
    const auto& r = rot.rot[v];
    for (size_t i = 0; i < r.size(); ++i) {
      int di = r[i], dj = r[(i + 1) % r.size()];
      // corner between consecutive darts: left side of di meets right side of dj
      mate_v[2 * di] = 2 * dj + 1;
      mate_v[2 * dj + 1] = 2 * di;
    }
  }

  std::vector<int> mate_s(S);
  std::vector<uint32_t> stamp(S, 0);
  uint32_t epoch = 0;
  std::map<long, Integer> weight;  // exponent of d -> signed count

  for (unsigned long mask = 0; mask < (1ul << E); ++mask) {
    for (int e = 0; e < E; ++e) {
      int base = 4 * e;
      if (mask & (1ul << e)) {  // turnback at both ends of the band
        mate_s[base] = base + 1;
        mate_s[base + 1] = base;
        mate_s[base + 2] = base + 3;
        mate_s[base + 3] = base + 2;
      } else {  // parallel strands through the band (sides swap end to end)
        mate_s[base] = base + 3;
        mate_s[base + 3] = base;
        mate_s[base + 1] = base + 2;
        mate_s[base + 2] = base + 1;
      }
    }
    ++epoch;
    int circles = 0;
    for (int start = 0; start < S; ++start) {
      if (stamp[start] == epoch) continue;
      ++circles;
      int cur = start;
      do {
        stamp[cur] = epoch;
        int nx = mate_s[cur];
        stamp[nx] = epoch;
        cur = mate_v[nx];
      } while (cur != start);
    }
    int turnbacks = __builtin_popcountl(mask);
    Integer& w = weight[circles - turnbacks];
    w += (turnbacks % 2 == 0) ? 1 : -1;
  }

  GoldenNum total;
  for (const auto& [expo, coef] : weight) {
    if (coef == 0) continue;
    total += GoldenNum(Rational(coef)) * golden_pow(d, expo);
  }
  return golden_pow(d, g.nv / 2) * total;
}

}  // namespace graphpoly
