#include "graphpoly/flowcat.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace graphpoly {

GoldenNum golden_q() { return GoldenNum(Rational(2), Rational(-1)); }

namespace {

const GoldenNum kPhi = GoldenNum::phi();
const GoldenNum kPhiSq = GoldenNum(Rational(1), Rational(1));

void require_triple_edge(const MultiGraph& g, int e, int choice) {
  if (e < 0 || e >= g.ne()) throw std::out_of_range("edge_triple: edge id out of range");
  if (choice != 0 && choice != 1) throw std::invalid_argument("edge_triple: choice must be 0 or 1");
  if (g.is_loop(e)) throw std::invalid_argument("edge_triple: edge must not be a loop");
  auto deg = g.degrees();
  if (deg[g.ends[e][0]] != 3 || deg[g.ends[e][1]] != 3)
    throw std::invalid_argument("edge_triple: both endpoints must be trivalent");
}

}  // namespace

EdgeTriple edge_triple(const MultiGraph& g, int e, int choice) {
  require_triple_edge(g, e, choice);
  return EdgeTriple{g, transverse_resplice(g, e, choice), remove_edge_smooth(g, e)};
}

GoldenNum tutte_defect(PolyEngine& eng, const MultiGraph& g, int e, int choice) {
  EdgeTriple t = edge_triple(g, e, choice);
  const GoldenNum q = golden_q();
  return eng.flow_eval(t.h1, q) + kPhi * eng.flow_eval(t.h2, q) +
         kPhiSq * eng.flow_eval(t.h3, q);
}

bool sign_lemma_check(PolyEngine& eng, const MultiGraph& g, int e, int choice) {
  GoldenNum d = tutte_defect(eng, g, e, choice);
  if (((g.nv - g.ne()) % 2 + 2) % 2 == 1) d = -d;
  return golden_sign(d) >= 0;
}

int embedding_choice(const MultiGraph& g, const RotationSystem& rot, int e) {
  if (e < 0 || e >= g.ne()) throw std::out_of_range("embedding_choice: edge id out of range");
  if (g.is_loop(e)) throw std::invalid_argument("embedding_choice: edge must not be a loop");
  if (!valid_rotation(g, rot)) throw std::invalid_argument("embedding_choice: invalid rotation system");
  const int u = g.ends[e][0];
  const int v = g.ends[e][1];
  const auto& cu = rot.rot[u];
  const auto& cv = rot.rot[v];
  if (cu.size() != 3 || cv.size() != 3)
    throw std::invalid_argument("embedding_choice: both endpoints must be trivalent");

  auto around = [](const std::vector<int>& cyc, int dart, int& nxt, int& prv) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] == dart) {
        nxt = cyc[(i + 1) % cyc.size()];
        prv = cyc[(i + cyc.size() - 1) % cyc.size()];
        return;
      }
    }
    throw std::logic_error("embedding_choice: dart missing from its rotation cycle");
  };
  int next_u, prev_u, next_v, prev_v;
  around(cu, 2 * e, next_u, prev_u);
  around(cv, 2 * e + 1, next_v, prev_v);

  // The planar resplice joins the two strands on each side of e without a
  // crossing: rotation-successor at u with rotation-predecessor at v, and
  // vice versa.  Reversing all rotations swaps successor and predecessor at
  // both ends, so the pairing does not depend on the global orientation.
  const int a = std::min(next_u, prev_u);  // u's smaller remaining dart
  const int c = std::min(next_v, prev_v);  // v's smaller remaining dart
  const int partner_of_a = (a == next_u) ? prev_v : next_v;
  return partner_of_a == c ? 0 : 1;
}

std::vector<EdgeDefect> defect_table(PolyEngine& eng, const MultiGraph& g) {
  std::vector<EdgeDefect> out;
  auto deg = g.degrees();
  for (int e = 0; e < g.ne(); ++e) {
    if (g.is_loop(e)) continue;
    if (deg[g.ends[e][0]] != 3 || deg[g.ends[e][1]] != 3) continue;
    EdgeDefect row;
    row.edge = e;
    row.defect[0] = tutte_defect(eng, g, e, 0);
    row.defect[1] = tutte_defect(eng, g, e, 1);
    out.push_back(std::move(row));
  }
  return out;
}

bool planarity_by_tutte(PolyEngine& eng, const MultiGraph& g) {
  if (!g.is_cubic() || g.nv == 0)
    throw std::invalid_argument("planarity_by_tutte: graph must be cubic");
  if (!g.is_simple())
    throw std::invalid_argument("planarity_by_tutte: graph must be simple");
  if (connectivity(g) < 3)
    throw std::invalid_argument("planarity_by_tutte: graph must be 3-connected");
  for (int e = 0; e < g.ne(); ++e) {
    if (!tutte_defect(eng, g, e, 0).is_zero() && !tutte_defect(eng, g, e, 1).is_zero())
      return false;
  }
  return true;
}

// ---- four-legged fragments ----------------------------------------------------

Fragment Fragment::basis(int i) {
  Fragment f;
  switch (i) {
    case 0:
      f.g = MultiGraph::from_edges(4, {{0, 1}, {2, 3}});
      break;
    case 1:
      f.g = MultiGraph::from_edges(4, {{0, 3}, {1, 2}});
      break;
    case 2:
      f.g = MultiGraph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
      break;
    case 3:
      f.g = MultiGraph::from_edges(4, {{0, 2}, {1, 3}});
      break;
    default:
      throw std::out_of_range("Fragment::basis: index must be 0..3");
  }
  return f;
}

Fragment Fragment::edge_piece() {
  Fragment f;
  f.g = MultiGraph::from_edges(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
  return f;
}

Fragment Fragment::resplice_piece() { return basis(1); }

Fragment Fragment::smoothing_piece() { return basis(0); }

bool Fragment::valid() const {
  if (g.nv < 4) return false;
  auto deg = g.degrees();
  for (int v = 0; v < 4; ++v)
    if (deg[v] != 1) return false;
  return true;
}

F04Element operator+(const F04Element& x, const F04Element& y) {
  F04Element r;
  for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
  return r;
}

F04Element operator*(const GoldenNum& s, const F04Element& x) {
  F04Element r;
  for (int i = 0; i < 4; ++i) r.c[i] = s * x.c[i];
  return r;
}

bool operator==(const F04Element& x, const F04Element& y) {
  for (int i = 0; i < 4; ++i)
    if (!(x.c[i] == y.c[i])) return false;
  return true;
}

namespace {

// A partially reduced fragment term.  Legs are vertex ids 0..3; internal ids
// are never compacted, so legs keep their identity throughout.
struct RTerm {
  GoldenNum coeff;
  std::vector<std::array<int, 2>> edges;
  int circles = 0;
};

// One applicable rewrite step.
struct RMove {
  enum Kind { kLoop, kKillUnivalent, kSuppress, kDelCon } kind;
  int arg;  // edge index for kLoop/kDelCon, vertex id for the others
};

std::unordered_map<int, int> degrees_of(const RTerm& t) {
  std::unordered_map<int, int> deg;
  for (const auto& e : t.edges) {
    deg[e[0]]++;
    deg[e[1]]++;
  }
  return deg;
}

std::vector<RMove> applicable_moves(const RTerm& t) {
  std::vector<RMove> moves;
  auto deg = degrees_of(t);
  std::unordered_map<int, int> loop_deg;  // degree contributed by loops
  for (size_t i = 0; i < t.edges.size(); ++i) {
    const auto& e = t.edges[i];
    if (e[0] == e[1]) {
      moves.push_back({RMove::kLoop, static_cast<int>(i)});
      loop_deg[e[0]] += 2;
    } else if (e[0] >= 4 && e[1] >= 4) {
      moves.push_back({RMove::kDelCon, static_cast<int>(i)});
    }
  }
  for (const auto& [v, d] : deg) {
    if (v < 4) continue;
    if (d == 1) moves.push_back({RMove::kKillUnivalent, v});
    // A vertex whose degree-2 comes from a loop is handled by the loop rule.
    if (d == 2 && loop_deg[v] == 0) moves.push_back({RMove::kSuppress, v});
  }
  return moves;
}

// Applies the move; returns false when the whole term vanishes.  kDelCon
// pushes the contraction branch onto `extra` and turns t into the deletion
// branch (with the flow-style sign: F = F(contract) - F(delete)).
bool apply_move(RTerm& t, const RMove& m, const GoldenNum& circle_factor,
                std::vector<RTerm>& extra) {
  switch (m.kind) {
    case RMove::kLoop: {
      t.coeff *= circle_factor;
      t.edges.erase(t.edges.begin() + m.arg);
      return true;
    }
    case RMove::kKillUnivalent:
      return false;
    case RMove::kSuppress: {
      int x = -1, y = -1;
      std::vector<std::array<int, 2>> rest;
      rest.reserve(t.edges.size() - 1);
      for (const auto& e : t.edges) {
        if (e[0] == m.arg || e[1] == m.arg) {
          int far = (e[0] == m.arg) ? e[1] : e[0];
          (x < 0 ? x : y) = far;
        } else {
          rest.push_back(e);
        }
      }
      rest.push_back({x, y});
      t.edges = std::move(rest);
      return true;
    }
    case RMove::kDelCon: {
      const int u = t.edges[m.arg][0];
      const int v = t.edges[m.arg][1];
      RTerm con = t;
      con.edges.erase(con.edges.begin() + m.arg);
      for (auto& e : con.edges) {
        if (e[0] == v) e[0] = u;
        if (e[1] == v) e[1] = u;
      }
      extra.push_back(std::move(con));
      t.coeff = -t.coeff;
      t.edges.erase(t.edges.begin() + m.arg);
      return true;
    }
  }
  return true;
}

// Reads the coordinates of a fully reduced term.
void accumulate_terminal(const RTerm& t, F04Element& out) {
  std::unordered_map<int, int> deg;
  int star = -1;
  std::array<int, 4> mate{-1, -1, -1, -1};
  for (const auto& e : t.edges) {
    deg[e[0]]++;
    deg[e[1]]++;
    if (e[0] >= 4 || e[1] >= 4) {
      star = std::max(e[0], e[1]);
    } else {
      mate[e[0]] = e[1];
      mate[e[1]] = e[0];
    }
  }
  if (star >= 0) {
    if (t.edges.size() != 4 || deg[star] != 4)
      throw std::logic_error("reduce_to_basis: unexpected terminal shape");
    out.c[2] += t.coeff;
    return;
  }
  if (t.edges.size() != 2) throw std::logic_error("reduce_to_basis: unexpected terminal shape");
  if (mate[0] == 1 && mate[2] == 3)
    out.c[0] += t.coeff;
  else if (mate[0] == 3 && mate[1] == 2)
    out.c[1] += t.coeff;
  else if (mate[0] == 2 && mate[1] == 3)
    out.c[3] += t.coeff;
  else
    throw std::logic_error("reduce_to_basis: unexpected terminal shape");
}

F04Element reduce_impl(const Fragment& f, std::mt19937_64* rng) {
  if (!f.valid())
    throw std::invalid_argument("reduce_to_basis: boundary legs must have degree one");
  const GoldenNum circle_factor = golden_q() - GoldenNum(1);

  std::vector<RTerm> work;
  {
    RTerm t;
    t.coeff = GoldenNum(1);
    for (const auto& e : f.g.ends) t.edges.push_back(e);
    t.circles = f.g.free_circles;
    work.push_back(std::move(t));
  }

  F04Element out{{GoldenNum(0), GoldenNum(0), GoldenNum(0), GoldenNum(0)}};
  while (!work.empty()) {
    RTerm t = std::move(work.back());
    work.pop_back();
    if (t.circles > 0) {
      t.coeff *= golden_pow(circle_factor, t.circles);
      t.circles = 0;
    }
    bool alive = true;
    for (;;) {
      auto moves = applicable_moves(t);
      if (moves.empty()) break;
      size_t pick = 0;
      if (rng) pick = (*rng)() % moves.size();
      if (!apply_move(t, moves[pick], circle_factor, work)) {
        alive = false;
        break;
      }
    }
    if (alive) accumulate_terminal(t, out);
  }
  return out;
}

}  // namespace

F04Element reduce_to_basis(const Fragment& f) { return reduce_impl(f, nullptr); }

F04Element reduce_to_basis_seeded(const Fragment& f, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reduce_impl(f, &rng);
}

F04Element p_element() {
  return reduce_to_basis(Fragment::edge_piece()) +
         (kPhi * reduce_to_basis(Fragment::resplice_piece())) +
         (kPhiSq * reduce_to_basis(Fragment::smoothing_piece()));
}

GoldenNum pair_fragments(PolyEngine& eng, const Fragment& a, const Fragment& b) {
  if (!a.valid() || !b.valid())
    throw std::invalid_argument("pair_fragments: boundary legs must have degree one");
  MultiGraph glued = a.g;
  const int off = a.g.nv;
  glued.nv += b.g.nv;
  for (const auto& e : b.g.ends) glued.ends.push_back({e[0] + off, e[1] + off});
  glued.free_circles += b.g.free_circles;
  // The eight leg vertices become 2-valent junctions; they do not change the
  // flow value, so there is no need to suppress them here.
  for (int i = 0; i < 4; ++i) glued.add_edge(i, off + i);
  return eng.flow_eval(glued, golden_q());
}

GoldenNum pair(PolyEngine& eng, const F04Element& a, const F04Element& b) {
  GoldenNum sum(0);
  for (int i = 0; i < 4; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c[j].is_zero()) continue;
      sum += a.c[i] * pair_fragments(eng, Fragment::basis(i), Fragment::basis(j)) * b.c[j];
    }
  }
  return sum;
}

GoldenNum pair(PolyEngine& eng, const F04Element& a, const Fragment& b) {
  return pair(eng, a, reduce_to_basis(b));
}

}  // namespace graphpoly
