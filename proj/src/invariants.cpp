#include "graphpoly/invariants.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "graphpoly/canon.hpp"

namespace graphpoly {

namespace {

// split into connected component subgraphs (free circles dropped; the caller
// accounts for them)
std::vector<MultiGraph> split_components(const MultiGraph& g) {
  std::vector<int> comp = component_ids(g);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<MultiGraph> out(ncomp);
  std::vector<int> local(g.nv, -1);
  for (int v = 0; v < g.nv; ++v) local[v] = out[comp[v]].add_vertex();
  for (const auto& e : g.ends) out[comp[e[0]]].ends.push_back({local[e[0]], local[e[1]]});
  return out;
}

UniPoly uni_one() { return UniPoly{{Integer(1)}}; }
UniPoly uni_x() { return UniPoly{{Integer(0), Integer(1)}}; }
UniPoly uni_x_minus(long k) { return UniPoly{{Integer(-k), Integer(1)}}; }

}  // namespace

// ---- Whitney rank polynomial ------------------------------------------------

BivarPoly PolyEngine::tutte(const MultiGraph& g) {
  BivarPoly result = bivar_pow(BivarPoly::y(), g.free_circles);
  for (const auto& comp : split_components(g)) result = result * tutte_connected(comp);
  return result;
}

BivarPoly PolyEngine::tutte_connected(const MultiGraph& g0) {
  MultiGraph g = g0;
  int nloops = 0, nbridges = 0;
  // peel loops and bridges; contraction of a bridge may expose more of both
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = 0; e < g.ne(); ++e)
      if (g.is_loop(e)) {
        g = delete_edge(g, e);
        ++nloops;
        changed = true;
        break;
      }
    if (changed) continue;
    std::vector<int> br = bridges(g);
    if (!br.empty()) {
      g = contract(g, br.front());
      ++nbridges;
      changed = true;
    }
  }
  BivarPoly prefix = bivar_pow(BivarPoly::x(), nbridges) * bivar_pow(BivarPoly::y(), nloops);
  if (g.ne() == 0) return prefix;

  CanonicalCode key = canonical_code(g);
  auto it = tutte_memo_.find(key);
  if (it != tutte_memo_.end()) return prefix * it->second;

  // every remaining edge is neither loop nor bridge: plain deletion/contraction
  BivarPoly core = tutte_connected(delete_edge(g, 0)) + tutte_connected(contract(g, 0));
  tutte_memo_.emplace(std::move(key), core);
  return prefix * core;
}

// ---- proper colorings --------------------------------------------------------

UniPoly PolyEngine::chromatic(const MultiGraph& g) {
  UniPoly result = uni_one();
  for (const auto& comp : split_components(g)) {
    result = result * chromatic_connected(comp);
    if (result.is_zero()) break;
  }
  return result;
}

UniPoly PolyEngine::chromatic_connected(const MultiGraph& g0) {
  // collapse parallel classes; a loop kills the polynomial
  std::set<std::pair<int, int>> simple_edges;
  for (const auto& e : g0.ends) {
    if (e[0] == e[1]) return UniPoly{};  // loop
    simple_edges.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
  }
  MultiGraph g;
  g.nv = g0.nv;
  for (auto [u, v] : simple_edges) g.ends.push_back({u, v});

  // strip simplicial vertices (neighborhood is a clique): factor (x - k)
  UniPoly prefix = uni_one();
  for (bool changed = true; changed;) {
    changed = false;
    auto da = g.darts_at();
    for (int v = 0; v < g.nv && !changed; ++v) {
      std::vector<int> nbrs;
      for (int d : da[v]) nbrs.push_back(g.dart_vertex(d ^ 1));
      bool clique = true;
      for (size_t i = 0; i < nbrs.size() && clique; ++i)
        for (size_t j = i + 1; j < nbrs.size() && clique; ++j)
          if (g.edge_multiplicity(nbrs[i], nbrs[j]) == 0) clique = false;
      if (!clique) continue;
      prefix = prefix * uni_x_minus(static_cast<long>(nbrs.size()));
      g = delete_vertex(g, v);
      changed = true;
    }
  }
  if (g.nv == 0) return prefix;
  // only graphs with a non-simplicial vertex remain, so g.ne() > 0 here

  CanonicalCode key = canonical_code(g);
  auto it = chrom_memo_.find(key);
  if (it != chrom_memo_.end()) return prefix * it->second;

  UniPoly core = chromatic_connected(delete_edge(g, 0)) - chromatic_connected(contract(g, 0));
  chrom_memo_.emplace(std::move(key), core);
  return prefix * core;
}

// ---- nowhere-zero flows ------------------------------------------------------

UniPoly PolyEngine::flow(const MultiGraph& g) {
  UniPoly result = uni_pow(uni_x_minus(1), g.free_circles);
  for (const auto& comp : split_components(g)) {
    result = result * flow_connected(comp);
    if (result.is_zero()) break;
  }
  return result;
}

UniPoly PolyEngine::flow_connected(const MultiGraph& g0) {
  MultiGraph g = g0;
  int circle_factors = 0;
  for (bool changed = true; changed;) {
    changed = false;
    circle_factors += g.free_circles;
    g.free_circles = 0;
    for (int e = 0; e < g.ne(); ++e)
      if (g.is_loop(e)) {
        g = delete_edge(g, e);
        ++circle_factors;
        changed = true;
        break;
      }
    if (changed) continue;
    auto deg = g.degrees();
    for (int v = 0; v < g.nv; ++v)
      if (deg[v] == 2) {
        g = suppress_vertex(g, v);
        changed = true;
        break;
      }
  }
  UniPoly prefix = uni_pow(uni_x_minus(1), circle_factors);
  if (g.ne() == 0) return prefix;
  if (!bridges(g).empty()) return UniPoly{};

  CanonicalCode key = canonical_code(g);
  auto it = flow_memo_.find(key);
  if (it != flow_memo_.end()) return prefix * it->second;

  UniPoly core = flow_connected(contract(g, 0)) - flow_connected(delete_edge(g, 0));
  flow_memo_.emplace(std::move(key), core);
  return prefix * core;
}

// ---- evaluations and conversions --------------------------------------------

GoldenNum PolyEngine::tutte_eval(const MultiGraph& g, const GoldenNum& x, const GoldenNum& y) {
  return tutte(g).eval(x, y);
}

GoldenNum PolyEngine::chromatic_eval(const MultiGraph& g, const GoldenNum& x) {
  return chromatic(g).eval(x);
}

GoldenNum PolyEngine::flow_eval(const MultiGraph& g, const GoldenNum& x) {
  return flow(g).eval(x);
}

void PolyEngine::clear() {
  tutte_memo_.clear();
  chrom_memo_.clear();
  flow_memo_.clear();
}

size_t PolyEngine::memo_size() const {
  return tutte_memo_.size() + chrom_memo_.size() + flow_memo_.size();
}

UniPoly chromatic_from_tutte(const BivarPoly& t, int nv, int ncomp) {
  UniPoly one_minus_x{{Integer(1), Integer(-1)}};
  UniPoly zero{};
  UniPoly sub = t.eval_poly(one_minus_x, zero);
  UniPoly xc = uni_pow(uni_x(), ncomp);
  UniPoly out = sub * xc;
  if ((nv - ncomp) % 2 != 0) out = UniPoly{} - out;
  return out;
}

UniPoly flow_from_tutte(const BivarPoly& t, int ne, int nv, int ncomp) {
  UniPoly one_minus_x{{Integer(1), Integer(-1)}};
  UniPoly zero{};
  UniPoly out = t.eval_poly(zero, one_minus_x);
  if ((ne - nv + ncomp) % 2 != 0) out = UniPoly{} - out;
  return out;
}

}  // namespace graphpoly
