#pragma once

#include <string>
#include <unordered_map>

#include "graphpoly/golden.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// Exact graph-polynomial engine.  All three polynomials are computed by
// deletion/contraction with reductions (loops, bridges, parallel classes,
// two-valent suppression, simplicial vertices) and memoized on the canonical
// code of the reduced graph, so repeated queries over isomorphic minors are
// shared.  Not thread-safe: use one engine per worker thread.
class PolyEngine {
 public:
  // Whitney rank generating form: sum over spanning subgraphs of
  // (x-1)^(rank deficit) (y-1)^(nullity), with multiplicative components.
  // Each free circle contributes a factor y.
  BivarPoly tutte(const MultiGraph& g);

  // Proper-coloring counting polynomial.  Zero if the graph has a loop;
  // free circles are ignored.
  UniPoly chromatic(const MultiGraph& g);

  // Nowhere-zero-flow counting polynomial.  Zero if the graph has a bridge;
  // each free circle contributes a factor (x-1).
  UniPoly flow(const MultiGraph& g);

  GoldenNum tutte_eval(const MultiGraph& g, const GoldenNum& x, const GoldenNum& y);
  GoldenNum chromatic_eval(const MultiGraph& g, const GoldenNum& x);
  GoldenNum flow_eval(const MultiGraph& g, const GoldenNum& x);

  void clear();
  size_t memo_size() const;

 private:
  BivarPoly tutte_connected(const MultiGraph& g);
  UniPoly chromatic_connected(const MultiGraph& g);
  UniPoly flow_connected(const MultiGraph& g);

  std::unordered_map<std::string, BivarPoly> tutte_memo_;
  std::unordered_map<std::string, UniPoly> chrom_memo_;
  std::unordered_map<std::string, UniPoly> flow_memo_;
};

// chi(x) = (-1)^(V - c) * x^c * T(1 - x, 0) for a graph with V vertices and
// c components
UniPoly chromatic_from_tutte(const BivarPoly& t, int nv, int ncomp);

// F(x) = (-1)^(E - V + c) * T(0, 1 - x)
UniPoly flow_from_tutte(const BivarPoly& t, int ne, int nv, int ncomp);

}  // namespace graphpoly
