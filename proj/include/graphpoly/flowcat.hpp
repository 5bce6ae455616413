#pragma once

// Local edge-triple machinery for the golden flow relation on cubic graphs:
// the two ribbon resplices at an edge, the exact defect of the three-term
// linear relation at Q = phi^-2, the sign inequality, the planarity decision,
// and the four-legged fragment calculus with its bilinear pairing.

#include <array>
#include <cstdint>
#include <vector>

#include "graphpoly/golden.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/planar.hpp"

namespace graphpoly {

// The golden evaluation point Q = phi^-2 = 2 - phi = (3 - sqrt(5))/2.
GoldenNum golden_q();

// The three locally related graphs at an edge e with trivalent endpoints:
//   h1 = the graph itself;
//   h2 = transverse resplice of e under ribbon choice r (V-2 vertices);
//   h3 = removal of e with both endpoints smoothed (V-2 vertices).
struct EdgeTriple {
  MultiGraph h1, h2, h3;
};

EdgeTriple edge_triple(const MultiGraph& g, int e, int choice);

// D = F_h1(Q) + phi * F_h2(Q) + phi^2 * F_h3(Q), exactly.
GoldenNum tutte_defect(PolyEngine& eng, const MultiGraph& g, int e, int choice);

// (-1)^(V-E) * D >= 0, the sign inequality for connected graphs with an
// adjacent trivalent pair.
bool sign_lemma_check(PolyEngine& eng, const MultiGraph& g, int e, int choice);

// Ribbon choice induced at edge e by a rotation system: the resplice pairing
// that matches the embedding (rotation-successor at one end with
// rotation-predecessor at the other).  Returns 0 or 1.
int embedding_choice(const MultiGraph& g, const RotationSystem& rot, int e);

struct EdgeDefect {
  int edge;
  std::array<GoldenNum, 2> defect;  // by ribbon choice
};

// Per-edge defects for a cubic graph (no loops allowed).
std::vector<EdgeDefect> defect_table(PolyEngine& eng, const MultiGraph& g);

// Planarity of a 3-connected simple cubic graph, decided by whether every
// edge admits a ribbon choice with defect exactly zero.  Throws
// std::invalid_argument when the input is not cubic, not simple, or not
// 3-connected.
bool planarity_by_tutte(PolyEngine& eng, const MultiGraph& g);

// ---- four-legged fragments ----------------------------------------------------

// A graph piece in a disk with four marked boundary legs.  Vertices 0..3 are
// the legs, each of degree exactly one; all other vertices are internal.
struct Fragment {
  MultiGraph g;

  // basis pieces, boundary legs in cyclic order 0,1,2,3:
  //   index 0: arcs 0-1 and 2-3
  //   index 1: arcs 0-3 and 1-2
  //   index 2: one internal vertex joined to all four legs
  //   index 3: crossing arcs 0-2 and 1-3
  static Fragment basis(int i);
  static Fragment edge_piece();       // legs 0,1 on one trivalent end, 2,3 on the other
  static Fragment resplice_piece();   // the transverse arcs 0-3, 1-2
  static Fragment smoothing_piece();  // the arcs 0-1, 2-3

  bool valid() const;  // legs have degree exactly one
};

// Coordinates over the four basis pieces.
struct F04Element {
  std::array<GoldenNum, 4> c;
};

F04Element operator+(const F04Element& x, const F04Element& y);
F04Element operator*(const GoldenNum& s, const F04Element& x);
bool operator==(const F04Element& x, const F04Element& y);

// Eliminate internal edges by contraction-deletion, drop terms with a
// univalent internal vertex, convert loops and circles to (Q-1) factors, and
// read off the surviving basis coordinates.  The result is order-independent;
// the seeded variant randomizes elimination order for confluence testing.
F04Element reduce_to_basis(const Fragment& f);
F04Element reduce_to_basis_seeded(const Fragment& f, uint64_t seed);

// The element P = edge_piece + phi * resplice_piece + phi^2 * smoothing_piece,
// reduced to coordinates (phi, phi, 1, 0).
F04Element p_element();

// Glue leg i of a to leg i of b and evaluate the flow polynomial at Q.
GoldenNum pair_fragments(PolyEngine& eng, const Fragment& a, const Fragment& b);

// Bilinear pairing in coordinates; the Gram matrix is produced by gluing
// basis pieces pairwise.
GoldenNum pair(PolyEngine& eng, const F04Element& a, const F04Element& b);
GoldenNum pair(PolyEngine& eng, const F04Element& a, const Fragment& b);

}  // namespace graphpoly
