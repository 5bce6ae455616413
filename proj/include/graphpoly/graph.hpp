#pragma once

// Dart-based multigraph kernel.  Edge k owns darts 2k and 2k+1; dart 2k sits
// at ends[k][0] and dart 2k+1 at ends[k][1].  Loops (both ends equal) and
// parallel edges are first-class.  free_circles counts closed edgeless loops
// produced by surgery (a circle contributes a factor to flow/Tutte values but
// has no vertices or darts).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphpoly {

struct MultiGraph {
  int nv = 0;
  std::vector<std::array<int, 2>> ends;
  int free_circles = 0;

  MultiGraph() = default;
  MultiGraph(int vertices, std::vector<std::array<int, 2>> edge_ends, int circles = 0)
      : nv(vertices), ends(std::move(edge_ends)), free_circles(circles) {}

  static MultiGraph from_edges(int vertices, const std::vector<std::pair<int, int>>& e,
                               int circles = 0);

  int ne() const { return static_cast<int>(ends.size()); }
  int nd() const { return 2 * ne(); }

  int dart_vertex(int d) const { return ends[d >> 1][d & 1]; }
  static int dart_partner(int d) { return d ^ 1; }
  static int dart_edge(int d) { return d >> 1; }
  bool is_loop(int e) const { return ends[e][0] == ends[e][1]; }

  int add_vertex() { return nv++; }
  int add_edge(int u, int v);

  std::vector<int> degrees() const;                 // loops count twice
  std::vector<std::vector<int>> darts_at() const;   // vertex -> darts, ascending
  int edge_multiplicity(int u, int v) const;

  bool is_simple() const;      // no loops, no parallel edges (circles allowed: false if any)
  bool is_cubic() const;       // every vertex degree 3
  std::string edge_list_string() const;
};

bool operator==(const MultiGraph& a, const MultiGraph& b);

// ---- connectivity ----------------------------------------------------------

bool is_connected(const MultiGraph& g);              // true for nv <= 1 with no circles
int component_count(const MultiGraph& g);            // free circles not counted
std::vector<int> component_ids(const MultiGraph& g);

// Vertex connectivity of the simplified underlying simple graph (loops
// dropped, parallel edges collapsed).  Complete graphs give nv-1;
// disconnected graphs give 0; K1 gives 0 by convention.
int connectivity(const MultiGraph& g);

// Edge ids that are bridges (parallel edges are never bridges).
std::vector<int> bridges(const MultiGraph& g);

// ---- surgery ---------------------------------------------------------------
// All surgery returns a fresh compact graph; vertex ids are renumbered by
// first appearance in the surviving edge list (isolated vertices keep slots).

MultiGraph contract(const MultiGraph& g, int e);          // e must not be a loop
MultiGraph delete_edge(const MultiGraph& g, int e);
MultiGraph delete_vertex(const MultiGraph& g, int v);     // drops incident edges

// Suppress a 2-valent vertex: splice its two darts' far ends together.  A
// vertex whose two darts belong to one loop becomes a free circle.
MultiGraph suppress_vertex(const MultiGraph& g, int v);

// Delete edge e (endpoints trivalent, e not a loop) and suppress both
// endpoints; the cubic "edge removal".  Accepts parallel-edge degenerations
// (may create loops or free circles).
MultiGraph remove_edge_smooth(const MultiGraph& g, int e);

// Transverse resplice: delete edge e = (u, v) (endpoints trivalent, not a
// loop) and reconnect u's two remaining darts {a, b} (a < b) with v's two
// remaining darts {c, d} (c < d) according to the pairing choice
//   choice 0: a-c and b-d,     choice 1: a-d and b-c,
// then suppress the two temporary 2-valent junctions.  V drops by 2, E by 3.
MultiGraph transverse_resplice(const MultiGraph& g, int e, int choice);

// Edge rotation: delete e = (u, v) and insert a fresh edge e' whose endpoints
// gather {a, c} / {b, d} (choice 0) or {a, d} / {b, c} (choice 1).  Vertex and
// edge counts are preserved.  Used for building locally-related graph
// quadruples; endpoints must be trivalent and e must not be a loop.
MultiGraph rotate_edge(const MultiGraph& g, int e, int choice);

// ---- io --------------------------------------------------------------------

// Edge-list text format: header "V E" (or "V E C" when free circles are
// present), then one "u v" line per edge, loops as "u u".
std::string write_edge_list(const MultiGraph& g);
std::optional<MultiGraph> read_edge_list(const std::string& text);

// graph6 (simple graphs only).
std::optional<MultiGraph> read_graph6(const std::string& line);
std::optional<std::string> write_graph6(const MultiGraph& g);

// Any supported format by sniffing: edge-list if the first token is numeric,
// otherwise graph6.
std::optional<MultiGraph> parse_graph(const std::string& text, const std::string& format);

}  // namespace graphpoly
