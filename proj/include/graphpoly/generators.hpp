#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/planar.hpp"

namespace graphpoly {

// All connected cubic multigraphs (loops and parallel edges allowed) on n
// vertices, one representative per isomorphism class, in a deterministic
// order.  n must be even and >= 2.  Levels are built by closing the set
// {theta, dumbbell} under three vertex-adding moves (handle between two
// distinct edges, handle across one edge, pendant-loop insertion), which
// together reach every connected cubic multigraph.  Results are cached, so
// repeated or increasing calls are cheap.
std::vector<MultiGraph> cubic_multigraphs(int n);

// All connected simple cubic graphs on n vertices, one per isomorphism
// class, in a deterministic order.  n must be even and >= 4.
std::vector<MultiGraph> cubic_graphs(int n);

struct EmbeddedGraph {
  MultiGraph g;
  RotationSystem rot;
};

// `count` random stacked triangulations on `v` vertices, each grown from an
// embedded tetrahedron by repeatedly inserting a new vertex into a uniformly
// random triangular face.  Every output is a simple planar triangulation
// together with a genus-zero rotation system (verified before returning).
// Deterministic given `seed`.  Requires v >= 4 and count >= 0.
std::vector<EmbeddedGraph> apollonian(int v, std::uint64_t seed, int count);

struct NamedGraph {
  MultiGraph g;
  std::optional<RotationSystem> rot;  // present exactly when the graph is planar
};

// Standard graphs by name: K4, K5, K33, petersen, prism_N (N >= 3),
// mobius_kantor, theta, cube, octahedron, dodecahedron, icosahedron.
// Throws std::invalid_argument for unknown names.
NamedGraph named(const std::string& name);

// Generalized Petersen graph GP(n, k): outer n-cycle, spokes, inner star
// polygon with step k.  Requires n >= 3 and 1 <= k < n with 2k != 0 (mod n).
MultiGraph generalized_petersen(int n, int k);

// All isomorphism classes of K_{3,3} with two extra distinct simple edges
// added (no loops, no parallel edges).  Every output has 6 vertices and 11
// edges and is non-planar.
std::vector<MultiGraph> k33_plus_two();

// Random connected multigraph in which vertices 0 and 1 are adjacent and
// both have degree exactly three; at most max_edges edges (max_edges >= 3).
// Deterministic given seed.
MultiGraph random_trivalent_pair_graph(std::uint64_t seed, int max_edges);

}  // namespace graphpoly
