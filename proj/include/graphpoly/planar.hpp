#pragma once

#include <optional>
#include <vector>

#include "graphpoly/graph.hpp"

namespace graphpoly {

// A rotation system: for every vertex, the cyclic (counterclockwise) order of
// the darts incident to it.  Loops contribute both of their darts.  Free
// circles are not part of a rotation system.
struct RotationSystem {
  std::vector<std::vector<int>> rot;
};

// Rotation system listing darts at each vertex in increasing id order.
RotationSystem identity_rotation(const MultiGraph& g);

// True if rs lists every dart of g exactly once, at its own vertex.
bool valid_rotation(const MultiGraph& g, const RotationSystem& rs);

// Face traversal successor: from dart d, cross to its partner and take the
// next dart in the rotation there.  Orbits of this map are the faces of the
// embedded graph.  Each orbit is reported in traversal order.
std::vector<std::vector<int>> face_orbits(const MultiGraph& g, const RotationSystem& rs);

// Total genus of the surface determined by the rotation system, summed over
// connected components (0 means every component embeds in the sphere).
// Free circles are ignored.
int euler_genus(const MultiGraph& g, const RotationSystem& rs);

// Computes a genus-zero rotation system if one exists (i.e. if the graph is
// planar), via incremental face splitting on each biconnected block.
// Loops and parallel edges are handled; free circles are ignored.
std::optional<RotationSystem> planar_embedding(const MultiGraph& g);

bool is_planar(const MultiGraph& g);

// Geometric dual of an embedded graph: one vertex per face, and edge k of the
// dual crosses edge k of the primal.  Dart d of the dual is incident to the
// face of the primal embedding that contains dart d on its boundary, and the
// dual rotation at a face is the face traversal order.  Requires a connected
// graph with no free circles.
struct DualResult {
  MultiGraph graph;
  RotationSystem rot;
  std::vector<int> face_of;  // primal dart -> face index (= dual vertex)
};
DualResult dual_graph(const MultiGraph& g, const RotationSystem& rs);

// True if the embedding is a triangulation: connected simple graph on >= 3
// vertices, all faces of length three.
bool is_triangulation(const MultiGraph& g, const RotationSystem& rs);

}  // namespace graphpoly
