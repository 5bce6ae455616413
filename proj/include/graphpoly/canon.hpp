#pragma once

// Canonical codes for multigraphs (isomorphism keys).  The code encodes the
// vertex count, free-circle count, per-vertex loop counts and the upper
// triangle of the edge-multiplicity matrix under a canonical labeling chosen
// by individualization-refinement; two graphs get equal codes iff isomorphic.

#include "graphpoly/graph.hpp"

#include <string>
#include <vector>

namespace graphpoly {

using CanonicalCode = std::string;  // printable hex string

CanonicalCode canonical_code(const MultiGraph& g);

// The labeling realizing the canonical code: position -> original vertex.
std::vector<int> canonical_labeling(const MultiGraph& g);

// Relabel g by the canonical labeling (isomorphic graphs become equal up to
// edge order; edges are sorted).
MultiGraph canonical_form(const MultiGraph& g);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace graphpoly
