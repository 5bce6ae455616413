#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphpoly/canon.hpp"
#include "graphpoly/golden.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/interval.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/planar.hpp"

namespace graphpoly {

// A compared quantity: exact golden-field number, or a certified real
// enclosure when the evaluation point is irrational outside the field.
using CheckValue = std::variant<GoldenNum, RealInterval>;

enum class Verdict {
  kHolds,     // asserted inequality certified true
  kFails,     // asserted relation certified false
  kStrict,    // inequality holds strictly
  kEquality,  // relation holds with equality
  kUndecided  // interval precision insufficient
};

std::string verdict_name(Verdict v);

struct CheckReport {
  CanonicalCode graph_code;
  std::string check_name;
  CheckValue lhs = GoldenNum(0);
  CheckValue rhs = GoldenNum(0);
  Verdict verdict = Verdict::kHolds;
  std::vector<std::string> witnesses;  // e.g. edge or choice descriptions
  std::string note;

  bool ok() const { return verdict != Verdict::kFails && verdict != Verdict::kUndecided; }
  std::string to_json() const;  // one-line JSON object, schema-tagged
  std::string to_csv() const;
  static std::string csv_header();
};

std::string check_value_string(const CheckValue& v);

// Chromatic golden identity: chi_G(phi+2) versus
// (phi+2) * phi^(3V-10) * chi_G(phi+1)^2, compared exactly.  The identity is
// a theorem for planar triangulations; the check evaluates both sides for
// any graph.  V defaults to the graph's vertex count.
CheckReport golden_chromatic(PolyEngine& eng, const MultiGraph& g, int v = -1);

enum class FlowVariant { kConjugate, kDirect };

// Flow golden identity for a cubic graph with E edges.
//   conjugate: F_G((5-sqrt5)/2) versus (-1/phi)^E * F_G((3-sqrt5)/2)^2,
//              expected lhs >= rhs with equality exactly for planar graphs.
//   direct:    F_G(phi+2) versus phi^E * F_G(phi+1)^2, expected lhs <= rhs.
// Verdict is kEquality, kStrict (inequality strict in the expected
// direction), or kFails.  Throws std::invalid_argument if g is not cubic.
CheckReport golden_flow(PolyEngine& eng, const MultiGraph& g, FlowVariant variant);

// Conjugate flow inequality over a family.  Graphs that are not cubic or not
// bridgeless are skipped with an explanatory note (verdict kUndecided).  The
// equality/strict outcome is cross-checked against a planarity oracle; any
// mismatch or outright failure is marked with a note beginning "VIOLATION"
// and the edge list of the offending graph.
std::vector<CheckReport> conjecture_scan(PolyEngine& eng, const std::vector<MultiGraph>& family);

// Chromatic upper bound |chi_T(x)| <= x (x-1) (x-2)^(V-2) for a planar
// triangulation T.  Exact when x is a golden-field number; certified by
// interval arithmetic when x is an enclosure (verdict kUndecided if the
// precision cannot separate the sides).  If no rotation system is supplied a
// planar embedding is computed; a non-triangulation input throws
// std::invalid_argument.
CheckReport upper_bound_check(PolyEngine& eng, const MultiGraph& t, const BerahaValue& x,
                              const std::optional<RotationSystem>& rot = std::nullopt);

// Same bound evaluated at the n-th special chromatic point
// 2 + 2cos(2*pi/(n+1)), retrying at 128-, 256- and 512-bit interval
// precision until the comparison is decided.
CheckReport upper_bound_check_special_point(PolyEngine& eng, const MultiGraph& t, int n,
                                            const std::optional<RotationSystem>& rot = std::nullopt);

// Sharper form of the bound at x = phi+1: |chi_T(phi+1)| <= phi^(5-V), exact.
CheckReport tutte_estimate_check(PolyEngine& eng, const MultiGraph& t,
                                 const std::optional<RotationSystem>& rot = std::nullopt);

// Flow lower bound through the dual: for a planar triangulation T on V
// vertices whose dual D is cubic and 3-connected (n = 2V-4 vertices),
// |F_D(phi^-2)| >= phi^(n-2), compared exactly; verdict kEquality, kStrict
// or kFails.  The note also reports the chromatic-side quantity
// |chi_T(phi^-2)| against both candidate exponents phi^(2V-6) and
// phi^(2V-8).
CheckReport lower_bound_check(PolyEngine& eng, const MultiGraph& t,
                              const std::optional<RotationSystem>& rot = std::nullopt);

// A sequence of edge removals (delete + smooth both endpoints), each
// preserving simplicity and 3-connectedness, ending at K4.  Entry i is an
// edge id of the graph obtained after the first i removals.  Requires a
// simple 3-connected cubic input; throws std::runtime_error if the greedy
// search gets stuck (no qualifying edge).
std::vector<int> barnette_grunbaum_sequence(const MultiGraph& g);

// golden_chromatic over a family; each report's note records the graph's
// planarity, so non-planar graphs satisfying the identity can be spotted.
std::vector<CheckReport> nonplanar_golden_search(PolyEngine& eng,
                                                 const std::vector<MultiGraph>& family);

// Three linear/quadratic relations among the chromatic polynomials of a
// related quadruple (G1, G2, G3, G4), each compared exactly:
//   at_phi_plus_one: phi*chi_2 = chi_3 + (1-phi)*chi_4   at x = phi+1
//   at_phi_plus_two: chi_1 + chi_4 = chi_2 + chi_3       at x = phi+2
//   squares:         phi^3*chi_1^2 + chi_4^2 = phi^3*chi_2^2 + chi_3^2
//                                                        at x = phi+1
struct QuadrupleReport {
  CheckReport at_phi_plus_one;
  CheckReport at_phi_plus_two;
  CheckReport squares;
  bool all_hold() const;
};

QuadrupleReport local_relation_checks(PolyEngine& eng, const MultiGraph& g1, const MultiGraph& g2,
                                      const MultiGraph& g3, const MultiGraph& g4);

// Planar duality x * F_G(x) == chi_{G*}(x), compared as polynomials for a
// connected graph with a genus-zero rotation system; the report's values
// show both sides evaluated at x = phi+2 for display.
CheckReport verify_duality(PolyEngine& eng, const MultiGraph& g, const RotationSystem& rot);

// Diagram-trace consistency: phi_trace(G, rot, d) == F_G(d^2) for an
// embedded planar cubic graph.
CheckReport commuting_square_check(PolyEngine& eng, const MultiGraph& g,
                                   const RotationSystem& rot, const GoldenNum& d);

}  // namespace graphpoly
