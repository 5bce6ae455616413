// Acceptance gate: runs the twelve release criteria end to end and prints one
// PASS/FAIL line per criterion.  Exit status is nonzero when any line fails.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphpoly/canon.hpp"
#include "graphpoly/flowcat.hpp"
#include "graphpoly/generators.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/identities.hpp"
#include "graphpoly/interval.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/planar.hpp"
#include "graphpoly/ratfunc.hpp"
#include "graphpoly/scan.hpp"
#include "graphpoly/tl.hpp"
#include "oracles.hpp"

using namespace graphpoly;

namespace {

int g_failed = 0;

void report(int idx, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << idx << ": " << detail
            << std::endl;
  if (!pass) ++g_failed;
}

void run(int idx, const std::string& label, const std::function<void(int)>& body) {
  try {
    body(idx);
  } catch (const std::exception& e) {
    report(idx, false, label + " aborted with exception: " + e.what());
  }
}

const GoldenNum kPhi = GoldenNum::phi();
const GoldenNum kNegInvPhi = GoldenNum(Rational(1), Rational(-1));
const GoldenNum kZero = GoldenNum(0);

// The edge joining the guaranteed trivalent pair {0, 1} of a random sample.
int pair_edge(const MultiGraph& g) {
  for (int e = 0; e < g.ne(); ++e) {
    int a = g.ends[e][0], b = g.ends[e][1];
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) return e;
  }
  throw std::logic_error("no edge between vertices 0 and 1");
}

// ---- criterion 1: relation-based planarity agrees with the embedding oracle

void criterion1(int idx) {
  ScanOptions opt;
  opt.family = "cubic";
  opt.max_n = 12;
  opt.check = "planarity-equiv";
  opt.jobs = 0;
  ScanResult r = run_scan(opt, [](const std::string&) {});
  std::ostringstream os;
  os << "planarity decisions agree on all " << r.processed
     << " 3-connected cubic simple graphs up to 12 vertices (disagreements: "
     << r.disagreements << ")";
  report(idx, r.disagreements == 0 && r.violations == 0 && r.processed >= 50, os.str());
}

// ---- criterion 2: defect anchors for the tetrahedron and K33

void criterion2(int idx) {
  PolyEngine eng;
  MultiGraph k4 = named("K4").g;
  int k4_zero = 0, k4_pairs = 0;
  std::string counterexample;
  for (int e = 0; e < k4.ne(); ++e) {
    for (int c : {0, 1}) {
      GoldenNum d = tutte_defect(eng, k4, e, c);
      ++k4_pairs;
      if (d == kZero) {
        ++k4_zero;
      } else if (counterexample.empty()) {
        counterexample = "edge " + std::to_string(e) + ", choice " +
                         std::to_string(c) + " gives " + to_string(d);
      }
    }
  }
  bool k4_all_zero = k4_zero == k4_pairs;

  MultiGraph k33 = named("K33").g;
  int k33_neg = 0, k33_pairs = 0;
  for (int e = 0; e < k33.ne(); ++e) {
    for (int c : {0, 1}) {
      ++k33_pairs;
      if (golden_sign(tutte_defect(eng, k33, e, c)) < 0) ++k33_neg;
    }
  }
  bool k33_ok = k33_pairs == 18 && k33_neg == 18;

  std::ostringstream os;
  os << "tetrahedron defect vanishes for " << k4_zero << " of " << k4_pairs
     << " (edge, choice) pairs";
  if (!k4_all_zero)
    os << " (requirement asks for all; " << counterexample
       << " -- exactly one ribbon choice per edge vanishes, the planar one)";
  os << "; K33 defects strictly negative for " << k33_neg << " of " << k33_pairs;
  report(idx, k4_all_zero && k33_ok, os.str());
}

// ---- criterion 3: pairing anchors for the distinguished four-leg element

void criterion3(int idx) {
  PolyEngine eng;
  F04Element p = p_element();
  auto unit = [](int i) {
    F04Element e{};
    e.c[static_cast<std::size_t>(i)] = GoldenNum(1);
    return e;
  };
  bool ok = pair(eng, p, unit(0)) == kZero && pair(eng, p, unit(1)) == kZero &&
            pair(eng, p, unit(2)) == kZero &&
            pair(eng, p, unit(3)) == kZero - kPhi;
  report(idx, ok,
         "distinguished element pairs to 0 with the three planar basis pieces "
         "and to -phi with the crossing piece");
}

// ---- criterion 4: sign inequality on 1000 seeded random graphs

void criterion4(int idx) {
  PolyEngine eng;
  int checked = 0, holds = 0;
  std::string bad;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    MultiGraph g = random_trivalent_pair_graph(seed, 10);
    int e = pair_edge(g);
    for (int c : {0, 1}) {
      ++checked;
      if (sign_lemma_check(eng, g, e, c)) {
        ++holds;
      } else if (bad.empty()) {
        bad = " first failure at seed " + std::to_string(seed) + ", choice " +
              std::to_string(c) + ", edges " + g.edge_list_string();
      }
    }
  }
  std::ostringstream os;
  os << "sign inequality holds in " << holds << " of " << checked
     << " (graph, ribbon choice) cases over 1000 seeded graphs" << bad;
  report(idx, holds == checked && checked == 2000, os.str());
}

// ---- criterion 5: chromatic golden identity on triangulations

void criterion5(int idx) {
  PolyEngine eng;
  int total = 0, equal = 0;
  for (const char* nm : {"K4", "octahedron", "icosahedron"}) {
    ++total;
    if (golden_chromatic(eng, named(nm).g).verdict == Verdict::kEquality) ++equal;
  }
  for (int i = 0; i < 100; ++i) {
    int v = 4 + (i % 11);  // 4..14 vertices
    auto sample = apollonian(v, 9000 + static_cast<std::uint64_t>(i), 1);
    ++total;
    if (golden_chromatic(eng, sample[0].g).verdict == Verdict::kEquality) ++equal;
  }
  std::ostringstream os;
  os << "chromatic golden identity exact on " << equal << " of " << total
     << " triangulations (3 named solids + 100 seeded stacked triangulations up to "
        "14 vertices)";
  report(idx, equal == total && total == 103, os.str());
}

// ---- criterion 6: flow golden identity, equality planar / strict nonplanar

void criterion6(int idx) {
  PolyEngine eng;
  // Planar side: duals of stacked triangulations, up to 14 vertices.
  int planar_total = 0, planar_equal = 0;
  for (int v = 4; v <= 9; ++v) {
    for (const EmbeddedGraph& eg : apollonian(v, 700 + static_cast<std::uint64_t>(v), 10)) {
      DualResult d = dual_graph(eg.g, eg.rot);
      ++planar_total;
      if (golden_flow(eng, d.graph, FlowVariant::kConjugate).verdict ==
          Verdict::kEquality)
        ++planar_equal;
    }
  }

  // Exhaustive side: every cubic bridgeless multigraph up to 12 vertices;
  // the scan cross-checks verdict against planarity and halts (persisting
  // counterexamples) on any violation.
  ScanOptions opt;
  opt.family = "cubic";
  opt.max_n = 12;
  opt.check = "conjecture";
  opt.jobs = 0;
  ScanResult r = run_scan(opt, [](const std::string&) {});

  // Named nonplanar graphs, including one beyond the enumeration range.
  int named_strict = 0;
  for (const char* nm : {"K33", "petersen", "mobius_kantor"}) {
    if (golden_flow(eng, named(nm).g, FlowVariant::kConjugate).verdict ==
        Verdict::kStrict)
      ++named_strict;
  }

  std::ostringstream os;
  os << "equality on " << planar_equal << " of " << planar_total
     << " planar cubic duals up to 14 vertices; exhaustive sweep of " << r.processed
     << " cubic multigraphs up to 12 vertices: " << r.equality << " equalities, "
     << r.strict << " strict, " << r.undecided << " skipped (bridges), "
     << r.violations << " violations";
  if (r.violations > 0) os << " (counterexamples persisted to scan-counterexamples.txt)";
  os << "; named nonplanar strict: " << named_strict << " of 3";
  report(idx,
         planar_equal == planar_total && r.violations == 0 && r.fails == 0 &&
             r.equality > 0 && r.strict > 0 && named_strict == 3,
         os.str());
}

// ---- criterion 7: chromatic upper bound at the special points

void criterion7(int idx) {
  PolyEngine eng;
  std::vector<std::pair<MultiGraph, std::optional<RotationSystem>>> fam;
  for (const char* nm : {"K4", "octahedron", "icosahedron"}) {
    NamedGraph n = named(nm);
    fam.emplace_back(n.g, n.rot);
  }
  for (int v = 5; v <= 12; ++v) {
    for (const EmbeddedGraph& eg : apollonian(v, 40 + static_cast<std::uint64_t>(v), 3)) {
      fam.emplace_back(eg.g, eg.rot);
    }
  }
  int total = 0, holds = 0, undecided = 0, estimate_holds = 0;
  for (const auto& [t, rot] : fam) {
    for (int n = 2; n <= 7; ++n) {
      CheckReport r = upper_bound_check_special_point(eng, t, n, rot);
      ++total;
      if (r.verdict == Verdict::kHolds || r.verdict == Verdict::kEquality) ++holds;
      if (r.verdict == Verdict::kUndecided) ++undecided;
    }
    for (int x : {4, 5}) {
      CheckReport r = upper_bound_check(eng, t, GoldenNum(x), rot);
      ++total;
      if (r.verdict == Verdict::kHolds || r.verdict == Verdict::kEquality) ++holds;
    }
    if (tutte_estimate_check(eng, t, rot).verdict == Verdict::kHolds) ++estimate_holds;
  }
  std::ostringstream os;
  os << "chromatic bound holds at the six special points plus 4 and 5 for all "
     << fam.size() << " triangulations up to 12 vertices (" << holds << " of " << total
     << " comparisons, " << undecided << " undecided after retries); golden "
     << "estimate at the fourth point holds for " << estimate_holds << " of "
     << fam.size();
  report(idx,
         holds == total && undecided == 0 &&
             estimate_holds == static_cast<int>(fam.size()),
         os.str());
}

// ---- criterion 8: flow lower bound for duals of triangulations

void criterion8(int idx) {
  PolyEngine eng;
  std::vector<std::pair<MultiGraph, std::optional<RotationSystem>>> fam;
  {
    NamedGraph k4 = named("K4");
    fam.emplace_back(k4.g, k4.rot);
    NamedGraph octa = named("octahedron");
    fam.emplace_back(octa.g, octa.rot);
  }
  for (int v = 5; v <= 10; ++v) {
    for (const EmbeddedGraph& eg : apollonian(v, 80 + static_cast<std::uint64_t>(v), 2)) {
      fam.emplace_back(eg.g, eg.rot);
    }
  }
  int total = 0, satisfied = 0, equalities = 0, equality_elsewhere = 0;
  bool exponents_reported = true;
  for (const auto& [t, rot] : fam) {
    CheckReport r = lower_bound_check(eng, t, rot);
    ++total;
    if (r.verdict == Verdict::kEquality || r.verdict == Verdict::kStrict) ++satisfied;
    if (r.verdict == Verdict::kEquality) {
      ++equalities;
      if (t.nv != 4) ++equality_elsewhere;
    }
    if (r.note.find("2V-6") == std::string::npos ||
        r.note.find("2V-8") == std::string::npos)
      exponents_reported = false;
  }
  std::ostringstream os;
  os << "flow lower bound holds for duals (up to 16 vertices) of all " << total
     << " triangulations (" << satisfied << " of " << total
     << " satisfied); equality required only at the tetrahedron but reached at "
     << equalities << " members (" << equality_elsewhere
     << " beyond it): every stacked triangulation evaluates to a pure power of "
        "phi, so its dual meets the bound exactly at every size; both candidate "
        "chromatic exponents reported in every note: "
     << (exponents_reported ? "yes" : "no");
  report(idx,
         satisfied == total && equalities >= 1 && equality_elsewhere == 0 &&
             exponents_reported,
         os.str());
}

// ---- criterion 9: diagram algebra suite

void criterion9(int idx) {
  bool ok = true;
  std::string why;
  auto fail = [&](const std::string& msg) {
    if (ok) why = msg;
    ok = false;
  };

  if (all_diagrams(1).size() != 1 || all_diagrams(2).size() != 2 ||
      all_diagrams(3).size() != 5 || all_diagrams(4).size() != 14 ||
      all_diagrams(5).size() != 42)
    fail("diagram dimensions are not 1,2,5,14,42");

  {
    RatFunc d = RatFunc::variable();
    for (int n = 2; n <= 5; ++n) {
      TLElement<RatFunc> p = jones_wenzl(n, d);
      if (!(tl_mul(p, p, d) == p)) fail("generic projector not idempotent");
      for (int i = 0; i + 1 < n; ++i) {
        if (!tl_mul(tl_generator(n, i, d), p, d).is_zero() ||
            !tl_mul(p, tl_generator(n, i, d), d).is_zero())
          fail("generic projector not annihilated by a generator");
      }
    }
  }

  for (const GoldenNum& d : {kPhi, kNegInvPhi}) {
    for (int n = 2; n <= 4; ++n) {
      TLElement<GoldenNum> p = jones_wenzl(n, d);
      if (!(tl_mul(p, p, d) == p)) fail("specialized projector not idempotent");
      for (int i = 0; i + 1 < n; ++i) {
        if (!tl_mul(tl_generator(n, i, d), p, d).is_zero() ||
            !tl_mul(p, tl_generator(n, i, d), d).is_zero())
          fail("specialized projector not annihilated by a generator");
      }
    }
    TLElement<GoldenNum> p4 = jones_wenzl(4, d);
    if (markov_trace(p4, d) != kZero) fail("trace of the four-strand projector is not zero");
    if (!tl_partial_trace(p4, 1, d).is_zero()) fail("partial closure is not zero");
    for (const TLDiagram& dg : all_diagrams(4)) {
      TLElement<GoldenNum> el = TLElement<GoldenNum>::from_diagram(dg, GoldenNum(1));
      if (inner_product(p4, el, d) != kZero)
        fail("projector pairs nontrivially with a diagram");
    }
  }

  report(idx, ok,
         ok ? "diagram dimensions 1,2,5,14,42; projector idempotence and "
              "annihilation up to five strands generically and four strands at "
              "both golden values; four-strand projector has zero trace, zero "
              "partial closure, and zero pairing with all 14 diagrams"
            : why);
}

// ---- criterion 10: diagram trace matches the flow specialization

void criterion10(int idx) {
  PolyEngine eng;
  std::vector<GoldenNum> ds = {kPhi};
  std::mt19937_64 rng(20260814u);
  for (int i = 0; i < 5; ++i) {
    long num = 2 + static_cast<long>(rng() % 8u);
    long den = 1 + static_cast<long>(rng() % 4u);
    ds.push_back(GoldenNum(Rational(num, den)));
  }
  int total = 0, equal = 0;
  int graphs = 0;
  for (int v = 4; v <= 8; ++v) {
    for (const EmbeddedGraph& eg : apollonian(v, 300 + static_cast<std::uint64_t>(v), 2)) {
      DualResult d = dual_graph(eg.g, eg.rot);
      ++graphs;
      for (const GoldenNum& dv : ds) {
        ++total;
        if (commuting_square_check(eng, d.graph, d.rot, dv).verdict ==
            Verdict::kEquality)
          ++equal;
      }
    }
  }
  std::ostringstream os;
  os << "diagram trace equals the flow value at the squared loop weight in " << equal
     << " of " << total << " evaluations (" << graphs
     << " embedded planar cubic duals up to 12 vertices; loop weight phi and 5 "
        "seeded rationals)";
  report(idx, equal == total && graphs >= 10, os.str());
}

// ---- criterion 11: oracle equivalences

void criterion11(int idx) {
  PolyEngine eng;
  std::vector<MultiGraph> zoo = {
      named("K4").g,
      named("theta").g,
      MultiGraph::from_edges(1, {{0, 0}}),
      MultiGraph::from_edges(2, {{0, 1}}),
      MultiGraph::from_edges(2, {{0, 1}, {0, 1}}),
      MultiGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
      MultiGraph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 2}}),
  };
  for (std::uint64_t s = 1; s <= 60; ++s) zoo.push_back(random_trivalent_pair_graph(s, 8));

  int tutte_total = 0, tutte_ok = 0;
  int point_total = 0, point_ok = 0;
  for (const MultiGraph& g : zoo) {
    if (g.ne() > 8) continue;
    ++tutte_total;
    if (eng.tutte(g) == oracles::tutte_subset_sum(g)) ++tutte_ok;

    UniPoly fl = eng.flow(g);
    for (int q = 2; q <= 5; ++q) {
      ++point_total;
      if (fl.eval(Rational(q)) == Rational(oracles::count_flows(g, q))) ++point_ok;
    }
    if (g.nv <= 6 && g.free_circles == 0) {
      UniPoly chi = eng.chromatic(g);
      for (int q = 0; q <= 4; ++q) {
        ++point_total;
        if (chi.eval(Rational(q)) == Rational(oracles::count_colorings(g, q))) ++point_ok;
      }
    }
  }
  std::ostringstream os;
  os << "bivariate polynomial matches the subset-sum oracle on " << tutte_ok << " of "
     << tutte_total << " graphs with at most 8 edges; chromatic/flow point values "
     << "match brute-force counts in " << point_ok << " of " << point_total
     << " evaluations";
  report(idx, tutte_ok == tutte_total && point_ok == point_total && tutte_total >= 50,
         os.str());
}

// ---- criterion 12: nonplanar satisfier of the chromatic identity

void criterion12(int idx) {
  PolyEngine eng;
  auto family = k33_plus_two();
  auto reports = nonplanar_golden_search(eng, family);
  int satisfiers = 0;
  const MultiGraph* witness = nullptr;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].verdict == Verdict::kEquality &&
        reports[i].note.find("nonplanar") != std::string::npos) {
      ++satisfiers;
      if (!witness) witness = &family[i];
    }
  }

  std::string quad_note = "no quadruple search attempted";
  bool quad_found = false;
  if (witness) {
    // Search deletion/contraction quadruples (H-e, H-f, H/e, H/f) of the
    // satisfier for one passing both the sum relation at phi+2 and the
    // squares relation at phi+1.
    const MultiGraph& h = *witness;
    for (int e = 0; e < h.ne() && !quad_found; ++e) {
      for (int f = e + 1; f < h.ne() && !quad_found; ++f) {
        if (h.is_loop(e) || h.is_loop(f)) continue;
        QuadrupleReport q = local_relation_checks(eng, delete_edge(h, e), delete_edge(h, f),
                                                  contract(h, e), contract(h, f));
        if (q.at_phi_plus_two.verdict == Verdict::kEquality &&
            q.squares.verdict == Verdict::kEquality) {
          quad_found = true;
          quad_note = "a deletion/contraction quadruple at edges " + std::to_string(e) +
                      "," + std::to_string(f) +
                      " satisfies both the sum relation at phi+2 and the squares "
                      "relation at phi+1";
        }
      }
    }
    if (!quad_found) quad_note = "no quadruple satisfying both relations was found";
  }

  std::string nearby;
  if (!witness) {
    // Document the closest graph that does satisfy the identity: K33 with a
    // triangle added inside one part (equivalently K6 minus a triangle).  It
    // is nonplanar, has 3V-6 edges, and its chromatic polynomial equals that
    // of the stacked triangulation on six vertices.
    MultiGraph k33_tri = MultiGraph::from_edges(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
            {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    CheckReport near = nonplanar_golden_search(eng, {k33_tri}).front();
    bool near_ok = near.verdict == Verdict::kEquality &&
                   near.note.find("nonplanar") != std::string::npos;
    nearby = std::string("; three added edges forming a triangle do yield a "
                         "nonplanar satisfier (verified exactly: ") +
             (near_ok ? "equality holds" : "unexpectedly fails") + ")";
  }

  std::ostringstream os;
  os << satisfiers << " of " << family.size()
     << " two-edge extensions of K33 are nonplanar and satisfy the chromatic golden "
        "identity exactly; "
     << quad_note << nearby;
  report(idx, satisfiers >= 1, os.str());
}

}  // namespace

int main() {
  run(1, "planarity equivalence", criterion1);
  run(2, "defect anchors", criterion2);
  run(3, "pairing anchors", criterion3);
  run(4, "sign inequality battery", criterion4);
  run(5, "chromatic golden identity", criterion5);
  run(6, "flow golden identity", criterion6);
  run(7, "chromatic upper bound", criterion7);
  run(8, "flow lower bound", criterion8);
  run(9, "diagram algebra suite", criterion9);
  run(10, "trace/flow commuting square", criterion10);
  run(11, "oracle equivalences", criterion11);
  run(12, "nonplanar satisfier search", criterion12);

  std::cout << "RESULT: " << (12 - g_failed) << " of 12 criteria passed" << std::endl;
  return g_failed == 0 ? 0 : 1;
}
