#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphpoly/generators.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/identities.hpp"
#include "graphpoly/planar.hpp"
#include "graphpoly/scan.hpp"

using namespace graphpoly;

namespace {
const GoldenNum kPhi = GoldenNum::phi();
const GoldenNum kPhiPlusOne = GoldenNum(Rational(1), Rational(1));
const GoldenNum kPhiPlusTwo = GoldenNum(Rational(2), Rational(1));
}  // namespace

TEST_CASE("chromatic golden identity holds exactly on triangulations") {
  PolyEngine eng;
  for (const char* nm : {"K4", "octahedron", "icosahedron"}) {
    NamedGraph n = named(nm);
    CheckReport r = golden_chromatic(eng, n.g);
    CAPTURE(nm);
    CHECK(r.verdict == Verdict::kEquality);
  }
  for (const EmbeddedGraph& eg : apollonian(9, 11, 4)) {
    CheckReport r = golden_chromatic(eng, eg.g);
    CHECK(r.verdict == Verdict::kEquality);
  }
  // Negative control: a five-cycle is no triangulation and fails the identity.
  MultiGraph c5 = MultiGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(golden_chromatic(eng, c5).verdict == Verdict::kFails);
}

TEST_CASE("chromatic golden identity pinned values on the tetrahedron") {
  PolyEngine eng;
  CheckReport r = golden_chromatic(eng, named("K4").g);
  // chi(phi+2) = (phi+2)*phi^2 on both sides.
  GoldenNum expect = kPhiPlusTwo * kPhi * kPhi;
  CHECK(std::get<GoldenNum>(r.lhs) == expect);
  CHECK(std::get<GoldenNum>(r.rhs) == expect);
}

TEST_CASE("flow golden identity: equality for planar cubic, strict drop otherwise") {
  PolyEngine eng;
  for (const char* nm : {"K4", "theta", "cube", "prism_5"}) {
    CAPTURE(nm);
    CHECK(golden_flow(eng, named(nm).g, FlowVariant::kConjugate).verdict ==
          Verdict::kEquality);
    CHECK(golden_flow(eng, named(nm).g, FlowVariant::kDirect).verdict ==
          Verdict::kEquality);
  }
  for (const char* nm : {"K33", "petersen", "mobius_kantor"}) {
    CAPTURE(nm);
    CHECK(golden_flow(eng, named(nm).g, FlowVariant::kConjugate).verdict ==
          Verdict::kStrict);
  }
  CHECK_THROWS_AS(golden_flow(eng, named("K5").g, FlowVariant::kConjugate),
                  std::invalid_argument);
  // A bridge forces the flow polynomial to vanish identically, so both sides
  // of either identity are zero and the report degenerates to equality.
  MultiGraph bridged = MultiGraph::from_edges(2, {{0, 0}, {0, 1}, {1, 1}});
  CheckReport via_bridge = golden_flow(eng, bridged, FlowVariant::kConjugate);
  CHECK(std::get<GoldenNum>(via_bridge.lhs) == GoldenNum(0));
  CHECK(std::get<GoldenNum>(via_bridge.rhs) == GoldenNum(0));
  CHECK(via_bridge.verdict == Verdict::kEquality);
}

TEST_CASE("conjugate-inequality sweep over small cubic multigraphs") {
  PolyEngine eng;
  std::vector<MultiGraph> fam;
  for (int n : {2, 4, 6}) {
    for (const MultiGraph& g : cubic_multigraphs(n)) fam.push_back(g);
  }
  auto reports = conjecture_scan(eng, fam);
  CHECK(reports.size() == fam.size());
  int violations = 0, skipped = 0, eq = 0, strict = 0;
  for (const CheckReport& r : reports) {
    if (r.note.rfind("VIOLATION", 0) == 0) ++violations;
    if (r.note.rfind("skipped", 0) == 0) ++skipped;
    if (r.verdict == Verdict::kEquality) ++eq;
    if (r.verdict == Verdict::kStrict) ++strict;
  }
  CHECK(violations == 0);
  CHECK(skipped > 0);  // graphs with bridges are skipped
  CHECK(eq > 0);       // planar cubic graphs give equality
  CHECK(strict > 0);   // K33 appears at six vertices
}

TEST_CASE("chromatic upper bound at the first special points and small integers") {
  PolyEngine eng;
  for (const char* nm : {"K4", "octahedron", "icosahedron"}) {
    NamedGraph t = named(nm);
    for (int n = 2; n <= 7; ++n) {
      CheckReport r = upper_bound_check_special_point(eng, t.g, n, t.rot);
      CAPTURE(nm);
      CAPTURE(n);
      CHECK(r.verdict == Verdict::kHolds);
    }
    for (int x : {4, 5}) {
      CheckReport r = upper_bound_check(eng, t.g, GoldenNum(x), t.rot);
      CHECK(r.verdict == Verdict::kHolds);
    }
    CHECK(tutte_estimate_check(eng, t.g, t.rot).verdict == Verdict::kHolds);
  }
  // Pinned numbers: the tetrahedron at x=5 gives |chi| = 120 against 5*4*9 = 180.
  CheckReport r = upper_bound_check(eng, named("K4").g, GoldenNum(5), named("K4").rot);
  CHECK(std::get<GoldenNum>(r.lhs) == GoldenNum(120));
  CHECK(std::get<GoldenNum>(r.rhs) == GoldenNum(180));
  // Non-triangulations are rejected.
  CHECK_THROWS_AS(upper_bound_check(eng, named("cube").g, GoldenNum(4), named("cube").rot),
                  std::invalid_argument);
}

TEST_CASE("tutte estimate is an equality-or-better bound with golden arithmetic") {
  PolyEngine eng;
  CheckReport r = tutte_estimate_check(eng, named("K4").g, named("K4").rot);
  // |chi(phi+1)| = 1 and phi^(5-4) = phi.
  CHECK(std::get<GoldenNum>(r.lhs) == GoldenNum(1));
  CHECK(std::get<GoldenNum>(r.rhs) == kPhi);
  CHECK(r.verdict == Verdict::kHolds);
}

TEST_CASE("flow lower bound through planar duals") {
  PolyEngine eng;
  CheckReport k4 = lower_bound_check(eng, named("K4").g, named("K4").rot);
  CHECK(k4.verdict == Verdict::kEquality);
  CHECK(k4.note.find("phi^(2V-8): yes") != std::string::npos);
  CHECK(k4.note.find("phi^(2V-6): no") != std::string::npos);

  CheckReport octa = lower_bound_check(eng, named("octahedron").g, named("octahedron").rot);
  CHECK(octa.verdict == Verdict::kStrict);
  // |F_cube(phi^-2)| = 6 + 10*phi exceeds phi^6 = 5 + 8*phi.
  CHECK(std::get<GoldenNum>(octa.lhs) == GoldenNum(Rational(6), Rational(10)));
  CHECK(std::get<GoldenNum>(octa.rhs) == golden_pow(kPhi, 6));

  // Stacked triangulations have chi = q(q-1)(q-2)(q-3)^(V-3), so their duals
  // meet the bound with equality: |F(phi^-2)| = phi^(2V-6) = phi^(n-2).
  for (const EmbeddedGraph& eg : apollonian(8, 3, 3)) {
    CheckReport r = lower_bound_check(eng, eg.g, eg.rot);
    CHECK(r.verdict == Verdict::kEquality);
    CHECK(std::get<GoldenNum>(r.lhs) == golden_pow(kPhi, 2 * eg.g.nv - 6));
  }
}

TEST_CASE("edge removal sequences reach the tetrahedron") {
  CHECK(barnette_grunbaum_sequence(named("K4").g).empty());
  CHECK(barnette_grunbaum_sequence(named("cube").g).size() == 2);
  CHECK(barnette_grunbaum_sequence(named("dodecahedron").g).size() == 8);
  CHECK_THROWS_AS(barnette_grunbaum_sequence(named("theta").g), std::invalid_argument);
}

TEST_CASE("flow-chromatic duality on the embedded named graphs") {
  PolyEngine eng;
  for (const char* nm : {"K4", "theta", "cube", "octahedron", "dodecahedron",
                         "icosahedron", "prism_5"}) {
    NamedGraph n = named(nm);
    REQUIRE(n.rot.has_value());
    CheckReport r = verify_duality(eng, n.g, *n.rot);
    CAPTURE(nm);
    CHECK(r.verdict == Verdict::kEquality);
  }
}

TEST_CASE("the diagram trace commutes with the flow specialization") {
  PolyEngine eng;
  for (const char* nm : {"K4", "theta", "cube"}) {
    NamedGraph n = named(nm);
    REQUIRE(n.rot.has_value());
    CAPTURE(nm);
    CHECK(commuting_square_check(eng, n.g, *n.rot, kPhi).verdict == Verdict::kEquality);
    CHECK(commuting_square_check(eng, n.g, *n.rot, GoldenNum(Rational(3, 2))).verdict ==
          Verdict::kEquality);
  }
}

TEST_CASE("quadruple checks: deletion-contraction quadruples satisfy the sum relation") {
  PolyEngine eng;
  // For H with edges e != f, the quadruple (H-e, H-f, H/e, H/f) satisfies
  // chi1 + chi4 = chi2 + chi3 at every point, since both differences equal chi_H.
  MultiGraph h = named("K4").g;
  MultiGraph g1 = delete_edge(h, 0);
  MultiGraph g2 = delete_edge(h, 3);
  MultiGraph g3 = contract(h, 0);
  MultiGraph g4 = contract(h, 3);
  QuadrupleReport q = local_relation_checks(eng, g1, g2, g3, g4);
  CHECK(q.at_phi_plus_two.verdict == Verdict::kEquality);
  // K4 is edge transitive, so chi(H-e) = chi(H-f) and the squares relation
  // also collapses to an identity.
  CHECK(q.squares.verdict == Verdict::kEquality);

  // Negative control: four unrelated graphs.
  QuadrupleReport bad = local_relation_checks(eng, named("K4").g, named("cube").g,
                                              named("petersen").g, named("K33").g);
  CHECK(!bad.all_hold());
  CHECK(bad.at_phi_plus_two.verdict == Verdict::kFails);
}

TEST_CASE("quadruple checker computes the pinned linear combinations") {
  PolyEngine eng;
  MultiGraph h = named("K4").g;
  MultiGraph g1 = delete_edge(h, 0);
  MultiGraph g2 = delete_edge(h, 3);
  MultiGraph g3 = contract(h, 0);
  MultiGraph g4 = contract(h, 3);
  QuadrupleReport q = local_relation_checks(eng, g1, g2, g3, g4);
  GoldenNum lhs15 = kPhi * eng.chromatic_eval(g2, kPhiPlusOne);
  GoldenNum rhs15 = eng.chromatic_eval(g3, kPhiPlusOne) +
                    (GoldenNum(1) - kPhi) * eng.chromatic_eval(g4, kPhiPlusOne);
  CHECK(std::get<GoldenNum>(q.at_phi_plus_one.lhs) == lhs15);
  CHECK(std::get<GoldenNum>(q.at_phi_plus_one.rhs) == rhs15);
  GoldenNum lhs16 = eng.chromatic_eval(g1, kPhiPlusTwo) + eng.chromatic_eval(g4, kPhiPlusTwo);
  GoldenNum rhs16 = eng.chromatic_eval(g2, kPhiPlusTwo) + eng.chromatic_eval(g3, kPhiPlusTwo);
  CHECK(std::get<GoldenNum>(q.at_phi_plus_two.lhs) == lhs16);
  CHECK(std::get<GoldenNum>(q.at_phi_plus_two.rhs) == rhs16);
}

TEST_CASE("golden-identity search near K33: plus-two-edges fails, plus-triangle satisfies") {
  PolyEngine eng;
  // Neither way of adding two simple edges to K33 satisfies the identity:
  // chi(phi+1) = -4+3*phi resp. -5+2*phi, and chi(phi+2) = 13+19*phi resp.
  // 9+12*phi, while the right side comes out 35+55*phi resp. 147+236*phi.
  auto reports = nonplanar_golden_search(eng, k33_plus_two());
  REQUIRE(reports.size() == 2);
  for (const CheckReport& r : reports) {
    CHECK(r.verdict == Verdict::kFails);
    CHECK(r.note == "nonplanar");
  }

  // Adding a whole triangle inside one part (equivalently K6 minus a
  // triangle) gives chi = q(q-1)(q-2)(q-3)^3 -- the chromatic polynomial of a
  // stacked triangulation on 6 vertices -- so the identity holds even though
  // the graph contains K33 and is therefore non-planar. An exhaustive sweep
  // of all connected 6-vertex simple graphs finds exactly this isomorphism
  // class (20 labeled copies) among non-planar satisfiers.
  std::vector<std::pair<int, int>> tri_edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) tri_edges.push_back({i, j});
  tri_edges.push_back({3, 4});
  tri_edges.push_back({3, 5});
  tri_edges.push_back({4, 5});
  MultiGraph k33_tri = MultiGraph::from_edges(6, tri_edges);
  UniPoly expect;  // q(q-1)(q-2)(q-3)^3, expanded
  {
    UniPoly q = UniPoly::x();
    UniPoly q1 = q - UniPoly::constant(1);
    UniPoly q2 = q - UniPoly::constant(2);
    UniPoly q3 = q - UniPoly::constant(3);
    expect = q * q1 * q2 * q3 * q3 * q3;
  }
  CHECK(eng.chromatic(k33_tri) == expect);
  auto tri_reports = nonplanar_golden_search(eng, {k33_tri});
  REQUIRE(tri_reports.size() == 1);
  CHECK(tri_reports[0].verdict == Verdict::kEquality);
  CHECK(tri_reports[0].note.find("non-planar satisfier") != std::string::npos);
}

TEST_CASE("check reports serialize to JSON and CSV") {
  PolyEngine eng;
  CheckReport r = golden_chromatic(eng, named("K4").g);
  std::string js = r.to_json();
  CHECK(js.find("\"schema\":\"graphpoly.check.v1\"") != std::string::npos);
  CHECK(js.find("golden-chromatic") != std::string::npos);
  std::string cs = r.to_csv();
  CHECK(cs.find("golden-chromatic") != std::string::npos);
  CHECK(CheckReport::csv_header().find("check") != std::string::npos);
}

TEST_CASE("scan: conjugate inequality over a tiny family, with resume and determinism") {
  namespace fs = std::filesystem;
  ScanOptions opt;
  opt.family = "cubic";
  opt.max_n = 6;
  opt.check = "conjecture";
  opt.jobs = 2;
  fs::path journal = fs::temp_directory_path() / "graphpoly_scan_test_journal.txt";
  std::remove(journal.string().c_str());
  opt.resume_path = journal.string();

  std::vector<std::string> lines;
  ScanResult r1 = run_scan(opt, [&](const std::string& l) { lines.push_back(l); });
  CHECK(r1.violations == 0);
  CHECK(r1.processed > 0);
  CHECK(lines.size() == static_cast<std::size_t>(r1.processed));

  // A second run resumes from the journal and reprocesses nothing.
  ScanResult r2 = run_scan(opt, [](const std::string&) {});
  CHECK(r2.processed == 0);
  CHECK(r2.skipped_resume == r1.processed);
  std::remove(journal.string().c_str());

  // Output order does not depend on the number of workers.
  ScanOptions serial = opt;
  serial.resume_path.clear();
  serial.jobs = 1;
  ScanOptions wide = serial;
  wide.jobs = 4;
  std::vector<std::string> a, b;
  run_scan(serial, [&](const std::string& l) { a.push_back(l); });
  run_scan(wide, [&](const std::string& l) { b.push_back(l); });
  CHECK(a == b);
  CHECK(a == lines);

  std::string summary = r1.to_json();
  CHECK(summary.find("graphpoly.scan-summary.v1") != std::string::npos);
}

TEST_CASE("scan: planarity equivalence over the smallest levels") {
  ScanOptions opt;
  opt.family = "cubic";
  opt.max_n = 8;
  opt.check = "planarity-equiv";
  opt.jobs = 0;
  ScanResult r = run_scan(opt, [](const std::string&) {});
  // 1 + 2 + 5 simple connected cubic graphs; the 3-connected ones are checked.
  CHECK(r.processed > 0);
  CHECK(r.disagreements == 0);
  CHECK(r.violations == 0);
}

TEST_CASE("scan rejects unknown options") {
  ScanOptions opt;
  opt.family = "no-such-family";
  CHECK_THROWS_AS(run_scan(opt, [](const std::string&) {}), std::invalid_argument);
  ScanOptions opt2;
  opt2.check = "no-such-check";
  CHECK_THROWS_AS(run_scan(opt2, [](const std::string&) {}), std::invalid_argument);
}
