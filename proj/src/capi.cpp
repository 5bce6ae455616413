#include "graphpoly.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/canon.hpp"
#include "graphpoly/flowcat.hpp"
#include "graphpoly/generators.hpp"
#include "graphpoly/golden.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/identities.hpp"
#include "graphpoly/interval.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/planar.hpp"
#include "graphpoly/ratfunc.hpp"
#include "graphpoly/scan.hpp"
#include "graphpoly/tl.hpp"
#include "json.hpp"

using json = nlohmann::json;

struct gp_graph {
  graphpoly::MultiGraph g;
};

namespace {

using namespace graphpoly;

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gp_status fail(gp_status st, const std::string& msg) {
  t_last_error = msg;
  return st;
}

json golden_json(const GoldenNum& x) {
  json j;
  j["value"] = to_string(x);
  j["approx"] = to_double(x);
  if (auto p = golden_power_form(x)) j["power_form"] = *p;
  return j;
}

json defect_table_json(PolyEngine& eng, const MultiGraph& g) {
  json arr = json::array();
  for (const EdgeDefect& d : defect_table(eng, g)) {
    json row;
    row["edge"] = d.edge;
    row["u"] = g.ends[d.edge][0];
    row["v"] = g.ends[d.edge][1];
    row["defect_choice0"] = golden_json(d.defect[0]);
    row["defect_choice1"] = golden_json(d.defect[1]);
    arr.push_back(std::move(row));
  }
  return arr;
}

// ---- Temperley-Lieb self-test suites -------------------------------------

template <typename F>
json run_tl_suites(int degree, const F& d, bool check_radical, bool& all_pass) {
  json suites = json::array();
  auto add = [&suites, &all_pass](const std::string& name, bool pass, const std::string& detail) {
    suites.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) all_pass = false;
  };
  {
    static const long expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    bool ok = true;
    std::string detail = "dimensions:";
    for (int n = 1; n <= degree && n <= 8; ++n) {
      long got = static_cast<long>(all_diagrams(n).size());
      detail += " " + std::to_string(got);
      if (got != expect[n]) ok = false;
    }
    add("catalan-dimensions", ok, detail);
  }
  try {
    TLElement<F> p = jones_wenzl(degree, d);
    add("idempotence", tl_mul(p, p, d) == p, "P*P == P, degree " + std::to_string(degree));
    bool ann = true;
    for (int i = 0; i + 1 < degree; ++i) {
      TLElement<F> ei = tl_generator(degree, i, d);
      if (!tl_mul(ei, p, d).is_zero() || !tl_mul(p, ei, d).is_zero()) ann = false;
    }
    add("annihilation", ann, "e_i P == P e_i == 0 for all generators");
    if (check_radical) {
      add("trace-zero", markov_trace(p, d) == F(0), "closure trace of P vanishes");
      add("partial-trace-zero", tl_partial_trace(p, 1, d).is_zero(),
          "one-strand partial trace of P vanishes");
      bool rad = true;
      int count = 0;
      for (const TLDiagram& dg : all_diagrams(degree)) {
        TLElement<F> el = TLElement<F>::from_diagram(dg, F(1));
        if (!(inner_product(p, el, d) == F(0))) rad = false;
        ++count;
      }
      add("trace-radical", rad,
          "<P, D> == 0 for all " + std::to_string(count) + " diagrams");
    }
  } catch (const std::domain_error& e) {
    add("jones-wenzl", false, e.what());
  }
  return suites;
}

// ---- verify orchestration -------------------------------------------------

struct VerifyOptions {
  std::string identity = "golden-chromatic";
  std::string family = "apollonian";
  int v = 10;
  int count = 5;
  std::uint64_t seed = 1;
};

std::vector<EmbeddedGraph> verify_triangulations(const VerifyOptions& o) {
  std::vector<EmbeddedGraph> out;
  if (o.family == "apollonian") {
    out = apollonian(o.v, o.seed, o.count);
  } else if (o.family == "named") {
    for (const char* nm : {"K4", "octahedron", "icosahedron"}) {
      NamedGraph n = named(nm);
      if (!n.rot) throw std::invalid_argument("named triangulation is not planar");
      out.push_back(EmbeddedGraph{std::move(n.g), std::move(*n.rot)});
    }
  } else {
    throw std::invalid_argument("gp_verify: unknown family '" + o.family + "'");
  }
  return out;
}

std::vector<CheckReport> run_verify(const VerifyOptions& o) {
  PolyEngine eng;
  std::vector<CheckReport> out;
  if (o.identity == "golden-chromatic") {
    for (const EmbeddedGraph& t : verify_triangulations(o))
      out.push_back(golden_chromatic(eng, t.g));
  } else if (o.identity == "upper-bound") {
    for (const EmbeddedGraph& t : verify_triangulations(o)) {
      for (int n = 2; n <= 7; ++n)
        out.push_back(upper_bound_check_special_point(eng, t.g, n, t.rot));
      for (int x : {4, 5})
        out.push_back(upper_bound_check(eng, t.g, GoldenNum(x), t.rot));
      out.push_back(tutte_estimate_check(eng, t.g, t.rot));
    }
  } else if (o.identity == "lower-bound") {
    for (const EmbeddedGraph& t : verify_triangulations(o))
      out.push_back(lower_bound_check(eng, t.g, t.rot));
  } else if (o.identity == "duality") {
    if (o.family == "named") {
      for (const char* nm :
           {"K4", "theta", "cube", "octahedron", "dodecahedron", "icosahedron", "prism_5"}) {
        NamedGraph n = named(nm);
        if (!n.rot) throw std::invalid_argument("named graph is not planar");
        out.push_back(verify_duality(eng, n.g, *n.rot));
      }
    } else {
      for (const EmbeddedGraph& t : verify_triangulations(o))
        out.push_back(verify_duality(eng, t.g, t.rot));
    }
  } else if (o.identity == "golden-flow") {
    std::vector<MultiGraph> cubics;
    if (o.family == "named") {
      for (const char* nm :
           {"K4", "theta", "cube", "dodecahedron", "petersen", "K33", "mobius_kantor"})
        cubics.push_back(named(nm).g);
    } else {
      for (const EmbeddedGraph& t : verify_triangulations(o))
        cubics.push_back(dual_graph(t.g, t.rot).graph);
    }
    out = conjecture_scan(eng, cubics);
  } else if (o.identity == "commuting-square") {
    if (o.family == "named") {
      for (const char* nm : {"K4", "theta", "cube", "dodecahedron", "prism_5"}) {
        NamedGraph n = named(nm);
        if (!n.rot) throw std::invalid_argument("named graph is not planar");
        out.push_back(commuting_square_check(eng, n.g, *n.rot, GoldenNum::phi()));
      }
    } else {
      for (const EmbeddedGraph& t : verify_triangulations(o)) {
        DualResult d = dual_graph(t.g, t.rot);
        out.push_back(commuting_square_check(eng, d.graph, d.rot, GoldenNum::phi()));
      }
    }
  } else {
    throw std::invalid_argument("gp_verify: unknown identity '" + o.identity + "'");
  }
  return out;
}

}  // namespace

extern "C" {

const char* gp_last_error(void) { return t_last_error.c_str(); }

const char* gp_version(void) { return "graphpoly 1.0.0"; }

void gp_free_string(char* s) { std::free(s); }

gp_status gp_graph_parse(const char* text, const char* format, gp_graph** out) {
  if (out) *out = nullptr;
  if (!text || !format || !out) return fail(GP_INPUT_ERROR, "gp_graph_parse: null argument");
  try {
    std::optional<MultiGraph> g = parse_graph(text, format);
    if (!g) return fail(GP_INPUT_ERROR, std::string("cannot parse graph as '") + format + "'");
    *out = new gp_graph{std::move(*g)};
    t_last_error.clear();
    return GP_OK;
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

void gp_graph_free(gp_graph* g) { delete g; }

gp_status gp_graph_info_json(const gp_graph* g, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!g || !out_json) return fail(GP_INPUT_ERROR, "gp_graph_info_json: null argument");
  try {
    json j;
    j["schema"] = "graphpoly.graph-info.v1";
    j["vertices"] = g->g.nv;
    j["edges"] = g->g.ne();
    j["free_circles"] = g->g.free_circles;
    j["simple"] = g->g.is_simple();
    j["cubic"] = g->g.is_cubic();
    j["connected"] = is_connected(g->g);
    j["planar"] = is_planar(g->g);
    j["canonical"] = canonical_code(g->g);
    j["edge_list"] = g->g.edge_list_string();
    *out_json = dup_string(j.dump());
    t_last_error.clear();
    return GP_OK;
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

gp_status gp_poly_json(const gp_graph* g, const char* what, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!g || !what || !out_json) return fail(GP_INPUT_ERROR, "gp_poly_json: null argument");
  std::string w = what;
  try {
    PolyEngine eng;
    json j;
    j["schema"] = "graphpoly.poly.v1";
    j["what"] = w;
    if (w == "tutte") {
      BivarPoly t = eng.tutte(g->g);
      j["poly"] = t.to_string();
      json terms = json::array();
      for (const auto& [ij, c] : t.c) terms.push_back({ij.first, ij.second, c.str()});
      j["terms"] = terms;
    } else if (w == "chromatic" || w == "flow") {
      UniPoly p = w == "chromatic" ? eng.chromatic(g->g) : eng.flow(g->g);
      j["poly"] = p.to_string("x");
      json coeffs = json::array();
      for (const Integer& c : p.c) coeffs.push_back(c.str());
      j["coeffs"] = coeffs;
    } else {
      return fail(GP_INPUT_ERROR, "gp_poly_json: unknown polynomial '" + w + "'");
    }
    *out_json = dup_string(j.dump());
    t_last_error.clear();
    return GP_OK;
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

gp_status gp_eval_json(const gp_graph* g, const char* what, const char* at, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!g || !what || !at || !out_json) return fail(GP_INPUT_ERROR, "gp_eval_json: null argument");
  std::string w = what;
  std::string point = at;
  try {
    PolyEngine eng;
    GoldenNum value;
    json j;
    j["schema"] = "graphpoly.eval.v1";
    j["what"] = w;
    j["at"] = point;
    if (w == "tutte") {
      std::size_t comma = point.find(',');
      if (comma == std::string::npos)
        return fail(GP_INPUT_ERROR, "gp_eval_json: tutte needs a point \"X,Y\"");
      std::optional<GoldenNum> x = parse_golden(point.substr(0, comma));
      std::optional<GoldenNum> y = parse_golden(point.substr(comma + 1));
      if (!x || !y) return fail(GP_INPUT_ERROR, "gp_eval_json: cannot parse point '" + point + "'");
      value = eng.tutte_eval(g->g, *x, *y);
    } else if (w == "chromatic" || w == "flow") {
      std::optional<GoldenNum> x = parse_golden(point);
      if (!x) return fail(GP_INPUT_ERROR, "gp_eval_json: cannot parse point '" + point + "'");
      value = w == "chromatic" ? eng.chromatic_eval(g->g, *x) : eng.flow_eval(g->g, *x);
    } else {
      return fail(GP_INPUT_ERROR, "gp_eval_json: unknown polynomial '" + w + "'");
    }
    j["result"] = golden_json(value);
    *out_json = dup_string(j.dump());
    t_last_error.clear();
    return GP_OK;
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

gp_status gp_planarity_json(const gp_graph* g, const char* method, int verbose, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!g || !method || !out_json) return fail(GP_INPUT_ERROR, "gp_planarity_json: null argument");
  std::string m = method;
  if (m != "tutte" && m != "oracle" && m != "both")
    return fail(GP_INPUT_ERROR, "gp_planarity_json: unknown method '" + m + "'");
  try {
    json j;
    j["schema"] = "graphpoly.planarity.v1";
    j["method"] = m;
    PolyEngine eng;
    std::optional<bool> by_relation, by_oracle;
    if (m == "tutte" || m == "both") by_relation = planarity_by_tutte(eng, g->g);
    if (m == "oracle" || m == "both") by_oracle = is_planar(g->g);
    if (by_relation) j["tutte"] = *by_relation ? "planar" : "nonplanar";
    if (by_oracle) j["oracle"] = *by_oracle ? "planar" : "nonplanar";
    if (by_relation && by_oracle) {
      bool agree = *by_relation == *by_oracle;
      j["agree"] = agree;
      if (!agree) {
        json bundle;
        bundle["edge_list"] = g->g.edge_list_string();
        bundle["canonical"] = canonical_code(g->g);
        bundle["defects"] = defect_table_json(eng, g->g);
        j["bug_report"] = bundle;
      }
    }
    if (verbose && by_relation) j["defects"] = defect_table_json(eng, g->g);
    *out_json = dup_string(j.dump());
    t_last_error.clear();
    return GP_OK;
  } catch (const std::invalid_argument& e) {
    return fail(GP_HYPOTHESIS_VIOLATION, e.what());
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

gp_status gp_scan(const char* options_json, gp_line_cb cb, void* user, char** out_summary_json) {
  if (out_summary_json) *out_summary_json = nullptr;
  try {
    ScanOptions so;
    if (options_json && *options_json) {
      json j = json::parse(options_json);
      if (j.contains("family")) so.family = j["family"].get<std::string>();
      if (j.contains("max_n")) so.max_n = j["max_n"].get<int>();
      if (j.contains("check")) so.check = j["check"].get<std::string>();
      if (j.contains("jobs")) so.jobs = j["jobs"].get<int>();
      if (j.contains("resume")) so.resume_path = j["resume"].get<std::string>();
    }
    ScanResult res = run_scan(so, [&cb, user](const std::string& line) {
      if (cb) cb(line.c_str(), user);
    });
    if (out_summary_json) *out_summary_json = dup_string(res.to_json());
    t_last_error.clear();
    return res.violations > 0 ? GP_CHECK_FAILED : GP_OK;
  } catch (const json::exception& e) {
    return fail(GP_INPUT_ERROR, std::string("gp_scan: bad options: ") + e.what());
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

gp_status gp_verify(const char* options_json, gp_line_cb cb, void* user,
                    char** out_summary_json) {
  if (out_summary_json) *out_summary_json = nullptr;
  try {
    VerifyOptions o;
    if (options_json && *options_json) {
      json j = json::parse(options_json);
      if (j.contains("identity")) o.identity = j["identity"].get<std::string>();
      if (j.contains("family")) o.family = j["family"].get<std::string>();
      if (j.contains("v")) o.v = j["v"].get<int>();
      if (j.contains("count")) o.count = j["count"].get<int>();
      if (j.contains("seed")) o.seed = j["seed"].get<std::uint64_t>();
    }
    std::vector<CheckReport> reports = run_verify(o);
    long ok = 0, bad = 0;
    for (const CheckReport& r : reports) {
      if (cb) cb(r.to_json().c_str(), user);
      bool failed = r.verdict == Verdict::kFails || r.verdict == Verdict::kUndecided ||
                    r.note.rfind("VIOLATION", 0) == 0;
      (failed ? bad : ok)++;
    }
    json summary;
    summary["schema"] = "graphpoly.verify-summary.v1";
    summary["identity"] = o.identity;
    summary["family"] = o.family;
    summary["lines"] = static_cast<long>(reports.size());
    summary["ok"] = ok;
    summary["failed"] = bad;
    if (out_summary_json) *out_summary_json = dup_string(summary.dump());
    t_last_error.clear();
    return bad > 0 ? GP_CHECK_FAILED : GP_OK;
  } catch (const json::exception& e) {
    return fail(GP_INPUT_ERROR, std::string("gp_verify: bad options: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GP_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

gp_status gp_tl_selftest(int degree, const char* at, char** out_report_json) {
  if (out_report_json) *out_report_json = nullptr;
  if (degree < 1) return fail(GP_INPUT_ERROR, "gp_tl_selftest: degree must be >= 1");
  std::string mode = at ? at : "generic";
  try {
    bool all = true;
    json suites;
    if (mode == "phi") {
      suites = run_tl_suites<GoldenNum>(degree, GoldenNum::phi(), degree == 4, all);
    } else if (mode == "neginvphi") {
      suites = run_tl_suites<GoldenNum>(degree, GoldenNum(Rational(1), Rational(-1)),
                                        degree == 4, all);
    } else if (mode == "generic") {
      suites = run_tl_suites<RatFunc>(degree, RatFunc::variable(), false, all);
    } else {
      return fail(GP_INPUT_ERROR, "gp_tl_selftest: unknown evaluation mode '" + mode + "'");
    }
    json rep;
    rep["schema"] = "graphpoly.tl-selftest.v1";
    rep["degree"] = degree;
    rep["at"] = mode;
    rep["suites"] = suites;
    rep["pass"] = all;
    *out_report_json = dup_string(rep.dump());
    t_last_error.clear();
    return all ? GP_OK : GP_CHECK_FAILED;
  } catch (const std::exception& e) {
    return fail(GP_INPUT_ERROR, e.what());
  }
}

}  // extern "C"
