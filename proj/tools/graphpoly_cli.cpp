// Command-line front end.  Everything goes through the C interface in
// graphpoly.h; this file deliberately uses no other library symbols.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "graphpoly.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct GraphHandle {
  gp_graph* g = nullptr;
  ~GraphHandle() { gp_graph_free(g); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { gp_free_string(s); }
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

int report_error(gp_status st, const std::string& where) {
  std::cerr << "error (" << where << "): " << gp_last_error() << "\n";
  return static_cast<int>(st);
}

// "a + b*phi  (= power_form, ~ approx)"
std::string golden_display(const json& v) {
  std::ostringstream out;
  out << v.at("value").get<std::string>();
  out << "  (";
  if (v.contains("power_form")) out << "= " << v["power_form"].get<std::string>() << ", ";
  out << "~ " << v.at("approx").get<double>() << ")";
  return out.str();
}

void print_line(const char* line, void*) { std::cout << line << "\n"; }

int parse_graph_arg(const std::string& input, const std::string& format, GraphHandle& gh) {
  std::string text;
  try {
    text = read_input(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  gp_status st = gp_graph_parse(text.c_str(), format.c_str(), &gh.g);
  if (st != GP_OK) return report_error(st, "parsing input");
  return 0;
}

int run_poly(const std::string& input, const std::string& format, const std::string& what,
             const std::string& at) {
  GraphHandle g;
  if (int rc = parse_graph_arg(input, format, g)) return rc;
  StringHandle out;
  if (at.empty()) {
    gp_status st = gp_poly_json(g.g, what.c_str(), &out.s);
    if (st != GP_OK) return report_error(st, "computing polynomial");
    json j = json::parse(out.s);
    std::cout << what << ": " << j.at("poly").get<std::string>() << "\n";
    if (j.contains("coeffs")) {
      std::cout << "coefficients (ascending):";
      for (const auto& c : j["coeffs"]) std::cout << " " << c.get<std::string>();
      std::cout << "\n";
    }
    return 0;
  }
  gp_status st = gp_eval_json(g.g, what.c_str(), at.c_str(), &out.s);
  if (st != GP_OK) return report_error(st, "evaluating polynomial");
  json j = json::parse(out.s);
  std::cout << what << " at " << at << " = " << golden_display(j.at("result")) << "\n";
  return 0;
}

int run_planarity(const std::string& input, const std::string& format, const std::string& method,
                  bool verbose) {
  GraphHandle g;
  if (int rc = parse_graph_arg(input, format, g)) return rc;
  StringHandle out;
  gp_status st = gp_planarity_json(g.g, method.c_str(), verbose ? 1 : 0, &out.s);
  if (st == GP_HYPOTHESIS_VIOLATION) {
    std::cerr << "hypothesis violation: " << gp_last_error() << "\n";
    return 3;
  }
  if (st != GP_OK) return report_error(st, "testing planarity");
  json j = json::parse(out.s);
  if (j.contains("tutte"))
    std::cout << "relation criterion: " << j["tutte"].get<std::string>() << "\n";
  if (j.contains("oracle"))
    std::cout << "embedding oracle:   " << j["oracle"].get<std::string>() << "\n";
  int rc = 0;
  if (j.contains("agree")) {
    bool agree = j["agree"].get<bool>();
    std::cout << "agreement: " << (agree ? "yes" : "NO - methods disagree") << "\n";
    if (!agree) {
      std::cout << "bug report bundle:\n" << j["bug_report"].dump(2) << "\n";
      rc = 1;
    }
  }
  if (verbose && j.contains("defects")) {
    std::cout << "per-edge defects:\n";
    for (const auto& row : j["defects"]) {
      std::cout << "  edge " << row["edge"].get<int>() << " (" << row["u"].get<int>() << "-"
                << row["v"].get<int>() << "): choice 0 -> "
                << golden_display(row["defect_choice0"]) << ", choice 1 -> "
                << golden_display(row["defect_choice1"]) << "\n";
    }
  }
  return rc;
}

int run_scan(const std::string& family, int max_n, const std::string& check, int jobs,
             const std::string& resume) {
  json opts;
  opts["family"] = family;
  opts["max_n"] = max_n;
  opts["check"] = check;
  opts["jobs"] = jobs;
  if (!resume.empty()) opts["resume"] = resume;
  StringHandle summary;
  gp_status st = gp_scan(opts.dump().c_str(), print_line, nullptr, &summary.s);
  if (!summary.s) return report_error(st, "scanning");
  std::cout << summary.s << "\n";
  json s = json::parse(summary.s);
  std::cerr << "scan: processed " << s["processed"] << ", equality " << s["equality"]
            << ", strict " << s["strict"] << ", holds " << s["holds"] << ", fails " << s["fails"]
            << ", skipped " << s["undecided"] << ", violations " << s["violations"] << "\n";
  if (st == GP_CHECK_FAILED) {
    std::cerr << "scan found violations; counterexamples persisted\n";
    return 1;
  }
  return st == GP_OK ? 0 : report_error(st, "scanning");
}

int run_verify(const std::string& identity, const std::string& family, int v, int count,
               std::uint64_t seed) {
  json opts;
  opts["identity"] = identity;
  opts["family"] = family;
  opts["v"] = v;
  opts["count"] = count;
  opts["seed"] = seed;
  StringHandle summary;
  gp_status st = gp_verify(opts.dump().c_str(), print_line, nullptr, &summary.s);
  if (!summary.s) return report_error(st, "verifying");
  std::cout << summary.s << "\n";
  json s = json::parse(summary.s);
  std::cerr << "verify " << identity << ": " << s["ok"] << " ok, " << s["failed"]
            << " failed out of " << s["lines"] << "\n";
  return st == GP_OK ? 0 : 1;
}

int run_tl(int degree, const std::string& at) {
  StringHandle rep;
  gp_status st = gp_tl_selftest(degree, at.c_str(), &rep.s);
  if (!rep.s) return report_error(st, "diagram self-test");
  json j = json::parse(rep.s);
  std::cout << "diagram algebra self-test, degree " << degree << ", at " << at << ":\n";
  for (const auto& suite : j["suites"]) {
    std::cout << "  " << (suite["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
              << suite["name"].get<std::string>() << "  (" << suite["detail"].get<std::string>()
              << ")\n";
  }
  bool pass = j["pass"].get<bool>();
  std::cout << (pass ? "all suites passed" : "SOME SUITES FAILED") << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("graphpoly - exact graph polynomial engine (") + gp_version() + ")"};
  app.require_subcommand(1);

  std::string p_input, p_format = "edgelist", p_what = "tutte", p_at;
  CLI::App* poly = app.add_subcommand("poly", "Compute or evaluate a graph polynomial");
  poly->add_option("--input", p_input, "input file, or '-' for stdin")->required();
  poly->add_option("--format", p_format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  poly->add_option("--what", p_what, "which polynomial")
      ->check(CLI::IsMember({"tutte", "chromatic", "flow"}));
  poly->add_option("--at", p_at,
                   "evaluation point, e.g. \"phi^-2\" or \"phi+1,0\" for tutte; omit to print "
                   "coefficients");

  std::string pl_input, pl_format = "edgelist", pl_method = "both";
  bool pl_verbose = false;
  CLI::App* planarity = app.add_subcommand("planarity", "Planarity by linear relation and oracle");
  planarity->add_option("--input", pl_input, "input file, or '-' for stdin")->required();
  planarity->add_option("--format", pl_format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  planarity->add_option("--method", pl_method, "decision method")
      ->check(CLI::IsMember({"tutte", "oracle", "both"}));
  planarity->add_flag("--verbose", pl_verbose, "print the per-edge defect table");

  std::string s_family = "cubic", s_check = "conjecture", s_resume;
  int s_max_n = 10, s_jobs = 0;
  CLI::App* scan = app.add_subcommand("scan", "Scan a graph family with a per-graph check");
  scan->add_option("--family", s_family, "graph family")
      ->check(CLI::IsMember({"cubic", "k33plus2"}));
  scan->add_option("--max-n", s_max_n, "largest vertex count for the cubic family");
  scan->add_option("--check", s_check, "per-graph check")
      ->check(CLI::IsMember({"conjecture", "planarity-equiv", "golden-chromatic"}));
  scan->add_option("--jobs", s_jobs, "worker threads (0 = all cores)");
  scan->add_option("--resume", s_resume, "append-only journal for resumable scans");

  std::string v_identity = "golden-chromatic", v_family = "apollonian";
  int v_v = 10, v_count = 5;
  std::uint64_t v_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Verify an identity over a graph family");
  verify->add_option("--identity", v_identity, "identity to check")
      ->check(CLI::IsMember({"golden-chromatic", "golden-flow", "duality", "upper-bound",
                             "lower-bound", "commuting-square"}));
  verify->add_option("--family", v_family, "graph family")
      ->check(CLI::IsMember({"apollonian", "named"}));
  verify->add_option("--v", v_v, "vertex count for generated triangulations");
  verify->add_option("--count", v_count, "number of generated triangulations");
  verify->add_option("--seed", v_seed, "generator seed");

  bool t_selftest = false;
  int t_degree = 4;
  std::string t_at = "generic";
  CLI::App* tl = app.add_subcommand("tl", "Diagram-algebra self-tests");
  tl->add_flag("--selftest", t_selftest, "run the self-test suites")->required();
  tl->add_option("--degree", t_degree, "strand count");
  tl->add_option("--at", t_at, "loop value")
      ->check(CLI::IsMember({"phi", "neginvphi", "generic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad flags are input errors
  }

  if (poly->parsed()) return run_poly(p_input, p_format, p_what, p_at);
  if (planarity->parsed()) return run_planarity(pl_input, pl_format, pl_method, pl_verbose);
  if (scan->parsed()) return run_scan(s_family, s_max_n, s_check, s_jobs, s_resume);
  if (verify->parsed()) return run_verify(v_identity, v_family, v_v, v_count, v_seed);
  if (tl->parsed()) return run_tl(t_degree, t_at);
  return 2;
}
