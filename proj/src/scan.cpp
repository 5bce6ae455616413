#include "graphpoly/scan.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "graphpoly/flowcat.hpp"
#include "graphpoly/generators.hpp"
#include "json.hpp"

namespace graphpoly {

namespace {

struct WorkItem {
  MultiGraph g;
  CanonicalCode code;
};

CheckReport run_check(PolyEngine& eng, const std::string& check, const WorkItem& item) {
  if (check == "conjecture") {
    return conjecture_scan(eng, {item.g}).front();
  }
  if (check == "planarity-equiv") {
    CheckReport r;
    r.graph_code = item.code;
    r.check_name = "planarity-equiv";
    if (!item.g.is_simple() || !item.g.is_cubic() || connectivity(item.g) < 3) {
      r.verdict = Verdict::kUndecided;
      r.note = "skipped: needs a simple 3-connected cubic graph";
      return r;
    }
    bool by_relation = planarity_by_tutte(eng, item.g);
    bool by_oracle = is_planar(item.g);
    r.lhs = GoldenNum(by_relation ? 1 : 0);
    r.rhs = GoldenNum(by_oracle ? 1 : 0);
    r.verdict = by_relation == by_oracle ? Verdict::kHolds : Verdict::kFails;
    r.note = std::string("relation: ") + (by_relation ? "planar" : "nonplanar") +
             "; oracle: " + (by_oracle ? "planar" : "nonplanar");
    if (r.verdict == Verdict::kFails)
      r.note = "VIOLATION: methods disagree; " + r.note + "; edges: " + item.g.edge_list_string();
    return r;
  }
  if (check == "golden-chromatic") {
    return nonplanar_golden_search(eng, {item.g}).front();
  }
  throw std::invalid_argument("run_scan: unknown check '" + check + "'");
}

// Graphs grouped into batches (one per cubic level); each batch is emitted,
// and journaled, before the next one starts.
std::vector<std::vector<WorkItem>> build_batches(const ScanOptions& opt) {
  std::vector<std::vector<MultiGraph>> levels;
  if (opt.family == "cubic") {
    int start = opt.check == "planarity-equiv" ? 4 : 2;
    for (int n = start; n <= opt.max_n; n += 2) {
      if (opt.check == "planarity-equiv") {
        std::vector<MultiGraph> lvl;
        for (const MultiGraph& g : cubic_graphs(n))
          if (connectivity(g) >= 3) lvl.push_back(g);
        levels.push_back(std::move(lvl));
      } else {
        levels.push_back(cubic_multigraphs(n));
      }
    }
  } else if (opt.family == "k33plus2") {
    levels.push_back(k33_plus_two());
  } else {
    throw std::invalid_argument("run_scan: unknown family '" + opt.family + "'");
  }
  std::vector<std::vector<WorkItem>> batches;
  batches.reserve(levels.size());
  for (auto& lvl : levels) {
    std::vector<WorkItem> batch;
    batch.reserve(lvl.size());
    for (auto& g : lvl) {
      CanonicalCode code = canonical_code(g);
      batch.push_back(WorkItem{std::move(g), std::move(code)});
    }
    batches.push_back(std::move(batch));
  }
  return batches;
}

}  // namespace

std::string ScanResult::to_json() const {
  nlohmann::json j;
  j["schema"] = "graphpoly.scan-summary.v1";
  j["processed"] = processed;
  j["skipped_resume"] = skipped_resume;
  j["equality"] = equality;
  j["strict"] = strict;
  j["holds"] = holds;
  j["fails"] = fails;
  j["undecided"] = undecided;
  j["violations"] = violations;
  j["disagreements"] = disagreements;
  if (!counterexample_edge_lists.empty()) j["counterexamples"] = counterexample_edge_lists;
  return j.dump();
}

ScanResult run_scan(const ScanOptions& opt,
                    const std::function<void(const std::string&)>& line_sink) {
  ScanResult res;
  std::unordered_set<std::string> already_done;
  if (!opt.resume_path.empty()) {
    std::ifstream in(opt.resume_path);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) already_done.insert(line);
  }
  std::ofstream journal;
  if (!opt.resume_path.empty()) {
    journal.open(opt.resume_path, std::ios::app);
    if (!journal) throw std::runtime_error("run_scan: cannot open journal " + opt.resume_path);
  }

  int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  for (std::vector<WorkItem>& batch : build_batches(opt)) {
    std::vector<WorkItem> todo;
    todo.reserve(batch.size());
    for (WorkItem& w : batch) {
      if (already_done.count(w.code)) {
        ++res.skipped_resume;
        continue;
      }
      todo.push_back(std::move(w));
    }
    std::vector<CheckReport> reports(todo.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex err_mu;
    int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), todo.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        PolyEngine eng;  // one evaluation cache per worker
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= todo.size()) break;
          try {
            reports[i] = run_check(eng, opt.check, todo[i]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    for (std::size_t i = 0; i < todo.size(); ++i) {
      const CheckReport& r = reports[i];
      line_sink(r.to_json());
      if (journal.is_open()) {
        journal << todo[i].code << '\n';
        journal.flush();
      }
      ++res.processed;
      switch (r.verdict) {
        case Verdict::kEquality: ++res.equality; break;
        case Verdict::kStrict: ++res.strict; break;
        case Verdict::kHolds: ++res.holds; break;
        case Verdict::kFails: ++res.fails; break;
        case Verdict::kUndecided: ++res.undecided; break;
      }
      if (r.note.rfind("VIOLATION", 0) == 0) {
        ++res.violations;
        res.counterexample_edge_lists.push_back(todo[i].g.edge_list_string());
        if (opt.check == "planarity-equiv") ++res.disagreements;
      }
    }
    if (res.violations > 0) {
      std::string path = opt.resume_path.empty() ? "scan-counterexamples.txt"
                                                 : opt.resume_path + ".counterexamples";
      std::ofstream cx(path, std::ios::app);
      for (const std::string& s : res.counterexample_edge_lists) cx << s << '\n';
      break;
    }
  }
  return res;
}

}  // namespace graphpoly
