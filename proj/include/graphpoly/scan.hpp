#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graphpoly/identities.hpp"

namespace graphpoly {

struct ScanOptions {
  std::string family = "cubic";      // "cubic" (connected cubic multigraphs,
                                     // levels 2,4,...,max_n) or "k33plus2"
  int max_n = 10;                    // largest vertex count for the cubic family
  std::string check = "conjecture";  // "conjecture" (conjugate flow inequality),
                                     // "planarity-equiv" (relation criterion vs
                                     // oracle on simple 3-connected graphs), or
                                     // "golden-chromatic" (identity search)
  int jobs = 0;                      // worker threads; 0 = hardware concurrency
  std::string resume_path;           // append-only journal of canonical codes;
                                     // graphs already listed are skipped
};

struct ScanResult {
  long processed = 0;       // reports computed and emitted this run
  long skipped_resume = 0;  // graphs skipped because the journal already has them
  long equality = 0;
  long strict = 0;
  long holds = 0;
  long fails = 0;
  long undecided = 0;       // includes family members skipped with a note
  long violations = 0;      // reports whose note starts with "VIOLATION"
  long disagreements = 0;   // planarity-equiv mismatches (subset of fails)
  std::vector<std::string> counterexample_edge_lists;

  std::string to_json() const;
};

// Runs the chosen check over the family, invoking line_sink with one
// CheckReport JSON line per graph, in enumeration order regardless of the
// worker count.  Graphs are processed level by level; each emitted graph's
// canonical code is appended to the resume journal (if any) as soon as its
// line is emitted.  If a level produces a violation the scan stops after
// that level and the counterexample edge lists are persisted to
// `<resume_path>.counterexamples` (or "scan-counterexamples.txt" when no
// journal is configured) in addition to being returned.
ScanResult run_scan(const ScanOptions& opt,
                    const std::function<void(const std::string&)>& line_sink);

}  // namespace graphpoly
