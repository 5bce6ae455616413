#include "graphpoly/canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace graphpoly {

namespace {

struct CanonSearch {
  int n;
  int circles;
  std::vector<int> loops;               // loop count per vertex
  std::vector<std::vector<int>> mult;   // non-loop multiplicity matrix

  std::string best;
  std::vector<int> best_labeling;       // position -> vertex
  bool have_best = false;

  explicit CanonSearch(const MultiGraph& g) {
    n = g.nv;
    circles = g.free_circles;
    loops.assign(n, 0);
    mult.assign(n, std::vector<int>(n, 0));
    for (const auto& e : g.ends) {
      if (e[0] == e[1]) {
        loops[e[0]]++;
      } else {
        mult[e[0]][e[1]]++;
        mult[e[1]][e[0]]++;
      }
    }
  }

  using Partition = std::vector<std::vector<int>>;

  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      Partition next;
      next.reserve(p.size());
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature of v: loop count followed by multiplicity sums into every
        // current cell.  Ordered map keys give a deterministic sub-cell order.
        std::map<std::vector<int>, std::vector<int>> split;
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(p.size() + 1);
          sig.push_back(loops[v]);
          for (const auto& other : p) {
            int s = 0;
            for (int u : other) s += mult[v][u];
            sig.push_back(s);
          }
          split[sig].push_back(v);
        }
        if (split.size() > 1) changed = true;
        for (auto& [sig, members] : split) {
          std::sort(members.begin(), members.end());
          next.push_back(members);
        }
      }
      p.swap(next);
    }
  }

  std::string leaf_code(const std::vector<int>& labeling) const {
    std::string code;
    code.reserve(2 + n + n * (n - 1) / 2);
    auto push = [&code](int v) {
      if (v < 0 || v > 255) throw std::domain_error("canonical_code: count out of byte range");
      code.push_back(static_cast<char>(v));
    };
    push(n);
    push(std::min(circles, 255));
    for (int i = 0; i < n; ++i) push(loops[labeling[i]]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) push(mult[labeling[i]][labeling[j]]);
    return code;
  }

  void search(Partition p) {
    refine(p);
    int branch_cell = -1;
    for (size_t c = 0; c < p.size(); ++c) {
      if (p[c].size() > 1) {
        branch_cell = static_cast<int>(c);
        break;
      }
    }
    if (branch_cell < 0) {
      std::vector<int> labeling;
      labeling.reserve(n);
      for (const auto& cell : p) labeling.push_back(cell[0]);
      std::string code = leaf_code(labeling);
      if (!have_best || code < best) {
        best = code;
        best_labeling = labeling;
        have_best = true;
      }
      return;
    }
    for (int v : p[branch_cell]) {
      Partition q;
      q.reserve(p.size() + 1);
      for (size_t c = 0; c < p.size(); ++c) {
        if (static_cast<int>(c) != branch_cell) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<int> rest;
        for (int u : p[c])
          if (u != v) rest.push_back(u);
        q.push_back(rest);
      }
      search(std::move(q));
    }
  }

  void run() {
    if (n == 0) {
      best_labeling.clear();
      best = leaf_code(best_labeling);
      have_best = true;
      return;
    }
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    search({all});
  }
};

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace

CanonicalCode canonical_code(const MultiGraph& g) {
  CanonSearch cs(g);
  cs.run();
  return to_hex(cs.best);
}

std::vector<int> canonical_labeling(const MultiGraph& g) {
  CanonSearch cs(g);
  cs.run();
  return cs.best_labeling;
}

MultiGraph canonical_form(const MultiGraph& g) {
  std::vector<int> labeling = canonical_labeling(g);
  std::vector<int> inverse(g.nv, -1);
  for (int pos = 0; pos < g.nv; ++pos) inverse[labeling[pos]] = pos;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.ends.size());
  for (const auto& e : g.ends) {
    int u = inverse[e[0]], v = inverse[e[1]];
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges.begin(), edges.end());
  return MultiGraph::from_edges(g.nv, edges, g.free_circles);
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.nv != b.nv || a.ne() != b.ne() || a.free_circles != b.free_circles) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace graphpoly
