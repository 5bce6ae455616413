#include "graphpoly/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace graphpoly {

MultiGraph MultiGraph::from_edges(int vertices, const std::vector<std::pair<int, int>>& e,
                                  int circles) {
  MultiGraph g;
  g.nv = vertices;
  g.free_circles = circles;
  g.ends.reserve(e.size());
  for (auto& [u, v] : e) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw std::invalid_argument("from_edges: endpoint out of range");
    g.ends.push_back({u, v});
  }
  return g;
}

int MultiGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= nv || v >= nv)
    throw std::invalid_argument("add_edge: endpoint out of range");
  ends.push_back({u, v});
  return ne() - 1;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> d(nv, 0);
  for (const auto& e : ends) {
    d[e[0]]++;
    d[e[1]]++;
  }
  return d;
}

std::vector<std::vector<int>> MultiGraph::darts_at() const {
  std::vector<std::vector<int>> at(nv);
  for (int d = 0; d < nd(); ++d) at[dart_vertex(d)].push_back(d);
  return at;
}

int MultiGraph::edge_multiplicity(int u, int v) const {
  int m = 0;
  for (const auto& e : ends)
    if ((e[0] == u && e[1] == v) || (e[0] == v && e[1] == u)) ++m;
  return m;
}

bool MultiGraph::is_simple() const {
  if (free_circles != 0) return false;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : ends) {
    if (e[0] == e[1]) return false;
    auto key = std::minmax(e[0], e[1]);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

bool MultiGraph::is_cubic() const {
  for (int d : degrees())
    if (d != 3) return false;
  return true;
}

std::string MultiGraph::edge_list_string() const { return write_edge_list(*this); }

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  return a.nv == b.nv && a.free_circles == b.free_circles && a.ends == b.ends;
}

// ---- connectivity ----------------------------------------------------------

std::vector<int> component_ids(const MultiGraph& g) {
  std::vector<int> comp(g.nv, -1);
  std::vector<std::vector<int>> adj(g.nv);
  for (const auto& e : g.ends) {
    if (e[0] == e[1]) continue;
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  int c = 0;
  for (int s = 0; s < g.nv; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (comp[v] == -1) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  return comp;
}

int component_count(const MultiGraph& g) {
  auto comp = component_ids(g);
  int c = 0;
  for (int id : comp) c = std::max(c, id + 1);
  return c;
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

namespace {

// Simplified adjacency sets (loops dropped, parallels collapsed).
std::vector<std::set<int>> simple_adjacency(const MultiGraph& g) {
  std::vector<std::set<int>> adj(g.nv);
  for (const auto& e : g.ends) {
    if (e[0] == e[1]) continue;
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  return adj;
}

bool connected_avoiding(const std::vector<std::set<int>>& adj, const std::vector<char>& removed) {
  int n = static_cast<int>(adj.size());
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (removed[v] || seen[v]) continue;
      seen[v] = 1;
      ++count;
      stack.push_back(v);
    }
  }
  return count == alive;
}

bool some_subset_disconnects(const std::vector<std::set<int>>& adj, int k) {
  int n = static_cast<int>(adj.size());
  std::vector<int> pick(k);
  std::function<bool(int, int)> rec = [&](int idx, int from) -> bool {
    if (idx == k) {
      std::vector<char> removed(n, 0);
      for (int v : pick) removed[v] = 1;
      return !connected_avoiding(adj, removed);
    }
    for (int v = from; v < n; ++v) {
      pick[idx] = v;
      if (rec(idx + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

int connectivity(const MultiGraph& g) {
  if (g.nv <= 1) return 0;
  auto adj = simple_adjacency(g);
  std::vector<char> none(g.nv, 0);
  if (!connected_avoiding(adj, none)) return 0;
  bool complete = true;
  for (int v = 0; v < g.nv && complete; ++v)
    complete = static_cast<int>(adj[v].size()) == g.nv - 1;
  if (complete) return g.nv - 1;
  for (int k = 1; k <= g.nv - 2; ++k)
    if (some_subset_disconnects(adj, k)) return k;
  return g.nv - 1;
}

std::vector<int> bridges(const MultiGraph& g) {
  // Lowpoint DFS over darts; a tree edge is a bridge unless some back edge
  // (including a parallel copy) reaches above it.
  std::vector<std::vector<int>> at = g.darts_at();
  std::vector<int> disc(g.nv, -1), low(g.nv, 0);
  std::vector<int> result;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int entry_edge) {
    disc[u] = low[u] = timer++;
    for (int d : at[u]) {
      int e = MultiGraph::dart_edge(d);
      if (g.is_loop(e)) continue;
      if (e == entry_edge) continue;
      int v = g.dart_vertex(MultiGraph::dart_partner(d));
      if (disc[v] == -1) {
        dfs(v, e);
        low[u] = std::min(low[u], low[v]);
        if (low[v] > disc[u]) result.push_back(e);
      } else {
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int s = 0; s < g.nv; ++s)
    if (disc[s] == -1) dfs(s, -1);
  std::sort(result.begin(), result.end());
  return result;
}

// ---- surgery ---------------------------------------------------------------

namespace {

// Mutable scratch graph with tombstones; vertex/edge ids stay stable until
// compact().  Splicing logic lives here so every public surgery shares it.
struct Workspace {
  int nv;
  std::vector<std::array<int, 2>> ends;
  std::vector<char> edge_dead;
  std::vector<char> vertex_dead;
  int circles;

  explicit Workspace(const MultiGraph& g)
      : nv(g.nv), ends(g.ends), edge_dead(g.ne(), 0), vertex_dead(g.nv, 0),
        circles(g.free_circles) {}

  int add_vertex() {
    vertex_dead.push_back(0);
    return nv++;
  }

  std::vector<int> live_darts_at(int v) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
      if (edge_dead[e]) continue;
      if (ends[e][0] == v) out.push_back(2 * e);
      if (ends[e][1] == v) out.push_back(2 * e + 1);
    }
    return out;
  }

  void reattach_dart(int dart, int new_vertex) {
    ends[dart >> 1][dart & 1] = new_vertex;
  }

  void kill_edge(int e) { edge_dead[e] = 1; }

  void kill_vertex(int v) { vertex_dead[v] = 1; }

  // Suppress a vertex with exactly two live darts.
  void suppress(int v) {
    auto darts = live_darts_at(v);
    if (darts.size() != 2) throw std::invalid_argument("suppress: vertex is not 2-valent");
    int d1 = darts[0], d2 = darts[1];
    int e1 = d1 >> 1, e2 = d2 >> 1;
    if (e1 == e2) {
      // A loop at v closes into a free circle.
      kill_edge(e1);
      circles++;
    } else {
      int far1 = ends[e1][(d1 & 1) ^ 1];
      int far2 = ends[e2][(d2 & 1) ^ 1];
      kill_edge(e2);
      ends[e1] = {far1, far2};
    }
    kill_vertex(v);
  }

  MultiGraph compact() const {
    std::vector<int> vmap(nv, -1);
    int next = 0;
    for (int v = 0; v < nv; ++v)
      if (!vertex_dead[v]) vmap[v] = next++;
    MultiGraph g;
    g.nv = next;
    g.free_circles = circles;
    for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
      if (edge_dead[e]) continue;
      int u = vmap[ends[e][0]], v = vmap[ends[e][1]];
      if (u < 0 || v < 0) throw std::logic_error("compact: live edge at dead vertex");
      g.ends.push_back({u, v});
    }
    return g;
  }
};

void require_edge(const MultiGraph& g, int e) {
  if (e < 0 || e >= g.ne()) throw std::invalid_argument("edge id out of range");
}

// The four non-e darts at the endpoints of a trivalent, non-loop edge e:
// {a, b} at ends[e][0] with a < b, and {c, d} at ends[e][1] with c < d.
struct EdgeNeighborhood {
  int u, v;
  int a, b, c, d;
};

EdgeNeighborhood trivalent_neighborhood(const MultiGraph& g, int e) {
  require_edge(g, e);
  if (g.is_loop(e)) throw std::invalid_argument("edge is a loop");
  int u = g.ends[e][0], v = g.ends[e][1];
  auto at = g.darts_at();
  if (at[u].size() != 3 || at[v].size() != 3)
    throw std::invalid_argument("edge endpoints are not trivalent");
  std::vector<int> us, vs;
  for (int d : at[u])
    if (MultiGraph::dart_edge(d) != e) us.push_back(d);
  for (int d : at[v])
    if (MultiGraph::dart_edge(d) != e) vs.push_back(d);
  // A parallel copy of e contributes one dart on each side and stays in play;
  // only e's own two darts are excluded, so both lists have exactly two darts.
  if (us.size() != 2 || vs.size() != 2) throw std::logic_error("neighborhood extraction failed");
  return {u, v, us[0], us[1], vs[0], vs[1]};
}

}  // namespace

MultiGraph contract(const MultiGraph& g, int e) {
  require_edge(g, e);
  if (g.is_loop(e)) throw std::invalid_argument("contract: e is a loop");
  Workspace ws(g);
  int keep = g.ends[e][0], gone = g.ends[e][1];
  ws.kill_edge(e);
  for (int k = 0; k < static_cast<int>(ws.ends.size()); ++k) {
    if (ws.edge_dead[k]) continue;
    for (int s = 0; s < 2; ++s)
      if (ws.ends[k][s] == gone) ws.ends[k][s] = keep;
  }
  ws.kill_vertex(gone);
  return ws.compact();
}

MultiGraph delete_edge(const MultiGraph& g, int e) {
  require_edge(g, e);
  Workspace ws(g);
  ws.kill_edge(e);
  return ws.compact();
}

MultiGraph delete_vertex(const MultiGraph& g, int v) {
  if (v < 0 || v >= g.nv) throw std::invalid_argument("vertex id out of range");
  Workspace ws(g);
  for (int e = 0; e < g.ne(); ++e)
    if (g.ends[e][0] == v || g.ends[e][1] == v) ws.kill_edge(e);
  ws.kill_vertex(v);
  return ws.compact();
}

MultiGraph suppress_vertex(const MultiGraph& g, int v) {
  if (v < 0 || v >= g.nv) throw std::invalid_argument("vertex id out of range");
  Workspace ws(g);
  ws.suppress(v);
  return ws.compact();
}

MultiGraph remove_edge_smooth(const MultiGraph& g, int e) {
  auto nb = trivalent_neighborhood(g, e);
  Workspace ws(g);
  ws.kill_edge(e);
  ws.suppress(nb.u);
  ws.suppress(nb.v);
  return ws.compact();
}

MultiGraph transverse_resplice(const MultiGraph& g, int e, int choice) {
  if (choice != 0 && choice != 1) throw std::invalid_argument("choice must be 0 or 1");
  auto nb = trivalent_neighborhood(g, e);
  Workspace ws(g);
  ws.kill_edge(e);
  int w1 = ws.add_vertex();
  int w2 = ws.add_vertex();
  int first = choice == 0 ? nb.c : nb.d;
  int second = choice == 0 ? nb.d : nb.c;
  ws.reattach_dart(nb.a, w1);
  ws.reattach_dart(first, w1);
  ws.reattach_dart(nb.b, w2);
  ws.reattach_dart(second, w2);
  ws.kill_vertex(nb.u);
  ws.kill_vertex(nb.v);
  ws.suppress(w1);
  ws.suppress(w2);
  return ws.compact();
}

MultiGraph rotate_edge(const MultiGraph& g, int e, int choice) {
  if (choice != 0 && choice != 1) throw std::invalid_argument("choice must be 0 or 1");
  auto nb = trivalent_neighborhood(g, e);
  Workspace ws(g);
  ws.kill_edge(e);
  int u2 = ws.add_vertex();
  int v2 = ws.add_vertex();
  int first = choice == 0 ? nb.c : nb.d;
  int second = choice == 0 ? nb.d : nb.c;
  ws.reattach_dart(nb.a, u2);
  ws.reattach_dart(first, u2);
  ws.reattach_dart(nb.b, v2);
  ws.reattach_dart(second, v2);
  ws.kill_vertex(nb.u);
  ws.kill_vertex(nb.v);
  ws.ends.push_back({u2, v2});
  ws.edge_dead.push_back(0);
  return ws.compact();
}

// ---- io --------------------------------------------------------------------

std::string write_edge_list(const MultiGraph& g) {
  std::ostringstream os;
  os << g.nv << " " << g.ne();
  if (g.free_circles > 0) os << " " << g.free_circles;
  os << "\n";
  for (const auto& e : g.ends) os << e[0] << " " << e[1] << "\n";
  return os.str();
}

std::optional<MultiGraph> read_edge_list(const std::string& text) {
  std::istringstream is(text);
  std::vector<long> nums;
  std::string line;
  while (std::getline(is, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long v;
    while (ls >> v) nums.push_back(v);
  }
  if (nums.size() < 2) return std::nullopt;
  long nv = nums[0], ne = nums[1];
  if (nv < 0 || ne < 0) return std::nullopt;
  size_t idx = 2;
  long circles = 0;
  size_t expected = 2 + 2 * static_cast<size_t>(ne);
  if (nums.size() == expected + 1) {
    circles = nums[2];
    if (circles < 0) return std::nullopt;
    idx = 3;
  } else if (nums.size() != expected) {
    return std::nullopt;
  }
  MultiGraph g;
  g.nv = static_cast<int>(nv);
  g.free_circles = static_cast<int>(circles);
  for (long k = 0; k < ne; ++k) {
    long u = nums[idx++], v = nums[idx++];
    if (u < 0 || v < 0 || u >= nv || v >= nv) return std::nullopt;
    g.ends.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return g;
}

std::optional<MultiGraph> read_graph6(const std::string& line) {
  std::string s = line;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) return std::nullopt;
  size_t pos = 0;
  auto byte = [&](size_t i) -> int { return static_cast<unsigned char>(s[i]) - 63; };
  long n;
  if (byte(0) == 63) {  // 126: long form
    if (s.size() < 4) return std::nullopt;
    n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    if (n < 0 || n > 62) return std::nullopt;
    pos = 1;
  }
  long bits_needed = n * (n - 1) / 2;
  long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long>(s.size()) - static_cast<long>(pos) != bytes_needed) return std::nullopt;
  MultiGraph g;
  g.nv = static_cast<int>(n);
  long bit = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++bit) {
      int chunk = byte(pos + bit / 6);
      if (chunk < 0 || chunk > 63) return std::nullopt;
      int b = (chunk >> (5 - bit % 6)) & 1;
      if (b) g.ends.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return g;
}

std::optional<std::string> write_graph6(const MultiGraph& g) {
  if (!g.is_simple()) return std::nullopt;
  long n = g.nv;
  if (n > 258047) return std::nullopt;
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(63 + ((n >> 12) & 63));
    out += static_cast<char>(63 + ((n >> 6) & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  std::vector<std::vector<char>> adj(g.nv, std::vector<char>(g.nv, 0));
  for (const auto& e : g.ends) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
  int chunk = 0, filled = 0;
  long bit = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++bit) {
      chunk = (chunk << 1) | (adj[i][j] ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + chunk);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    chunk <<= (6 - filled);
    out += static_cast<char>(63 + chunk);
  }
  return out;
}

std::optional<MultiGraph> parse_graph(const std::string& text, const std::string& format) {
  if (format == "edgelist") return read_edge_list(text);
  if (format == "graph6") return read_graph6(text);
  if (format == "auto") {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok)) return std::nullopt;
    bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) return read_edge_list(text);
    std::string first_line = text.substr(0, text.find('\n'));
    return read_graph6(first_line);
  }
  return std::nullopt;
}

}  // namespace graphpoly
