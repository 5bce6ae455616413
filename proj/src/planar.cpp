#include "graphpoly/planar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace graphpoly {

namespace {

// next dart after d in the cyclic rotation at d's vertex, via a prebuilt table
std::vector<int> rotation_successor(const MultiGraph& g, const RotationSystem& rs) {
  std::vector<int> nxt(2 * static_cast<size_t>(g.ne()), -1);
  for (int v = 0; v < g.nv; ++v) {
    const auto& r = rs.rot[v];
    for (size_t i = 0; i < r.size(); ++i) nxt[r[i]] = r[(i + 1) % r.size()];
  }
  return nxt;
}

}  // namespace

RotationSystem identity_rotation(const MultiGraph& g) {
  RotationSystem rs;
  rs.rot.resize(g.nv);
  for (int d = 0; d < 2 * g.ne(); ++d) rs.rot[g.dart_vertex(d)].push_back(d);
  return rs;
}

bool valid_rotation(const MultiGraph& g, const RotationSystem& rs) {
  if (static_cast<int>(rs.rot.size()) != g.nv) return false;
  std::vector<int> seen(2 * static_cast<size_t>(g.ne()), 0);
  for (int v = 0; v < g.nv; ++v)
    for (int d : rs.rot[v]) {
      if (d < 0 || d >= 2 * g.ne()) return false;
      if (g.dart_vertex(d) != v) return false;
      if (seen[d]++) return false;
    }
  for (int s : seen)
    if (!s) return false;
  return true;
}

std::vector<std::vector<int>> face_orbits(const MultiGraph& g, const RotationSystem& rs) {
  std::vector<int> nxt = rotation_successor(g, rs);
  std::vector<std::vector<int>> faces;
  std::vector<char> done(2 * static_cast<size_t>(g.ne()), 0);
  for (int d0 = 0; d0 < 2 * g.ne(); ++d0) {
    if (done[d0]) continue;
    std::vector<int> face;
    int d = d0;
    do {
      face.push_back(d);
      done[d] = 1;
      d = nxt[d ^ 1];
    } while (d != d0);
    faces.push_back(std::move(face));
  }
  return faces;
}

int euler_genus(const MultiGraph& g, const RotationSystem& rs) {
  if (!valid_rotation(g, rs)) throw std::invalid_argument("euler_genus: invalid rotation system");
  std::vector<int> comp = component_ids(g);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  std::vector<char> has_edge(ncomp, 0);
  for (const auto& e : g.ends) has_edge[comp[e[0]]] = 1;
  int faces = static_cast<int>(face_orbits(g, rs).size());
  for (int c = 0; c < ncomp; ++c)
    if (!has_edge[c]) ++faces;  // a component with no edges bounds one face
  int genus2 = 2 * ncomp - (g.nv - g.ne() + faces);
  if (genus2 < 0 || genus2 % 2 != 0)
    throw std::logic_error("euler_genus: inconsistent face count");
  return genus2 / 2;
}

namespace {

// --- biconnected blocks (edge partition) of a simple graph restricted to a
// --- vertex subset, via DFS lowpoints with an edge stack
struct BlockFinder {
  const MultiGraph& g;
  const std::vector<int>& edge_ids;  // edges under consideration (no loops)
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge)
  std::vector<int> num, low;
  int counter = 0;
  std::vector<int> estack;
  std::vector<char> on_stack;
  std::vector<std::vector<int>> blocks;

  BlockFinder(const MultiGraph& gg, const std::vector<int>& eids) : g(gg), edge_ids(eids) {
    adj.resize(g.nv);
    on_stack.assign(g.ne(), 0);
    for (int e : edge_ids) {
      adj[g.ends[e][0]].push_back({g.ends[e][1], e});
      adj[g.ends[e][1]].push_back({g.ends[e][0], e});
    }
    num.assign(g.nv, -1);
    low.assign(g.nv, 0);
  }

  void dfs(int root) {
    // iterative DFS to keep stack depth bounded
    struct Frame {
      int v, parent_edge;
      size_t idx = 0;
    };
    std::vector<Frame> st;
    num[root] = low[root] = counter++;
    st.push_back({root, -1});
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.idx < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.idx++];
        if (e == f.parent_edge) continue;
        if (num[w] == -1) {
          estack.push_back(e);
          on_stack[e] = 1;
          num[w] = low[w] = counter++;
          st.push_back({w, e});
        } else if (num[w] < num[f.v]) {
          estack.push_back(e);
          on_stack[e] = 1;
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        st.pop_back();
        if (st.empty()) break;
        int u = st.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          // u is a cut vertex (or root): pop the block containing edge pe
          std::vector<int> blk;
          while (!estack.empty()) {
            int e = estack.back();
            estack.pop_back();
            on_stack[e] = 0;
            blk.push_back(e);
            if (e == pe) break;
          }
          blocks.push_back(std::move(blk));
        }
      }
    }
  }

  std::vector<std::vector<int>> run() {
    for (int e : edge_ids) {
      int v = g.ends[e][0];
      if (num[v] == -1) dfs(v);
    }
    return blocks;
  }
};

// --- incremental planar embedding of one biconnected simple block ---
//
// Maintains a partial embedding as a list of faces, each a directed dart
// cycle.  Repeatedly takes a fragment of the not-yet-embedded part, checks
// which faces can host all of its attachment vertices, and lays a path of the
// fragment across such a face, splitting it in two.  A fragment with no
// admissible face certifies nonplanarity.
struct BlockEmbedder {
  const MultiGraph& g;
  std::vector<int> block_edges;
  std::set<int> edge_set;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge)
  std::vector<char> in_h_vertex;
  std::vector<char> embedded_edge;
  std::vector<std::vector<int>> faces;  // directed dart cycles

  explicit BlockEmbedder(const MultiGraph& gg, std::vector<int> eids)
      : g(gg), block_edges(std::move(eids)) {
    edge_set.insert(block_edges.begin(), block_edges.end());
    adj.resize(g.nv);
    for (int e : block_edges) {
      adj[g.ends[e][0]].push_back({g.ends[e][1], e});
      adj[g.ends[e][1]].push_back({g.ends[e][0], e});
    }
    in_h_vertex.assign(g.nv, 0);
    embedded_edge.assign(g.ne(), 0);
  }

  // dart of edge e whose tail is u
  int dart_from(int e, int u) const { return g.ends[e][0] == u ? 2 * e : 2 * e + 1; }

  // find any cycle in the block (exists: the block is 2-connected with >= 2
  // edges); returned as a directed dart sequence
  std::vector<int> initial_cycle() const {
    int start = g.ends[block_edges[0]][0];
    std::vector<int> parent_edge(g.nv, -1), parent(g.nv, -1);
    std::vector<char> vis(g.nv, 0);
    std::vector<int> order;
    std::vector<int> stack = {start};
    vis[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (auto [w, e] : adj[v]) {
        if (!vis[w]) {
          vis[w] = 1;
          parent[w] = v;
          parent_edge[w] = e;
          stack.push_back(w);
        }
      }
    }
    // locate a non-tree edge; it closes a cycle through tree paths
    for (int e : block_edges) {
      int u = g.ends[e][0], v = g.ends[e][1];
      if (parent_edge[u] == e || parent_edge[v] == e) continue;
      std::vector<int> chain_u = {u};  // u, parent(u), ..., root
      while (parent[chain_u.back()] != -1) chain_u.push_back(parent[chain_u.back()]);
      std::set<int> on_u(chain_u.begin(), chain_u.end());
      std::vector<int> chain_v;  // v, ..., child of lca
      int x = v;
      while (!on_u.count(x)) {
        chain_v.push_back(x);
        x = parent[x];
      }
      int lca = x;
      chain_u.resize(std::find(chain_u.begin(), chain_u.end(), lca) - chain_u.begin() + 1);
      // cycle: lca -> ... -> u -> v -> ... -> lca
      std::vector<int> cyc;
      for (int i = static_cast<int>(chain_u.size()) - 1; i > 0; --i)
        cyc.push_back(dart_from(parent_edge[chain_u[i - 1]], chain_u[i]));
      cyc.push_back(dart_from(e, u));
      for (int y : chain_v) cyc.push_back(dart_from(parent_edge[y], y));
      if (cyc.size() >= 2) return cyc;
    }
    throw std::logic_error("initial_cycle: block has no cycle");
  }

  struct Fragment {
    std::vector<int> edges;
    std::vector<int> attachments;  // H-vertices, sorted unique
  };

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    std::vector<char> vis(g.nv, 0);
    // chords: unembedded edges with both ends embedded
    for (int e : block_edges) {
      if (embedded_edge[e]) continue;
      int u = g.ends[e][0], v = g.ends[e][1];
      if (in_h_vertex[u] && in_h_vertex[v]) out.push_back({{e}, {std::min(u, v), std::max(u, v)}});
    }
    // components of the non-embedded vertices
    for (int e0 : block_edges) {
      if (embedded_edge[e0]) continue;
      for (int side = 0; side < 2; ++side) {
        int s = g.ends[e0][side];
        if (in_h_vertex[s] || vis[s]) continue;
        // BFS the component of s through non-H vertices
        std::vector<int> comp = {s};
        vis[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
          for (auto [w, e] : adj[comp[i]]) {
            (void)e;
            if (!in_h_vertex[w] && !vis[w]) {
              vis[w] = 1;
              comp.push_back(w);
            }
          }
        std::set<int> comp_set(comp.begin(), comp.end());
        Fragment fr;
        std::set<int> att, eset;
        for (int c : comp)
          for (auto [w, e] : adj[c]) {
            eset.insert(e);
            if (in_h_vertex[w]) att.insert(w);
          }
        fr.edges.assign(eset.begin(), eset.end());
        fr.attachments.assign(att.begin(), att.end());
        out.push_back(std::move(fr));
      }
    }
    return out;
  }

  // vertices on the boundary of face i
  std::set<int> face_vertices(const std::vector<int>& face) const {
    std::set<int> s;
    for (int d : face) s.insert(g.dart_vertex(d));
    return s;
  }

  // a path inside the fragment between two distinct attachments, as directed darts
  std::vector<int> alpha_path(const Fragment& fr) const {
    int a = fr.attachments[0], b = fr.attachments[1];
    if (fr.edges.size() == 1) return {dart_from(fr.edges[0], a)};  // chord
    std::set<int> fredges(fr.edges.begin(), fr.edges.end());
    // BFS from a through non-H interior vertices to b
    std::map<int, std::pair<int, int>> pred;  // vertex -> (prev vertex, edge)
    std::queue<int> q;
    std::set<int> seen = {a};
    q.push(a);
    int reached = -1;
    while (!q.empty() && reached == -1) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : adj[v]) {
        if (!fredges.count(e) || embedded_edge[e]) continue;
        if (v != a && in_h_vertex[v]) continue;  // interior must avoid H
        if (seen.count(w)) continue;
        if (in_h_vertex[w] && w != b) continue;  // only exit at b
        seen.insert(w);
        pred[w] = {v, e};
        if (w == b) {
          reached = w;
          break;
        }
        q.push(w);
      }
    }
    if (reached == -1) throw std::logic_error("alpha_path: attachments not linked in fragment");
    std::vector<int> darts;
    int cur = b;
    while (cur != a) {
      auto [pv, pe] = pred[cur];
      darts.push_back(dart_from(pe, pv));
      cur = pv;
    }
    std::reverse(darts.begin(), darts.end());
    return darts;
  }

  bool run() {
    std::vector<int> cyc = initial_cycle();
    for (int d : cyc) {
      embedded_edge[d >> 1] = 1;
      in_h_vertex[g.dart_vertex(d)] = 1;
    }
    std::vector<int> rev;
    for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) rev.push_back(*it ^ 1);
    faces.push_back(cyc);
    faces.push_back(rev);

    while (true) {
      std::vector<Fragment> frs = fragments();
      if (frs.empty()) break;
      // admissible faces per fragment
      std::vector<std::vector<int>> adm(frs.size());
      std::vector<std::set<int>> fverts;
      fverts.reserve(faces.size());
      for (const auto& f : faces) fverts.push_back(face_vertices(f));
      for (size_t i = 0; i < frs.size(); ++i) {
        for (size_t j = 0; j < faces.size(); ++j) {
          bool ok = true;
          for (int a : frs[i].attachments)
            if (!fverts[j].count(a)) {
              ok = false;
              break;
            }
          if (ok) adm[i].push_back(static_cast<int>(j));
        }
        if (adm[i].empty()) return false;  // fragment cannot be placed: nonplanar
      }
      size_t pick = 0;
      for (size_t i = 0; i < frs.size(); ++i)
        if (adm[i].size() == 1) {
          pick = i;
          break;
        }
      const Fragment& fr = frs[pick];
      int fi = adm[pick][0];
      std::vector<int> path = alpha_path(fr);
      split_face(fi, path);
      for (int d : path) {
        embedded_edge[d >> 1] = 1;
        in_h_vertex[g.dart_vertex(d)] = 1;
        in_h_vertex[g.dart_vertex(d ^ 1)] = 1;
      }
    }
    return true;
  }

  void split_face(int fi, const std::vector<int>& path) {
    std::vector<int> f = faces[fi];
    int a = g.dart_vertex(path.front());
    int b = g.dart_vertex(path.back() ^ 1);
    int ia = -1, ib = -1;
    for (size_t i = 0; i < f.size(); ++i) {
      int t = g.dart_vertex(f[i]);
      if (t == a) ia = static_cast<int>(i);
      if (t == b) ib = static_cast<int>(i);
    }
    if (ia < 0 || ib < 0 || ia == ib) throw std::logic_error("split_face: bad anchors");
    int m = static_cast<int>(f.size());
    // face 1: the path a->b, then boundary from b around to a
    std::vector<int> f1 = path;
    for (int i = ib; i != ia; i = (i + 1) % m) f1.push_back(f[i]);
    // face 2: reversed path b->a, then boundary from a around to b
    std::vector<int> f2;
    for (auto it = path.rbegin(); it != path.rend(); ++it) f2.push_back(*it ^ 1);
    for (int i = ia; i != ib; i = (i + 1) % m) f2.push_back(f[i]);
    faces[fi] = std::move(f1);
    faces.push_back(std::move(f2));
  }

  // rotation recovery: the face successor of the partner dart is the next
  // dart in counterclockwise order at a vertex
  std::map<int, std::vector<int>> rotations() const {
    std::map<int, int> fnext;
    for (const auto& f : faces)
      for (size_t i = 0; i < f.size(); ++i) fnext[f[i]] = f[(i + 1) % f.size()];
    std::map<int, std::vector<int>> rot;
    std::set<int> placed;
    for (const auto& f : faces)
      for (int d0 : f) {
        if (placed.count(d0)) continue;
        int v = g.dart_vertex(d0);
        std::vector<int> cyc;
        int d = d0;
        do {
          cyc.push_back(d);
          placed.insert(d);
          d = fnext.at(d ^ 1);
          if (g.dart_vertex(d) != v) throw std::logic_error("rotations: orbit left vertex");
        } while (d != d0);
        rot[v] = std::move(cyc);
      }
    return rot;
  }
};

void insert_after(std::vector<int>& r, int anchor, int d) {
  auto it = std::find(r.begin(), r.end(), anchor);
  if (it == r.end()) throw std::logic_error("insert_after: anchor missing");
  r.insert(it + 1, d);
}

void insert_before(std::vector<int>& r, int anchor, int d) {
  auto it = std::find(r.begin(), r.end(), anchor);
  if (it == r.end()) throw std::logic_error("insert_before: anchor missing");
  r.insert(it, d);
}

}  // namespace

std::optional<RotationSystem> planar_embedding(const MultiGraph& g) {
  RotationSystem rs;
  rs.rot.resize(g.nv);

  // classify edges: loops, and parallel classes of non-loop edges
  std::vector<int> loops;
  std::map<std::pair<int, int>, std::vector<int>> par;  // (min,max) -> edge ids
  for (int e = 0; e < g.ne(); ++e) {
    int u = g.ends[e][0], v = g.ends[e][1];
    if (u == v)
      loops.push_back(e);
    else
      par[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  std::vector<int> reps;
  for (auto& [uv, ids] : par) reps.push_back(ids.front());

  // biconnected blocks of the simplified graph
  BlockFinder bf(g, reps);
  auto blocks = bf.run();

  for (const auto& blk : blocks) {
    if (blk.size() == 1) {
      int e = blk[0];
      rs.rot[g.ends[e][0]].push_back(2 * e);
      rs.rot[g.ends[e][1]].push_back(2 * e + 1);
      continue;
    }
    BlockEmbedder be(g, blk);
    if (!be.run()) return std::nullopt;
    for (auto& [v, cyc] : be.rotations())
      rs.rot[v].insert(rs.rot[v].end(), cyc.begin(), cyc.end());
  }

  // reinsert parallel copies as nested bigons alongside their representative
  for (auto& [uv, ids] : par) {
    int rep = ids.front();
    int u = g.ends[rep][0], v = g.ends[rep][1];
    int ru = 2 * rep, rv = 2 * rep + 1;
    for (size_t i = 1; i < ids.size(); ++i) {
      int e = ids[i];
      int du = g.ends[e][0] == u ? 2 * e : 2 * e + 1;
      insert_after(rs.rot[u], ru, du);
      insert_before(rs.rot[v], rv, du ^ 1);
    }
  }
  // reinsert loops as nested monogons
  for (int e : loops) {
    int v = g.ends[e][0];
    rs.rot[v].push_back(2 * e);
    rs.rot[v].push_back(2 * e + 1);
  }

  if (euler_genus(g, rs) != 0) throw std::logic_error("planar_embedding: genus check failed");
  return rs;
}

bool is_planar(const MultiGraph& g) { return planar_embedding(g).has_value(); }

DualResult dual_graph(const MultiGraph& g, const RotationSystem& rs) {
  if (g.free_circles != 0)
    throw std::invalid_argument("dual_graph: free circles are not supported");
  if (!is_connected(g)) throw std::invalid_argument("dual_graph: graph must be connected");
  if (g.ne() == 0) throw std::invalid_argument("dual_graph: graph must have an edge");
  auto faces = face_orbits(g, rs);
  DualResult out;
  out.face_of.assign(2 * static_cast<size_t>(g.ne()), -1);
  for (size_t f = 0; f < faces.size(); ++f)
    for (int d : faces[f]) out.face_of[d] = static_cast<int>(f);
  out.graph.nv = static_cast<int>(faces.size());
  out.graph.ends.resize(g.ne());
  for (int e = 0; e < g.ne(); ++e)
    out.graph.ends[e] = {out.face_of[2 * e], out.face_of[2 * e + 1]};
  out.rot.rot = faces;
  return out;
}

bool is_triangulation(const MultiGraph& g, const RotationSystem& rs) {
  if (!is_connected(g) || !g.is_simple() || g.nv < 3) return false;
  for (const auto& f : face_orbits(g, rs))
    if (f.size() != 3) return false;
  return true;
}

}  // namespace graphpoly
