#include "graphpoly/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <utility>

#include "graphpoly/canon.hpp"

namespace graphpoly {

namespace {

MultiGraph theta_graph() { return MultiGraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph dumbbell_graph() { return MultiGraph::from_edges(2, {{0, 0}, {0, 1}, {1, 1}}); }

// Subdivide edges e1 != e2 with one new vertex each and join the midpoints.
MultiGraph with_handle(const MultiGraph& g, int e1, int e2) {
  MultiGraph h = g;
  int m1 = h.add_vertex();
  int m2 = h.add_vertex();
  int b1 = h.ends[e1][1];
  h.ends[e1][1] = m1;
  h.add_edge(m1, b1);
  int b2 = h.ends[e2][1];
  h.ends[e2][1] = m2;
  h.add_edge(m2, b2);
  h.add_edge(m1, m2);
  return h;
}

// Subdivide one edge with two new vertices and join them by an extra edge,
// creating a digon between the midpoints.
MultiGraph with_handle_same(const MultiGraph& g, int e) {
  MultiGraph h = g;
  int m1 = h.add_vertex();
  int m2 = h.add_vertex();
  int b = h.ends[e][1];
  h.ends[e][1] = m1;
  h.add_edge(m1, m2);
  h.add_edge(m2, b);
  h.add_edge(m1, m2);
  return h;
}

// Subdivide an edge and attach a new vertex carrying a loop to the midpoint.
MultiGraph with_pendant_loop(const MultiGraph& g, int e) {
  MultiGraph h = g;
  int m = h.add_vertex();
  int w = h.add_vertex();
  int b = h.ends[e][1];
  h.ends[e][1] = m;
  h.add_edge(m, b);
  h.add_edge(m, w);
  h.add_edge(w, w);
  return h;
}

std::vector<MultiGraph> next_cubic_level(const std::vector<MultiGraph>& cur) {
  std::map<CanonicalCode, MultiGraph> out;
  auto consider = [&out](MultiGraph h) {
    CanonicalCode code = canonical_code(h);
    out.emplace(std::move(code), std::move(h));
  };
  for (const MultiGraph& g : cur) {
    int ne = g.ne();
    for (int e1 = 0; e1 < ne; ++e1) {
      for (int e2 = e1 + 1; e2 < ne; ++e2) consider(with_handle(g, e1, e2));
      consider(with_handle_same(g, e1));
      consider(with_pendant_loop(g, e1));
    }
  }
  std::vector<MultiGraph> level;
  level.reserve(out.size());
  for (auto& [code, g] : out) level.push_back(std::move(g));
  return level;
}

}  // namespace

std::vector<MultiGraph> cubic_multigraphs(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("cubic_multigraphs: vertex count must be even and >= 2");
  static std::mutex mu;
  static std::vector<std::vector<MultiGraph>> cache;  // cache[k]: graphs on 2k + 2 vertices
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    std::map<CanonicalCode, MultiGraph> base;
    for (MultiGraph g : {theta_graph(), dumbbell_graph()})
      base.emplace(canonical_code(g), std::move(g));
    std::vector<MultiGraph> level;
    for (auto& [code, g] : base) level.push_back(std::move(g));
    cache.push_back(std::move(level));
  }
  int want = (n - 2) / 2;
  while (static_cast<int>(cache.size()) <= want) cache.push_back(next_cubic_level(cache.back()));
  return cache[want];
}

std::vector<MultiGraph> cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("cubic_graphs: vertex count must be even and >= 4");
  std::vector<MultiGraph> out;
  for (const MultiGraph& g : cubic_multigraphs(n))
    if (g.is_simple()) out.push_back(g);
  return out;
}

namespace {

// Insert a new vertex inside face `face` (a dart cycle of length three) and
// connect it to the three corner vertices, updating the rotation system so
// that the three new faces are again triangles.
void insert_in_face(EmbeddedGraph& eg, const std::vector<int>& face) {
  MultiGraph& g = eg.g;
  RotationSystem& rs = eg.rot;
  if (face.size() != 3) throw std::logic_error("insert_in_face: face is not a triangle");
  int w = g.add_vertex();
  rs.rot.emplace_back();
  int base_edge = g.ne();
  std::array<int, 3> corner{};
  for (int i = 0; i < 3; ++i) corner[i] = g.dart_vertex(face[i]);
  for (int i = 0; i < 3; ++i) g.add_edge(corner[i], w);
  // At corner i the face's angular sector lies between the partner of the
  // incoming dart face[i-1] and the outgoing dart face[i]; the new spoke dart
  // goes there.
  for (int i = 0; i < 3; ++i) {
    int incoming = MultiGraph::dart_partner(face[(i + 2) % 3]);
    int spoke = 2 * (base_edge + i);  // dart of edge (corner[i], w) at corner[i]
    std::vector<int>& cyc = rs.rot[corner[i]];
    auto it = std::find(cyc.begin(), cyc.end(), incoming);
    if (it == cyc.end()) throw std::logic_error("insert_in_face: dart missing from rotation");
    cyc.insert(it + 1, spoke);
  }
  rs.rot[w] = {2 * base_edge + 1, 2 * (base_edge + 2) + 1, 2 * (base_edge + 1) + 1};
}

}  // namespace

std::vector<EmbeddedGraph> apollonian(int v, std::uint64_t seed, int count) {
  if (v < 4) throw std::invalid_argument("apollonian: need at least 4 vertices");
  if (count < 0) throw std::invalid_argument("apollonian: negative count");
  MultiGraph k4 = named("K4").g;
  std::optional<RotationSystem> k4rot = planar_embedding(k4);
  if (!k4rot) throw std::logic_error("apollonian: tetrahedron embedding failed");
  std::mt19937_64 rng(seed);
  std::vector<EmbeddedGraph> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    EmbeddedGraph eg{k4, *k4rot};
    while (eg.g.nv < v) {
      std::vector<std::vector<int>> faces = face_orbits(eg.g, eg.rot);
      std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
      insert_in_face(eg, faces[pick(rng)]);
    }
    if (euler_genus(eg.g, eg.rot) != 0 || !is_triangulation(eg.g, eg.rot))
      throw std::logic_error("apollonian: produced embedding is not a planar triangulation");
    out.push_back(std::move(eg));
  }
  return out;
}

MultiGraph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || k >= n || (2 * k) % n == 0)
    throw std::invalid_argument("generalized_petersen: need n >= 3, 1 <= k < n, 2k != 0 mod n");
  std::vector<std::pair<int, int>> e;
  e.reserve(3 * n);
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return MultiGraph::from_edges(2 * n, e);
}

NamedGraph named(const std::string& name) {
  MultiGraph g(0, {});
  if (name == "K4") {
    g = MultiGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  } else if (name == "K5") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) e.emplace_back(i, j);
    g = MultiGraph::from_edges(5, e);
  } else if (name == "K33") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) e.emplace_back(i, j);
    g = MultiGraph::from_edges(6, e);
  } else if (name == "theta") {
    g = theta_graph();
  } else if (name == "petersen") {
    g = generalized_petersen(5, 2);
  } else if (name == "mobius_kantor") {
    g = generalized_petersen(8, 3);
  } else if (name == "dodecahedron") {
    g = generalized_petersen(10, 2);
  } else if (name == "cube") {
    g = generalized_petersen(4, 1);
  } else if (name.rfind("prism_", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      throw std::invalid_argument("named: bad prism size in '" + name + "'");
    }
    if (n < 3) throw std::invalid_argument("named: prism size must be >= 3");
    g = generalized_petersen(n, 1);
  } else if (name == "octahedron") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (!(j == i + 1 && i % 2 == 0)) e.emplace_back(i, j);
    g = MultiGraph::from_edges(6, e);
  } else if (name == "icosahedron") {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i) e.emplace_back(0, i);                  // north cap
    for (int i = 1; i <= 5; ++i) e.emplace_back(i, i % 5 + 1);          // upper ring
    for (int i = 6; i <= 10; ++i) e.emplace_back(i, (i - 5) % 5 + 6);   // lower ring
    for (int i = 6; i <= 10; ++i) e.emplace_back(11, i);                // south cap
    for (int i = 1; i <= 5; ++i) {                                      // middle band
      e.emplace_back(i, i + 5);
      e.emplace_back(i, i % 5 + 6);
    }
    g = MultiGraph::from_edges(12, e);
  } else {
    throw std::invalid_argument("named: unknown graph name '" + name + "'");
  }
  NamedGraph out{std::move(g), std::nullopt};
  out.rot = planar_embedding(out.g);
  return out;
}

std::vector<MultiGraph> k33_plus_two() {
  MultiGraph k33 = named("K33").g;
  const std::vector<std::pair<int, int>> nonedges = {{0, 1}, {0, 2}, {1, 2},
                                                     {3, 4}, {3, 5}, {4, 5}};
  std::map<CanonicalCode, MultiGraph> out;
  for (std::size_t i = 0; i < nonedges.size(); ++i) {
    for (std::size_t j = i + 1; j < nonedges.size(); ++j) {
      MultiGraph g = k33;
      g.add_edge(nonedges[i].first, nonedges[i].second);
      g.add_edge(nonedges[j].first, nonedges[j].second);
      out.emplace(canonical_code(g), std::move(g));
    }
  }
  std::vector<MultiGraph> v;
  v.reserve(out.size());
  for (auto& [code, g] : out) v.push_back(std::move(g));
  return v;
}

MultiGraph random_trivalent_pair_graph(std::uint64_t seed, int max_edges) {
  if (max_edges < 3)
    throw std::invalid_argument("random_trivalent_pair_graph: need at least 3 edges");
  std::mt19937_64 rng(seed);
  // Extra vertices beyond the trivalent pair {0, 1}: k of them, where the
  // base construction (pair edge + spanning tree + four stubs) needs 4 + k
  // edges when k >= 1.
  int kmax = std::min(3, max_edges - 4);
  int k = kmax <= 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(kmax + 1));
  if (k == 0) {
    // No room (or no wish) for extra vertices: the four remaining dart slots
    // of 0 and 1 pair among themselves, giving the theta or dumbbell shape.
    return rng() % 2 == 0 ? theta_graph() : dumbbell_graph();
  }
  MultiGraph g(2 + k, {});
  g.add_edge(0, 1);
  for (int w = 3; w < 2 + k; ++w)
    g.add_edge(2 + static_cast<int>(rng() % static_cast<std::uint64_t>(w - 2)), w);
  for (int s = 0; s < 4; ++s) {
    int target = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    g.add_edge(s < 2 ? 0 : 1, target);
  }
  int room = max_edges - g.ne();
  int extra = room <= 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(room + 1));
  for (int t = 0; t < extra; ++t) {
    int u = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    int v = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    g.add_edge(u, v);  // u == v makes a loop, which is fine here
  }
  return g;
}

}  // namespace graphpoly
