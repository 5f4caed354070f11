#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "lgr/coloring.hpp"
#include "lgr/graph.hpp"
#include "lgr/line_graph.hpp"
#include "lgr/rng.hpp"

namespace lgr {

// Per-family stream constants for the reference edge colorings the
// generators emit. Pinned by the benchmark depth fixtures.
namespace lattice_seed {
inline constexpr std::uint64_t kKagome = 0;        // set by calibration
inline constexpr std::uint64_t kShuriken = 0;      // set by calibration
inline constexpr std::uint64_t kCheckerboard = 0;  // set by calibration
}  // namespace lattice_seed

namespace detail {

// Line graph with nodes labelled in the order the preimage's edges were
// inserted (generators walk their cells in row-major order, so labels follow
// the lattice geometry).
inline Graph line_graph_insertion_order(const Graph& g) {
  std::map<Edge, NodeId> idx;
  for (const Edge& e : g.edges()) idx.emplace(e, static_cast<NodeId>(idx.size()));
  Graph L(g.num_edges());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto& nb = g.neighbors(v);
    std::vector<NodeId> inc;
    for (NodeId u : nb) inc.push_back(idx.at(make_edge(v, u)));
    std::sort(inc.begin(), inc.end());
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) L.add_edge(inc[a], inc[b]);
  }
  if (g.coords.size() == g.num_nodes()) {
    L.coords.resize(g.num_edges());
    for (const auto& [e, i] : idx) {
      const auto& ca = g.coords[e.first];
      const auto& cb = g.coords[e.second];
      L.coords[i] = {(ca[0] + cb[0]) / 2, (ca[1] + cb[1]) / 2};
    }
  }
  return L;
}

}  // namespace detail

// Rhombic patch of the hexagonal lattice, rows x cols hexagons, walked
// row-major with each hexagon's corners visited ring-wise, plus one pendant
// edge at each of the two extreme corners (the padding the line-graph
// families assume). Corner keys are exact integers (2x, 3y).
inline Graph hexagonal(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("patch size < 1");
  Graph g;
  std::map<std::pair<int, int>, NodeId> corners;
  std::vector<std::pair<int, int>> keys;
  auto corner = [&](int x2, int y3) {
    auto it = corners.find({x2, y3});
    if (it != corners.end()) return it->second;
    NodeId id = static_cast<NodeId>(corners.size());
    corners.emplace(std::make_pair(x2, y3), id);
    keys.push_back({x2, y3});
    return id;
  };
  static constexpr int offs[6][2] = {{0, 2}, {1, 1}, {1, -1}, {0, -2}, {-1, -1}, {-1, 1}};
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int cx2 = 2 * j + i;  // 2 * (j + i/2)
      int cy3 = 3 * i;
      NodeId ids[6];
      for (int t = 0; t < 6; ++t) ids[t] = corner(cx2 + offs[t][0], cy3 + offs[t][1]);
      for (int t = 0; t < 6; ++t) g.add_edge(ids[t], ids[(t + 1) % 6]);
    }
  // pendant padding at the two extreme degree-2 corners
  NodeId lo = 0, hi = 0;
  long best_lo = 0, best_hi = 0;
  bool first = true;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.degree(v) != 2) continue;
    long s = 3L * keys[v].first + 2L * keys[v].second;  // x + y in common units
    if (first) {
      lo = hi = v;
      best_lo = best_hi = s;
      first = false;
      continue;
    }
    if (s < best_lo) { lo = v; best_lo = s; }
    if (s > best_hi) { hi = v; best_hi = s; }
  }
  NodeId next = static_cast<NodeId>(g.num_nodes());
  g.add_edge(lo, next);
  keys.push_back({keys[lo].first, keys[lo].second - 2});
  ++next;
  g.add_edge(hi, next);
  keys.push_back({keys[hi].first, keys[hi].second + 2});
  g.coords.resize(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    g.coords[v] = {keys[v].first / 2.0, keys[v].second / 3.0};
  return g;
}

// Square-octagon (4.8.8) patch: rows x cols squares joined by bridges, with
// pendant half-bridges padding every remaining degree-2 corner.
inline Graph square_octagon(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("patch size < 1");
  Graph g;
  auto nid = [&](int i, int j, int c) { return static_cast<NodeId>((i * cols + j) * 4 + c); };
  // square rings first (corner order: top, right, bottom, left)
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      NodeId a = nid(i, j, 0), b = nid(i, j, 1), c = nid(i, j, 2), d = nid(i, j, 3);
      g.add_edge(a, b);
      g.add_edge(b, c);
      g.add_edge(c, d);
      g.add_edge(d, a);
    }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) g.add_edge(nid(i, j, 1), nid(i, j + 1, 3));
      if (i + 1 < rows) g.add_edge(nid(i, j, 2), nid(i + 1, j, 0));
    }
  NodeId next = static_cast<NodeId>(g.num_nodes());
  const NodeId ncore = next;
  std::vector<std::array<double, 2>> coords(ncore);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      double cx = 2.0 * j, cy = -2.0 * i;
      coords[nid(i, j, 0)] = {cx, cy + 0.5};
      coords[nid(i, j, 1)] = {cx + 0.5, cy};
      coords[nid(i, j, 2)] = {cx, cy - 0.5};
      coords[nid(i, j, 3)] = {cx - 0.5, cy};
    }
  for (NodeId v = 0; v < ncore; ++v)
    if (g.degree(v) == 2) {
      g.add_edge(v, next);
      double sqx = 2.0 * ((v / 4) % cols), sqy = -2.0 * ((v / 4) / cols);
      coords.push_back({2 * coords[v][0] - sqx, 2 * coords[v][1] - sqy});
      ++next;
    }
  g.coords = std::move(coords);
  return g;
}

// Diamond patch of the square lattice: nodes |x|+|y| <= r, row-major from the
// top, edges east and south per node.
inline Graph square_diamond(int r) {
  if (r < 1) throw std::invalid_argument("patch size < 1");
  Graph g;
  std::map<std::pair<int, int>, NodeId> ids;
  std::vector<std::pair<int, int>> pos;
  for (int y = r; y >= -r; --y)
    for (int x = -r; x <= r; ++x)
      if (std::abs(x) + std::abs(y) <= r) {
        ids.emplace(std::make_pair(x, y), static_cast<NodeId>(ids.size()));
        pos.push_back({x, y});
      }
  g.resize(ids.size());
  for (NodeId v = 0; v < pos.size(); ++v) {
    auto [x, y] = pos[v];
    auto e = ids.find({x + 1, y});
    if (e != ids.end()) g.add_edge(v, e->second);
    auto s = ids.find({x, y - 1});
    if (s != ids.end()) g.add_edge(v, s->second);
  }
  g.coords.resize(pos.size());
  for (NodeId v = 0; v < pos.size(); ++v)
    g.coords[v] = {double(pos[v].first), double(pos[v].second)};
  return g;
}

// ---- line-graph (virtual) families ----------------------------------------

inline Graph kagome(int rows, int cols) {
  Graph L = detail::line_graph_insertion_order(hexagonal(rows, cols));
  edge_coloring(L, true, mix_seed(lattice_seed::kKagome, rows, cols));
  return L;
}

inline Graph shuriken(int rows, int cols) {
  Graph L = detail::line_graph_insertion_order(square_octagon(rows, cols));
  edge_coloring(L, true, mix_seed(lattice_seed::kShuriken, rows, cols));
  return L;
}

// Half-integer sizes in steps of 0.5; size m spans m crossed plaquettes.
inline Graph checkerboard(double rows, double cols) {
  double rm = rows + 0.5;
  int r = static_cast<int>(std::lround(rm));
  if (std::abs(rm - r) > 1e-9 || std::abs(rows - cols) > 1e-9)
    throw std::invalid_argument("checkerboard size must be k+0.5, square");
  Graph L = detail::line_graph_insertion_order(square_diamond(r));
  edge_coloring(L, true, mix_seed(lattice_seed::kCheckerboard, r, r));
  return L;
}

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("n < 1");
  Graph g(n);
  for (NodeId a = 0; a < static_cast<NodeId>(n); ++a)
    for (NodeId b = a + 1; b < static_cast<NodeId>(n); ++b) g.add_edge(a, b);
  return g;
}

// Line graph of a uniform random connected graph on n nodes (edge probability
// 1/2, resampled with a fresh substream until connected).
inline Graph random_line_graph(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("n < 2");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(mix_seed(seed, attempt, 0x726C67));
    Graph g(n);
    for (NodeId a = 0; a < static_cast<NodeId>(n); ++a)
      for (NodeId b = a + 1; b < static_cast<NodeId>(n); ++b)
        if (rng.next() >> 63) g.add_edge(a, b);
    if (g.num_edges() > 0 && g.connected())
      return line_graph(g).graph;
  }
}

}  // namespace lgr
