#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "lgr/graph.hpp"

namespace lgr {

struct NotALineGraph : std::runtime_error {
  NotALineGraph() : std::runtime_error("coupling graph is not a line graph") {}
};

struct MalformedPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// L(g): one node per edge of g (densified in sorted-edge order), nodes
// adjacent iff the edges share an endpoint. label_map[i] is the g-edge of
// L-node i.
struct LineGraphResult {
  Graph graph;
  std::vector<Edge> label_map;
};

inline LineGraphResult line_graph(const Graph& g) {
  LineGraphResult out;
  std::vector<Edge> es = g.sorted_edges();
  std::map<Edge, NodeId> idx;
  for (NodeId i = 0; i < es.size(); ++i) idx[es[i]] = i;
  out.graph.resize(es.size());
  out.label_map = es;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto& nb = g.neighbors(v);
    std::vector<NodeId> inc;
    inc.reserve(nb.size());
    for (NodeId u : nb) inc.push_back(idx.at(make_edge(v, u)));
    std::sort(inc.begin(), inc.end());
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        out.graph.add_edge(inc[a], inc[b]);
  }
  // Edge midpoints as layout hints when the input carries coordinates.
  if (g.coords.size() == g.num_nodes() && !es.empty()) {
    out.graph.coords.resize(es.size());
    for (NodeId i = 0; i < es.size(); ++i) {
      const auto& ca = g.coords[es[i].first];
      const auto& cb = g.coords[es[i].second];
      out.graph.coords[i] = {(ca[0] + cb[0]) / 2, (ca[1] + cb[1]) / 2};
    }
  }
  return out;
}

// Krausz partition: the edges of a line graph split into cliques with no node
// in more than two cells. Witness object of recognition.
struct KrauszPartition {
  std::vector<std::vector<NodeId>> cliques;         // sorted node lists
  std::vector<NodeId> singleton_cells;              // nodes lying in one clique
};

namespace detail {

// Backtracking construction of the clique partition. Cliques are attempted
// largest-first, which makes the K3/K_{1,3} ambiguity resolve to the star
// preimage and keeps lattice instances backtrack-free.
class KrauszBuilder {
 public:
  explicit KrauszBuilder(const Graph& g) : g_(g), cell_count_(g.num_nodes(), 0) {
    edges_ = g.sorted_edges();
  }

  std::optional<std::vector<std::vector<NodeId>>> run() {
    if (!grow(0)) return std::nullopt;
    return cliques_;
  }

 private:
  bool assigned(const Edge& e) const { return assigned_.count(e) != 0; }

  void candidates_from(std::vector<NodeId> base, std::vector<NodeId> pool,
                       std::vector<std::vector<NodeId>>& out) {
    out.push_back(base);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      NodeId w = pool[i];
      bool ok = true;
      for (NodeId x : base)
        if (!g_.has_edge(w, x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<NodeId> base2 = base;
      base2.push_back(w);
      std::vector<NodeId> pool2;
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (g_.has_edge(pool[j], w)) pool2.push_back(pool[j]);
      candidates_from(std::move(base2), std::move(pool2), out);
    }
  }

  bool grow(std::size_t e_idx) {
    while (e_idx < edges_.size() && assigned(edges_[e_idx])) ++e_idx;
    if (e_idx == edges_.size()) return true;
    auto [u, v] = edges_[e_idx];
    std::vector<NodeId> common;
    for (NodeId w : g_.neighbors(u))
      if (w != v && g_.has_edge(w, v)) common.push_back(w);
    std::vector<std::vector<NodeId>> cands;
    candidates_from({u, v}, common, cands);
    std::stable_sort(cands.begin(), cands.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (auto& k : cands) {
      if (!try_clique(k)) continue;
      if (grow(e_idx + 1)) return true;
      undo_clique(k);
    }
    return false;
  }

  bool try_clique(const std::vector<NodeId>& k) {
    for (NodeId w : k)
      if (cell_count_[w] >= 2) return false;
    std::vector<Edge> inner;
    for (std::size_t a = 0; a < k.size(); ++a)
      for (std::size_t b = a + 1; b < k.size(); ++b) {
        Edge e = make_edge(k[a], k[b]);
        if (assigned(e)) return false;
        inner.push_back(e);
      }
    for (NodeId w : k) ++cell_count_[w];
    for (const Edge& e : inner) assigned_.insert(e);
    std::vector<NodeId> sorted_k = k;
    std::sort(sorted_k.begin(), sorted_k.end());
    cliques_.push_back(std::move(sorted_k));
    return true;
  }

  void undo_clique(const std::vector<NodeId>& k) {
    for (NodeId w : k) --cell_count_[w];
    for (std::size_t a = 0; a < k.size(); ++a)
      for (std::size_t b = a + 1; b < k.size(); ++b)
        assigned_.erase(make_edge(k[a], k[b]));
    cliques_.pop_back();
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::set<Edge> assigned_;
  std::vector<std::size_t> cell_count_;
  std::vector<std::vector<NodeId>> cliques_;
};

}  // namespace detail

// Preimage of a line graph. G's nodes are partition cells: first the cliques
// (in construction order), then one singleton cell per node that lies in only
// one clique. An edge of G connects the (at most) two cells sharing a node;
// the shared node is recorded in edge_label, keyed by the cell-id pair.
struct InverseLineGraph {
  Graph preimage;
  KrauszPartition partition;
  std::map<Edge, NodeId> edge_label;  // cell-id pair -> shared node of the input
};

inline std::optional<InverseLineGraph> inverse_line_graph(const Graph& gp) {
  detail::KrauszBuilder builder(gp);
  auto cliques = builder.run();
  if (!cliques) return std::nullopt;

  InverseLineGraph out;
  out.partition.cliques = *cliques;
  std::vector<std::vector<NodeId>> cells = *cliques;
  std::vector<std::vector<NodeId>> in_cells(gp.num_nodes());
  for (NodeId ci = 0; ci < cells.size(); ++ci)
    for (NodeId v : cells[ci]) in_cells[v].push_back(ci);
  for (NodeId v = 0; v < gp.num_nodes(); ++v) {
    if (in_cells[v].size() == 1) {
      out.partition.singleton_cells.push_back(v);
      in_cells[v].push_back(static_cast<NodeId>(cells.size()));
      cells.push_back({v});
    } else if (in_cells[v].empty()) {
      // Isolated node of the input: its preimage is a free-standing edge
      // between two fresh cells.
      in_cells[v].push_back(static_cast<NodeId>(cells.size()));
      cells.push_back({v});
      in_cells[v].push_back(static_cast<NodeId>(cells.size()));
      cells.push_back({v});
    }
  }
  out.preimage.resize(cells.size());
  for (NodeId v = 0; v < gp.num_nodes(); ++v) {
    const auto& cs = in_cells[v];
    if (cs.size() != 2) throw MalformedPartition("node not in two cells");
    out.preimage.add_edge(cs[0], cs[1]);
    out.edge_label[make_edge(cs[0], cs[1])] = v;
  }
  return out;
}

}  // namespace lgr
