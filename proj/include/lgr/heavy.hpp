#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lgr/graph.hpp"
#include "lgr/line_graph.hpp"

namespace lgr {

// heavy(G) with heavy-node labels congruent to the matching line graph's node
// labels. mediator_of maps each L(G)-edge to the node sitting between its
// endpoints; after leaf reductions that node may itself be a heavy node.
struct HeavyLabeling {
  Graph heavy_graph;
  std::map<Edge, NodeId> mediator_of;
  std::size_t num_heavy = 0;  // heavy labels are 0..num_heavy-1
};

struct HeavyOptions {
  bool prune = true;      // drop mediators stranded on pendant rays
  bool lone_leaf = true;  // seat lone-leaf heavy nodes on their mediator
};

namespace detail {

// Lone leaf: degree-1 heavy node i whose only neighbour m is a mediator with
// no other degree-1 neighbour. i takes m's seat and mediates between m's
// remaining neighbours; counts never increase.
inline std::vector<std::pair<NodeId, NodeId>> find_lone_leaves(
    const Graph& h, std::size_t num_heavy) {
  std::vector<std::pair<NodeId, NodeId>> picks;
  for (NodeId i = 0; i < num_heavy && i < h.num_nodes(); ++i) {
    if (h.degree(i) != 1) continue;
    NodeId m = h.neighbors(i)[0];
    if (m < num_heavy) continue;
    bool other = false;
    for (NodeId w : h.neighbors(m))
      if (w != i && h.degree(w) == 1) other = true;
    if (!other) picks.emplace_back(i, m);
  }
  return picks;
}

inline void apply_seat_moves(Graph& h, std::size_t num_heavy,
                             const std::vector<std::pair<NodeId, NodeId>>& picks) {
  if (picks.empty()) return;
  Graph h2(h.num_nodes());
  std::vector<NodeId> replace(h.num_nodes());
  std::vector<char> dead(h.num_nodes(), 0);
  for (NodeId v = 0; v < h.num_nodes(); ++v) replace[v] = v;
  for (auto [i, m] : picks) {
    replace[m] = i;
    dead[m] = 1;
  }
  for (const Edge& e : h.edges()) {
    NodeId a = replace[e.first], b = replace[e.second];
    if (a != b) h2.add_edge(a, b);
  }
  if (!h.coords.empty()) {
    h2.coords = h.coords;
    for (auto [i, m] : picks) h2.coords[i] = h.coords[m];
  }
  h2.roles.assign(h2.num_nodes(), Role::Plain);
  for (NodeId v = 0; v < h2.num_nodes(); ++v)
    if (!dead[v]) h2.roles[v] = v < num_heavy ? Role::Heavy : Role::Mediator;
  h = std::move(h2);
}

// Compact away unused mediator labels; heavy labels stay fixed.
inline void compact_mediators(Graph& h, std::size_t num_heavy) {
  std::vector<NodeId> map(h.num_nodes());
  NodeId next = static_cast<NodeId>(num_heavy);
  std::vector<char> used(h.num_nodes(), 0);
  for (const Edge& e : h.edges()) used[e.first] = used[e.second] = 1;
  for (NodeId v = 0; v < h.num_nodes(); ++v)
    map[v] = v < num_heavy ? v : (used[v] ? next++ : NodeId(~0u));
  Graph h2(next);
  for (const Edge& e : h.edges()) h2.add_edge(map[e.first], map[e.second]);
  if (!h.coords.empty()) {
    h2.coords.resize(next);
    for (NodeId v = 0; v < h.num_nodes(); ++v)
      if (map[v] != NodeId(~0u) && v < h.coords.size()) h2.coords[map[v]] = h.coords[v];
  }
  h2.roles.assign(next, Role::Plain);
  for (NodeId v = 0; v < next; ++v)
    h2.roles[v] = v < num_heavy ? Role::Heavy : Role::Mediator;
  h = std::move(h2);
}

inline void fill_mediators(HeavyLabeling& out, const Graph& lg) {
  for (const Edge& le : lg.sorted_edges()) {
    const Graph& h = out.heavy_graph;
    for (NodeId w : h.neighbors(le.first))
      if (h.has_edge(w, le.second)) {
        out.mediator_of[le] = w;
        break;
      }
  }
}

}  // namespace detail

// heavy(g): one heavy node per edge of g (labels follow line_graph(g)),
// original nodes become mediators. Pruning removes every degree-1 mediator
// whose unique neighbour is a heavy node of degree <= 2 (the star-ray rule),
// then the lone-leaf reduction runs.
inline HeavyLabeling heavy_graph(const Graph& g, HeavyOptions opts = {}) {
  LineGraphResult lg = line_graph(g);
  HeavyLabeling out;
  out.num_heavy = lg.graph.num_nodes();
  Graph& h = out.heavy_graph;
  const NodeId nh = static_cast<NodeId>(out.num_heavy);
  h.resize(out.num_heavy + g.num_nodes());
  std::map<Edge, NodeId> heavy_of;
  for (NodeId i = 0; i < lg.label_map.size(); ++i) heavy_of[lg.label_map[i]] = i;
  for (const Edge& e : g.sorted_edges()) {
    NodeId i = heavy_of.at(e);
    h.add_edge(nh + e.first, i);
    h.add_edge(i, nh + e.second);
  }
  if (g.coords.size() == g.num_nodes()) {
    h.coords.resize(h.num_nodes());
    for (NodeId i = 0; i < nh; ++i) h.coords[i] = lg.graph.coords[i];
    for (NodeId v = 0; v < g.num_nodes(); ++v) h.coords[nh + v] = g.coords[v];
  }
  h.roles.assign(h.num_nodes(), Role::Plain);
  for (NodeId v = 0; v < h.num_nodes(); ++v)
    h.roles[v] = v < nh ? Role::Heavy : Role::Mediator;

  if (opts.prune) {
    // Degree-1 mediators sit at the tip of a pendant ray; line-graph routing
    // never swaps through them.
    Graph h2(h.num_nodes());
    for (const Edge& e : h.edges()) {
      NodeId med = e.first >= nh ? e.first : e.second;
      NodeId hv = e.first >= nh ? e.second : e.first;
      if (h.degree(med) == 1 && h.degree(hv) <= 2) continue;
      h2.add_edge(e.first, e.second);
    }
    h2.roles = h.roles;
    h2.coords = h.coords;
    h = std::move(h2);
  }
  if (opts.lone_leaf)
    detail::apply_seat_moves(h, out.num_heavy, detail::find_lone_leaves(h, out.num_heavy));
  detail::compact_mediators(h, out.num_heavy);
  detail::fill_mediators(out, lg.graph);
  return out;
}

// Algorithm "congruent heavy labels": heavy(G) from a recognition result so
// that the heavy labels are exactly the recognised graph's node labels.
// Mediator labels are fresh, in first-use order over sorted cell edges. When an
// endpoint of a preimage edge is a singleton cell, the heavy node attaches
// directly to the other cell's mediator, so pruned leaf mediators never
// materialise.
inline HeavyLabeling congruent_heavy_labels(const InverseLineGraph& inv,
                                            std::size_t num_heavy,
                                            bool lone_leaf_reduction = true) {
  HeavyLabeling out;
  out.num_heavy = num_heavy;
  Graph& h = out.heavy_graph;
  h.resize(num_heavy);
  std::map<NodeId, NodeId> mediator_label;
  NodeId next = static_cast<NodeId>(num_heavy);
  auto med = [&](NodeId cell) {
    auto it = mediator_label.find(cell);
    if (it != mediator_label.end()) return it->second;
    mediator_label.emplace(cell, next);
    return next++;
  };
  const auto& cliques = inv.partition.cliques;
  auto cell_size = [&](NodeId cell) -> std::size_t {
    return cell < cliques.size() ? cliques[cell].size() : 1;
  };
  for (const Edge& ce : inv.preimage.sorted_edges()) {
    NodeId shared = inv.edge_label.at(ce);
    if (shared >= num_heavy) throw MalformedPartition("label out of range");
    std::size_t sa = cell_size(ce.first), sb = cell_size(ce.second);
    if (sa > 1 && sb > 1) {
      h.add_edge(med(ce.first), shared);
      h.add_edge(shared, med(ce.second));
    } else if (sa > 1) {
      h.add_edge(med(ce.first), shared);
    } else if (sb > 1) {
      h.add_edge(shared, med(ce.second));
    } else {
      throw MalformedPartition("edge between two singleton cells");
    }
  }
  if (h.num_nodes() < num_heavy + mediator_label.size())
    h.resize(num_heavy + mediator_label.size());
  h.roles.assign(h.num_nodes(), Role::Plain);
  for (NodeId v = 0; v < h.num_nodes(); ++v)
    h.roles[v] = v < num_heavy ? Role::Heavy : Role::Mediator;
  if (lone_leaf_reduction)
    detail::apply_seat_moves(h, num_heavy, detail::find_lone_leaves(h, num_heavy));
  detail::compact_mediators(h, num_heavy);
  return out;
}

}  // namespace lgr
