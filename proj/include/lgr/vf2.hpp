#pragma once

#include <optional>
#include <vector>

#include "lgr/graph.hpp"

namespace lgr {

// Subgraph monomorphism: one injective map realizing `pattern` as a (not
// necessarily induced) subgraph of `host`, or nullopt. Deterministic:
// pattern nodes are matched in ascending label order, host candidates are
// tried in ascending label order.
inline std::optional<std::vector<NodeId>> vf2_embed(const Graph& pattern,
                                                    const Graph& host) {
  const std::size_t np = pattern.num_nodes(), nh = host.num_nodes();
  if (np > nh) return std::nullopt;
  std::vector<NodeId> map(np, NodeId(~0u));
  std::vector<char> used(nh, 0);

  // degree filter candidates once
  auto feasible = [&](NodeId p, NodeId h) {
    if (host.degree(h) < pattern.degree(p)) return false;
    // all already-mapped pattern neighbours must map to host neighbours
    for (NodeId q : pattern.neighbors(p)) {
      if (q < p && map[q] != NodeId(~0u) && !host.has_edge(map[q], h)) return false;
    }
    return true;
  };

  struct Frame {
    NodeId p;
    NodeId next_h;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0});
  if (np == 0) return map;
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool advanced = false;
    for (NodeId h = f.next_h; h < nh; ++h) {
      if (used[h] || !feasible(f.p, h)) continue;
      map[f.p] = h;
      used[h] = 1;
      f.next_h = h + 1;
      if (f.p + 1 == np) return map;
      stack.push_back({static_cast<NodeId>(f.p + 1), 0});
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (!stack.empty()) {
        Frame& g = stack.back();
        used[map[g.p]] = 0;
        map[g.p] = NodeId(~0u);
      }
    }
  }
  return std::nullopt;
}

// Isomorphism test via monomorphism on equal-size graphs
// with equal edge counts (sufficient for simple graphs).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges())
    return false;
  return vf2_embed(a, b).has_value();
}

}  // namespace lgr
