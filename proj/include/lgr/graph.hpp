#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgr {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // always stored with first < second

enum class Role : std::uint8_t { Plain, Heavy, Mediator };

inline Edge make_edge(NodeId a, NodeId b) {
  if (a == b) throw std::invalid_argument("self-loop");
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Undirected simple graph over dense labels 0..n-1. Edges keep insertion
// order (generators rely on it); adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) { resize(n); }

  void resize(std::size_t n) {
    if (n < adj_.size()) throw std::invalid_argument("graph shrink");
    adj_.resize(n);
  }

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_edge(NodeId a, NodeId b) const {
    if (a >= adj_.size() || b >= adj_.size()) return false;
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
  }

  // Adds the edge if absent; grows the node set as needed.
  void add_edge(NodeId a, NodeId b) {
    Edge e = make_edge(a, b);
    NodeId hi = std::max(a, b);
    if (hi >= adj_.size()) adj_.resize(hi + 1);
    if (has_edge(a, b)) return;
    edges_.push_back(e);
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
  }

  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(v); }
  std::size_t degree(NodeId v) const { return adj_.at(v).size(); }

  // Edges in insertion order.
  const std::vector<Edge>& edges() const { return edges_; }

  // Edges sorted by (first, second).
  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> es = edges_;
    std::sort(es.begin(), es.end());
    return es;
  }

  bool connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    return cnt == adj_.size();
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  // Optional per-node metadata.
  std::vector<Role> roles;                      // empty or size num_nodes()
  std::vector<std::array<double, 2>> coords;    // empty or size num_nodes()
  std::map<Edge, int> colors;                   // empty or one entry per edge

  Role role(NodeId v) const {
    return v < roles.size() ? roles[v] : Role::Plain;
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace lgr
