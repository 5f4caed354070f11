#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lgr/circuit.hpp"
#include "lgr/graph.hpp"
#include "lgr/heavy.hpp"
#include "lgr/line_graph.hpp"

namespace lgr {

// Which operand of a two-qubit gate is swapped with the mediator. First
// follows the mediated-gate equation (swap the first-listed qubit); Second
// swaps the other. Lookahead is reserved for a side chooser that inspects
// upcoming gates; it is declared but not implemented.
enum class MediatorSide : std::uint8_t { First, Second, Lookahead };

struct MetricsRecord {
  std::size_t opt_depth = 0;
  std::size_t n_swap = 0;
  std::size_t n_qubit = 0;
  double wall_time_s = 0.0;
  std::size_t lambda = 0;       // two-qubit gates of the input
  std::size_t total_gates = 0;  // of the input
};

struct RoutingResult {
  Circuit circuit;                           // routed, on heavy(G) labels
  std::map<NodeId, NodeId> initial_layout;   // logical qubit -> starting seat
  std::map<NodeId, NodeId> final_seat;       // logical qubit -> final seat
  std::map<NodeId, NodeId> final_permutation;  // seat relabeling from elided
                                               // trailing SWAPs
  MetricsRecord metrics;
  Circuit original;
  MediatorSide side = MediatorSide::First;
  bool lone_leaf = true;
};

struct RouteOptions {
  MediatorSide side = MediatorSide::First;
  bool lone_leaf = true;
};

// Cancel adjacent inverse SWAP pairs: two SWAPs on the same qubit pair with
// no intervening gate on either qubit annihilate. Cascades are handled, so
// the result is a fixpoint.
inline Circuit cancel_swaps(const Circuit& c) {
  std::vector<const Gate*> out;
  out.reserve(c.gates.size());
  // last index in `out` touching each qubit, with per-qubit history stacks
  std::vector<std::vector<std::int64_t>> hist(c.num_qubits);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::SWAP) {
      auto& ha = hist[g.q[0]];
      auto& hb = hist[g.q[1]];
      std::int64_t ia = ha.empty() ? -1 : ha.back();
      std::int64_t ib = hb.empty() ? -1 : hb.back();
      if (ia >= 0 && ia == ib && out[ia] != nullptr) {
        const Gate* p = out[ia];
        if (p->kind == GateKind::SWAP &&
            ((p->q[0] == g.q[0] && p->q[1] == g.q[1]) ||
             (p->q[0] == g.q[1] && p->q[1] == g.q[0]))) {
          out[ia] = nullptr;
          ha.pop_back();
          hb.pop_back();
          continue;
        }
      }
    }
    std::int64_t idx = static_cast<std::int64_t>(out.size());
    out.push_back(&g);
    for (int i = 0; i < g.arity(); ++i) hist[g.q[i]].push_back(idx);
  }
  Circuit r;
  r.num_qubits = c.num_qubits;
  r.params = c.params;
  for (const Gate* g : out)
    if (g) r.gates.push_back(*g);
  return r;
}

namespace detail {

// Fold SWAPs at the circuit boundary into relabelings. Leading SWAPs (first
// gate on both wires) become a seat permutation applied before the circuit;
// trailing SWAPs one applied after. Returns the two permutations as maps over
// the affected seats.
struct Elision {
  std::map<NodeId, NodeId> leading;   // seat -> seat
  std::map<NodeId, NodeId> trailing;  // seat -> seat
};

inline Elision elide_boundary_swaps(Circuit& c) {
  Elision out;
  // leading pass
  {
    std::vector<NodeId> perm(c.num_qubits);
    for (NodeId i = 0; i < c.num_qubits; ++i) perm[i] = i;
    std::vector<char> touched(c.num_qubits, 0);
    std::vector<Gate> kept;
    kept.reserve(c.gates.size());
    for (Gate g : c.gates) {
      for (int i = 0; i < g.arity(); ++i) g.q[i] = perm[g.q[i]];
      if (g.kind == GateKind::SWAP && !touched[g.q[0]] && !touched[g.q[1]]) {
        // remap all later references of the two seats
        NodeId a = g.q[0], b = g.q[1];
        for (NodeId s = 0; s < c.num_qubits; ++s) {
          if (perm[s] == a)
            perm[s] = b;
          else if (perm[s] == b)
            perm[s] = a;
        }
        out.leading[a] = b;
        out.leading[b] = a;
        continue;
      }
      for (int i = 0; i < g.arity(); ++i) touched[g.q[i]] = 1;
      kept.push_back(g);
    }
    c.gates = std::move(kept);
  }
  // trailing pass (same idea, scanned backwards)
  {
    std::vector<NodeId> perm(c.num_qubits);
    for (NodeId i = 0; i < c.num_qubits; ++i) perm[i] = i;
    std::vector<char> touched(c.num_qubits, 0);
    std::vector<Gate> kept;
    kept.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
      Gate g = *it;
      for (int i = 0; i < g.arity(); ++i) g.q[i] = perm[g.q[i]];
      if (g.kind == GateKind::SWAP && !touched[g.q[0]] && !touched[g.q[1]]) {
        NodeId a = g.q[0], b = g.q[1];
        for (NodeId s = 0; s < c.num_qubits; ++s) {
          if (perm[s] == a)
            perm[s] = b;
          else if (perm[s] == b)
            perm[s] = a;
        }
        out.trailing[a] = b;
        out.trailing[b] = a;
        continue;
      }
      for (int i = 0; i < g.arity(); ++i) touched[g.q[i]] = 1;
      kept.push_back(g);
    }
    std::reverse(kept.begin(), kept.end());
    c.gates = std::move(kept);
  }
  return out;
}

inline std::size_t count_swaps(const Circuit& c) {
  std::size_t n = 0;
  for (const Gate& g : c.gates) n += g.kind == GateKind::SWAP;
  return n;
}

inline std::size_t count_active(const Circuit& c) {
  std::vector<char> used(c.num_qubits, 0);
  for (const Gate& g : c.gates)
    for (int i = 0; i < g.arity(); ++i) used[g.q[i]] = 1;
  std::size_t n = 0;
  for (char u : used) n += u;
  return n;
}

}  // namespace detail

// Line-graph routing: recognise the coupling graph as L(G), build heavy(G)
// with congruent labels, replace every two-qubit gate by its mediated form,
// then cancel inverse SWAP pairs and fold boundary SWAPs into relabelings.
// Throws NotALineGraph when recognition fails and GateArityError on gates
// with three or more qubits (none exist in this IR, kept for the contract).
inline RoutingResult line_graph_route(const Circuit& c, RouteOptions opts = {}) {
  if (opts.side == MediatorSide::Lookahead)
    throw std::invalid_argument("lookahead side selection is not implemented");
  auto t0 = std::chrono::steady_clock::now();

  Graph cg = coupling_graph(c);
  auto inv = inverse_line_graph(cg);
  if (!inv) throw NotALineGraph();
  HeavyLabeling heavy =
      congruent_heavy_labels(*inv, cg.num_nodes(), opts.lone_leaf);
  const Graph& h = heavy.heavy_graph;

  RoutingResult res;
  res.original = c;
  res.side = opts.side;
  res.lone_leaf = opts.lone_leaf;
  Circuit& out = res.circuit;
  out.num_qubits = h.num_nodes();
  out.params = c.params;

  // seat tracking: pos[logical] = seat, at[seat] = logical
  std::vector<NodeId> pos(h.num_nodes()), at(h.num_nodes());
  for (NodeId v = 0; v < h.num_nodes(); ++v) pos[v] = at[v] = v;
  auto emit_swap = [&](NodeId sa, NodeId sb) {
    NodeId la = at[sa], lb = at[sb];
    at[sa] = lb;
    at[sb] = la;
    pos[la] = sb;
    pos[lb] = sa;
    out.gates.push_back(Gate::two(GateKind::SWAP, sa, sb));
  };
  auto mediator = [&](NodeId sa, NodeId sb) -> NodeId {
    const auto& na = h.neighbors(sa);
    const auto& nb = h.neighbors(sb);
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
      if (na[i] == nb[j]) return na[i];
      na[i] < nb[j] ? ++i : ++j;
    }
    throw MalformedPartition("no mediator between heavy neighbours");
  };

  for (const Gate& g : c.gates) {
    if (g.arity() == 1) {
      Gate gg = g;
      gg.q[0] = pos[g.q[0]];
      out.gates.push_back(gg);
      continue;
    }
    NodeId sa = pos[g.q[0]], sb = pos[g.q[1]];
    if (h.has_edge(sa, sb)) {
      Gate gg = g;
      gg.q = {sa, sb};
      out.gates.push_back(gg);
      continue;
    }
    NodeId m = mediator(sa, sb);
    NodeId xs = opts.side == MediatorSide::First ? sa : sb;
    emit_swap(xs, m);
    Gate gg = g;
    gg.q = {pos[g.q[0]], pos[g.q[1]]};
    out.gates.push_back(gg);
    emit_swap(xs, m);
  }

  out = cancel_swaps(out);
  detail::Elision el = detail::elide_boundary_swaps(out);

  // Layouts: logical q starts at leading(q) (identity where nothing was
  // elided) and ends at trailing(pos_final(q)).
  auto ap = [](const std::map<NodeId, NodeId>& p, NodeId v) {
    auto it = p.find(v);
    return it == p.end() ? v : it->second;
  };
  for (NodeId q = 0; q < cg.num_nodes(); ++q)
    res.initial_layout[q] = ap(el.leading, q);
  for (NodeId q = 0; q < cg.num_nodes(); ++q)
    res.final_seat[q] = ap(el.trailing, pos[q]);
  res.final_permutation = el.trailing;

  auto t1 = std::chrono::steady_clock::now();
  res.metrics.opt_depth = depth(out);
  res.metrics.n_swap = detail::count_swaps(out);
  res.metrics.n_qubit = detail::count_active(out);
  res.metrics.lambda = c.two_qubit_count();
  res.metrics.total_gates = c.gates.size();
  res.metrics.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  return res;
}

// Appendix-style lone-leaf pass as a standalone operation: re-derives the
// routing with the reduction enabled. No-op (up to recomputation) when the
// result already used it or no lone leaves exist.
inline RoutingResult remove_lone_leaves(const RoutingResult& r) {
  RouteOptions opts;
  opts.side = r.side;
  opts.lone_leaf = true;
  return line_graph_route(r.original, opts);
}

struct TargetTooSmall : std::runtime_error {
  TargetTooSmall() : std::runtime_error("target graph too small") {}
};

// Baseline router: walk each two-qubit gate's operands together along a BFS
// shortest path, apply the gate, and walk back. Deterministic; no
// cancellation or relabeling.
inline RoutingResult naive_route(const Circuit& c, const Graph& target) {
  if (target.num_nodes() < c.num_qubits) throw TargetTooSmall();
  if (!target.connected()) throw std::invalid_argument("target not connected");
  auto t0 = std::chrono::steady_clock::now();

  RoutingResult res;
  res.original = c;
  Circuit& out = res.circuit;
  out.num_qubits = target.num_nodes();
  out.params = c.params;
  std::vector<NodeId> pos(target.num_nodes()), at(target.num_nodes());
  for (NodeId v = 0; v < target.num_nodes(); ++v) pos[v] = at[v] = v;
  auto emit_swap = [&](NodeId sa, NodeId sb) {
    NodeId la = at[sa], lb = at[sb];
    at[sa] = lb;
    at[sb] = la;
    pos[la] = sb;
    pos[lb] = sa;
    out.gates.push_back(Gate::two(GateKind::SWAP, sa, sb));
  };
  auto path = [&](NodeId s, NodeId t) {
    std::vector<NodeId> prev(target.num_nodes(), NodeId(~0u));
    std::vector<NodeId> queue{s};
    prev[s] = s;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      NodeId x = queue[qi];
      if (x == t) break;
      for (NodeId y : target.neighbors(x))
        if (prev[y] == NodeId(~0u)) {
          prev[y] = x;
          queue.push_back(y);
        }
    }
    std::vector<NodeId> p;
    for (NodeId cur = t; cur != s; cur = prev[cur]) p.push_back(cur);
    p.push_back(s);
    std::reverse(p.begin(), p.end());
    return p;
  };

  for (const Gate& g : c.gates) {
    if (g.arity() == 1) {
      Gate gg = g;
      gg.q[0] = pos[g.q[0]];
      out.gates.push_back(gg);
      continue;
    }
    NodeId sa = pos[g.q[0]], sb = pos[g.q[1]];
    std::vector<std::pair<NodeId, NodeId>> steps;
    if (!target.has_edge(sa, sb)) {
      auto p = path(sa, sb);
      for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        emit_swap(p[i], p[i + 1]);
        steps.push_back({p[i], p[i + 1]});
      }
    }
    Gate gg = g;
    gg.q = {pos[g.q[0]], pos[g.q[1]]};
    out.gates.push_back(gg);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      emit_swap(it->first, it->second);
  }
  for (NodeId q = 0; q < c.num_qubits; ++q) {
    res.initial_layout[q] = q;
    res.final_seat[q] = pos[q];
  }
  auto t1 = std::chrono::steady_clock::now();
  res.metrics.opt_depth = depth(out);
  res.metrics.n_swap = detail::count_swaps(out);
  res.metrics.n_qubit = detail::count_active(out);
  res.metrics.lambda = c.two_qubit_count();
  res.metrics.total_gates = c.gates.size();
  res.metrics.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  return res;
}

inline MetricsRecord route_metrics(const RoutingResult& r) { return r.metrics; }

}  // namespace lgr
