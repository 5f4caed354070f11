#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgr/coloring.hpp"
#include "lgr/graph.hpp"
#include "lgr/rng.hpp"

namespace lgr {

enum class GateKind : std::uint8_t { H, S, T, X, Z, CNOT, SWAP, SINGLET, HEIS };

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::SINGLET: return "SINGLET";
    case GateKind::HEIS: return "HEIS";
  }
  return "?";
}

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::T:
    case GateKind::X:
    case GateKind::Z: return 1;
    default: return 2;
  }
}

struct GateArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One named operation on 1 or 2 qubits. HEIS carries either a bound angle or
// a reference into Circuit::params (HVA mode).
struct Gate {
  GateKind kind;
  std::array<NodeId, 2> q{0, 0};
  double param = 0.0;
  int param_ref = -1;  // >= 0: index into Circuit::params

  static Gate one(GateKind k, NodeId a) {
    Gate g;
    g.kind = k;
    g.q = {a, 0};
    return g;
  }
  static Gate two(GateKind k, NodeId a, NodeId b) {
    if (a == b) throw GateArityError("two-qubit gate on a single qubit");
    Gate g;
    g.kind = k;
    g.q = {a, b};
    return g;
  }
  int arity() const { return gate_arity(kind); }
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;
  std::vector<std::string> params;  // free parameter names (HVA circuits)

  void push(Gate g) {
    for (int i = 0; i < g.arity(); ++i)
      if (g.q[i] >= num_qubits)
        throw std::out_of_range("gate qubit out of range");
    gates.push_back(g);
  }

  // Two-qubit gate count (lambda) and total count (Lambda).
  std::size_t two_qubit_count() const {
    std::size_t n = 0;
    for (const Gate& g : gates) n += g.arity() == 2;
    return n;
  }
};

// Longest chain of gates sharing qubits; every gate costs one layer.
inline std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> level(c.num_qubits, 0);
  std::size_t best = 0;
  for (const Gate& g : c.gates) {
    std::size_t l = level[g.q[0]];
    if (g.arity() == 2) l = std::max(l, level[g.q[1]]);
    ++l;
    level[g.q[0]] = l;
    if (g.arity() == 2) level[g.q[1]] = l;
    best = std::max(best, l);
  }
  return best;
}

// Nodes are the qubit ids of c; one edge per pair acted on by a two-qubit
// gate.
inline Graph coupling_graph(const Circuit& c) {
  Graph g(c.num_qubits);
  for (const Gate& gt : c.gates)
    if (gt.arity() == 2) g.add_edge(gt.q[0], gt.q[1]);
  return g;
}

struct EmptyGraph : std::runtime_error {
  EmptyGraph() : std::runtime_error("empty graph") {}
};

// Random benchmark circuit: with probability 2/5 a CNOT on a uniform edge
// (control = lower label), otherwise a uniform pick from {H,S,T} on a uniform
// node. One branch draw, then one index draw, then (for single-qubit gates)
// one kind draw per gate.
inline Circuit random_circuit(const Graph& g, std::size_t n_gates,
                              std::uint64_t seed) {
  if (g.num_nodes() == 0) throw EmptyGraph();
  Circuit c;
  c.num_qubits = g.num_nodes();
  std::vector<Edge> es = g.sorted_edges();
  Rng rng(seed);
  for (std::size_t i = 0; i < n_gates; ++i) {
    bool two = rng.below(5) < 2;
    if (two && !es.empty()) {
      const Edge& e = es[rng.below(es.size())];
      c.push(Gate::two(GateKind::CNOT, e.first, e.second));
    } else {
      NodeId v = static_cast<NodeId>(rng.below(g.num_nodes()));
      static constexpr GateKind kinds[3] = {GateKind::H, GateKind::S, GateKind::T};
      c.push(Gate::one(kinds[rng.below(3)], v));
    }
  }
  return c;
}

struct NotPerfectMatching : std::runtime_error {
  NotPerfectMatching()
      : std::runtime_error("color 0 is not a perfect matching") {}
};

enum class HeisMode { Hva, Trotter };

// Quantum-simulation circuit from an edge-colored graph. Layer 0 places
// singlets along the color-0 perfect matching; each of the p cycles applies
// HEIS along colors 1..k-1 and then color 0 (the matching color both seeds
// the initial state and closes the cycle). Within a color, edges run in
// ascending sorted-pair order; each pair lists the higher label first, which
// is the side the router swaps by default.
inline Circuit heis_circuit(const Graph& colored, int p,
                            HeisMode mode = HeisMode::Hva,
                            double alpha = 0.0) {
  // collect color classes
  std::map<int, std::vector<Edge>> by_color;
  for (const Edge& e : colored.sorted_edges()) {
    auto it = colored.colors.find(e);
    if (it == colored.colors.end())
      throw std::invalid_argument("graph has no edge coloring");
    by_color[it->second].push_back(e);
  }
  // color 0 must be a perfect matching
  {
    std::vector<char> cover(colored.num_nodes(), 0);
    for (const Edge& e : by_color[0]) {
      if (cover[e.first] || cover[e.second]) throw NotPerfectMatching();
      cover[e.first] = cover[e.second] = 1;
    }
    for (NodeId v = 0; v < colored.num_nodes(); ++v)
      if (!cover[v]) throw NotPerfectMatching();
  }
  int k = by_color.empty() ? 0 : by_color.rbegin()->first + 1;
  Circuit c;
  c.num_qubits = colored.num_nodes();
  auto heis = [&](const Edge& e) {
    Gate g = Gate::two(GateKind::HEIS, e.second, e.first);
    if (mode == HeisMode::Hva) {
      g.param_ref = static_cast<int>(c.params.size());
      c.params.push_back("al_" + std::to_string(c.params.size()));
    } else {
      g.param = alpha;
    }
    c.push(g);
  };
  for (const Edge& e : by_color[0])
    c.push(Gate::two(GateKind::SINGLET, e.second, e.first));
  for (int cyc = 0; cyc < p; ++cyc) {
    for (int col = 1; col < k; ++col)
      for (const Edge& e : by_color[col]) heis(e);
    for (const Edge& e : by_color[0]) heis(e);
  }
  return c;
}

}  // namespace lgr
