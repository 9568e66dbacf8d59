#pragma once

#include <set>
#include <variant>
#include <vector>

#include "maqw/schedule.hpp"
#include "maqw/walk.hpp"

namespace maqw {

enum class GateKind { H, T, CX };

struct Gate {
    GateKind kind;
    int q1 = 0;  // target for H/T, control for CX
    int q2 = 0;  // CX target, unused otherwise

    static Gate h(int qubit) { return {GateKind::H, qubit, 0}; }
    static Gate t(int qubit) { return {GateKind::T, qubit, 0}; }
    static Gate cx(int control, int target) { return {GateKind::CX, control, target}; }
};

class GateCircuit {
  public:
    GateCircuit(int num_qubits, std::vector<Gate> gates);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }

  private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

using HalfLayer = std::variant<GammaLayer, BetaLayer>;

/// Ordered half-layers implementing one gate, before packing.
struct LayerFragment {
    int num_qubits = 0;
    std::vector<HalfLayer> half_layers;
};

/// H on every qubit in S at once: (gamma, beta, gamma) with
/// gamma_z = eta(h_S(z) mod 4) for eta = (pi, pi/2, 0, 3*pi/2), h_S the
/// Hamming weight restricted to S, and beta = pi/4 on every edge in every
/// direction of S. The closing gamma repeats the opening one.
LayerFragment fragment_h(const std::set<int>& qubits, int num_qubits);

/// Single gamma half-layer: 7*pi/4 on every z with bit q set.
LayerFragment fragment_t(int qubit, int num_qubits);

/// (beta, gamma): 3*pi/2 on every target-bit edge between control-set
/// vertices, then pi/2 phase on the control-set vertices. gamma_first swaps
/// the two half-layers; both orders implement CX since the phase acts as a
/// scalar on the swapped block.
LayerFragment fragment_cx(int control, int target, int num_qubits, bool gamma_first = false);

/// Concatenates fragment half-layers and restores strict gamma/beta
/// alternation (starting gamma, ending beta) by inserting all-zero
/// half-layers; never merges. Deterministic; an empty input packs to one
/// all-zero layer.
Schedule pack(const std::vector<LayerFragment>& fragments, int num_qubits);

/// Per-gate fragments in circuit order, packed.
Schedule transpile(const GateCircuit& circuit);

struct LayerCount {
    std::size_t pairs;         // (gamma, beta) pairs emitted by transpile
    std::size_t merged_pairs;  // pairs after merge_gamma_layers
    std::size_t bound;         // ceil(1.5 N) for N gates (1 for the empty circuit)
};

/// Counts transpiled layer pairs against the 1.5-per-gate depth bound. The
/// bound is checked against merged_pairs: zero-padding at fragment boundaries
/// can exceed it by one pair, while the merged (unitary-identical) schedule
/// never does. A violation throws.
LayerCount layer_count(const GateCircuit& circuit);

/// Each nonzero gamma half-layer becomes a self-loop graph and each nonzero
/// beta half-layer an edge graph, with propagation time equal to the
/// adjacency spectral norm so the normalized walk reproduces the angles.
/// Zero half-layers are dropped.
DynamicGraph schedule_to_dynamic_graph(const Schedule& schedule);

/// Inverse direction, defined on the restriction: every step must be
/// loops-only or hypercube-edges-only. Mixed graphs and edges whose
/// endpoints differ in more than one bit are rejected naming the offender.
Schedule dynamic_graph_to_schedule(const DynamicGraph& walk);

}  // namespace maqw
