#pragma once

#include <map>
#include <utility>
#include <vector>

#include "maqw/matrix.hpp"
#include "maqw/tolerances.hpp"

namespace maqw {

/// Weighted graph on 2^n vertices with optional self-loops. No multi-edges;
/// isolated vertices need no self-loop.
class WeightedGraph {
  public:
    using Edge = std::pair<std::size_t, std::size_t>;  // stored with u < w

    explicit WeightedGraph(std::size_t num_vertices);

    void add_edge(std::size_t u, std::size_t w, double weight);
    void add_self_loop(std::size_t v, double weight);

    std::size_t num_vertices() const { return num_vertices_; }
    const std::map<Edge, double>& edges() const { return edges_; }
    const std::map<std::size_t, double>& self_loops() const { return self_loops_; }
    bool empty() const { return edges_.empty() && self_loops_.empty(); }

  private:
    std::size_t num_vertices_;
    std::map<Edge, double> edges_;
    std::map<std::size_t, double> self_loops_;
};

/// Ordered (graph, propagation time) pairs over a fixed vertex set.
class DynamicGraph {
  public:
    using Step = std::pair<WeightedGraph, double>;

    explicit DynamicGraph(std::size_t num_vertices);

    void add_step(WeightedGraph graph, double time);

    std::size_t num_vertices() const { return num_vertices_; }
    const std::vector<Step>& steps() const { return steps_; }

  private:
    std::size_t num_vertices_;
    std::vector<Step> steps_;
};

/// Symmetric adjacency matrix; self-loop weights on the diagonal.
ComplexMatrix adjacency(const WeightedGraph& graph);

/// One walk step e^(-i A t / ||A||) applied to psi. An empty graph has
/// spectral norm 0 and is rejected.
Statevector walk_step(const WeightedGraph& graph, double time, const Statevector& psi,
                      const Tolerances& tol = default_tolerances());

struct WalkRun {
    Statevector final_state;
    std::vector<Statevector> after_step;
};

WalkRun run_walk(const DynamicGraph& walk, const Statevector& initial);

/// Product of the per-step evolutions in application order.
ComplexMatrix walk_unitary(const DynamicGraph& walk);

// Gate gadgets, lifted to n qubits by replicating loops/edges across all
// settings of the untouched bits.

/// Three steps: self-loops on bit-q vertices (3*pi/2), the qubit-q hypercube
/// edges (pi/4), the same self-loops again (3*pi/2).
DynamicGraph gadget_h(int qubit, int num_qubits);

/// One step: self-loops on bit-q vertices for time 7*pi/4.
DynamicGraph gadget_t(int qubit, int num_qubits);

/// Two steps: target-bit edges between control-set vertices (pi/2), then
/// self-loops on the control-set vertices (3*pi/2).
DynamicGraph gadget_cx(int control, int target, int num_qubits);

}  // namespace maqw
