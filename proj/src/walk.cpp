#include "maqw/walk.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maqw/linalg.hpp"

namespace maqw {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t check_vertex_count(std::size_t num_vertices) {
    if (!is_power_of_two(num_vertices) || num_vertices > (std::size_t{1} << kMaxQubits)) {
        std::ostringstream msg;
        msg << "vertex count " << num_vertices << " is not a power of two within 2^" << kMaxQubits;
        throw std::invalid_argument(msg.str());
    }
    return num_vertices;
}

void check_vertex(std::size_t v, std::size_t num_vertices) {
    if (v >= num_vertices) {
        std::ostringstream msg;
        msg << "vertex " << v << " out of range [0, " << num_vertices << ")";
        throw std::invalid_argument(msg.str());
    }
}

void check_weight(double weight) {
    if (!(weight > 0.0)) {
        std::ostringstream msg;
        msg << "weight " << weight << " must be positive";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t num_vertices)
    : num_vertices_(check_vertex_count(num_vertices)) {}

void WeightedGraph::add_edge(std::size_t u, std::size_t w, double weight) {
    check_vertex(u, num_vertices_);
    check_vertex(w, num_vertices_);
    if (u == w) throw std::invalid_argument("self-loops go through add_self_loop");
    check_weight(weight);
    const Edge key{std::min(u, w), std::max(u, w)};
    if (!edges_.emplace(key, weight).second) {
        std::ostringstream msg;
        msg << "multi-edge (" << key.first << ", " << key.second << ")";
        throw std::invalid_argument(msg.str());
    }
}

void WeightedGraph::add_self_loop(std::size_t v, double weight) {
    check_vertex(v, num_vertices_);
    check_weight(weight);
    if (!self_loops_.emplace(v, weight).second) {
        std::ostringstream msg;
        msg << "duplicate self-loop on vertex " << v;
        throw std::invalid_argument(msg.str());
    }
}

DynamicGraph::DynamicGraph(std::size_t num_vertices)
    : num_vertices_(check_vertex_count(num_vertices)) {}

void DynamicGraph::add_step(WeightedGraph graph, double time) {
    if (graph.num_vertices() != num_vertices_)
        throw std::invalid_argument("step graph does not match the walk's vertex count");
    if (!(time > 0.0)) {
        std::ostringstream msg;
        msg << "propagation time " << time << " must be positive";
        throw std::invalid_argument(msg.str());
    }
    steps_.emplace_back(std::move(graph), time);
}

ComplexMatrix adjacency(const WeightedGraph& graph) {
    ComplexMatrix m(graph.num_vertices());
    for (const auto& [edge, weight] : graph.edges()) {
        m(edge.first, edge.second) = weight;
        m(edge.second, edge.first) = weight;
    }
    for (const auto& [v, weight] : graph.self_loops()) m(v, v) = weight;
    return m;
}

Statevector walk_step(const WeightedGraph& graph, double time, const Statevector& psi,
                      const Tolerances& tol) {
    if (graph.num_vertices() != psi.dim())
        throw std::invalid_argument("walk_step: state does not match the graph's vertex count");
    if (graph.empty())
        throw std::invalid_argument("cannot walk on a graph with zero adjacency (norm 0)");
    const ComplexMatrix a = adjacency(graph);
    const double norm = spectral_norm(a, tol);
    if (norm == 0.0)
        throw std::invalid_argument("cannot walk on a graph with zero adjacency (norm 0)");
    const ComplexMatrix u = herm_exp(a, time / norm, tol);
    return Statevector(psi.num_qubits(), mat_vec(u, psi.amplitudes()));
}

WalkRun run_walk(const DynamicGraph& walk, const Statevector& initial) {
    if (initial.dim() != walk.num_vertices())
        throw std::invalid_argument("initial state does not match the walk's vertex count");
    WalkRun run{initial, {}};
    run.after_step.reserve(walk.steps().size());
    Statevector psi = initial;
    for (const auto& [graph, time] : walk.steps()) {
        psi = walk_step(graph, time, psi);
        run.after_step.push_back(psi);
    }
    run.final_state = psi;
    return run;
}

ComplexMatrix walk_unitary(const DynamicGraph& walk) {
    ComplexMatrix u = ComplexMatrix::identity(walk.num_vertices());
    for (const auto& [graph, time] : walk.steps()) {
        const ComplexMatrix a = adjacency(graph);
        const double norm = spectral_norm(a);
        if (norm == 0.0)
            throw std::invalid_argument("cannot walk on a graph with zero adjacency (norm 0)");
        u = herm_exp(a, time / norm) * u;
    }
    return u;
}

namespace {

WeightedGraph loops_on_bit(int qubit, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    WeightedGraph g(dim);
    for (std::size_t z = 0; z < dim; ++z)
        if (qubit_bit(z, qubit, num_qubits)) g.add_self_loop(z, 1.0);
    return g;
}

WeightedGraph direction_edges(int qubit, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t mask = qubit_mask(qubit, num_qubits);
    WeightedGraph g(dim);
    for (std::size_t z = 0; z < dim; ++z)
        if (!(z & mask)) g.add_edge(z, z | mask, 1.0);
    return g;
}

}  // namespace

DynamicGraph gadget_h(int qubit, int num_qubits) {
    qubit_mask(qubit, num_qubits);
    DynamicGraph dg(std::size_t{1} << num_qubits);
    dg.add_step(loops_on_bit(qubit, num_qubits), 3.0 * kPi / 2.0);
    dg.add_step(direction_edges(qubit, num_qubits), kPi / 4.0);
    dg.add_step(loops_on_bit(qubit, num_qubits), 3.0 * kPi / 2.0);
    return dg;
}

DynamicGraph gadget_t(int qubit, int num_qubits) {
    qubit_mask(qubit, num_qubits);
    DynamicGraph dg(std::size_t{1} << num_qubits);
    dg.add_step(loops_on_bit(qubit, num_qubits), 7.0 * kPi / 4.0);
    return dg;
}

DynamicGraph gadget_cx(int control, int target, int num_qubits) {
    qubit_mask(control, num_qubits);
    const std::size_t target_mask = qubit_mask(target, num_qubits);
    if (control == target) throw std::invalid_argument("control qubit equals target qubit");

    const std::size_t dim = std::size_t{1} << num_qubits;
    WeightedGraph swaps(dim);
    for (std::size_t z = 0; z < dim; ++z)
        if (qubit_bit(z, control, num_qubits) && !(z & target_mask))
            swaps.add_edge(z, z | target_mask, 1.0);

    DynamicGraph dg(dim);
    dg.add_step(std::move(swaps), kPi / 2.0);
    dg.add_step(loops_on_bit(control, num_qubits), 3.0 * kPi / 2.0);
    return dg;
}

}  // namespace maqw
