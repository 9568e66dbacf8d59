#include "maqw/transpile.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maqw/linalg.hpp"

namespace maqw {

namespace {

constexpr double kPi = std::numbers::pi;

// Phase table for the Hadamard construction, indexed by Hamming weight mod 4.
constexpr double kEta[4] = {kPi, kPi / 2.0, 0.0, 3.0 * kPi / 2.0};

}  // namespace

GateCircuit::GateCircuit(int num_qubits, std::vector<Gate> gates)
    : num_qubits_(check_qubit_count(num_qubits)), gates_(std::move(gates)) {
    for (const auto& gate : gates_) {
        qubit_mask(gate.q1, num_qubits_);
        if (gate.kind == GateKind::CX) {
            qubit_mask(gate.q2, num_qubits_);
            if (gate.q1 == gate.q2)
                throw std::invalid_argument("CX control qubit equals target qubit");
        }
    }
}

LayerFragment fragment_h(const std::set<int>& qubits, int num_qubits) {
    check_qubit_count(num_qubits);
    if (qubits.empty()) throw std::invalid_argument("H fragment needs a nonempty qubit set");

    std::size_t set_mask = 0;
    for (int q : qubits) set_mask |= qubit_mask(q, num_qubits);

    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<double> gamma(dim);
    for (std::size_t z = 0; z < dim; ++z)
        gamma[z] = kEta[std::popcount(z & set_mask) % 4];

    BetaLayer::EdgeAngles edges;
    for (int q : qubits) {
        const std::size_t mask = qubit_mask(q, num_qubits);
        for (std::size_t z = 0; z < dim; ++z)
            if (!(z & mask)) edges[{z, z | mask}] = kPi / 4.0;
    }

    GammaLayer phase(num_qubits, gamma);
    return LayerFragment{num_qubits, {phase, BetaLayer(num_qubits, edges), phase}};
}

LayerFragment fragment_t(int qubit, int num_qubits) {
    const std::size_t mask = qubit_mask(qubit, num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<double> gamma(dim, 0.0);
    for (std::size_t z = 0; z < dim; ++z)
        if (z & mask) gamma[z] = 7.0 * kPi / 4.0;
    return LayerFragment{num_qubits, {GammaLayer(num_qubits, std::move(gamma))}};
}

LayerFragment fragment_cx(int control, int target, int num_qubits, bool gamma_first) {
    const std::size_t control_mask = qubit_mask(control, num_qubits);
    const std::size_t target_mask = qubit_mask(target, num_qubits);
    if (control == target) throw std::invalid_argument("CX control qubit equals target qubit");

    const std::size_t dim = std::size_t{1} << num_qubits;
    BetaLayer::EdgeAngles edges;
    std::vector<double> gamma(dim, 0.0);
    for (std::size_t z = 0; z < dim; ++z) {
        if (!(z & control_mask)) continue;
        gamma[z] = kPi / 2.0;
        if (!(z & target_mask)) edges[{z, z | target_mask}] = 3.0 * kPi / 2.0;
    }

    HalfLayer swap{BetaLayer(num_qubits, edges)};
    HalfLayer phase{GammaLayer(num_qubits, std::move(gamma))};
    if (gamma_first) return LayerFragment{num_qubits, {phase, swap}};
    return LayerFragment{num_qubits, {swap, phase}};
}

Schedule pack(const std::vector<LayerFragment>& fragments, int num_qubits) {
    check_qubit_count(num_qubits);

    std::vector<HalfLayer> sequence;
    bool expect_gamma = true;
    auto push = [&](const HalfLayer& half) {
        const bool is_gamma = std::holds_alternative<GammaLayer>(half);
        if (is_gamma != expect_gamma) {
            if (expect_gamma)
                sequence.emplace_back(GammaLayer::zero(num_qubits));
            else
                sequence.emplace_back(BetaLayer::zero(num_qubits));
            expect_gamma = !expect_gamma;
        }
        sequence.push_back(half);
        expect_gamma = !expect_gamma;
    };

    for (const auto& fragment : fragments) {
        if (fragment.num_qubits != num_qubits)
            throw std::invalid_argument("fragment register size does not match pack target");
        for (const auto& half : fragment.half_layers) push(half);
    }

    if (sequence.empty()) sequence.emplace_back(GammaLayer::zero(num_qubits));
    if (std::holds_alternative<GammaLayer>(sequence.back()))
        sequence.emplace_back(BetaLayer::zero(num_qubits));

    std::vector<Schedule::Layer> layers;
    layers.reserve(sequence.size() / 2);
    for (std::size_t i = 0; i < sequence.size(); i += 2) {
        layers.emplace_back(std::get<GammaLayer>(sequence[i]),
                            std::get<BetaLayer>(sequence[i + 1]));
    }
    return Schedule(num_qubits, std::move(layers));
}

Schedule transpile(const GateCircuit& circuit) {
    std::vector<LayerFragment> fragments;
    fragments.reserve(circuit.gates().size());
    for (const auto& gate : circuit.gates()) {
        switch (gate.kind) {
            case GateKind::H:
                fragments.push_back(fragment_h({gate.q1}, circuit.num_qubits()));
                break;
            case GateKind::T:
                fragments.push_back(fragment_t(gate.q1, circuit.num_qubits()));
                break;
            case GateKind::CX:
                fragments.push_back(fragment_cx(gate.q1, gate.q2, circuit.num_qubits()));
                break;
        }
    }
    return pack(fragments, circuit.num_qubits());
}

LayerCount layer_count(const GateCircuit& circuit) {
    const Schedule schedule = transpile(circuit);
    const std::size_t gates = circuit.gates().size();

    LayerCount count{};
    count.pairs = schedule.layers().size();
    count.merged_pairs = merge_gamma_layers(schedule).layers().size();
    // ceil(1.5 N); the empty circuit still packs to one identity layer.
    count.bound = gates == 0 ? 1 : (3 * gates + 1) / 2;

    if (count.merged_pairs > count.bound) {
        std::ostringstream msg;
        msg << "depth bound violated: " << count.merged_pairs << " merged layer pairs for "
            << gates << " gates (bound " << count.bound << ")";
        throw std::logic_error(msg.str());
    }
    return count;
}

DynamicGraph schedule_to_dynamic_graph(const Schedule& schedule) {
    const std::size_t dim = std::size_t{1} << schedule.num_qubits();
    DynamicGraph walk(dim);

    for (const auto& [gamma, beta] : schedule.layers()) {
        if (!gamma.is_zero()) {
            WeightedGraph loops(dim);
            double max_angle = 0.0;
            for (std::size_t z = 0; z < dim; ++z) {
                const double angle = gamma.angles()[z];
                if (angle == 0.0) continue;
                loops.add_self_loop(z, angle);
                max_angle = std::max(max_angle, angle);
            }
            // The diagonal spectral norm is the largest loop weight, so with
            // t = ||A|| the normalized walk reproduces the angles exactly.
            walk.add_step(std::move(loops), max_angle);
        }
        if (!beta.is_zero()) {
            WeightedGraph mixer(dim);
            for (const auto& [edge, angle] : beta.edge_angles()) {
                if (angle == 0.0) continue;
                mixer.add_edge(edge.first, edge.second, angle);
            }
            const double norm = spectral_norm(adjacency(mixer));
            walk.add_step(std::move(mixer), norm);
        }
    }
    return walk;
}

Schedule dynamic_graph_to_schedule(const DynamicGraph& walk) {
    const std::size_t dim = walk.num_vertices();
    int num_qubits = 0;
    while ((std::size_t{1} << num_qubits) < dim) ++num_qubits;
    check_qubit_count(num_qubits);

    LayerFragment fragment{num_qubits, {}};
    std::size_t index = 0;
    for (const auto& [graph, time] : walk.steps()) {
        ++index;
        if (graph.empty()) {
            std::ostringstream msg;
            msg << "step " << index << " has zero adjacency";
            throw std::invalid_argument(msg.str());
        }
        if (!graph.self_loops().empty() && !graph.edges().empty()) {
            std::ostringstream msg;
            msg << "step " << index
                << " mixes self-loops and edges; outside the schedule restriction";
            throw std::invalid_argument(msg.str());
        }
        const double norm = spectral_norm(adjacency(graph));
        if (graph.edges().empty()) {
            std::vector<double> gamma(dim, 0.0);
            for (const auto& [v, weight] : graph.self_loops()) gamma[v] = weight * time / norm;
            fragment.half_layers.emplace_back(GammaLayer(num_qubits, std::move(gamma)));
        } else {
            BetaLayer::EdgeAngles angles;
            for (const auto& [edge, weight] : graph.edges()) {
                if (std::popcount(edge.first ^ edge.second) != 1) {
                    std::ostringstream msg;
                    msg << "step " << index << " edge (" << edge.first << ", " << edge.second
                        << ") is not a hypercube edge: endpoints differ in "
                        << std::popcount(edge.first ^ edge.second)
                        << " bits; outside the schedule restriction";
                    throw std::invalid_argument(msg.str());
                }
                angles[edge] = weight * time / norm;
            }
            fragment.half_layers.emplace_back(BetaLayer(num_qubits, angles));
        }
    }
    return pack({fragment}, num_qubits);
}

}  // namespace maqw
