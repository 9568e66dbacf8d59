#include <doctest.h>

#include <numbers>
#include <random>

#include "maqw/linalg.hpp"
#include "maqw/verify.hpp"
#include "maqw/walk.hpp"
#include "oracles.hpp"

using namespace maqw;

namespace {

constexpr double kPi = std::numbers::pi;

WeightedGraph single_loop_graph() {
    WeightedGraph g(2);
    g.add_self_loop(1, 1.0);
    return g;
}

WeightedGraph single_edge_graph() {
    WeightedGraph g(2);
    g.add_edge(0, 1, 1.0);
    return g;
}

/// Walk unitary assembled column-by-column through run_walk, independent of
/// walk_unitary's matrix products.
ComplexMatrix walk_unitary_by_columns(const DynamicGraph& walk, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    ComplexMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const auto state = run_walk(walk, Statevector::basis_state(num_qubits, col)).final_state;
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = state.amplitudes()[row];
    }
    return u;
}

}  // namespace

TEST_CASE("graph construction rejects invalid pieces") {
    WeightedGraph g(4);
    CHECK_THROWS_AS(g.add_edge(0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1, -2.0), std::invalid_argument);
    g.add_edge(0, 1, 1.0);
    CHECK_THROWS_WITH_AS(g.add_edge(1, 0, 2.0), doctest::Contains("multi-edge"),
                         std::invalid_argument);
    g.add_self_loop(2, 0.5);
    CHECK_THROWS_AS(g.add_self_loop(2, 0.5), std::invalid_argument);

    DynamicGraph dg(4);
    CHECK_THROWS_AS(dg.add_step(WeightedGraph(2), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(dg.add_step(WeightedGraph(4), 0.0), std::invalid_argument);
}

TEST_CASE("adjacency places loops on the diagonal and edge weights off it") {
    CHECK(frobenius_distance(adjacency(single_loop_graph()),
                             ComplexMatrix::diagonal({cx{0.0}, cx{1.0}})) == 0.0);

    ComplexMatrix x(2);
    x(0, 1) = x(1, 0) = 1.0;
    CHECK(frobenius_distance(adjacency(single_edge_graph()), x) == 0.0);

    WeightedGraph swap(4);
    swap.add_edge(2, 3, 1.0);
    ComplexMatrix expected(4);
    expected(2, 3) = expected(3, 2) = 1.0;
    CHECK(frobenius_distance(adjacency(swap), expected) == 0.0);
}

TEST_CASE("walk_step applies the norm-scaled evolution") {
    // Loop phase: e^(-i 3pi/2) = i on |1>.
    const Statevector one = walk_step(single_loop_graph(), 3 * kPi / 2, Statevector::basis_state(1, 1));
    CHECK(std::abs(one.amplitudes()[1] - cx{0.0, 1.0}) < 1e-13);

    // Edge rotation: (|0> - i|1>)/sqrt(2).
    const Statevector rotated = walk_step(single_edge_graph(), kPi / 4, Statevector::basis_state(1, 0));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(rotated.amplitudes()[0] - cx{s, 0.0}) < 1e-13);
    CHECK(std::abs(rotated.amplitudes()[1] - cx{0.0, -s}) < 1e-13);
}

TEST_CASE("walk_step normalizes the two-qubit hypercube by its spectral norm") {
    WeightedGraph cube(4);
    cube.add_edge(0, 1, 1.0);
    cube.add_edge(0, 2, 1.0);
    cube.add_edge(1, 3, 1.0);
    cube.add_edge(2, 3, 1.0);
    const Statevector out = walk_step(cube, kPi, Statevector::basis_state(2, 0));

    // ||A|| = 2, so the effective evolution is e^(-i (pi/2)(X1 + X2)) = -X1X2.
    const ComplexMatrix oracle = series_exp_oracle(adjacency(cube), kPi / 2.0);
    for (std::size_t z = 0; z < 4; ++z)
        CHECK(std::abs(out.amplitudes()[z] - oracle(z, 0)) < 1e-11);
    CHECK(std::abs(out.amplitudes()[3] - cx{-1.0, 0.0}) < 1e-10);
}

TEST_CASE("walk_step preserves the norm and rejects empty graphs") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> weight(0.1, 3.0);
    std::uniform_real_distribution<double> time(0.1, 9.0);
    for (int trial = 0; trial < 10; ++trial) {
        WeightedGraph g(8);
        g.add_edge(0, 5, weight(rng));
        g.add_edge(1, 2, weight(rng));
        g.add_self_loop(7, weight(rng));
        const Statevector out = walk_step(g, time(rng), Statevector::plus_state(3));
        CHECK(std::abs(out.norm() - 1.0) < 1e-10);
    }
    CHECK_THROWS_WITH_AS(walk_step(WeightedGraph(2), 1.0, Statevector::basis_state(1, 0)),
                         doctest::Contains("zero adjacency"), std::invalid_argument);
}

TEST_CASE("walk_step is invariant under positive weight rescaling") {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> weight(0.2, 2.0);
    std::uniform_real_distribution<double> factor(0.01, 50.0);

    WeightedGraph base(4);
    base.add_edge(0, 1, weight(rng));
    base.add_edge(1, 3, weight(rng));
    base.add_self_loop(2, weight(rng));

    const Statevector in = Statevector::plus_state(2);
    const Statevector expected = walk_step(base, 2.1, in);
    for (int trial = 0; trial < 10; ++trial) {
        const double c = factor(rng);
        WeightedGraph scaled(4);
        for (const auto& [edge, w] : base.edges()) scaled.add_edge(edge.first, edge.second, c * w);
        for (const auto& [v, w] : base.self_loops()) scaled.add_self_loop(v, c * w);
        const Statevector out = walk_step(scaled, 2.1, in);
        for (std::size_t z = 0; z < 4; ++z)
            CHECK(std::abs(out.amplitudes()[z] - expected.amplitudes()[z]) < 1e-10);
    }
}

TEST_CASE("run_walk with no steps returns the initial state") {
    const Statevector plus = Statevector::plus_state(2);
    const WalkRun run = run_walk(DynamicGraph(4), plus);
    CHECK(run.after_step.empty());
    for (std::size_t z = 0; z < 4; ++z)
        CHECK(run.final_state.amplitudes()[z] == plus.amplitudes()[z]);
}

TEST_CASE("the H gadget walk creates the superposition from |0>") {
    const WalkRun run = run_walk(gadget_h(1, 1), Statevector::basis_state(1, 0));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(run.final_state.amplitudes()[0] - cx{s, 0.0}) < 1e-10);
    CHECK(std::abs(run.final_state.amplitudes()[1] - cx{s, 0.0}) < 1e-10);
}

TEST_CASE("the CX gadget walk flips the target for a set control") {
    const WalkRun run = run_walk(gadget_cx(1, 2, 2), Statevector::basis_state(2, 2));
    CHECK(std::abs(run.final_state.amplitudes()[3] - cx{1.0, 0.0}) < 1e-10);
    for (std::size_t z : {0u, 1u, 2u}) CHECK(std::abs(run.final_state.amplitudes()[z]) < 1e-10);
}

TEST_CASE("gadget_h lays out loops, hypercube edges, loops") {
    const DynamicGraph g1 = gadget_h(1, 1);
    REQUIRE(g1.steps().size() == 3);
    CHECK(g1.steps()[0].second == 3 * kPi / 2);
    CHECK(g1.steps()[1].second == kPi / 4);
    CHECK(g1.steps()[2].second == 3 * kPi / 2);
    CHECK(frobenius_distance(adjacency(g1.steps()[0].first),
                             ComplexMatrix::diagonal({cx{0.0}, cx{1.0}})) == 0.0);
    CHECK(g1.steps()[1].first.edges().count({0, 1}) == 1);

    const DynamicGraph g2 = gadget_h(1, 2);
    CHECK(g2.steps()[0].first.self_loops() == std::map<std::size_t, double>{{2, 1.0}, {3, 1.0}});
    const auto& edges = g2.steps()[1].first.edges();
    REQUIRE(edges.size() == 2);
    CHECK(edges.count({0, 2}) == 1);
    CHECK(edges.count({1, 3}) == 1);
}

TEST_CASE("gadget_t is a single loop graph for 7pi/4") {
    const DynamicGraph g = gadget_t(1, 1);
    REQUIRE(g.steps().size() == 1);
    CHECK(g.steps()[0].second == 7 * kPi / 4);
    CHECK(g.steps()[0].first.self_loops() == std::map<std::size_t, double>{{1, 1.0}});

    ComplexMatrix expected(2);
    expected(0, 0) = 1.0;
    expected(1, 1) = std::polar(1.0, kPi / 4);
    CHECK(frobenius_distance(walk_unitary(g), expected) < 1e-12);

    const DynamicGraph lifted = gadget_t(2, 2);
    CHECK(lifted.steps()[0].first.self_loops() ==
          std::map<std::size_t, double>{{1, 1.0}, {3, 1.0}});
}

TEST_CASE("gadget_cx pairs control-set vertices across the target bit") {
    const DynamicGraph g = gadget_cx(1, 2, 2);
    REQUIRE(g.steps().size() == 2);
    CHECK(g.steps()[0].second == kPi / 2);
    CHECK(g.steps()[1].second == 3 * kPi / 2);
    CHECK(g.steps()[0].first.edges().count({2, 3}) == 1);
    CHECK(g.steps()[1].first.self_loops() ==
          std::map<std::size_t, double>{{2, 1.0}, {3, 1.0}});

    const DynamicGraph swapped = gadget_cx(2, 1, 2);
    CHECK(swapped.steps()[0].first.edges().count({1, 3}) == 1);
    CHECK(swapped.steps()[1].first.self_loops() ==
          std::map<std::size_t, double>{{1, 1.0}, {3, 1.0}});

    CHECK_THROWS_AS(gadget_cx(1, 1, 2), std::invalid_argument);
}

TEST_CASE("every gadget matches its reference gate on up to three qubits") {
    for (int n = 1; n <= 3; ++n) {
        for (int q = 1; q <= n; ++q) {
            const ComplexMatrix h_ref = reference_gate_unitary(GateCircuit(n, {Gate::h(q)}));
            CHECK(phase_aligned_distance(walk_unitary_by_columns(gadget_h(q, n), n), h_ref) <
                  1e-10);
            const ComplexMatrix t_ref = reference_gate_unitary(GateCircuit(n, {Gate::t(q)}));
            CHECK(phase_aligned_distance(walk_unitary_by_columns(gadget_t(q, n), n), t_ref) <
                  1e-10);
        }
        for (int c = 1; c <= n; ++c) {
            for (int t = 1; t <= n; ++t) {
                if (c == t) continue;
                const ComplexMatrix ref = reference_gate_unitary(GateCircuit(n, {Gate::cx(c, t)}));
                // The CX gadget needs no global phase at all.
                CHECK(frobenius_distance(walk_unitary_by_columns(gadget_cx(c, t, n), n), ref) <
                      1e-10);
            }
        }
    }
}

TEST_CASE("walk_unitary agrees with column-by-column simulation") {
    const DynamicGraph g = gadget_h(2, 2);
    CHECK(frobenius_distance(walk_unitary(g), walk_unitary_by_columns(g, 2)) < 1e-11);
}
