// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maqw/cli.hpp"
#include "maqw/linalg.hpp"
#include "maqw/operators.hpp"
#include "maqw/serialize.hpp"
#include "maqw/transpile.hpp"
#include "maqw/verify.hpp"
#include "oracles.hpp"

using namespace maqw;

namespace {

constexpr double kPi = std::numbers::pi;

const std::string kFixtures = MAQW_FIXTURES_DIR;

struct Check {
    std::vector<std::string> failures;
    double worst = 0.0;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void expect_leq(double value, double bound, const std::string& what) {
        worst = std::max(worst, value);
        if (!(value <= bound)) {
            std::ostringstream msg;
            msg << what << " = " << value << " exceeds " << bound;
            failures.push_back(msg.str());
        }
    }
};

GateCircuit example_circuit() { return GateCircuit(2, {Gate::h(1), Gate::t(2), Gate::cx(1, 2)}); }

std::vector<Gate> gate_choices(int n) {
    std::vector<Gate> choices;
    for (int q = 1; q <= n; ++q) {
        choices.push_back(Gate::h(q));
        choices.push_back(Gate::t(q));
        for (int t = 1; t <= n; ++t)
            if (t != q) choices.push_back(Gate::cx(q, t));
    }
    return choices;
}

ComplexMatrix walk_unitary_by_columns(const DynamicGraph& walk, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    ComplexMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const auto state = run_walk(walk, Statevector::basis_state(num_qubits, col)).final_state;
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = state.amplitudes()[row];
    }
    return u;
}

// 1. Table reproduction: the example circuit transpiles, in table mode, to
//    exactly the known eight half-layer angle vectors. Exact match, < 1 s.
void criterion_table(Check& check) {
    static const std::string kExpected =
        "U        Angle vector\n"
        "U(γ1,C)  (π, π, π/2, π/2)\n"
        "U(β1,B)  (0, π/4, π/4, 0)\n"
        "U(γ2,C)  (π, π, π/2, π/2)\n"
        "U(β2,B)  (0, 0, 0, 0)\n"
        "U(γ3,C)  (0, 7π/4, 0, 7π/4)\n"
        "U(β3,B)  (0, 0, 0, 3π/2)\n"
        "U(γ4,C)  (0, 0, π/2, π/2)\n"
        "U(β4,B)  (0, 0, 0, 0)\n";
    std::ostringstream out, err;
    const int code =
        run_cli({"transpile", kFixtures + "/example_circuit.txt", "--format", "table"}, out, err);
    check.expect(code == 0, "transpile exited with " + std::to_string(code));
    check.expect(out.str() == kExpected, "table output does not match the expected angles");
}

// 2. Universal-set correctness: single gates on up to three qubits, all
//    placements, via both the transpiler and the walk gadgets. <= 1e-10, < 5 s.
void criterion_universal_set(Check& check) {
    for (int n = 1; n <= 3; ++n) {
        for (const Gate& gate : gate_choices(n)) {
            const GateCircuit circuit(n, {gate});
            const ComplexMatrix reference = reference_gate_unitary(circuit);

            std::ostringstream label;
            label << "gate kind " << static_cast<int>(gate.kind) << " q" << gate.q1 << " q"
                  << gate.q2 << " n=" << n;
            check.expect_leq(
                phase_aligned_distance(schedule_unitary(transpile(circuit)), reference), 1e-10,
                "schedule distance for " + label.str());

            DynamicGraph gadget(std::size_t{1} << n);
            switch (gate.kind) {
                case GateKind::H: gadget = gadget_h(gate.q1, n); break;
                case GateKind::T: gadget = gadget_t(gate.q1, n); break;
                case GateKind::CX: gadget = gadget_cx(gate.q1, gate.q2, n); break;
            }
            check.expect_leq(
                phase_aligned_distance(walk_unitary_by_columns(gadget, n), reference), 1e-10,
                "gadget distance for " + label.str());
        }
    }
}

// 3. Worked-example end to end: schedule unitary vs CX(1->2) (I x T) (H x I),
//    the printed intermediate state, and the printed final state under the
//    alternate control-qubit reading.
void criterion_example_end_to_end(Check& check) {
    const Schedule schedule = transpile(example_circuit());
    check.expect_leq(phase_aligned_distance(schedule_unitary(schedule),
                                            reference_gate_unitary(example_circuit())),
                     1e-10, "schedule unitary distance");

    const ScheduleRun run = run_schedule(schedule, Statevector::plus_state(2));
    const double s = 1.0 / std::sqrt(2.0);
    const auto& mid = run.after_half_layer[2].amplitudes();  // gamma1, beta1, gamma2
    double mid_err = std::abs(mid[0] - cx{s, 0.0});
    mid_err = std::max(mid_err, std::abs(mid[1] - cx{s, 0.0}));
    mid_err = std::max(mid_err, std::abs(mid[2]));
    mid_err = std::max(mid_err, std::abs(mid[3]));
    check.expect_leq(mid_err, 1e-10, "state after 1.5 layers vs 1/sqrt2 (|00> + |01>)");

    // The handwritten trace final state has its phase on |11>, which corresponds to
    // reading the CX control on the second qubit; checked under that reading.
    const Schedule alternate =
        transpile(GateCircuit(2, {Gate::h(1), Gate::t(2), Gate::cx(2, 1)}));
    const auto fin = run_schedule(alternate, Statevector::plus_state(2)).final_state.amplitudes();
    double fin_err = std::abs(fin[0] - cx{s, 0.0});
    fin_err = std::max(fin_err, std::abs(fin[1]));
    fin_err = std::max(fin_err, std::abs(fin[2]));
    fin_err = std::max(fin_err, std::abs(fin[3] - s * std::polar(1.0, kPi / 4)));
    check.expect_leq(fin_err, 1e-10,
                     "alternate-reading final state vs 1/sqrt2 (|00> + e^{i pi/4}|11>)");
}

// 4. Restriction equivalence: schedule -> walk -> schedule round trips for 50
//    random schedules and the example schedule; non-restricted walks rejected.
void criterion_restriction(Check& check) {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 3;
        const Schedule s = maqw::testing::random_schedule(rng, n, 1 + trial % 3);
        const Schedule back = dynamic_graph_to_schedule(schedule_to_dynamic_graph(s));
        check.expect_leq(phase_aligned_distance(schedule_unitary(s), schedule_unitary(back)),
                         1e-10, "round trip " + std::to_string(trial));
    }

    const Schedule table = transpile(example_circuit());
    const Schedule back = dynamic_graph_to_schedule(schedule_to_dynamic_graph(table));
    check.expect_leq(phase_aligned_distance(schedule_unitary(table), schedule_unitary(back)),
                     1e-10, "example schedule round trip");

    DynamicGraph outside(4);
    WeightedGraph bad(4);
    bad.add_edge(0, 3, 1.0);
    outside.add_step(bad, 1.0);
    bool rejected = false;
    try {
        dynamic_graph_to_schedule(outside);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    check.expect(rejected, "edge (0,3) walk was not rejected");
}

// 5. Exhaustive universality: every circuit of length <= 4 over {H, T, CX} on
//    n <= 3 verifies within 1e-9 and respects the depth bound. < 60 s.
void criterion_exhaustive(Check& check) {
    std::size_t circuits = 0;
    for (int n = 1; n <= 3; ++n) {
        const std::vector<Gate> choices = gate_choices(n);
        std::vector<Gate> gates;
        std::function<void(int)> extend = [&](int remaining) {
            if (!gates.empty()) {
                ++circuits;
                const GateCircuit circuit(n, gates);
                const double distance = phase_aligned_distance(
                    schedule_unitary(transpile(circuit)), reference_gate_unitary(circuit));
                if (!(distance <= 1e-9)) {
                    std::ostringstream msg;
                    msg << "circuit #" << circuits << " (n=" << n << ", len=" << gates.size()
                        << ")";
                    check.expect_leq(distance, 1e-9, msg.str());
                }
                check.worst = std::max(check.worst, distance);
                try {
                    const LayerCount count = layer_count(circuit);
                    if (count.merged_pairs > count.bound)
                        check.expect(false, "depth bound exceeded");
                } catch (const std::logic_error& e) {
                    check.expect(false, e.what());
                }
            }
            if (remaining == 0) return;
            for (const Gate& gate : choices) {
                gates.push_back(gate);
                extend(remaining - 1);
                gates.pop_back();
            }
        };
        extend(4);
    }
    check.expect(circuits >= 500, "only " + std::to_string(circuits) + " circuits enumerated");
    std::printf("          (enumerated %zu circuits, worst distance %.3g)\n", circuits,
                check.worst);
}

// 6. The two operator identities, exhaustively for n <= 4, within 1e-12.
void criterion_operator_identities(Check& check) {
    for (int n = 1; n <= 4; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::size_t z = 0; z < dim; ++z) {
            ComplexMatrix sum(dim);
            for (const auto& term : c_term_z_expansion(n, z)) sum += pauli_matrix(term);
            check.expect_leq(frobenius_distance(sum, projector_c_term(n, z)), 1e-12,
                             "projector expansion n=" + std::to_string(n) +
                                 " z=" + std::to_string(z));
        }
    }

    for (int n = 2; n <= 4; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (int flip = 1; flip <= n; ++flip) {
            for (int control = 1; control <= n; ++control) {
                if (flip == control) continue;
                const ComplexMatrix op = controlled_edge_operator(flip, control, n);
                std::size_t nonzero = 0;
                double defect = 0.0;
                for (std::size_t r = 0; r < dim; ++r) {
                    for (std::size_t c = 0; c < dim; ++c) {
                        const double magnitude = std::abs(op(r, c));
                        if (magnitude <= 1e-12) {
                            defect = std::max(defect, magnitude);
                            continue;
                        }
                        ++nonzero;
                        defect = std::max(defect, std::abs(op(r, c) - cx{1.0, 0.0}));
                        const bool valid = r != c && ((r ^ c) == qubit_mask(flip, n)) &&
                                           qubit_bit(r, control, n) == 1 &&
                                           qubit_bit(c, control, n) == 1;
                        if (!valid) {
                            std::ostringstream msg;
                            msg << "unexpected entry at (" << r << "," << c << ") flip=" << flip
                                << " control=" << control << " n=" << n;
                            check.expect(false, msg.str());
                        }
                    }
                }
                check.expect(nonzero == (std::size_t{1} << (n - 2)) * 2,
                             "wrong support size for flip=" + std::to_string(flip) +
                                 " control=" + std::to_string(control));
                check.expect_leq(defect, 1e-12, "entry defect");
            }
        }
    }
}

// 7. Oracle independence: the two exponential implementations agree within
//    1e-11 on 100 random Hermitians and on every operator the other criteria
//    exercise, at their actual propagation times.
void criterion_oracle_independence(Check& check) {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> time(-5.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = std::size_t{1} << (1 + trial % 3);
        const ComplexMatrix h = maqw::testing::random_hermitian(rng, dim);
        const double t = time(rng);
        check.expect_leq(frobenius_distance(herm_exp(h, t), series_exp_oracle(h, t)), 1e-11,
                         "random Hermitian #" + std::to_string(trial));
    }

    std::vector<std::pair<ComplexMatrix, double>> operators;
    for (int n = 1; n <= 3; ++n) {
        for (const Gate& gate : gate_choices(n)) {
            DynamicGraph gadget(std::size_t{1} << n);
            switch (gate.kind) {
                case GateKind::H: gadget = gadget_h(gate.q1, n); break;
                case GateKind::T: gadget = gadget_t(gate.q1, n); break;
                case GateKind::CX: gadget = gadget_cx(gate.q1, gate.q2, n); break;
            }
            for (const auto& [graph, t] : gadget.steps()) {
                const ComplexMatrix a = adjacency(graph);
                operators.emplace_back(a, t / spectral_norm(a));
            }
            const GateCircuit circuit(n, {gate});
            const Schedule schedule = transpile(circuit);
            for (const auto& [gamma, beta] : schedule.layers()) {
                operators.emplace_back(
                    ComplexMatrix::diagonal([&gamma] {
                        std::vector<cx> diag;
                        for (double a : gamma.angles()) diag.emplace_back(a, 0.0);
                        return diag;
                    }()),
                    1.0);
                operators.emplace_back(beta_hamiltonian(beta), 1.0);
            }
        }
        for (const auto& term : b_operator_summands(n))
            operators.emplace_back(pauli_matrix(term.pauli), kPi / 3);
        std::set<int> directions;
        for (int q = 1; q <= n; ++q) {
            directions.insert(q);
            operators.emplace_back(hypercube_adjacency(directions, n), kPi / 4);
        }
    }
    for (std::size_t z = 0; z < 4; ++z) operators.emplace_back(projector_c_term(2, z), 7 * kPi / 4);
    operators.emplace_back(maxcut_c({{1, 2}}, 2), 1.0);
    operators.emplace_back(maxcut_c({{1, 2}, {2, 3}, {1, 3}}, 3), 1.0);

    std::size_t index = 0;
    for (const auto& [h, t] : operators) {
        ++index;
        check.expect_leq(frobenius_distance(herm_exp(h, t), series_exp_oracle(h, t)), 1e-11,
                         "suite operator #" + std::to_string(index));
    }
    std::printf("          (checked %zu suite operators)\n", operators.size());
}

struct Criterion {
    std::string name;
    double time_budget_seconds;
    std::function<void(Check&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"worked-example angle table reproduction (bitwise table mode)", 1.0, criterion_table},
        {"universal-set correctness (transpiler and gadgets, n <= 3)", 5.0,
         criterion_universal_set},
        {"worked example end-to-end", 60.0, criterion_example_end_to_end},
        {"restriction equivalence round trips", 60.0, criterion_restriction},
        {"exhaustive universality, circuits of length <= 4", 60.0, criterion_exhaustive},
        {"projector and controlled-edge operator identities (n <= 4)", 60.0,
         criterion_operator_identities},
        {"oracle independence of the two exponentials", 60.0, criterion_oracle_independence},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criteria[i].time_budget_seconds) {
            std::ostringstream msg;
            msg << "runtime " << elapsed << " s exceeds budget " << criteria[i].time_budget_seconds
                << " s";
            check.failures.push_back(msg.str());
        }

        if (check.failures.empty()) {
            std::printf("[PASS] %zu. %s (%.2f s)\n", i + 1, criteria[i].name.c_str(), elapsed);
        } else {
            ++failures;
            std::printf("[FAIL] %zu. %s (%.2f s)\n", i + 1, criteria[i].name.c_str(), elapsed);
            for (const auto& failure : check.failures)
                std::printf("       - %s\n", failure.c_str());
        }
    }
    return failures;
}
