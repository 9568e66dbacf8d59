#pragma once

#include <map>
#include <utility>
#include <vector>

#include "maqw/matrix.hpp"
#include "maqw/pauli.hpp"
#include "maqw/tolerances.hpp"

namespace maqw {

/// Reduce an angle into [0, 2*pi). Values already in range pass through
/// unchanged, so printed table angles stay verbatim.
double normalize_angle(double radians);

/// Diagonal cost half-layer: entry z is the angle multiplying |z><z|.
class GammaLayer {
  public:
    GammaLayer(int num_qubits, std::vector<double> angles);
    static GammaLayer zero(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<double>& angles() const { return angles_; }
    bool is_zero() const;

  private:
    int num_qubits_;
    std::vector<double> angles_;
};

/// Mixer half-layer: angles keyed by hypercube edge (u, w) with u < w and
/// endpoints differing in exactly one bit.
class BetaLayer {
  public:
    using Edge = std::pair<std::size_t, std::size_t>;
    using EdgeAngles = std::map<Edge, double>;

    BetaLayer(int num_qubits, const EdgeAngles& edge_angles);
    static BetaLayer zero(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const EdgeAngles& edge_angles() const { return edge_angles_; }
    bool is_zero() const;

  private:
    int num_qubits_;
    EdgeAngles edge_angles_;
};

/// All hypercube edges of the register in lexicographic (u, w) order, paired
/// with the layer's angle (0 where absent). This is the table/CSV column
/// order for beta rows.
std::vector<std::pair<BetaLayer::Edge, double>> full_edge_angle_vector(const BetaLayer& layer);

/// Ordered (gamma, beta) pairs, gamma applied first within each pair.
class Schedule {
  public:
    using Layer = std::pair<GammaLayer, BetaLayer>;

    Schedule(int num_qubits, std::vector<Layer> layers);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Layer>& layers() const { return layers_; }

  private:
    int num_qubits_;
    std::vector<Layer> layers_;
};

/// Diagonal unitary with entries e^(-i gamma_z).
ComplexMatrix gamma_unitary(const GammaLayer& layer);

/// The layer's weighted adjacency matrix W = sum_e angle_e (|u><w| + |w><u|).
ComplexMatrix beta_hamiltonian(const BetaLayer& layer);

/// e^(-i W): the sum-form mixer semantics shared with the walk engine.
ComplexMatrix beta_unitary(const BetaLayer& layer, const Tolerances& tol = default_tolerances());

/// Ordered product of per-edge closed-form exponentials; equals beta_unitary
/// whenever the layer's edges commute (in particular when pairwise disjoint).
ComplexMatrix beta_unitary_product(const BetaLayer& layer);

/// Frobenius gap between the sum-form and product-form evaluations; callers
/// may warn when it exceeds Tolerances::beta_form_warning.
double beta_form_gap(const BetaLayer& layer);

/// Convert per-summand angles on B's summands into the per-edge
/// parametrization by reading the weighted sum off entrywise. Keys must come
/// from b_operator_summands for the same register.
BetaLayer summand_to_edge_angles(const std::vector<std::pair<PauliString, double>>& per_summand,
                                 int num_qubits);

struct ScheduleRun {
    Statevector final_state;
    std::vector<Statevector> after_half_layer;  // gamma_1, beta_1, gamma_2, ...
};

ScheduleRun run_schedule(const Schedule& schedule, const Statevector& initial);

/// Product of all layer unitaries in application order.
ComplexMatrix schedule_unitary(const Schedule& schedule);

/// Optimization pass: folds any layer whose beta half is all-zero into the
/// next layer's gamma by angle addition mod 2*pi. Exact for diagonal layers,
/// so the schedule unitary never changes.
Schedule merge_gamma_layers(const Schedule& schedule);

}  // namespace maqw
