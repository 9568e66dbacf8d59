#include "maqw/verify.hpp"

#include <cmath>
#include <numbers>

#include "maqw/linalg.hpp"

namespace maqw {

namespace {

ComplexMatrix lift_single_qubit(const ComplexMatrix& gate, int qubit, int num_qubits) {
    ComplexMatrix lifted = ComplexMatrix::identity(std::size_t{1} << (qubit - 1));
    lifted = kron(lifted, gate);
    return kron(lifted, ComplexMatrix::identity(std::size_t{1} << (num_qubits - qubit)));
}

ComplexMatrix h_matrix() {
    ComplexMatrix m(2);
    const double s = 1.0 / std::sqrt(2.0);
    m(0, 0) = s;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = -s;
    return m;
}

ComplexMatrix t_matrix() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
    return m;
}

ComplexMatrix cx_matrix(int control, int target, int num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t target_mask = qubit_mask(target, num_qubits);
    ComplexMatrix m(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        const std::size_t mapped = qubit_bit(z, control, num_qubits) ? (z ^ target_mask) : z;
        m(mapped, z) = 1.0;
    }
    return m;
}

}  // namespace

ComplexMatrix reference_gate_unitary(const GateCircuit& circuit) {
    const int n = circuit.num_qubits();
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << n);
    for (const auto& gate : circuit.gates()) {
        switch (gate.kind) {
            case GateKind::H:
                u = lift_single_qubit(h_matrix(), gate.q1, n) * u;
                break;
            case GateKind::T:
                u = lift_single_qubit(t_matrix(), gate.q1, n) * u;
                break;
            case GateKind::CX:
                u = cx_matrix(gate.q1, gate.q2, n) * u;
                break;
        }
    }
    return u;
}

ComplexMatrix series_exp_oracle(const ComplexMatrix& hermitian, double time) {
    require_hermitian(hermitian, default_tolerances().hermitian_symmetry);
    const std::size_t d = hermitian.dim();

    // Slice so ||H||_F |dt| <= 1/4, sum the raw series per slice, then chain
    // the slices by plain multiplication.
    const double magnitude = hermitian.frobenius_norm() * std::abs(time);
    const int slices = std::max(1, static_cast<int>(std::ceil(4.0 * magnitude)));
    const ComplexMatrix arg = cx{0.0, -time / slices} * hermitian;

    ComplexMatrix slice = ComplexMatrix::identity(d);
    ComplexMatrix term = ComplexMatrix::identity(d);
    for (int k = 1; k <= 48; ++k) {
        term = term * arg;
        term *= cx{1.0 / k, 0.0};
        slice += term;
        if (term.frobenius_norm() <= 1e-18 * slice.frobenius_norm()) break;
    }

    ComplexMatrix result = ComplexMatrix::identity(d);
    for (int i = 0; i < slices; ++i) result = slice * result;
    return result;
}

EquivalenceReport check_equivalence(const ComplexMatrix& u, const ComplexMatrix& v,
                                    double tolerance, bool allow_global_phase) {
    if (u.dim() != v.dim())
        throw std::invalid_argument("check_equivalence: dimension mismatch");

    EquivalenceReport report;
    report.tolerance = tolerance;
    report.phase = allow_global_phase ? aligning_phase(u, v) : 0.0;

    const cx rot = std::polar(1.0, report.phase);
    double sum = 0.0;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < u.dim(); ++c) {
            const double entry = std::abs(u(r, c) - rot * v(r, c));
            sum += entry * entry;
            if (entry > report.worst_abs) {
                report.worst_abs = entry;
                report.worst_row = r;
                report.worst_col = c;
            }
        }
    }
    report.distance = std::sqrt(sum);
    report.pass = report.distance <= tolerance;
    return report;
}

}  // namespace maqw
