#pragma once

#include "maqw/matrix.hpp"
#include "maqw/transpile.hpp"

namespace maqw {

struct EquivalenceReport {
    double distance = 0.0;
    double phase = 0.0;  // aligning phi (0 when global phase is not allowed)
    double tolerance = 0.0;
    bool pass = false;
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
    double worst_abs = 0.0;  // |U - e^{i phi} V| at the worst entry
};

/// Exact circuit unitary from constant gate matrices lifted by identity
/// tensoring. No exponentials anywhere, so it is independent of herm_exp.
ComplexMatrix reference_gate_unitary(const GateCircuit& circuit);

/// Second, structurally different implementation of e^(-i H t): raw Taylor
/// sums on time slices with ||H||_F * dt <= 1/4, composed by plain
/// multiplication (no squaring). Used to cross-check herm_exp.
ComplexMatrix series_exp_oracle(const ComplexMatrix& hermitian, double time);

EquivalenceReport check_equivalence(const ComplexMatrix& u, const ComplexMatrix& v,
                                    double tolerance, bool allow_global_phase);

}  // namespace maqw
