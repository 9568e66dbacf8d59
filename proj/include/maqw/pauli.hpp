#pragma once

#include <string>

#include "maqw/matrix.hpp"

namespace maqw {

/// Weighted tensor product of single-qubit Paulis. letters is a length-n
/// string over {I, X, Y, Z}; qubit 1 is the leftmost factor. With unit
/// coefficient the dense matrix squares to the identity.
struct PauliString {
    int num_qubits = 0;
    std::string letters;
    double coefficient = 1.0;

    std::string label() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

PauliString make_pauli(std::string letters, double coefficient = 1.0);

ComplexMatrix pauli_matrix(const PauliString& p);

/// e^(-i theta P) = cos(c theta) I - i sin(c theta) P0, where c is the
/// coefficient and P0 the unit-coefficient string. Agrees with
/// herm_exp(pauli_matrix(p), theta).
ComplexMatrix pauli_exp(const PauliString& p, double theta);

}  // namespace maqw
