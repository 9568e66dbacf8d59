#pragma once

#include <set>
#include <utility>
#include <vector>

#include "maqw/matrix.hpp"
#include "maqw/pauli.hpp"

namespace maqw {

/// |z><z| as a dense diagonal matrix.
ComplexMatrix projector_c_term(int num_qubits, std::size_t z);

/// Expansion of |z><z| = prod_i ((-1)^{z_i} Z_i + I_i)/2 into 2^n weighted
/// I/Z strings whose matrix sum reproduces the projector.
std::vector<PauliString> c_term_z_expansion(int num_qubits, std::size_t z);

/// MaxCut cost operator (1/2) sum_{ij in E} (-Z_i Z_j + I): diagonal entry z
/// is the cut value of bitstring z. Edges are 1-based qubit pairs; self-pairs
/// and duplicate edges are rejected.
ComplexMatrix maxcut_c(const std::vector<std::pair<int, int>>& edges, int num_qubits);

/// (X_flip - X_flip Z_control)/2: ones exactly at the basis pairs that agree
/// everywhere except bit `flip` and have bit `control` set.
ComplexMatrix controlled_edge_operator(int flip, int control, int num_qubits);

/// One summand of B = (1/2)(sum_v X_v - sum_v sum_{j != v} X_v Z_j).
/// phase_qubit is 0 for the plain X_v terms.
struct BOperatorTerm {
    PauliString pauli;
    int flip_qubit = 0;
    int phase_qubit = 0;
};

/// The n + n(n-1) summands of B, X_v terms first, each carrying its 1/2
/// (X_v Z_j terms: -1/2) coefficient.
std::vector<BOperatorTerm> b_operator_summands(int num_qubits);

/// sum_{k in directions} X_k: the adjacency matrix of the |directions|-dim
/// hypercube lifted to 2^n vertices.
ComplexMatrix hypercube_adjacency(const std::set<int>& directions, int num_qubits);

}  // namespace maqw
