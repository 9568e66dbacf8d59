#include "maqw/operators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace maqw {

namespace {

std::size_t check_basis_index(int num_qubits, std::size_t z) {
    check_qubit_count(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (z >= dim) {
        std::ostringstream msg;
        msg << "basis index " << z << " out of range [0, " << dim << ")";
        throw std::invalid_argument(msg.str());
    }
    return z;
}

}  // namespace

ComplexMatrix projector_c_term(int num_qubits, std::size_t z) {
    check_basis_index(num_qubits, z);
    ComplexMatrix m(std::size_t{1} << num_qubits);
    m(z, z) = 1.0;
    return m;
}

std::vector<PauliString> c_term_z_expansion(int num_qubits, std::size_t z) {
    check_basis_index(num_qubits, z);
    const std::size_t count = std::size_t{1} << num_qubits;
    const double weight = 1.0 / static_cast<double>(count);

    std::vector<PauliString> terms;
    terms.reserve(count);
    for (std::size_t subset = 0; subset < count; ++subset) {
        std::string letters(num_qubits, 'I');
        int sign_bits = 0;
        for (int q = 1; q <= num_qubits; ++q) {
            if (subset & (std::size_t{1} << (q - 1))) {
                letters[q - 1] = 'Z';
                sign_bits += qubit_bit(z, q, num_qubits);
            }
        }
        const double sign = (sign_bits % 2 == 0) ? 1.0 : -1.0;
        terms.push_back(make_pauli(std::move(letters), sign * weight));
    }
    return terms;
}

ComplexMatrix maxcut_c(const std::vector<std::pair<int, int>>& edges, int num_qubits) {
    check_qubit_count(num_qubits);
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j] : edges) {
        qubit_mask(i, num_qubits);
        qubit_mask(j, num_qubits);
        if (i == j) {
            std::ostringstream msg;
            msg << "self-pair (" << i << ", " << j << ") is not a valid edge";
            throw std::invalid_argument(msg.str());
        }
        const auto key = std::minmax(i, j);
        if (!seen.insert(key).second) {
            std::ostringstream msg;
            msg << "duplicate edge (" << key.first << ", " << key.second << ")";
            throw std::invalid_argument(msg.str());
        }
    }

    const std::size_t dim = std::size_t{1} << num_qubits;
    ComplexMatrix m(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        int cut = 0;
        for (const auto& [i, j] : edges)
            if (qubit_bit(z, i, num_qubits) != qubit_bit(z, j, num_qubits)) ++cut;
        m(z, z) = static_cast<double>(cut);
    }
    return m;
}

ComplexMatrix controlled_edge_operator(int flip, int control, int num_qubits) {
    qubit_mask(flip, num_qubits);
    qubit_mask(control, num_qubits);
    if (flip == control) throw std::invalid_argument("flip qubit equals control qubit");

    std::string x_letters(num_qubits, 'I');
    x_letters[flip - 1] = 'X';
    std::string xz_letters = x_letters;
    xz_letters[control - 1] = 'Z';

    ComplexMatrix m = pauli_matrix(make_pauli(x_letters, 0.5));
    m += pauli_matrix(make_pauli(xz_letters, -0.5));
    return m;
}

std::vector<BOperatorTerm> b_operator_summands(int num_qubits) {
    check_qubit_count(num_qubits);
    std::vector<BOperatorTerm> terms;
    terms.reserve(static_cast<std::size_t>(num_qubits) * num_qubits);
    for (int v = 1; v <= num_qubits; ++v) {
        std::string letters(num_qubits, 'I');
        letters[v - 1] = 'X';
        terms.push_back({make_pauli(letters, 0.5), v, 0});
    }
    for (int v = 1; v <= num_qubits; ++v) {
        for (int j = 1; j <= num_qubits; ++j) {
            if (j == v) continue;
            std::string letters(num_qubits, 'I');
            letters[v - 1] = 'X';
            letters[j - 1] = 'Z';
            terms.push_back({make_pauli(letters, -0.5), v, j});
        }
    }
    return terms;
}

ComplexMatrix hypercube_adjacency(const std::set<int>& directions, int num_qubits) {
    check_qubit_count(num_qubits);
    if (directions.empty()) throw std::invalid_argument("empty direction set");
    ComplexMatrix m(std::size_t{1} << num_qubits);
    for (int k : directions) {
        std::string letters(num_qubits, 'I');
        qubit_mask(k, num_qubits);
        letters[k - 1] = 'X';
        m += pauli_matrix(make_pauli(letters));
    }
    return m;
}

}  // namespace maqw
