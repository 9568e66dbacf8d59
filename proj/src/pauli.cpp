#include "maqw/pauli.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace maqw {

namespace {

ComplexMatrix single_qubit(char letter) {
    ComplexMatrix m(2);
    switch (letter) {
        case 'I':
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 'X':
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 'Y':
            m(0, 1) = cx{0.0, -1.0};
            m(1, 0) = cx{0.0, 1.0};
            break;
        case 'Z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default: {
            std::ostringstream msg;
            msg << "invalid Pauli letter '" << letter << "'";
            throw std::invalid_argument(msg.str());
        }
    }
    return m;
}

void check(const PauliString& p) {
    check_qubit_count(p.num_qubits);
    if (p.letters.size() != static_cast<std::size_t>(p.num_qubits))
        throw std::invalid_argument("Pauli string length does not match qubit count");
    for (char letter : p.letters) single_qubit(letter);
}

}  // namespace

std::string PauliString::label() const {
    std::ostringstream out;
    out << coefficient << "*" << letters;
    return out.str();
}

PauliString make_pauli(std::string letters, double coefficient) {
    PauliString p{static_cast<int>(letters.size()), std::move(letters), coefficient};
    check(p);
    return p;
}

ComplexMatrix pauli_matrix(const PauliString& p) {
    check(p);
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (char letter : p.letters) m = kron(m, single_qubit(letter));
    m *= cx{p.coefficient, 0.0};
    return m;
}

ComplexMatrix pauli_exp(const PauliString& p, double theta) {
    check(p);
    PauliString unit = p;
    unit.coefficient = 1.0;
    const double angle = theta * p.coefficient;
    ComplexMatrix result = cx{std::cos(angle), 0.0} * ComplexMatrix::identity(
                               std::size_t{1} << p.num_qubits);
    result += cx{0.0, -std::sin(angle)} * pauli_matrix(unit);
    return result;
}

}  // namespace maqw
