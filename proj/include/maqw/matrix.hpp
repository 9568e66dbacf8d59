#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace maqw {

using cx = std::complex<double>;

/// Dense matrices are the honest scope of these constructions; registers are
/// capped so the largest matrix is 4096 x 4096.
inline constexpr int kMaxQubits = 12;

bool is_power_of_two(std::size_t value);

/// Validates a register size in [1, kMaxQubits] and returns it.
int check_qubit_count(int num_qubits);

/// Dense square complex matrix over the 2^n computational basis, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    /// Zero matrix; dim must be a power of two, at most 2^kMaxQubits.
    explicit ComplexMatrix(std::size_t dim);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<cx>& entries);

    std::size_t dim() const { return dim_; }
    cx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const cx& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cx scale);

    ComplexMatrix dagger() const;
    cx trace() const;
    double frobenius_norm() const;
    double max_abs_entry() const;
    /// True when every off-diagonal entry is exactly zero.
    bool is_diagonal() const;

  private:
    std::size_t dim_ = 0;
    std::vector<cx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cx scale, ComplexMatrix rhs);

std::vector<cx> mat_vec(const ComplexMatrix& m, const std::vector<cx>& v);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double hermiticity_defect(const ComplexMatrix& m);
double unitarity_defect(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throw std::invalid_argument naming the worst entry pair when the matrix is
/// not Hermitian (resp. unitary) within tolerance.
void require_hermitian(const ComplexMatrix& m, double tolerance);
void require_unitary(const ComplexMatrix& m, double tolerance);

// Basis-index convention: qubit 1 is the most significant bit, so basis state
// |q1 q2 ... qn> has index sum_i q_i 2^(n-i). Qubit arguments are 1-based.
std::size_t qubit_mask(int qubit, int num_qubits);
int qubit_bit(std::size_t basis_index, int qubit, int num_qubits);

/// Normalized n-qubit state.
class Statevector {
  public:
    Statevector(int num_qubits, std::vector<cx> amplitudes);
    static Statevector plus_state(int num_qubits);
    static Statevector basis_state(int num_qubits, std::size_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cx>& amplitudes() const { return amps_; }
    double norm() const;

  private:
    int num_qubits_ = 0;
    std::vector<cx> amps_;
};

}  // namespace maqw
