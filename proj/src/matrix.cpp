#include "maqw/matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace maqw {

bool is_power_of_two(std::size_t value) {
    return value != 0 && (value & (value - 1)) == 0;
}

int check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        std::ostringstream msg;
        msg << "register size " << num_qubits << " outside [1, " << kMaxQubits << "]";
        throw std::invalid_argument(msg.str());
    }
    return num_qubits;
}

namespace {

std::size_t check_dim(std::size_t dim) {
    if (!is_power_of_two(dim) || dim > (std::size_t{1} << kMaxQubits)) {
        std::ostringstream msg;
        msg << "matrix dimension " << dim << " is not a power of two within 2^" << kMaxQubits;
        throw std::invalid_argument(msg.str());
    }
    return dim;
}

void check_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        std::ostringstream msg;
        msg << "dimension mismatch: " << a << " vs " << b;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(check_dim(dim)), data_(dim * dim) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cx>& entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    check_same_dim(dim_, rhs.dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    check_same_dim(dim_, rhs.dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cx scale) {
    for (auto& v : data_) v *= scale;
    return *this;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

cx ComplexMatrix::trace() const {
    cx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& v : data_) sum += std::norm(v);
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs_entry() const {
    double best = 0.0;
    for (const auto& v : data_) best = std::max(best, std::abs(v));
    return best;
}

bool ComplexMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (r != c && (*this)(r, c) != cx{0.0, 0.0}) return false;
    return true;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    check_same_dim(lhs.dim(), rhs.dim());
    const std::size_t d = lhs.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const cx a = lhs(i, k);
            if (a == cx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(cx scale, ComplexMatrix rhs) {
    rhs *= scale;
    return rhs;
}

std::vector<cx> mat_vec(const ComplexMatrix& m, const std::vector<cx>& v) {
    check_same_dim(m.dim(), v.size());
    std::vector<cx> out(v.size());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        cx acc = 0.0;
        for (std::size_t c = 0; c < m.dim(); ++c) acc += m(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t ra = 0; ra < da; ++ra)
        for (std::size_t ca = 0; ca < da; ++ca) {
            const cx f = a(ra, ca);
            if (f == cx{0.0, 0.0}) continue;
            for (std::size_t rb = 0; rb < db; ++rb)
                for (std::size_t cb = 0; cb < db; ++cb)
                    out(ra * db + rb, ca * db + cb) = f * b(rb, cb);
        }
    return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = r; c < m.dim(); ++c)
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    return worst;
}

double unitarity_defect(const ComplexMatrix& m) {
    return frobenius_distance(m.dagger() * m, ComplexMatrix::identity(m.dim()));
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a.dim(), b.dim());
    double sum = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) sum += std::norm(a(r, c) - b(r, c));
    return std::sqrt(sum);
}

void require_hermitian(const ComplexMatrix& m, double tolerance) {
    double worst = 0.0;
    std::size_t wr = 0, wc = 0;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = r; c < m.dim(); ++c) {
            const double defect = std::abs(m(r, c) - std::conj(m(c, r)));
            if (defect > worst) {
                worst = defect;
                wr = r;
                wc = c;
            }
        }
    if (worst > tolerance) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: |M(" << wr << "," << wc << ") - conj(M(" << wc << ","
            << wr << "))| = " << worst << " exceeds " << tolerance;
        throw std::invalid_argument(msg.str());
    }
}

void require_unitary(const ComplexMatrix& m, double tolerance) {
    const double defect = unitarity_defect(m);
    if (defect > tolerance) {
        std::ostringstream msg;
        msg << "matrix is not unitary: ||U^dag U - I||_F = " << defect << " exceeds " << tolerance;
        throw std::invalid_argument(msg.str());
    }
}

std::size_t qubit_mask(int qubit, int num_qubits) {
    check_qubit_count(num_qubits);
    if (qubit < 1 || qubit > num_qubits) {
        std::ostringstream msg;
        msg << "qubit " << qubit << " out of range [1, " << num_qubits << "]";
        throw std::invalid_argument(msg.str());
    }
    return std::size_t{1} << (num_qubits - qubit);
}

int qubit_bit(std::size_t basis_index, int qubit, int num_qubits) {
    return (basis_index & qubit_mask(qubit, num_qubits)) ? 1 : 0;
}

Statevector::Statevector(int num_qubits, std::vector<cx> amplitudes)
    : num_qubits_(check_qubit_count(num_qubits)), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << num_qubits_)) {
        std::ostringstream msg;
        msg << "amplitude vector has length " << amps_.size() << ", expected "
            << (std::size_t{1} << num_qubits_);
        throw std::invalid_argument(msg.str());
    }
    const double drift = std::abs(norm() - 1.0);
    if (drift > 1e-10) {
        std::ostringstream msg;
        msg << "statevector norm deviates from 1 by " << drift;
        throw std::invalid_argument(msg.str());
    }
}

Statevector Statevector::plus_state(int num_qubits) {
    check_qubit_count(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<cx> amps(dim, cx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
    return Statevector(num_qubits, std::move(amps));
}

Statevector Statevector::basis_state(int num_qubits, std::size_t index) {
    check_qubit_count(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        std::ostringstream msg;
        msg << "basis index " << index << " out of range [0, " << dim << ")";
        throw std::invalid_argument(msg.str());
    }
    std::vector<cx> amps(dim);
    amps[index] = 1.0;
    return Statevector(num_qubits, std::move(amps));
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

}  // namespace maqw
