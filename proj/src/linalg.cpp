#include "maqw/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace maqw {

const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

ComplexMatrix herm_exp(const ComplexMatrix& hermitian, double time, const Tolerances& tol) {
    require_hermitian(hermitian, tol.hermitian_symmetry);
    const std::size_t d = hermitian.dim();

    // Scale -i t H down until the series argument is small, then square back.
    ComplexMatrix arg = cx{0.0, -time} * hermitian;
    double norm = arg.frobenius_norm();
    int squarings = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    if (squarings > 0) arg *= cx{std::ldexp(1.0, -squarings), 0.0};

    ComplexMatrix sum = ComplexMatrix::identity(d);
    ComplexMatrix term = ComplexMatrix::identity(d);
    for (int k = 1; k <= 64; ++k) {
        term = term * arg;
        term *= cx{1.0 / k, 0.0};
        sum += term;
        if (term.frobenius_norm() <= tol.series_truncation * sum.frobenius_norm()) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

double spectral_norm(const ComplexMatrix& hermitian, const Tolerances& tol) {
    require_hermitian(hermitian, tol.hermitian_symmetry);
    const std::size_t d = hermitian.dim();

    if (hermitian.is_diagonal()) {
        double best = 0.0;
        for (std::size_t i = 0; i < d; ++i) best = std::max(best, std::abs(hermitian(i, i)));
        return best;
    }

    // Power iteration on H^2: eigenvalues are |lambda|^2, so sign-degenerate
    // pairs of H collapse onto one dominant eigenvalue.
    const ComplexMatrix squared = hermitian * hermitian;
    const double scale = squared.frobenius_norm();
    if (scale == 0.0) return 0.0;

    const double rel = std::min(tol.spectral_norm_rel, 1e-12);
    constexpr int kMaxIterations = 500000;

    // Seed 0 is the normalized all-ones vector; subsequent seeds fall back to
    // basis vectors when an iterate lands in the kernel of H^2.
    for (std::size_t seed = 0; seed <= d; ++seed) {
        std::vector<cx> v(d, cx{0.0, 0.0});
        if (seed == 0) {
            const cx fill{1.0 / std::sqrt(static_cast<double>(d)), 0.0};
            v.assign(d, fill);
        } else {
            v[seed - 1] = 1.0;
        }

        double estimate = -1.0;
        bool degenerate = false;
        for (int iter = 0; iter < kMaxIterations; ++iter) {
            const std::vector<cx> w = mat_vec(squared, v);
            double wnorm = 0.0;
            cx rayleigh = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                wnorm += std::norm(w[i]);
                rayleigh += std::conj(v[i]) * w[i];
            }
            wnorm = std::sqrt(wnorm);
            if (wnorm <= scale * 1e-30) {
                degenerate = true;
                break;
            }
            const double current = std::max(rayleigh.real(), 0.0);
            for (std::size_t i = 0; i < d; ++i) v[i] = w[i] / wnorm;
            if (estimate >= 0.0 && std::abs(current - estimate) <= rel * current) {
                return std::sqrt(current);
            }
            estimate = current;
        }
        if (!degenerate) return std::sqrt(std::max(estimate, 0.0));
    }
    return 0.0;
}

double aligning_phase(const ComplexMatrix& u, const ComplexMatrix& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("phase alignment: dimension mismatch");
    cx overlap = 0.0;  // trace(V^dag U)
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t c = 0; c < u.dim(); ++c) overlap += std::conj(v(r, c)) * u(r, c);
    if (std::abs(overlap) == 0.0) return 0.0;
    return std::arg(overlap);
}

double phase_aligned_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
    const double phi = aligning_phase(u, v);
    const cx rot = std::polar(1.0, phi);
    double sum = 0.0;
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t c = 0; c < u.dim(); ++c) sum += std::norm(u(r, c) - rot * v(r, c));
    return std::sqrt(sum);
}

Statevector apply_matrix(const ComplexMatrix& unitary, const Statevector& psi,
                         const Tolerances& tol) {
    if (unitary.dim() != psi.dim())
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    require_unitary(unitary, tol.unitarity);
    return Statevector(psi.num_qubits(), mat_vec(unitary, psi.amplitudes()));
}

}  // namespace maqw
