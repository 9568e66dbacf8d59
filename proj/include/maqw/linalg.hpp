#pragma once

#include "maqw/matrix.hpp"
#include "maqw/tolerances.hpp"

namespace maqw {

/// e^(-i t H) for Hermitian H, computed by scaling-and-squaring on a series
/// truncated when the next term drops below series_truncation times the
/// partial sum. Rejects non-Hermitian input.
ComplexMatrix herm_exp(const ComplexMatrix& hermitian, double time,
                       const Tolerances& tol = default_tolerances());

/// Largest |eigenvalue| of a Hermitian matrix. Exact (max |entry|) for
/// diagonal input; otherwise power iteration on H^2 with a deterministic
/// all-ones start vector, re-seeded with basis vectors if the iterate lands
/// in the kernel. Returns 0 for the zero matrix.
double spectral_norm(const ComplexMatrix& hermitian,
                     const Tolerances& tol = default_tolerances());

/// min over phi of ||U - e^{i phi} V||_F. Falls back to the plain Frobenius
/// distance when trace(V^dag U) vanishes.
double phase_aligned_distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// The phi realizing phase_aligned_distance (0 when the trace vanishes).
double aligning_phase(const ComplexMatrix& u, const ComplexMatrix& v);

/// U psi for unitary U; rejects dimension mismatches and matrices that fail
/// the unitarity check.
Statevector apply_matrix(const ComplexMatrix& unitary, const Statevector& psi,
                         const Tolerances& tol = default_tolerances());

}  // namespace maqw
