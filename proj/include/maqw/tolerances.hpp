#pragma once

namespace maqw {

/// Numeric tolerances shared across the library. Every check reads from one
/// of these fields so tests can tighten them in a single place.
struct Tolerances {
    double hermitian_symmetry = 1e-12;  // max |a_ij - conj(a_ji)|
    double unitarity = 1e-10;           // ||U^dag U - I||_F
    double series_truncation = 1e-16;   // next term vs partial sum (Frobenius)
    double spectral_norm_rel = 1e-10;   // power-iteration convergence
    double norm_preservation = 1e-10;   // statevector 2-norm drift
    double pi_multiple_snap = 1e-12;    // angle pretty-printer snap distance
    double beta_form_warning = 1e-9;    // sum-form vs product-form mixer gap
};

const Tolerances& default_tolerances();

}  // namespace maqw
