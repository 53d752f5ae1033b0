#pragma once

#include "lb/complex_matrix.hpp"

namespace lb {

/// Cached one-step propagator P = exp(L*dt), materialized in both layouts so
/// the timed kernels never pay for conversion. `dim` is the state dimension d
/// when the matrix is d^2 x d^2 (a superoperator); 0 when the matrix size is
/// not a perfect square and the result has no state interpretation.
struct Propagator {
    std::size_t dim = 0;
    double step = 0.0;
    MatrixAoS matrix_aos;
    MatrixSoA matrix_soa;
};

// theta_13 scaling threshold for the degree-13 Pade approximant.
inline constexpr double kTheta13 = 5.371920351148152;

/// [13/13] Pade approximant r13(m) = q13(m)^-1 * p13(m), evaluated with the
/// even/odd power splitting (6 matrix multiplies plus one dense solve).
/// Intended for one_norm(m) <= kTheta13. Throws std::runtime_error when the
/// denominator solve hits a zero pivot.
MatrixAoS pade13_eval(const MatrixAoS& m);

/// exp(a*dt) by scaling and squaring: M = a*dt is scaled by 2^-s with
/// s = max(0, ceil(log2(one_norm(M)/theta13))), run through pade13_eval and
/// squared s times. Throws std::invalid_argument on non-finite input or
/// non-finite dt, std::runtime_error when s would exceed 64.
Propagator expm(const MatrixAoS& a, double dt);

}  // namespace lb
