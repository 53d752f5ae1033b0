#pragma once

#include <vector>

#include "lb/complex_matrix.hpp"

namespace lb {

/// Open-system model: Hamiltonian H plus collapse operators. Each collapse
/// operator carries its rate folded in, L_k = sqrt(gamma_k) * op.
struct LindbladModel {
    std::size_t dim = 0;
    MatrixAoS hamiltonian;                // d x d, Hermitian
    std::vector<MatrixAoS> collapse_ops;  // each d x d
};

/// Validates shapes and Hermiticity of H (1e-12 relative) and returns the
/// assembled model. Throws std::invalid_argument on violation.
LindbladModel make_model(MatrixAoS hamiltonian, std::vector<MatrixAoS> collapse_ops);

/// Superoperator acting on vec(rho), d^2 x d^2.
struct Lindbladian {
    std::size_t dim = 0;
    MatrixAoS matrix;
};

/// Assembles the vectorized generator
///   -i(H (x) I - I (x) H^T)
///   + sum_k [ L_k (x) L_k* - 1/2 (L_k^dag L_k (x) I) - 1/2 (I (x) (L_k^dag L_k)^T) ]
/// under the row-major vec convention.
Lindbladian build_lindbladian(const LindbladModel& model);

/// Direct right-hand side -i[H, rho] + sum_k (L rho L^dag - 1/2 {L^dag L, rho}),
/// computed with matmul/dagger only. Serves as the independent reference for
/// build_lindbladian.
MatrixAoS apply_rhs(const LindbladModel& model, const MatrixAoS& rho);

/// Truncated lowering operator, a|n> = sqrt(n)|n-1>.
MatrixAoS lowering_operator(std::size_t d);

// Default transmon parameters, placeholders of realistic magnitude.
inline constexpr double kTransmonT1 = 30e-6;             // s
inline constexpr double kTransmonTphi = 20e-6;           // s
inline constexpr double kTransmonAnharmonicity = -1.5e9; // rad/s
inline constexpr double kTransmonDriveAmp = 1.5e8;       // rad/s

/// Three-level transmon: H = drive_amp*(a + a^dag)/2 + (anharm/2)*a^dag a^dag a a,
/// decay L1 = sqrt(1/t1)*a and pure dephasing L2 = sqrt(1/(2*tphi))*a^dag a.
/// Passing an infinite time disables the corresponding channel.
LindbladModel transmon_model(double t1 = kTransmonT1, double tphi = kTransmonTphi,
                             double anharmonicity = kTransmonAnharmonicity,
                             double drive_amp = kTransmonDriveAmp);

}  // namespace lb
