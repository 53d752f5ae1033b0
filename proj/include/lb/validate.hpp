#pragma once

#include <cstddef>

#include "lb/complex_matrix.hpp"
#include "lb/lindblad.hpp"

namespace lb {

inline constexpr double kStateTol = 1e-8;

/// Physical-invariant check of a density matrix.
struct ValidationReport {
    double trace_error = 0.0;        // |Tr rho - 1|
    double hermiticity_error = 0.0;  // max |rho_ij - conj(rho_ji)|
    double min_diagonal = 0.0;       // smallest Re rho_ii
    bool passed = false;
};

/// passed iff trace_error <= tol, hermiticity_error <= tol and
/// min_diagonal >= -tol. Throws std::invalid_argument on non-square input.
ValidationReport check_state(const MatrixAoS& rho, double tol = kStateTol);

/// Asserts trace annihilation of the generator: for `trials` random Hermitian
/// unit-trace states, |Tr unvec(L vec(rho))| <= tol. Deterministic (fixed
/// internal seed).
bool check_generator(const Lindbladian& l, std::size_t trials, double tol = 1e-10);

}  // namespace lb
