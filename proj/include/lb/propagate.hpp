#pragma once

#include <cstddef>
#include <vector>

#include "lb/complex_matrix.hpp"
#include "lb/expm.hpp"
#include "lb/kernels.hpp"

namespace lb {

// Checked single-step wrappers over the raw kernels. The output buffer must
// be a different object than the input vector (in-place matvec is forbidden).
// `kernel` defaults to the corresponding entry of default_profile().

void step_aos_into(const MatrixAoS& p, const VectorAoS& v, VectorAoS& out,
                   StepAoSFn kernel = nullptr);
VectorAoS step_aos(const MatrixAoS& p, const VectorAoS& v, StepAoSFn kernel = nullptr);

void step_soa_into(const MatrixSoA& p, const VectorSoA& v, VectorSoA& out,
                   StepSoAFn kernel = nullptr);
VectorSoA step_soa(const MatrixSoA& p, const VectorSoA& v, StepSoAFn kernel = nullptr);

/// Hand-written SIMD path; throws std::runtime_error when the platform lacks
/// AVX2 + FMA (check simd_available() first).
void step_simd_into(const MatrixAoS& p, const VectorAoS& v, VectorAoS& out);
VectorAoS step_simd(const MatrixAoS& p, const VectorAoS& v);

/// Applies the cached propagator n_steps times to vec(rho0) with two
/// ping-pong buffers (no per-step allocation) and returns the unvec'd final
/// state. rho0 must pass the physical-state checks (Hermitian, unit trace,
/// nonnegative diagonal at 1e-8); violations throw std::invalid_argument.
MatrixAoS evolve(const Propagator& p, const MatrixAoS& rho0, std::size_t n_steps,
                 Variant layout, const KernelProfile* profile = nullptr);

/// Wall-clock split of a piecewise-constant propagator chain.
struct ChainTimings {
    double build_ms = 0.0;
    double chain_ms = 0.0;
    std::size_t segments = 0;
    std::size_t steps_per_segment = 0;
    double points_per_s = 0.0;  // 1000 / (build_ms + chain_ms)
};

struct GrapeResult {
    MatrixAoS final_state;
    ChainTimings timings;
};

/// GRAPE-style chain: per segment j, H_j = h0 + amplitudes[j]*hc, the
/// Lindbladian is assembled and exponentiated (timed into build_ms), then
/// steps_per_segment kernel steps advance the state (timed into chain_ms).
/// `dissipators` are the fixed collapse operators shared by every segment.
GrapeResult grape_chain(const MatrixAoS& h0, const MatrixAoS& hc,
                        const std::vector<double>& amplitudes, std::size_t steps_per_segment,
                        double dt, const std::vector<MatrixAoS>& dissipators,
                        const MatrixAoS& rho0, Variant layout = Variant::soa,
                        const KernelProfile* profile = nullptr);

}  // namespace lb
