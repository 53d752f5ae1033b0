#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lb/complex_matrix.hpp"

namespace lb {

/// Kernel layout/implementation variant. Selection is always explicit; the
/// bench harness must control exactly which code runs.
enum class Variant { aos, soa, simd };

const char* to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view s);

// Raw hot-loop signatures: n is the vector length (d^2), the matrix is n x n,
// and the output buffer must be distinct from the input.
using StepAoSFn = void (*)(const cplx* p, const cplx* v, cplx* out, std::size_t n);
using StepSoAFn = void (*)(const double* p_re, const double* p_im, const double* v_re,
                           const double* v_im, double* out_re, double* out_im, std::size_t n);

/// One optimization profile: the same kernel source compiled under one of the
/// named flag configurations. The hand-written SIMD kernel is shared by all
/// profiles (intrinsics pin its instruction selection).
struct KernelProfile {
    std::string name;
    StepAoSFn step_aos = nullptr;
    StepSoAFn step_soa = nullptr;
};

/// All four profiles, in fixed order: baseline, opt, native, native-fast.
/// Flags the toolchain rejects at configure time are dropped, so a profile
/// can degrade (e.g. native without -march=native), but the name always exists.
const std::vector<KernelProfile>& kernel_profiles();

/// Looks a profile up by name; nullptr when absent.
const KernelProfile* find_profile(std::string_view name);

/// The profile benches and the CLI use when none is named: native-fast when
/// compiled in, otherwise the last (most optimized) available profile.
const KernelProfile& default_profile();

/// True when the AVX2 kernel was compiled in and this CPU reports AVX2 + FMA.
bool simd_available();

/// The hand-written AVX2 kernel; nullptr when simd_available() is false.
StepAoSFn simd_kernel();

}  // namespace lb
