#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace lb {

enum class CacheLevel { L1, L2, L3, DRAM };

const char* to_string(CacheLevel level);

/// Analytic character of the propagation matvec at dimension d: one pass over
/// the d^2 x d^2 complex propagator plus the input and output state vectors.
struct KernelCharacter {
    std::size_t dim = 0;
    std::uint64_t flops = 0;             // 8 d^4
    std::uint64_t bytes = 0;             // (d^4 + 2 d^2) * 16
    double ai = 0.0;                     // flops / bytes
    std::uint64_t working_set_bytes = 0; // = bytes (compulsory traffic only)
    std::optional<CacheLevel> placement; // set by place()
};

/// Peak compute and the bandwidth/capacity ladder of one machine.
struct MachineProfile {
    std::string name;
    double peak_gflops = 0.0;
    std::array<double, 4> bandwidth_gbs{};      // L1, L2, L3, DRAM
    std::array<std::uint64_t, 3> capacity_bytes{};  // L1, L2, L3

    double bandwidth(CacheLevel level) const {
        return bandwidth_gbs[static_cast<std::size_t>(level)];
    }
};

/// Throws std::invalid_argument unless capacities increase strictly and
/// bandwidths decrease strictly down the hierarchy, all positive.
void validate_profile(const MachineProfile& m);

/// Exact integer FLOP/byte counts per the analytic formulas; placement unset.
KernelCharacter characterize(std::size_t d);

/// Returns k with placement = the smallest level whose capacity is >= the
/// working set (equal to capacity fits), else DRAM.
KernelCharacter place(KernelCharacter k, const MachineProfile& m);

/// peak_gflops / bandwidth[level], in FLOP/byte.
double ridge_point(const MachineProfile& m, CacheLevel level);

enum class Bound { memory_bound, compute_bound };

const char* to_string(Bound bound);

struct Classification {
    Bound bound = Bound::memory_bound;
    double attainable_gflops = 0.0;  // min(peak, ai * bandwidth[placement])
};

/// Requires placement to be set (throws std::invalid_argument otherwise).
/// memory_bound iff ai < ridge_point at the placement level.
Classification classify(const KernelCharacter& k, const MachineProfile& m);

/// The default machine: 48 KiB L1d, 2 MiB L2, 36 MiB L3, 128 GFLOP/s peak,
/// 80 GB/s DRAM. The per-level bandwidths above DRAM are nominal sustained
/// figures, not measurements, chosen to keep every placement memory-bound.
const MachineProfile& builtin_profile();

/// Flat key-value profile file: keys peak_gflops, bw_l1, bw_l2, bw_l3,
/// bw_dram (GB/s) and cap_l1, cap_l2, cap_l3 (bytes). `#` starts a comment.
/// Throws std::runtime_error on malformed input, std::invalid_argument when
/// the invariants fail. The file variant names the profile after the file's
/// basename stem.
MachineProfile read_profile(std::istream& is, const std::string& name);
MachineProfile read_profile_file(const std::string& path);
void write_profile(std::ostream& os, const MachineProfile& m);

}  // namespace lb
