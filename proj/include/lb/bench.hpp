#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lb/complex_matrix.hpp"
#include "lb/kernels.hpp"
#include "lb/random.hpp"

namespace lb {

struct BenchConfig {
    std::size_t dim = 3;
    Variant variant = Variant::soa;
    std::size_t reps = 50000;
    std::size_t warmup = 10;
    std::uint64_t seed = kDefaultSeed;
    std::string profile;  // optimization profile name; empty selects the default
};

struct BenchResult {
    BenchConfig config;
    std::string profile_name;  // resolved profile actually used
    double ns_per_step = 0.0;
    double gflops = 0.0;  // 8 d^4 / ns_per_step
    double gbs = 0.0;     // (d^4 + 2 d^2) * 16 / ns_per_step
    cplx checksum{};      // sum of the final output vector
    bool failed = false;
    std::string error;
};

// Derived-metric formulas, shared by run_bench and the tests: GFLOP/s and
// GB/s from a mean ns/step at dimension d.
double derived_gflops(std::size_t d, double ns_per_step);
double derived_gbs(std::size_t d, double ns_per_step);

/// Times `reps` kernel steps as one block on a monotonic clock: a seeded
/// random propagator-shaped matrix (entries uniform in [-1,1] for both
/// components, scaled by 1/d^2) is applied to a seeded random state with two
/// ping-pong buffers, after `warmup` untimed steps of the same chain.
/// Throws std::invalid_argument for an unknown profile or reps < 1, and
/// std::runtime_error when the variant is unavailable or the clock's observed
/// resolution exceeds 10% of the measured block.
BenchResult run_bench(const BenchConfig& config);

/// Cartesian product of dims x variants (dim-major, variant-minor), one
/// run_bench per cell. Per-cell errors mark the cell failed instead of
/// aborting the matrix.
std::vector<BenchResult> run_matrix(const std::vector<std::size_t>& dims,
                                    const std::vector<Variant>& variants, std::size_t reps,
                                    std::size_t warmup, std::uint64_t seed = kDefaultSeed,
                                    const std::string& profile = {});

struct RankedResult {
    Variant variant = Variant::aos;
    double gbs = 0.0;
    double ratio = 1.0;  // gbs relative to the slowest variant at this dim
};

struct DimRanking {
    std::size_t dim = 0;
    std::vector<RankedResult> entries;  // gbs descending, ties by variant order
};

/// Per-dim ranking of successful results by achieved bandwidth, dims
/// ascending. Failed cells are skipped.
std::vector<DimRanking> compare(const std::vector<BenchResult>& results);

/// CSV rows under the schema
/// `profile,dim,variant,reps,warmup,ns_per_step,gflops,gbs,checksum_re,checksum_im`
/// with a `#` comment header carrying the timestamp and machine-profile name.
/// Failed cells emit `nan` metrics plus a `#` comment naming the error.
void write_csv(std::ostream& os, const std::vector<BenchResult>& results,
               const std::string& machine_name);

/// JSON mirror: an object with `machine_profile`, `timestamp` and a `results`
/// array whose entries carry the same field names as the CSV columns; failed
/// cells carry `failed` and `error` instead of the metric fields.
void write_json(std::ostream& os, const std::vector<BenchResult>& results,
                const std::string& machine_name);

}  // namespace lb
