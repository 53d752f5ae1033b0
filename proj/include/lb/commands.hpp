#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lb/kernels.hpp"
#include "lb/random.hpp"

namespace lb {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPartialBenchFailure = 3;

struct RooflineOptions {
    std::vector<std::size_t> dims{3, 9, 27};
    std::string machine_profile_path;  // empty selects the builtin profile
    std::string format = "csv";
};

/// Emits one row per dim: d,d2,flops,bytes,ai,placement,ridge_dram,bound.
int cmd_roofline(const RooflineOptions& opt, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::vector<std::size_t> dims{3, 9, 27};
    std::vector<Variant> variants{Variant::aos, Variant::soa, Variant::simd};
    std::size_t reps = 50000;
    std::size_t warmup = 10;
    std::uint64_t seed = kDefaultSeed;
    std::string profile;               // optimization profile; empty = default
    std::string machine_profile_path;  // names the machine in the output header
    std::string format = "csv";
};

/// Full bench matrix via run_matrix; exit 3 when any cell failed.
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

struct GrapeOptions {
    std::size_t dim = 3;
    std::size_t segments = 100;
    std::size_t steps_per_segment = 32;
    double dt = 0.0;  // <= 0 selects auto: 0.01 / one_norm of the first segment's generator
    std::string model_path;  // empty: seeded synthetic model at `dim`
    std::uint64_t seed = kDefaultSeed;
    std::string format = "csv";
};

/// GRAPE-style chain with seeded random amplitudes in [-1, 1]; emits
/// d,segments,build_ms,chain_ms,points_per_s.
int cmd_grape(const GrapeOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::string model_path;  // empty selects the bundled transmon preset
    std::size_t steps = 10000;
    double dt = 0.0;  // <= 0 selects auto: 0.01 / one_norm of the generator
    std::string format = "csv";
};

/// Evolves the model from the highest basis state and reports the physical
/// checks; exit 0 when passed, 1 when a check fails, 2 on bad input.
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

struct DumpOptions {
    std::string model_path;  // empty selects the bundled transmon preset
    std::string what = "lindbladian";  // lindbladian | propagator
    double dt = 1e-3;                  // propagator step
    std::string format = "csv";        // csv: interchange text; json: JSON object
};

/// Writes the requested matrix, in the text interchange format by default.
int cmd_dump(const DumpOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace lb
