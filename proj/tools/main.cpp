#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lb/commands.hpp"

namespace {

const std::vector<std::string> kFormats = {"csv", "json"};

/// Runs a command with `out` bound to the requested file or stdout.
template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) return fn(std::cout);
    std::ofstream file(path);
    if (!file) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return lb::kExitInputError;
    }
    return fn(file);
}

std::vector<lb::Variant> parse_variants(const std::vector<std::string>& names) {
    std::vector<lb::Variant> variants;
    for (const auto& name : names) {
        const auto v = lb::variant_from_string(name);
        if (!v) throw CLI::ValidationError("--variants", "unknown variant: " + name);
        variants.push_back(*v);
    }
    return variants;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lindblad propagation kernels: roofline analysis and benchmarks"};
    app.require_subcommand(1);

    lb::RooflineOptions roofline_opt;
    std::string roofline_output;
    CLI::App* roofline =
        app.add_subcommand("roofline", "Analytic FLOP/byte character and cache placement");
    roofline->add_option("--dims", roofline_opt.dims, "Dimensions d (comma-separated)")
        ->delimiter(',');
    roofline->add_option("--machine-profile", roofline_opt.machine_profile_path,
                         "Machine profile file (default: builtin)");
    roofline->add_option("--format", roofline_opt.format, "Output format")
        ->check(CLI::IsMember(kFormats));
    roofline->add_option("--output", roofline_output, "Output path (default: stdout)");

    lb::BenchOptions bench_opt;
    std::string bench_output;
    std::vector<std::string> bench_variants = {"aos", "soa", "simd"};
    CLI::App* bench = app.add_subcommand("bench", "Time the propagation kernel variants");
    bench->add_option("--dims", bench_opt.dims, "Dimensions d (comma-separated)")
        ->delimiter(',');
    bench->add_option("--variants", bench_variants, "Kernel variants (aos,soa,simd)")
        ->delimiter(',');
    bench->add_option("--reps", bench_opt.reps, "Timed steps per cell")
        ->check(CLI::PositiveNumber);
    bench->add_option("--warmup", bench_opt.warmup, "Untimed steps per cell");
    bench->add_option("--seed", bench_opt.seed, "Input-generation seed");
    bench->add_option("--profile", bench_opt.profile,
                      "Optimization profile (baseline|opt|native|native-fast)");
    bench->add_option("--machine-profile", bench_opt.machine_profile_path,
                      "Machine profile file naming the machine in the header");
    bench->add_option("--format", bench_opt.format, "Output format")
        ->check(CLI::IsMember(kFormats));
    bench->add_option("--output", bench_output, "Output path (default: stdout)");

    lb::GrapeOptions grape_opt;
    std::string grape_output;
    CLI::App* grape =
        app.add_subcommand("grape", "Piecewise-constant propagator chain timings");
    grape->add_option("--dim", grape_opt.dim, "State dimension")->check(CLI::PositiveNumber);
    grape->add_option("--segments", grape_opt.segments, "Pulse segments")
        ->check(CLI::PositiveNumber);
    grape->add_option("--steps-per-segment", grape_opt.steps_per_segment,
                      "Kernel steps per segment")
        ->check(CLI::PositiveNumber);
    grape->add_option("--dt", grape_opt.dt, "Step size in seconds (default: auto)");
    grape->add_option("--model", grape_opt.model_path,
                      "Model file (default: seeded synthetic model at --dim)");
    grape->add_option("--seed", grape_opt.seed, "Amplitude/model seed");
    grape->add_option("--format", grape_opt.format, "Output format")
        ->check(CLI::IsMember(kFormats));
    grape->add_option("--output", grape_output, "Output path (default: stdout)");

    lb::VerifyOptions verify_opt;
    std::string verify_output;
    CLI::App* verify =
        app.add_subcommand("verify", "Evolve a model and check the physical invariants");
    verify->add_option("--model", verify_opt.model_path,
                       "Model file (default: bundled transmon preset)");
    verify->add_option("--steps", verify_opt.steps, "Evolution steps");
    verify->add_option("--dt", verify_opt.dt, "Step size in seconds (default: auto)");
    verify->add_option("--format", verify_opt.format, "Output format")
        ->check(CLI::IsMember(kFormats));
    verify->add_option("--output", verify_output, "Output path (default: stdout)");

    lb::DumpOptions dump_opt;
    std::string dump_output;
    CLI::App* dump =
        app.add_subcommand("dump", "Write the Lindbladian or propagator matrix");
    dump->add_option("--model", dump_opt.model_path,
                     "Model file (default: bundled transmon preset)");
    dump->add_option("--what", dump_opt.what, "Object to dump")
        ->check(CLI::IsMember({"lindbladian", "propagator"}));
    dump->add_option("--dt", dump_opt.dt, "Propagator step in seconds");
    dump->add_option("--format", dump_opt.format, "Output format")
        ->check(CLI::IsMember(kFormats));
    dump->add_option("--output", dump_output, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lb::kExitInputError;
    }

    if (roofline->parsed())
        return with_output(roofline_output, [&](std::ostream& out) {
            return lb::cmd_roofline(roofline_opt, out, std::cerr);
        });
    if (bench->parsed())
        return with_output(bench_output, [&](std::ostream& out) {
            try {
                bench_opt.variants = parse_variants(bench_variants);
            } catch (const CLI::ParseError& e) {
                app.exit(e);
                return lb::kExitInputError;
            }
            return lb::cmd_bench(bench_opt, out, std::cerr);
        });
    if (grape->parsed())
        return with_output(grape_output, [&](std::ostream& out) {
            return lb::cmd_grape(grape_opt, out, std::cerr);
        });
    if (verify->parsed())
        return with_output(verify_output, [&](std::ostream& out) {
            return lb::cmd_verify(verify_opt, out, std::cerr);
        });
    if (dump->parsed())
        return with_output(dump_output, [&](std::ostream& out) {
            return lb::cmd_dump(dump_opt, out, std::cerr);
        });
    return lb::kExitInputError;
}
