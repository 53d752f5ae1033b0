#include "lb/commands.hpp"

#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "lb/bench.hpp"
#include "lb/expm.hpp"
#include "lb/lindblad.hpp"
#include "lb/model_io.hpp"
#include "lb/propagate.hpp"
#include "lb/roofline.hpp"
#include "lb/validate.hpp"

namespace lb {

namespace {

std::string fmt(const char* format, double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

MachineProfile load_machine_profile(const std::string& path) {
    return path.empty() ? builtin_profile() : read_profile_file(path);
}

LindbladModel load_model(const std::string& path) {
    return path.empty() ? transmon_model() : read_model_file(path);
}

/// 0.01 / one_norm(L), so that 10^4 steps stay well inside the generator's
/// linear-response regime; dt = 1 for a zero generator.
double auto_dt(const MatrixAoS& l) {
    const double nrm = one_norm(l);
    return nrm > 0.0 ? 0.01 / nrm : 1.0;
}

MatrixAoS excited_state(std::size_t d) {
    MatrixAoS rho(d, d);
    rho(d - 1, d - 1) = cplx{1.0, 0.0};
    return rho;
}

}  // namespace

int cmd_roofline(const RooflineOptions& opt, std::ostream& out, std::ostream& err) {
    MachineProfile machine;
    try {
        machine = load_machine_profile(opt.machine_profile_path);
        if (opt.dims.empty()) throw std::invalid_argument("roofline: no dims given");
        for (std::size_t d : opt.dims)
            if (d < 1) throw std::invalid_argument("roofline: dims must be >= 1");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const double ridge_dram = ridge_point(machine, CacheLevel::DRAM);
    nlohmann::json doc;
    if (opt.format == "json") {
        doc["machine_profile"] = machine.name;
        doc["rows"] = nlohmann::json::array();
    } else {
        out << "d,d2,flops,bytes,ai,placement,ridge_dram,bound\n";
    }

    for (std::size_t d : opt.dims) {
        const KernelCharacter k = place(characterize(d), machine);
        const Classification c = classify(k, machine);
        if (opt.format == "json") {
            nlohmann::json row;
            row["d"] = d;
            row["d2"] = d * d;
            row["flops"] = k.flops;
            row["bytes"] = k.bytes;
            row["ai"] = k.ai;
            row["placement"] = to_string(*k.placement);
            row["ridge_dram"] = ridge_dram;
            row["bound"] = to_string(c.bound);
            doc["rows"].push_back(std::move(row));
        } else {
            out << d << ',' << d * d << ',' << k.flops << ',' << k.bytes << ','
                << fmt("%.4f", k.ai) << ',' << to_string(*k.placement) << ','
                << fmt("%g", ridge_dram) << ',' << to_string(c.bound) << "\n";
        }
    }
    if (opt.format == "json") out << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    MachineProfile machine;
    try {
        machine = load_machine_profile(opt.machine_profile_path);
        if (!opt.profile.empty() && !find_profile(opt.profile))
            throw std::invalid_argument("bench: unknown optimization profile: " + opt.profile);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const std::vector<BenchResult> results =
        run_matrix(opt.dims, opt.variants, opt.reps, opt.warmup, opt.seed, opt.profile);
    if (opt.format == "json")
        write_json(out, results, machine.name);
    else
        write_csv(out, results, machine.name);

    for (const auto& r : results)
        if (r.failed) {
            err << "error: bench cell failed: dim=" << r.config.dim
                << " variant=" << to_string(r.config.variant) << ": " << r.error << "\n";
            return kExitPartialBenchFailure;
        }
    return kExitOk;
}

int cmd_grape(const GrapeOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        MatrixAoS h0;
        std::vector<MatrixAoS> dissipators;
        std::size_t d = opt.dim;
        auto rng = make_rng(opt.seed);

        if (opt.model_path.empty()) {
            if (d < 2) throw std::invalid_argument("grape: dim must be >= 2");
            h0 = random_hermitian(rng, d);
            dissipators.push_back(cplx{0.1, 0.0} * lowering_operator(d));
        } else {
            LindbladModel model = read_model_file(opt.model_path);
            d = model.dim;
            h0 = std::move(model.hamiltonian);
            dissipators = std::move(model.collapse_ops);
        }
        if (opt.segments < 1) throw std::invalid_argument("grape: segments must be >= 1");
        if (opt.steps_per_segment < 1)
            throw std::invalid_argument("grape: steps_per_segment must be >= 1");

        const MatrixAoS a = lowering_operator(d);
        const MatrixAoS hc = cplx{0.5, 0.0} * (a + dagger(a));

        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> amplitudes(opt.segments);
        for (double& amp : amplitudes) amp = u(rng);

        double dt = opt.dt;
        if (!(dt > 0.0)) {
            MatrixAoS h = h0;
            add_scaled(h, cplx{amplitudes[0], 0.0}, hc);
            dt = auto_dt(build_lindbladian(make_model(std::move(h), dissipators)).matrix);
        }

        const GrapeResult result = grape_chain(h0, hc, amplitudes, opt.steps_per_segment, dt,
                                               dissipators, excited_state(d));
        const ChainTimings& t = result.timings;

        if (opt.format == "json") {
            nlohmann::json doc;
            doc["d"] = d;
            doc["segments"] = t.segments;
            doc["build_ms"] = t.build_ms;
            doc["chain_ms"] = t.chain_ms;
            doc["points_per_s"] = t.points_per_s;
            out << doc.dump(2) << "\n";
        } else {
            out << "d,segments,build_ms,chain_ms,points_per_s\n";
            out << d << ',' << t.segments << ',' << fmt("%.6g", t.build_ms) << ','
                << fmt("%.6g", t.chain_ms) << ',' << fmt("%.6g", t.points_per_s) << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    ValidationReport report;
    try {
        const LindbladModel model = load_model(opt.model_path);
        const Lindbladian l = build_lindbladian(model);
        const double dt = opt.dt > 0.0 ? opt.dt : auto_dt(l.matrix);
        const MatrixAoS rho0 = excited_state(model.dim);
        MatrixAoS rho = rho0;
        if (opt.steps > 0) {
            const Propagator p = expm(l.matrix, dt);
            rho = evolve(p, rho0, opt.steps, Variant::soa);
        }
        report = check_state(rho);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (opt.format == "json") {
        nlohmann::json doc;
        doc["trace_error"] = report.trace_error;
        doc["hermiticity_error"] = report.hermiticity_error;
        doc["min_diagonal"] = report.min_diagonal;
        doc["passed"] = report.passed;
        out << doc.dump(2) << "\n";
    } else {
        out << "trace_error,hermiticity_error,min_diagonal,passed\n";
        out << fmt("%.6g", report.trace_error) << ',' << fmt("%.6g", report.hermiticity_error)
            << ',' << fmt("%.6g", report.min_diagonal) << ','
            << (report.passed ? "true" : "false") << "\n";
    }
    return report.passed ? kExitOk : kExitValidationFailure;
}

int cmd_dump(const DumpOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const LindbladModel model = load_model(opt.model_path);
        const Lindbladian l = build_lindbladian(model);
        MatrixAoS m;
        if (opt.what == "lindbladian") {
            m = l.matrix;
        } else if (opt.what == "propagator") {
            m = expm(l.matrix, opt.dt).matrix_aos;
        } else {
            throw std::invalid_argument("dump: unknown object: " + opt.what);
        }
        if (opt.format == "json") {
            nlohmann::json doc;
            doc["what"] = opt.what;
            doc["rows"] = m.rows;
            doc["cols"] = m.cols;
            auto& entries = doc["entries"] = nlohmann::json::array();
            for (const cplx& z : m.data) entries.push_back({z.real(), z.imag()});
            out << doc.dump(2) << "\n";
        } else {
            write_matrix(out, m);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace lb
