#include "lb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "lb/roofline.hpp"

namespace lb {

namespace {

using steady_clock = std::chrono::steady_clock;

double ns_between(steady_clock::time_point t0, steady_clock::time_point t1) {
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

/// Smallest observable tick of the monotonic clock, in nanoseconds.
double observed_resolution_ns() {
    double best = 1e18;
    for (int trial = 0; trial < 5; ++trial) {
        const auto t0 = steady_clock::now();
        auto t1 = t0;
        while (t1 == t0) t1 = steady_clock::now();
        best = std::min(best, ns_between(t0, t1));
    }
    return best;
}

std::string timestamp_utc() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(const char* format, double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

const KernelProfile& resolve_profile(const std::string& name) {
    if (name.empty()) return default_profile();
    const KernelProfile* p = find_profile(name);
    if (!p) throw std::invalid_argument("bench: unknown optimization profile: " + name);
    return *p;
}

}  // namespace

double derived_gflops(std::size_t d, double ns_per_step) {
    return double(characterize(d).flops) / ns_per_step;
}

double derived_gbs(std::size_t d, double ns_per_step) {
    return double(characterize(d).bytes) / ns_per_step;
}

BenchResult run_bench(const BenchConfig& config) {
    if (config.dim < 1) throw std::invalid_argument("bench: dim must be >= 1");
    if (config.reps < 1) throw std::invalid_argument("bench: reps must be >= 1");
    const KernelProfile& prof = resolve_profile(config.profile);

    StepAoSFn aos_fn = prof.step_aos;
    if (config.variant == Variant::simd) {
        aos_fn = simd_kernel();
        if (!aos_fn)
            throw std::runtime_error("bench: simd variant unavailable on this platform");
    }

    const std::size_t n = config.dim * config.dim;
    auto rng = make_rng(config.seed);
    MatrixAoS pm = random_matrix(rng, n, n);
    const cplx scale{1.0 / double(config.dim * config.dim), 0.0};
    for (auto& z : pm.data) z *= scale;
    const VectorAoS v0 = random_matrix(rng, n, 1);

    BenchResult res;
    res.config = config;
    res.profile_name = prof.name;

    double block_ns = 0.0;
    cplx checksum{0.0, 0.0};

    if (config.variant == Variant::soa) {
        const MatrixSoA pms = to_soa(pm);
        VectorSoA va = to_soa(v0);
        VectorSoA vb(va.rows, va.cols);
        const StepSoAFn fn = prof.step_soa;
        const double* pre = pms.re.data();
        const double* pim = pms.im.data();
        double* cur_re = va.re.data();
        double* cur_im = va.im.data();
        double* nxt_re = vb.re.data();
        double* nxt_im = vb.im.data();
        for (std::size_t s = 0; s < config.warmup; ++s) {
            fn(pre, pim, cur_re, cur_im, nxt_re, nxt_im, n);
            std::swap(cur_re, nxt_re);
            std::swap(cur_im, nxt_im);
        }
        const auto t0 = steady_clock::now();
        for (std::size_t r = 0; r < config.reps; ++r) {
            fn(pre, pim, cur_re, cur_im, nxt_re, nxt_im, n);
            std::swap(cur_re, nxt_re);
            std::swap(cur_im, nxt_im);
        }
        const auto t1 = steady_clock::now();
        block_ns = ns_between(t0, t1);
        for (std::size_t i = 0; i < n; ++i) checksum += cplx{cur_re[i], cur_im[i]};
    } else {
        VectorAoS va = v0;
        VectorAoS vb(va.rows, va.cols);
        const cplx* pmat = pm.data.data();
        cplx* cur = va.data.data();
        cplx* nxt = vb.data.data();
        for (std::size_t s = 0; s < config.warmup; ++s) {
            aos_fn(pmat, cur, nxt, n);
            std::swap(cur, nxt);
        }
        const auto t0 = steady_clock::now();
        for (std::size_t r = 0; r < config.reps; ++r) {
            aos_fn(pmat, cur, nxt, n);
            std::swap(cur, nxt);
        }
        const auto t1 = steady_clock::now();
        block_ns = ns_between(t0, t1);
        for (std::size_t i = 0; i < n; ++i) checksum += cur[i];
    }

    const double resolution = observed_resolution_ns();
    if (resolution > 0.1 * block_ns)
        throw std::runtime_error(
            "bench: timer resolution (" + fmt("%.0f", resolution) +
            " ns) exceeds 10% of the measured block; increase reps");

    res.ns_per_step = block_ns / double(config.reps);
    res.gflops = derived_gflops(config.dim, res.ns_per_step);
    res.gbs = derived_gbs(config.dim, res.ns_per_step);
    res.checksum = checksum;
    return res;
}

std::vector<BenchResult> run_matrix(const std::vector<std::size_t>& dims,
                                    const std::vector<Variant>& variants, std::size_t reps,
                                    std::size_t warmup, std::uint64_t seed,
                                    const std::string& profile) {
    std::vector<BenchResult> results;
    results.reserve(dims.size() * variants.size());
    for (std::size_t dim : dims) {
        for (Variant variant : variants) {
            BenchConfig config{dim, variant, reps, warmup, seed, profile};
            try {
                results.push_back(run_bench(config));
            } catch (const std::exception& e) {
                BenchResult res;
                res.config = config;
                const KernelProfile* p =
                    profile.empty() ? &default_profile() : find_profile(profile);
                res.profile_name = p ? p->name : profile;
                res.failed = true;
                res.error = e.what();
                results.push_back(std::move(res));
            }
        }
    }
    return results;
}

std::vector<DimRanking> compare(const std::vector<BenchResult>& results) {
    std::map<std::size_t, std::vector<RankedResult>> by_dim;
    for (const auto& r : results) {
        if (r.failed) continue;
        by_dim[r.config.dim].push_back({r.config.variant, r.gbs, 1.0});
    }

    std::vector<DimRanking> rankings;
    for (auto& [dim, entries] : by_dim) {
        std::sort(entries.begin(), entries.end(), [](const RankedResult& a,
                                                     const RankedResult& b) {
            if (a.gbs != b.gbs) return a.gbs > b.gbs;
            return static_cast<int>(a.variant) < static_cast<int>(b.variant);
        });
        const double slowest = entries.back().gbs;
        for (auto& e : entries) e.ratio = slowest > 0.0 ? e.gbs / slowest : 1.0;
        rankings.push_back({dim, std::move(entries)});
    }
    return rankings;
}

void write_csv(std::ostream& os, const std::vector<BenchResult>& results,
               const std::string& machine_name) {
    os << "# lindbench " << timestamp_utc() << " machine-profile=" << machine_name << "\n";
    os << "profile,dim,variant,reps,warmup,ns_per_step,gflops,gbs,checksum_re,checksum_im\n";
    for (const auto& r : results) {
        if (r.failed)
            os << "# failed: dim=" << r.config.dim << " variant=" << to_string(r.config.variant)
               << ": " << r.error << "\n";
        os << r.profile_name << ',' << r.config.dim << ',' << to_string(r.config.variant) << ','
           << r.config.reps << ',' << r.config.warmup << ',';
        if (r.failed) {
            os << "nan,nan,nan,nan,nan\n";
        } else {
            os << fmt("%.6g", r.ns_per_step) << ',' << fmt("%.6g", r.gflops) << ','
               << fmt("%.6g", r.gbs) << ',' << fmt("%.17g", r.checksum.real()) << ','
               << fmt("%.17g", r.checksum.imag()) << "\n";
        }
    }
}

void write_json(std::ostream& os, const std::vector<BenchResult>& results,
                const std::string& machine_name) {
    nlohmann::json doc;
    doc["machine_profile"] = machine_name;
    doc["timestamp"] = timestamp_utc();
    doc["results"] = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json row;
        row["profile"] = r.profile_name;
        row["dim"] = r.config.dim;
        row["variant"] = to_string(r.config.variant);
        row["reps"] = r.config.reps;
        row["warmup"] = r.config.warmup;
        if (r.failed) {
            row["failed"] = true;
            row["error"] = r.error;
        } else {
            row["ns_per_step"] = r.ns_per_step;
            row["gflops"] = r.gflops;
            row["gbs"] = r.gbs;
            row["checksum_re"] = r.checksum.real();
            row["checksum_im"] = r.checksum.imag();
        }
        doc["results"].push_back(std::move(row));
    }
    os << doc.dump(2) << "\n";
}

}  // namespace lb
