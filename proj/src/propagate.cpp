#include "lb/propagate.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "lb/lindblad.hpp"
#include "lb/validate.hpp"

namespace lb {

namespace {

void check_aos_shapes(const MatrixAoS& p, const VectorAoS& v, const VectorAoS& out) {
    if (p.rows != p.cols) throw std::invalid_argument("step: propagator must be square");
    if (v.size() != p.cols || out.size() != p.rows)
        throw std::invalid_argument("step: vector length does not match propagator");
    if (&v == &out || v.data.data() == out.data.data())
        throw std::invalid_argument("step: output buffer must be distinct from input");
}

void check_soa_shapes(const MatrixSoA& p, const VectorSoA& v, const VectorSoA& out) {
    if (p.rows != p.cols) throw std::invalid_argument("step: propagator must be square");
    if (v.size() != p.cols || out.size() != p.rows)
        throw std::invalid_argument("step: vector length does not match propagator");
    if (&v == &out || v.re.data() == out.re.data())
        throw std::invalid_argument("step: output buffer must be distinct from input");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

void step_aos_into(const MatrixAoS& p, const VectorAoS& v, VectorAoS& out, StepAoSFn kernel) {
    check_aos_shapes(p, v, out);
    if (!kernel) kernel = default_profile().step_aos;
    kernel(p.data.data(), v.data.data(), out.data.data(), v.size());
}

VectorAoS step_aos(const MatrixAoS& p, const VectorAoS& v, StepAoSFn kernel) {
    VectorAoS out(v.rows, v.cols);
    step_aos_into(p, v, out, kernel);
    return out;
}

void step_soa_into(const MatrixSoA& p, const VectorSoA& v, VectorSoA& out, StepSoAFn kernel) {
    check_soa_shapes(p, v, out);
    if (!kernel) kernel = default_profile().step_soa;
    kernel(p.re.data(), p.im.data(), v.re.data(), v.im.data(), out.re.data(), out.im.data(),
           v.size());
}

VectorSoA step_soa(const MatrixSoA& p, const VectorSoA& v, StepSoAFn kernel) {
    VectorSoA out(v.rows, v.cols);
    step_soa_into(p, v, out, kernel);
    return out;
}

void step_simd_into(const MatrixAoS& p, const VectorAoS& v, VectorAoS& out) {
    check_aos_shapes(p, v, out);
    const StepAoSFn kernel = simd_kernel();
    if (!kernel) throw std::runtime_error("step_simd: AVX2+FMA unavailable on this platform");
    kernel(p.data.data(), v.data.data(), out.data.data(), v.size());
}

VectorAoS step_simd(const MatrixAoS& p, const VectorAoS& v) {
    VectorAoS out(v.rows, v.cols);
    step_simd_into(p, v, out);
    return out;
}

MatrixAoS evolve(const Propagator& p, const MatrixAoS& rho0, std::size_t n_steps,
                 Variant layout, const KernelProfile* profile) {
    if (rho0.rows != p.dim || rho0.cols != p.dim)
        throw std::invalid_argument("evolve: state dimension does not match propagator");
    if (!check_state(rho0).passed)
        throw std::invalid_argument("evolve: initial state fails physical-state checks");
    if (!profile) profile = &default_profile();

    if (n_steps == 0) return rho0;

    if (layout == Variant::soa) {
        VectorSoA cur = to_soa(vec(rho0));
        VectorSoA next(cur.rows, cur.cols);
        for (std::size_t s = 0; s < n_steps; ++s) {
            profile->step_soa(p.matrix_soa.re.data(), p.matrix_soa.im.data(), cur.re.data(),
                              cur.im.data(), next.re.data(), next.im.data(), cur.size());
            std::swap(cur, next);
        }
        return unvec(from_soa(cur));
    }

    StepAoSFn kernel = profile->step_aos;
    if (layout == Variant::simd) {
        kernel = simd_kernel();
        if (!kernel)
            throw std::runtime_error("evolve: AVX2+FMA unavailable on this platform");
    }
    VectorAoS cur = vec(rho0);
    VectorAoS next(cur.rows, cur.cols);
    for (std::size_t s = 0; s < n_steps; ++s) {
        kernel(p.matrix_aos.data.data(), cur.data.data(), next.data.data(), cur.size());
        std::swap(cur, next);
    }
    return unvec(cur);
}

GrapeResult grape_chain(const MatrixAoS& h0, const MatrixAoS& hc,
                        const std::vector<double>& amplitudes, std::size_t steps_per_segment,
                        double dt, const std::vector<MatrixAoS>& dissipators,
                        const MatrixAoS& rho0, Variant layout, const KernelProfile* profile) {
    if (amplitudes.empty()) throw std::invalid_argument("grape_chain: amplitudes are empty");
    if (h0.rows != h0.cols || !h0.same_shape(hc) || !h0.same_shape(rho0))
        throw std::invalid_argument("grape_chain: operator shapes do not conform");
    if (!profile) profile = &default_profile();

    StepAoSFn aos_kernel = profile->step_aos;
    if (layout == Variant::simd) {
        aos_kernel = simd_kernel();
        if (!aos_kernel)
            throw std::runtime_error("grape_chain: AVX2+FMA unavailable on this platform");
    }

    const std::size_t n = rho0.rows * rho0.rows;
    VectorAoS cur_aos = vec(rho0);
    VectorAoS next_aos(n, 1);
    VectorSoA cur_soa = to_soa(cur_aos);
    VectorSoA next_soa(n, 1);

    ChainTimings t;
    t.segments = amplitudes.size();
    t.steps_per_segment = steps_per_segment;

    for (double amp : amplitudes) {
        const auto build_start = std::chrono::steady_clock::now();
        MatrixAoS h = h0;
        add_scaled(h, cplx{amp, 0.0}, hc);
        const Lindbladian l = build_lindbladian(make_model(std::move(h), dissipators));
        const Propagator p = expm(l.matrix, dt);
        t.build_ms += ms_since(build_start);

        const auto chain_start = std::chrono::steady_clock::now();
        if (layout == Variant::soa) {
            for (std::size_t s = 0; s < steps_per_segment; ++s) {
                profile->step_soa(p.matrix_soa.re.data(), p.matrix_soa.im.data(),
                                  cur_soa.re.data(), cur_soa.im.data(), next_soa.re.data(),
                                  next_soa.im.data(), n);
                std::swap(cur_soa, next_soa);
            }
        } else {
            for (std::size_t s = 0; s < steps_per_segment; ++s) {
                aos_kernel(p.matrix_aos.data.data(), cur_aos.data.data(),
                           next_aos.data.data(), n);
                std::swap(cur_aos, next_aos);
            }
        }
        t.chain_ms += ms_since(chain_start);
    }

    t.points_per_s = 1000.0 / (t.build_ms + t.chain_ms);

    MatrixAoS final_state =
        layout == Variant::soa ? unvec(from_soa(cur_soa)) : unvec(cur_aos);
    return GrapeResult{std::move(final_state), t};
}

}  // namespace lb
