// Hot-path matvec kernels. This translation unit is compiled once per
// optimization profile with LB_PROFILE_NS set to the profile's namespace;
// the build system attaches the profile's flags to each copy.

#include <complex>
#include <cstddef>

#ifndef LB_PROFILE_NS
#error "LB_PROFILE_NS must name the optimization profile namespace"
#endif

namespace lb::profiles::LB_PROFILE_NS {

using cplx = std::complex<double>;

void step_aos_kernel(const cplx* __restrict p, const cplx* __restrict v, cplx* __restrict out,
                     std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* __restrict row = p + i * n;
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
}

void step_soa_kernel(const double* __restrict p_re, const double* __restrict p_im,
                     const double* __restrict v_re, const double* __restrict v_im,
                     double* __restrict out_re, double* __restrict out_im, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* __restrict row_re = p_re + i * n;
        const double* __restrict row_im = p_im + i * n;
        double acc_re = 0.0;
        double acc_im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc_re += row_re[j] * v_re[j] - row_im[j] * v_im[j];
            acc_im += row_re[j] * v_im[j] + row_im[j] * v_re[j];
        }
        out_re[i] = acc_re;
        out_im[i] = acc_im;
    }
}

}  // namespace lb::profiles::LB_PROFILE_NS
