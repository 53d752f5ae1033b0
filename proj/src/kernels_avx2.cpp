// Hand-written AVX2 matvec over interleaved complex data: two complex
// elements per 256-bit register, permute/multiply/fmaddsub per pair, scalar
// tail in the same ascending-j order for odd lengths. One fixed instruction
// selection shared by all optimization profiles.

#include <immintrin.h>

#include <complex>
#include <cstddef>

namespace lb::simd_avx2 {

using cplx = std::complex<double>;

void step_simd_kernel(const cplx* p, const cplx* v, cplx* out, std::size_t n) {
    const double* pd = reinterpret_cast<const double*>(p);
    const double* vd = reinterpret_cast<const double*>(v);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = pd + 2 * i * n;
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            const __m256d pv = _mm256_loadu_pd(row + 2 * j);
            const __m256d vv = _mm256_loadu_pd(vd + 2 * j);
            const __m256d vr = _mm256_permute_pd(vv, 0x0);
            const __m256d vi = _mm256_permute_pd(vv, 0xF);
            const __m256d ps = _mm256_permute_pd(pv, 0x5);
            acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(pv, vr, _mm256_mul_pd(ps, vi)));
        }
        const __m128d sum =
            _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
        double acc_re = _mm_cvtsd_f64(sum);
        double acc_im = _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum));
        for (; j < n; ++j) {
            const double ar = row[2 * j];
            const double ai = row[2 * j + 1];
            const double br = vd[2 * j];
            const double bi = vd[2 * j + 1];
            acc_re += ar * br - ai * bi;
            acc_im += ar * bi + ai * br;
        }
        out[i] = cplx{acc_re, acc_im};
    }
}

}  // namespace lb::simd_avx2
