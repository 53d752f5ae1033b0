#include "lb/expm.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lb {

namespace {

// Denominator/numerator coefficients of the degree-13 Pade approximant.
constexpr double kPade13Coeffs[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr int kMaxSquarings = 64;

bool all_finite(const MatrixAoS& a) {
    for (const cplx& z : a.data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

/// Solves a*x = b in place via partial-pivoting Gaussian elimination,
/// overwriting b with the solution. a is destroyed.
void solve_in_place(MatrixAoS& a, MatrixAoS& b) {
    const std::size_t n = a.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0)
            throw std::runtime_error("expm: singular Pade denominator");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            for (std::size_t j = 0; j < b.cols; ++j) std::swap(b(col, j), b(pivot, j));
        }
        const cplx inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx factor = a(r, col) * inv;
            if (factor == cplx{}) continue;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= factor * a(col, j);
            for (std::size_t j = 0; j < b.cols; ++j) b(r, j) -= factor * b(col, j);
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        const cplx inv = 1.0 / a(col, col);
        for (std::size_t j = 0; j < b.cols; ++j) b(col, j) *= inv;
        for (std::size_t r = 0; r < col; ++r) {
            const cplx factor = a(r, col);
            if (factor == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) b(r, j) -= factor * b(col, j);
        }
    }
}

std::size_t isqrt_or_zero(std::size_t n) {
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(n))));
    return d * d == n ? d : 0;
}

}  // namespace

MatrixAoS pade13_eval(const MatrixAoS& m) {
    if (m.rows != m.cols) throw std::invalid_argument("pade13_eval: matrix must be square");
    const std::size_t n = m.rows;
    const double* b = kPade13Coeffs;
    const MatrixAoS eye = MatrixAoS::identity(n);

    const MatrixAoS m2 = matmul(m, m);
    const MatrixAoS m4 = matmul(m2, m2);
    const MatrixAoS m6 = matmul(m2, m4);

    // u = m * (m6*(b13*m6 + b11*m4 + b9*m2) + b7*m6 + b5*m4 + b3*m2 + b1*I)
    MatrixAoS inner = cplx{b[13], 0} * m6;
    add_scaled(inner, cplx{b[11], 0}, m4);
    add_scaled(inner, cplx{b[9], 0}, m2);
    MatrixAoS u = matmul(m6, inner);
    add_scaled(u, cplx{b[7], 0}, m6);
    add_scaled(u, cplx{b[5], 0}, m4);
    add_scaled(u, cplx{b[3], 0}, m2);
    add_scaled(u, cplx{b[1], 0}, eye);
    u = matmul(m, u);

    // v = m6*(b12*m6 + b10*m4 + b8*m2) + b6*m6 + b4*m4 + b2*m2 + b0*I
    inner = cplx{b[12], 0} * m6;
    add_scaled(inner, cplx{b[10], 0}, m4);
    add_scaled(inner, cplx{b[8], 0}, m2);
    MatrixAoS v = matmul(m6, inner);
    add_scaled(v, cplx{b[6], 0}, m6);
    add_scaled(v, cplx{b[4], 0}, m4);
    add_scaled(v, cplx{b[2], 0}, m2);
    add_scaled(v, cplx{b[0], 0}, eye);

    MatrixAoS denom = v - u;   // q13(m)
    MatrixAoS result = v + u;  // p13(m)
    solve_in_place(denom, result);
    return result;
}

Propagator expm(const MatrixAoS& a, double dt) {
    if (a.rows != a.cols) throw std::invalid_argument("expm: matrix must be square");
    if (!std::isfinite(dt)) throw std::invalid_argument("expm: dt must be finite");
    if (!all_finite(a)) throw std::invalid_argument("expm: non-finite entries in input");

    MatrixAoS m = cplx{dt, 0} * a;
    const double nrm = one_norm(m);

    int s = 0;
    if (nrm > kTheta13) {
        s = static_cast<int>(std::ceil(std::log2(nrm / kTheta13)));
        if (s > kMaxSquarings)
            throw std::runtime_error("expm: norm of a*dt requires more than 64 squarings");
        m = cplx{std::ldexp(1.0, -s), 0} * m;
    }

    MatrixAoS r = pade13_eval(m);
    for (int i = 0; i < s; ++i) r = matmul(r, r);

    Propagator p;
    p.dim = isqrt_or_zero(a.rows);
    p.step = dt;
    p.matrix_soa = to_soa(r);
    p.matrix_aos = std::move(r);
    return p;
}

}  // namespace lb
