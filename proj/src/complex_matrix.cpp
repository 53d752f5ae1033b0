#include "lb/complex_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lb {

MatrixAoS MatrixAoS::identity(std::size_t n) {
    MatrixAoS m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
}

MatrixAoS kron(const MatrixAoS& a, const MatrixAoS& b) {
    MatrixAoS out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    out(i * b.rows + k, j * b.cols + l) = aij * b(k, l);
        }
    return out;
}

MatrixAoS matmul(const MatrixAoS& a, const MatrixAoS& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matmul: shape mismatch (" + std::to_string(a.rows) + "x" +
                                    std::to_string(a.cols) + " * " + std::to_string(b.rows) + "x" +
                                    std::to_string(b.cols) + ")");
    MatrixAoS out(a.rows, b.cols);
    // i-k-j order keeps the inner loop contiguous over rows of b and out.
    // The complex arithmetic is spelled out in doubles so the inner loop
    // vectorizes without relaxed-FP flags (each out element is independent,
    // no reduction reordering involved).
    const std::size_t n = b.cols;
    for (std::size_t i = 0; i < a.rows; ++i) {
        double* __restrict crow = reinterpret_cast<double*>(out.data.data() + i * n);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            const double ar = aik.real(), ai = aik.imag();
            const double* __restrict brow =
                reinterpret_cast<const double*>(b.data.data() + k * n);
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[2 * j], bi = brow[2 * j + 1];
                crow[2 * j] += ar * br - ai * bi;
                crow[2 * j + 1] += ar * bi + ai * br;
            }
        }
    }
    return out;
}

MatrixAoS dagger(const MatrixAoS& a) {
    MatrixAoS out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

MatrixAoS conj(const MatrixAoS& a) {
    MatrixAoS out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = std::conj(a.data[i]);
    return out;
}

MatrixAoS transpose(const MatrixAoS& a) {
    MatrixAoS out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = a(i, j);
    return out;
}

double one_norm(const MatrixAoS& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < a.rows; ++i) sum += std::abs(a(i, j));
        best = std::max(best, sum);
    }
    return best;
}

double max_abs(const MatrixAoS& a) {
    double best = 0.0;
    for (const cplx& z : a.data) best = std::max(best, std::abs(z));
    return best;
}

MatrixAoS operator+(const MatrixAoS& a, const MatrixAoS& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("operator+: shape mismatch");
    MatrixAoS out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = a.data[i] + b.data[i];
    return out;
}

MatrixAoS operator-(const MatrixAoS& a, const MatrixAoS& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("operator-: shape mismatch");
    MatrixAoS out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = a.data[i] - b.data[i];
    return out;
}

MatrixAoS operator*(cplx alpha, const MatrixAoS& a) {
    MatrixAoS out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = alpha * a.data[i];
    return out;
}

void add_scaled(MatrixAoS& acc, cplx alpha, const MatrixAoS& x) {
    if (!acc.same_shape(x)) throw std::invalid_argument("add_scaled: shape mismatch");
    for (std::size_t i = 0; i < acc.size(); ++i) acc.data[i] += alpha * x.data[i];
}

double rel_error(const MatrixAoS& got, const MatrixAoS& ref) {
    if (!got.same_shape(ref)) throw std::invalid_argument("rel_error: shape mismatch");
    double diff = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        diff = std::max(diff, std::abs(got.data[i] - ref.data[i]));
    const double scale = max_abs(ref);
    if (scale == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
    return diff / scale;
}

MatrixSoA to_soa(const MatrixAoS& a) {
    MatrixSoA out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.re[i] = a.data[i].real();
        out.im[i] = a.data[i].imag();
    }
    return out;
}

MatrixAoS from_soa(const MatrixSoA& a) {
    MatrixAoS out(a.rows, a.cols);
    for (std::size_t i = 0; i < out.size(); ++i) out.data[i] = cplx{a.re[i], a.im[i]};
    return out;
}

VectorAoS vec(const MatrixAoS& rho) {
    if (rho.rows != rho.cols) throw std::invalid_argument("vec: input must be square");
    VectorAoS v;
    v.rows = rho.size();
    v.cols = 1;
    v.data = rho.data;  // row-major stacking leaves the element order unchanged
    return v;
}

MatrixAoS unvec(const VectorAoS& v) {
    if (v.cols != 1) throw std::invalid_argument("unvec: input must be a column vector");
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(v.rows))));
    if (d * d != v.rows)
        throw std::invalid_argument("unvec: length " + std::to_string(v.rows) +
                                    " is not a perfect square");
    MatrixAoS rho;
    rho.rows = d;
    rho.cols = d;
    rho.data = v.data;
    return rho;
}

void write_matrix(std::ostream& os, const MatrixAoS& a) {
    os << "complex-matrix " << a.rows << " " << a.cols << "\n";
    char buf[64];
    for (const cplx& z : a.data) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
        os << buf;
    }
}

MatrixAoS read_matrix(std::istream& is) {
    std::string tag;
    std::size_t rows = 0, cols = 0;
    if (!(is >> tag) || tag != "complex-matrix" || !(is >> rows >> cols))
        throw std::runtime_error("read_matrix: expected 'complex-matrix <rows> <cols>' header");
    MatrixAoS a(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        double re = 0.0, im = 0.0;
        if (!(is >> re >> im))
            throw std::runtime_error("read_matrix: truncated matrix body");
        a.data[i] = cplx{re, im};
    }
    return a;
}

}  // namespace lb
