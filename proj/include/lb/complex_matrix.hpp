#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>

#include "lb/aligned.hpp"

namespace lb {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major, interleaved (re, im) element storage.
struct MatrixAoS {
    std::size_t rows = 0;
    std::size_t cols = 0;
    aligned_vector<cplx> data;  // rows * cols elements

    MatrixAoS() = default;
    MatrixAoS(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    static MatrixAoS identity(std::size_t n);
    static MatrixAoS zero(std::size_t r, std::size_t c) { return MatrixAoS(r, c); }

    cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::size_t size() const { return rows * cols; }
    bool same_shape(const MatrixAoS& o) const { return rows == o.rows && cols == o.cols; }
};

/// Dense complex matrix, row-major, real and imaginary planes stored as
/// separate contiguous arrays.
struct MatrixSoA {
    std::size_t rows = 0;
    std::size_t cols = 0;
    aligned_vector<double> re;
    aligned_vector<double> im;

    MatrixSoA() = default;
    MatrixSoA(std::size_t r, std::size_t c) : rows(r), cols(c), re(r * c), im(r * c) {}

    std::size_t size() const { return rows * cols; }
};

// Column vectors are matrices with cols = 1.
using VectorAoS = MatrixAoS;
using VectorSoA = MatrixSoA;

// --- primitive operations ---------------------------------------------------

MatrixAoS kron(const MatrixAoS& a, const MatrixAoS& b);
MatrixAoS matmul(const MatrixAoS& a, const MatrixAoS& b);
MatrixAoS dagger(const MatrixAoS& a);   // conjugate transpose
MatrixAoS conj(const MatrixAoS& a);     // element-wise conjugate
MatrixAoS transpose(const MatrixAoS& a);
double one_norm(const MatrixAoS& a);    // max column sum of element moduli
double max_abs(const MatrixAoS& a);     // max element modulus

MatrixAoS operator+(const MatrixAoS& a, const MatrixAoS& b);
MatrixAoS operator-(const MatrixAoS& a, const MatrixAoS& b);
MatrixAoS operator*(cplx alpha, const MatrixAoS& a);

// acc += alpha * x
void add_scaled(MatrixAoS& acc, cplx alpha, const MatrixAoS& x);

/// max-norm of (got - ref) divided by max-norm of ref; 0/0 compares as 0.
double rel_error(const MatrixAoS& got, const MatrixAoS& ref);

// --- layout conversion -------------------------------------------------------

MatrixSoA to_soa(const MatrixAoS& a);
MatrixAoS from_soa(const MatrixSoA& a);

// --- vectorization (row-major convention) -------------------------------------

/// Stacks the rows of a square matrix into a column vector. Element [i,j]
/// lands in slot i*d + j, so the underlying buffer is reused unchanged.
VectorAoS vec(const MatrixAoS& rho);
MatrixAoS unvec(const VectorAoS& v);

// --- text interchange format --------------------------------------------------
//
// Header line "complex-matrix <rows> <cols>", then one "<re> <im>" pair per
// element in row-major order, printed with 17 significant digits so the
// round trip is bit exact.

void write_matrix(std::ostream& os, const MatrixAoS& a);
MatrixAoS read_matrix(std::istream& is);

}  // namespace lb
