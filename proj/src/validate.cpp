#include "lb/validate.hpp"

#include <cmath>
#include <stdexcept>

#include "lb/random.hpp"

namespace lb {

ValidationReport check_state(const MatrixAoS& rho, double tol) {
    if (rho.rows != rho.cols) throw std::invalid_argument("check_state: state must be square");
    const std::size_t d = rho.rows;

    ValidationReport report;
    cplx trace{0.0, 0.0};
    double min_diag = d ? rho(0, 0).real() : 0.0;
    double herm = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        trace += rho(i, i);
        min_diag = std::min(min_diag, rho(i, i).real());
        for (std::size_t j = 0; j < d; ++j)
            herm = std::max(herm, std::abs(rho(i, j) - std::conj(rho(j, i))));
    }
    report.trace_error = std::abs(trace - cplx{1.0, 0.0});
    report.hermiticity_error = herm;
    report.min_diagonal = min_diag;
    report.passed = report.trace_error <= tol && report.hermiticity_error <= tol &&
                    report.min_diagonal >= -tol;
    return report;
}

bool check_generator(const Lindbladian& l, std::size_t trials, double tol) {
    if (l.matrix.rows != l.dim * l.dim || l.matrix.cols != l.dim * l.dim)
        throw std::invalid_argument("check_generator: matrix is not dim^2 x dim^2");

    auto rng = make_rng(kDefaultSeed);
    for (std::size_t t = 0; t < trials; ++t) {
        const MatrixAoS rho = random_density(rng, l.dim);
        const MatrixAoS drho = unvec(matmul(l.matrix, vec(rho)));
        cplx trace{0.0, 0.0};
        for (std::size_t i = 0; i < l.dim; ++i) trace += drho(i, i);
        if (std::abs(trace) > tol) return false;
    }
    return true;
}

}  // namespace lb
