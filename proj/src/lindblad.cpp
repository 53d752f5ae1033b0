#include "lb/lindblad.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lb {

namespace {

constexpr double kHermTol = 1e-12;

bool is_hermitian(const MatrixAoS& h, double rel_tol) {
    double worst = 0.0;
    for (std::size_t i = 0; i < h.rows; ++i)
        for (std::size_t j = 0; j < h.cols; ++j)
            worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
    const double scale = max_abs(h);
    return scale == 0.0 ? worst == 0.0 : worst <= rel_tol * scale;
}

}  // namespace

LindbladModel make_model(MatrixAoS hamiltonian, std::vector<MatrixAoS> collapse_ops) {
    if (hamiltonian.rows != hamiltonian.cols)
        throw std::invalid_argument("make_model: Hamiltonian must be square");
    const std::size_t d = hamiltonian.rows;
    if (d == 0) throw std::invalid_argument("make_model: dimension must be positive");
    if (!is_hermitian(hamiltonian, kHermTol))
        throw std::invalid_argument("make_model: Hamiltonian is not Hermitian within 1e-12");
    for (const auto& l : collapse_ops)
        if (l.rows != d || l.cols != d)
            throw std::invalid_argument("make_model: collapse operator dimension mismatch");
    return LindbladModel{d, std::move(hamiltonian), std::move(collapse_ops)};
}

Lindbladian build_lindbladian(const LindbladModel& model) {
    const std::size_t d = model.dim;
    if (model.hamiltonian.rows != d || model.hamiltonian.cols != d)
        throw std::invalid_argument("build_lindbladian: Hamiltonian dimension mismatch");
    if (!is_hermitian(model.hamiltonian, kHermTol))
        throw std::invalid_argument("build_lindbladian: Hamiltonian is not Hermitian within 1e-12");

    const MatrixAoS eye = MatrixAoS::identity(d);
    const cplx mi{0.0, -1.0};

    // coherent part: -i (H (x) I - I (x) H^T)
    MatrixAoS l = mi * (kron(model.hamiltonian, eye) - kron(eye, transpose(model.hamiltonian)));

    for (const auto& lk : model.collapse_ops) {
        if (lk.rows != d || lk.cols != d)
            throw std::invalid_argument("build_lindbladian: collapse operator dimension mismatch");
        const MatrixAoS ldl = matmul(dagger(lk), lk);
        add_scaled(l, cplx{1.0, 0.0}, kron(lk, conj(lk)));
        add_scaled(l, cplx{-0.5, 0.0}, kron(ldl, eye));
        add_scaled(l, cplx{-0.5, 0.0}, kron(eye, transpose(ldl)));
    }
    return Lindbladian{d, std::move(l)};
}

MatrixAoS apply_rhs(const LindbladModel& model, const MatrixAoS& rho) {
    if (rho.rows != model.dim || rho.cols != model.dim)
        throw std::invalid_argument("apply_rhs: state dimension mismatch");

    const cplx mi{0.0, -1.0};
    MatrixAoS out = mi * (matmul(model.hamiltonian, rho) - matmul(rho, model.hamiltonian));
    for (const auto& lk : model.collapse_ops) {
        const MatrixAoS ld = dagger(lk);
        const MatrixAoS ldl = matmul(ld, lk);
        add_scaled(out, cplx{1.0, 0.0}, matmul(matmul(lk, rho), ld));
        add_scaled(out, cplx{-0.5, 0.0}, matmul(ldl, rho) + matmul(rho, ldl));
    }
    return out;
}

MatrixAoS lowering_operator(std::size_t d) {
    MatrixAoS a(d, d);
    for (std::size_t n = 1; n < d; ++n) a(n - 1, n) = cplx{std::sqrt(double(n)), 0.0};
    return a;
}

LindbladModel transmon_model(double t1, double tphi, double anharmonicity, double drive_amp) {
    if (!(t1 > 0.0) || !(tphi > 0.0))
        throw std::invalid_argument("transmon_model: t1 and tphi must be positive");

    const std::size_t d = 3;
    const MatrixAoS a = lowering_operator(d);
    const MatrixAoS ad = dagger(a);

    // drive_amp*(a + a^dag)/2 + (anharm/2)*a^dag a^dag a a
    MatrixAoS h = cplx{drive_amp / 2.0, 0.0} * (a + ad);
    add_scaled(h, cplx{anharmonicity / 2.0, 0.0}, matmul(matmul(ad, ad), matmul(a, a)));

    std::vector<MatrixAoS> ls;
    if (std::isfinite(t1)) ls.push_back(cplx{std::sqrt(1.0 / t1), 0.0} * a);
    if (std::isfinite(tphi))
        ls.push_back(cplx{std::sqrt(1.0 / (2.0 * tphi)), 0.0} * matmul(ad, a));

    return make_model(std::move(h), std::move(ls));
}

}  // namespace lb
