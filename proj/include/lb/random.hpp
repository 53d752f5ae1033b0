#pragma once

#include <cstdint>
#include <random>

#include "lb/complex_matrix.hpp"

namespace lb {

inline constexpr std::uint64_t kDefaultSeed = 42;

inline std::mt19937_64 make_rng(std::uint64_t seed = kDefaultSeed) {
    return std::mt19937_64(seed);
}

/// Entries uniform in [-1, 1] for both components.
inline MatrixAoS random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    MatrixAoS m(rows, cols);
    for (auto& z : m.data) z = cplx{u(rng), u(rng)};
    return m;
}

inline MatrixAoS random_hermitian(std::mt19937_64& rng, std::size_t d) {
    MatrixAoS r = random_matrix(rng, d, d);
    return cplx{0.5, 0.0} * (r + dagger(r));
}

/// Random density matrix: G G†, normalized to unit trace. Hermitian,
/// positive semidefinite by construction.
inline MatrixAoS random_density(std::mt19937_64& rng, std::size_t d) {
    MatrixAoS g = random_matrix(rng, d, d);
    MatrixAoS rho = matmul(g, dagger(g));
    cplx tr{0.0, 0.0};
    for (std::size_t i = 0; i < d; ++i) tr += rho(i, i);
    return (cplx{1.0, 0.0} / tr) * rho;
}

}  // namespace lb
