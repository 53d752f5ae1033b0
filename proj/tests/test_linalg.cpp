#include <doctest.h>

#include <cstdint>
#include <sstream>

#include "lb/complex_matrix.hpp"
#include "lb/random.hpp"
#include "oracles.hpp"

using namespace lb;
using lbtest::max_abs_diff;

namespace {

MatrixAoS diag(std::initializer_list<cplx> entries) {
    MatrixAoS m(entries.size(), entries.size());
    std::size_t i = 0;
    for (cplx z : entries) {
        m(i, i) = z;
        ++i;
    }
    return m;
}

bool aligned64(const void* p) { return reinterpret_cast<std::uintptr_t>(p) % 64 == 0; }

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("kron identities") {
    const MatrixAoS i2 = MatrixAoS::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), MatrixAoS::identity(4)) == 0.0);

    const MatrixAoS d12 = diag({cplx{1, 0}, cplx{2, 0}});
    const MatrixAoS d34 = diag({cplx{3, 0}, cplx{4, 0}});
    CHECK(max_abs_diff(kron(d12, d34),
                       diag({cplx{3, 0}, cplx{4, 0}, cplx{6, 0}, cplx{8, 0}})) == 0.0);
}

TEST_CASE("kron matches the four-loop oracle on random input") {
    auto rng = make_rng();
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixAoS a = random_matrix(rng, 3, 3);
        const MatrixAoS b = random_matrix(rng, 3, 3);
        CHECK(max_abs_diff(kron(a, b), lbtest::oracle_kron(a, b)) == 0.0);
    }
}

TEST_CASE("kron associativity") {
    auto rng = make_rng();
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixAoS a = random_matrix(rng, 2, 2);
        const MatrixAoS b = random_matrix(rng, 3, 3);
        const MatrixAoS c = random_matrix(rng, 2, 2);
        CHECK(rel_error(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-13);
    }
}

TEST_CASE("kron mixed-product property") {
    auto rng = make_rng();
    for (int trial = 0; trial < 10; ++trial) {
        const MatrixAoS a = random_matrix(rng, 2, 3);
        const MatrixAoS c = random_matrix(rng, 3, 2);
        const MatrixAoS b = random_matrix(rng, 2, 2);
        const MatrixAoS d = random_matrix(rng, 2, 2);
        CHECK(rel_error(matmul(kron(a, b), kron(c, d)), kron(matmul(a, c), matmul(b, d))) <
              1e-12);
    }
}

TEST_CASE("matmul identities and oracle") {
    auto rng = make_rng();
    const MatrixAoS a = random_matrix(rng, 4, 4);
    CHECK(max_abs_diff(matmul(a, MatrixAoS::identity(4)), a) == 0.0);

    MatrixAoS nilpotent(2, 2);
    nilpotent(0, 1) = cplx{1, 0};
    CHECK(max_abs(matmul(nilpotent, nilpotent)) == 0.0);

    for (int trial = 0; trial < 10; ++trial) {
        const MatrixAoS x = random_matrix(rng, 4, 4);
        const MatrixAoS y = random_matrix(rng, 4, 4);
        CHECK(rel_error(matmul(x, y), lbtest::oracle_matmul(x, y)) < 1e-13);
    }
}

TEST_CASE("matmul rejects mismatched shapes") {
    auto rng = make_rng();
    const MatrixAoS a = random_matrix(rng, 2, 3);
    const MatrixAoS b = random_matrix(rng, 2, 3);
    CHECK_THROWS_AS((void)matmul(a, b), std::invalid_argument);
}

TEST_CASE("dagger") {
    auto rng = make_rng();
    const MatrixAoS h = random_hermitian(rng, 4);
    CHECK(max_abs_diff(dagger(h), h) == 0.0);

    MatrixAoS m(2, 2);
    m(0, 1) = cplx{0, 1};
    MatrixAoS expected(2, 2);
    expected(1, 0) = cplx{0, -1};
    CHECK(max_abs_diff(dagger(m), expected) == 0.0);

    const MatrixAoS a = random_matrix(rng, 3, 5);
    CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);
}

TEST_CASE("conj") {
    auto rng = make_rng();
    MatrixAoS real(2, 2);
    real(0, 0) = cplx{1, 0};
    real(1, 1) = cplx{-2, 0};
    CHECK(max_abs_diff(conj(real), real) == 0.0);

    MatrixAoS i1(1, 1);
    i1(0, 0) = cplx{0, 1};
    CHECK(conj(i1)(0, 0) == cplx{0, -1});

    const MatrixAoS a = random_matrix(rng, 3, 4);
    CHECK(max_abs_diff(conj(a), transpose(dagger(a))) == 0.0);
}

TEST_CASE("one_norm") {
    CHECK(one_norm(MatrixAoS::identity(5)) == 1.0);

    MatrixAoS m(1, 1);
    m(0, 0) = cplx{3, 4};
    CHECK(one_norm(m) == 5.0);

    auto rng = make_rng();
    const MatrixAoS a = random_matrix(rng, 5, 5);
    CHECK(one_norm(a) == doctest::Approx(lbtest::oracle_one_norm(a)).epsilon(1e-15));
}

TEST_CASE("layout conversion round trip") {
    auto rng = make_rng();
    const MatrixAoS a = random_matrix(rng, 9, 9);
    const MatrixAoS back = from_soa(to_soa(a));
    CHECK(max_abs_diff(back, a) == 0.0);

    MatrixAoS one(1, 1);
    one(0, 0) = cplx{2, 3};
    const MatrixSoA s = to_soa(one);
    CHECK(s.re[0] == 2.0);
    CHECK(s.im[0] == 3.0);

    const MatrixSoA zero = to_soa(MatrixAoS(3, 3));
    for (double x : zero.re) CHECK(x == 0.0);
    for (double x : zero.im) CHECK(x == 0.0);
}

TEST_CASE("vec follows the row-major convention") {
    MatrixAoS rho(2, 2);
    rho(0, 0) = cplx{1, 0};
    rho(0, 1) = cplx{2, 0};
    rho(1, 0) = cplx{3, 0};
    rho(1, 1) = cplx{4, 0};
    const VectorAoS v = vec(rho);
    REQUIRE(v.rows == 4);
    REQUIRE(v.cols == 1);
    CHECK(v.data[0] == cplx{1, 0});
    CHECK(v.data[1] == cplx{2, 0});
    CHECK(v.data[2] == cplx{3, 0});
    CHECK(v.data[3] == cplx{4, 0});

    auto rng = make_rng();
    const MatrixAoS r = random_matrix(rng, 3, 3);
    CHECK(max_abs_diff(unvec(vec(r)), r) == 0.0);
}

TEST_CASE("vec/unvec reject bad shapes") {
    auto rng = make_rng();
    CHECK_THROWS_AS((void)vec(random_matrix(rng, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS((void)unvec(random_matrix(rng, 5, 1)), std::invalid_argument);
}

TEST_CASE("vec(A rho B) = (A kron B^T) vec(rho)") {
    auto rng = make_rng();
    for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
        for (int trial = 0; trial < 50; ++trial) {
            const MatrixAoS a = random_matrix(rng, d, d);
            const MatrixAoS rho = random_matrix(rng, d, d);
            const MatrixAoS b = random_matrix(rng, d, d);
            const VectorAoS lhs = vec(matmul(matmul(a, rho), b));
            const VectorAoS rhs = matmul(kron(a, transpose(b)), vec(rho));
            CHECK(rel_error(lhs, rhs) < 1e-12);
        }
    }
}

TEST_CASE("allocations are 64-byte aligned") {
    auto rng = make_rng();
    for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{9}, std::size_t{27}}) {
        const MatrixAoS a = random_matrix(rng, n, n);
        CHECK(aligned64(a.data.data()));
        const MatrixSoA s = to_soa(a);
        CHECK(aligned64(s.re.data()));
        CHECK(aligned64(s.im.data()));
        const VectorAoS v(n * n, 1);
        CHECK(aligned64(v.data.data()));
    }
}

TEST_CASE("interchange format round trips at full precision") {
    auto rng = make_rng();
    MatrixAoS a = random_matrix(rng, 3, 4);
    a(0, 0) = cplx{1e-308, -1.2345678901234567e300};
    a(1, 2) = cplx{0.1, -0.1};

    std::stringstream ss;
    write_matrix(ss, a);
    const std::string text = ss.str();
    CHECK(text.rfind("complex-matrix 3 4\n", 0) == 0);

    const MatrixAoS back = read_matrix(ss);
    REQUIRE(back.rows == 3);
    REQUIRE(back.cols == 4);
    CHECK(max_abs_diff(back, a) == 0.0);
}

TEST_CASE("interchange format rejects malformed input") {
    {
        std::stringstream ss("not-a-matrix 2 2\n");
        CHECK_THROWS_AS((void)read_matrix(ss), std::runtime_error);
    }
    {
        std::stringstream ss("complex-matrix 2 2\n1 0\n");
        CHECK_THROWS_AS((void)read_matrix(ss), std::runtime_error);
    }
    {
        std::stringstream ss("complex-matrix 1 1\nbogus 0\n");
        CHECK_THROWS_AS((void)read_matrix(ss), std::runtime_error);
    }
}

}  // TEST_SUITE
