#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mubcert/numerics.hpp"

using namespace mubcert;

namespace {

RealSymmetricMatrix diag(const std::vector<double>& d) {
    RealSymmetricMatrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

RealSymmetricMatrix random_symmetric(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RealSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
    return m;
}

}  // namespace

TEST_CASE("eig_sym on simple matrices") {
    SECTION("identity") {
        RealSymmetricMatrix m(3);
        for (int i = 0; i < 3; ++i) m.set(i, i, 1.0);
        const auto r = eig_sym(m);
        for (double v : r.values) CHECK_THAT(v, Catch::Matchers::WithinAbs(1.0, 1e-14));
    }
    SECTION("diagonal") {
        const auto r = eig_sym(diag({-1.0, 0.0, 2.0}));
        CHECK(r.values == std::vector<double>{-1.0, 0.0, 2.0});
    }
    SECTION("pauli x") {
        RealSymmetricMatrix m(2);
        m.set(0, 1, 1.0);
        const auto r = eig_sym(m);
        CHECK_THAT(r.values[0], Catch::Matchers::WithinAbs(-1.0, 1e-14));
        CHECK_THAT(r.values[1], Catch::Matchers::WithinAbs(1.0, 1e-14));
    }
}

TEST_CASE("eig_sym residual, orthonormality and trace") {
    const Tolerances tol;
    for (unsigned seed : {1u, 2u, 3u}) {
        const int n = 12;
        const RealSymmetricMatrix m = random_symmetric(n, seed);
        const auto r = eig_sym(m, tol, true);

        double norm = m.max_abs() * n;
        double tr = 0.0;
        for (double v : r.values) tr += v;
        CHECK_THAT(tr, Catch::Matchers::WithinAbs(m.trace(), 1e-10 * n * std::max(1.0, norm)));

        // residual ||Mv - lambda v|| and pairwise orthonormality
        for (int k = 0; k < n; ++k) {
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                double mv = 0.0;
                for (int j = 0; j < n; ++j) mv += m(i, j) * r.vectors[k][j];
                res += (mv - r.values[k] * r.vectors[k][i]) * (mv - r.values[k] * r.vectors[k][i]);
            }
            CHECK(std::sqrt(res) <= tol.eig_residual * std::max(1.0, norm));
        }
        for (int k = 0; k < n; ++k)
            for (int l = k; l < n; ++l) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += r.vectors[k][i] * r.vectors[l][i];
                CHECK_THAT(dot, Catch::Matchers::WithinAbs(k == l ? 1.0 : 0.0, 1e-11));
            }
    }
}

TEST_CASE("eig_sym eigenvalues invariant under orthogonal similarity") {
    const int n = 8;
    const RealSymmetricMatrix m = random_symmetric(n, 42);
    const auto base = eig_sym(m);

    // An orthogonal matrix: the eigenvector basis of another random symmetric matrix.
    const auto q = eig_sym(random_symmetric(n, 99), Tolerances{}, true).vectors;
    std::vector<double> rotated(n * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += q[i][k] * m(k, l) * q[j][l];
            rotated[i * n + j] = s;
        }
    const auto r = eig_sym(RealSymmetricMatrix::from_entries(n, rotated));
    for (int i = 0; i < n; ++i)
        CHECK_THAT(r.values[i], Catch::Matchers::WithinAbs(base.values[i], 1e-7));
}

TEST_CASE("min_eig_hermitian") {
    CHECK_THAT(min_eig_hermitian(ComplexMatrix::identity(4)),
               Catch::Matchers::WithinAbs(1.0, 1e-12));

    ComplexMatrix proj(3, 3);
    proj(0, 0) = 1.0;
    CHECK_THAT(min_eig_hermitian(proj), Catch::Matchers::WithinAbs(0.0, 1e-12));

    ComplexMatrix m(2, 2);
    m(0, 0) = 0.5;
    m(1, 1) = -0.25;
    CHECK_THAT(min_eig_hermitian(m), Catch::Matchers::WithinAbs(-0.25, 1e-12));

    ComplexMatrix offherm(2, 2);
    offherm(0, 1) = cdouble(0.0, 1.0);
    offherm(1, 0) = cdouble(0.0, 1.0);  // should be -i to be Hermitian
    CHECK_THROWS_AS(min_eig_hermitian(offherm), std::invalid_argument);

    // complex Hermitian: pauli_y spectrum {-1, 1}
    ComplexMatrix py(2, 2);
    py(0, 1) = cdouble(0.0, -1.0);
    py(1, 0) = cdouble(0.0, 1.0);
    CHECK_THAT(min_eig_hermitian(py), Catch::Matchers::WithinAbs(-1.0, 1e-12));
    const auto ev = hermitian_eigenvalues(py);
    REQUIRE(ev.size() == 2);
    CHECK_THAT(ev[1], Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("gram_rank basics") {
    const auto eye = ComplexMatrix::identity(2);
    CHECK(gram_rank({eye, eye}) == 1);

    ComplexMatrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    CHECK(gram_rank({p0, p1}) == 2);

    // Qubit joint observable at lambda = mu = 1/sqrt(2): effects span {I, az, bx}.
    const double w = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> effects;
    for (double xs : {1.0, -1.0})
        for (double ys : {1.0, -1.0}) {
            ComplexMatrix c(2, 2);
            c(0, 0) = 0.25 * (1.0 + xs * w);
            c(1, 1) = 0.25 * (1.0 - xs * w);
            c(0, 1) = 0.25 * ys * w;
            c(1, 0) = 0.25 * ys * w;
            effects.push_back(c);
        }
    CHECK(gram_rank(effects) == 3);
}

TEST_CASE("gram_rank invariances") {
    ComplexMatrix p0(2, 2), p1(2, 2), h(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    const std::vector<ComplexMatrix> ops{p0, p1, h};
    const int base = gram_rank(ops);

    // scalar rescaling
    CHECK(gram_rank({2.5 * p0, p1, cdouble(0.0, -3.0) * h}) == base);

    // simultaneous unitary conjugation by the Hadamard unitary
    ComplexMatrix u(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    u(0, 0) = s; u(0, 1) = s; u(1, 0) = s; u(1, 1) = -s;
    std::vector<ComplexMatrix> conj;
    for (const auto& o : ops) conj.push_back(u * o * u.adjoint());
    CHECK(gram_rank(conj) == base);
}

TEST_CASE("subspace_intersection_dim") {
    auto e = [](int i, int n) {
        std::vector<cdouble> v(n);
        v[i] = 1.0;
        return ComplexMatrix::column(v);
    };
    CHECK(subspace_intersection_dim({e(0, 3)}, {e(1, 3)}) == 0);
    CHECK(subspace_intersection_dim({e(0, 3), e(1, 3)}, {e(0, 3), e(1, 3)}) == 2);
    CHECK(subspace_intersection_dim({e(0, 4), e(1, 4)}, {e(1, 4), e(2, 4)}) == 1);

    // symmetric in its arguments
    std::vector<cdouble> mixed{0.5, cdouble(0.0, 0.5), 0.5, 0.5};
    const auto u = std::vector<ComplexMatrix>{e(0, 4), ComplexMatrix::column(mixed)};
    const auto v = std::vector<ComplexMatrix>{ComplexMatrix::column(mixed), e(3, 4)};
    CHECK(subspace_intersection_dim(u, v) == subspace_intersection_dim(v, u));
    CHECK(subspace_intersection_dim(u, v) == 1);
}

TEST_CASE("range_columns spans the range") {
    // rank-2 projector onto span{e0, e1} in dim 4
    ComplexMatrix p(4, 4);
    p(0, 0) = 1.0;
    p(1, 1) = 1.0;
    const auto cols = range_columns(p);
    CHECK(gram_rank(cols) == 2);
    CHECK(hermitian_rank(p) == 2);
}
