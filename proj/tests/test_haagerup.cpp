#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "mubcert/haagerup.hpp"

using namespace mubcert;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

bool clusters_match(const std::vector<Cluster>& got, const std::vector<Cluster>& expect,
                    double value_tol) {
    if (got.size() != expect.size()) return false;
    for (size_t i = 0; i < got.size(); ++i) {
        if (got[i].multiplicity != expect[i].multiplicity) return false;
        if (std::abs(got[i].value - expect[i].value) > value_tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("haagerup_matrix structure") {
    const Tolerances tol;
    for (const auto& pair :
         {fourier_mub(make_group({3})), fourier_mub(make_group({2, 2})),
          hadamard_to_mub(family_f4(0.8), "f4")}) {
        const auto lam = haagerup_matrix(pair);
        const int n = pair.d * pair.d;
        REQUIRE(lam.size() == n);

        // exact symmetry by construction
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(lam(i, j) == lam(j, i));

        // diagonal entries d |H|^4 = 1/d
        for (int i = 0; i < n; ++i)
            CHECK_THAT(lam(i, i), Catch::Matchers::WithinAbs(1.0 / pair.d, 1e-12));

        // every row sums to 1: the all-ones vector is a 1-eigenvector
        for (int i = 0; i < n; ++i) {
            double rowsum = 0.0;
            for (int j = 0; j < n; ++j) rowsum += lam(i, j);
            CHECK_THAT(rowsum, Catch::Matchers::WithinAbs(1.0, 1e-10));
        }

        const auto spec = spectrum(pair, tol);
        CHECK(spec.eigenvalues.back() >= 1.0 - tol.cluster);
        int total = 0;
        for (const auto& c : spec.clusters) total += c.multiplicity;
        CHECK(total == n);
    }
}

TEST_CASE("fourier Z2 brute force spectrum") {
    const auto spec = spectrum(fourier_mub(make_group({2})));
    REQUIRE(spec.clusters.size() == 2);
    CHECK(clusters_match(spec.clusters, {{-1.0, 1}, {1.0, 3}}, 1e-12));
}

TEST_CASE("catalog reference spectra") {
    const Tolerances tol;
    SECTION("d4 family at a = pi/3") {
        const auto spec = spectrum(hadamard_to_mub(family_f4(kPi / 3.0), "f4"), tol);
        const double s = std::sin(kPi / 3.0);
        CHECK(clusters_match(spec.clusters, {{-1.0, 4}, {-s, 2}, {s, 2}, {1.0, 8}}, 1e-10));
    }
    SECTION("d6-m3") {
        const auto spec = spectrum(hadamard_to_mub(d6_m3(), "d6-m3"), tol);
        CHECK(clusters_match(spec.clusters, {{-1.0, 9}, {0.25, 16}, {1.0, 11}}, 1e-10));
    }
    SECTION("d7-m2") {
        const auto spec = spectrum(hadamard_to_mub(d7_m2(+1), "d7-m2"), tol);
        const double s57 = std::sqrt(57.0) / 8.0, s2 = std::sqrt(2.0) / 4.0;
        CHECK(clusters_match(
            spec.clusters,
            {{-s57, 8}, {-0.75, 8}, {-s2, 6}, {s2, 6}, {s57, 8}, {1.0, 13}}, 1e-10));
    }
}

TEST_CASE("has_minus_one") {
    const Tolerances tol;
    SECTION("d7-m1 contains -1") {
        const auto spec = spectrum(hadamard_to_mub(d7_m1(), "d7-m1"), tol);
        const auto m1 = has_minus_one(spec, tol);
        CHECK(m1.present);
        CHECK(m1.distance < tol.cluster);
    }
    SECTION("d7-m2 distance 1 - sqrt(57)/8") {
        const auto spec = spectrum(hadamard_to_mub(d7_m2(+1), "d7-m2"), tol);
        const auto m1 = has_minus_one(spec, tol);
        CHECK_FALSE(m1.present);
        CHECK_THAT(m1.distance,
                   Catch::Matchers::WithinAbs(1.0 - std::sqrt(57.0) / 8.0, 1e-10));
    }
    SECTION("fourier Z3 distance 1/2") {
        const auto spec = spectrum(fourier_mub(make_group({3})), tol);
        const auto m1 = has_minus_one(spec, tol);
        CHECK_FALSE(m1.present);
        CHECK_THAT(m1.distance, Catch::Matchers::WithinAbs(0.5, 1e-10));
    }
}

TEST_CASE("fourier closed form") {
    CHECK(clusters_match(fourier_spectrum_closed_form(make_group({2})).clusters,
                         {{-1.0, 1}, {1.0, 3}}, 1e-14));
    CHECK(clusters_match(fourier_spectrum_closed_form(make_group({2, 2})).clusters,
                         {{-1.0, 6}, {1.0, 10}}, 1e-14));
    CHECK(clusters_match(fourier_spectrum_closed_form(make_group({3})).clusters,
                         {{-0.5, 4}, {1.0, 5}}, 1e-14));
}

TEST_CASE("fourier numeric spectrum equals the closed form") {
    const Tolerances tol;
    for (const auto& factors :
         std::vector<std::vector<long long>>{{2}, {3}, {2, 2}, {5}, {2, 4}}) {
        const auto g = make_group(factors);
        const auto numeric = spectrum(fourier_mub(g), tol);
        const auto closed = fourier_spectrum_closed_form(g, tol);
        REQUIRE(numeric.clusters.size() == closed.clusters.size());
        for (size_t i = 0; i < numeric.clusters.size(); ++i) {
            CHECK(numeric.clusters[i].multiplicity == closed.clusters[i].multiplicity);
            CHECK_THAT(numeric.clusters[i].value,
                       Catch::Matchers::WithinAbs(closed.clusters[i].value, tol.cluster));
        }
    }
}

TEST_CASE("relabeling leaves the eigenvalue multiset unchanged") {
    const Tolerances tol;
    const auto base = spectrum(hadamard_to_mub(d6_m3(), "m3"), tol);

    // permute the outcome labels of both bases: rows and columns of H
    std::mt19937 rng(7);
    std::vector<int> rowp{0, 1, 2, 3, 4, 5}, colp = rowp;
    std::shuffle(rowp.begin(), rowp.end(), rng);
    std::shuffle(colp.begin(), colp.end(), rng);
    const auto h = d6_m3();
    ComplexMatrix perm(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) perm(i, j) = h(rowp[i], colp[j]);
    const auto relabeled = spectrum(hadamard_to_mub(perm, "m3-relabeled"), tol);
    for (int k = 0; k < 36; ++k)
        CHECK_THAT(relabeled.eigenvalues[k],
                   Catch::Matchers::WithinAbs(base.eigenvalues[k], tol.cluster));

    // exchanging the two bases transposes the Hadamard matrix (up to conjugation)
    const auto exchanged = spectrum(hadamard_to_mub(h.adjoint(), "m3-exchanged"), tol);
    for (int k = 0; k < 36; ++k)
        CHECK_THAT(exchanged.eigenvalues[k],
                   Catch::Matchers::WithinAbs(base.eigenvalues[k], tol.cluster));
}

TEST_CASE("rephasing leaves Lambda entrywise unchanged") {
    const auto h = d7_m1();
    const auto base = haagerup_matrix(hadamard_to_mub(h, "m1"));

    // multiply each psi_y (column) by a unit phase
    ComplexMatrix rephased = h;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int y = 0; y < 7; ++y) {
        const cdouble phase = std::polar(1.0, ang(rng));
        for (int x = 0; x < 7; ++x) rephased(x, y) *= phase;
    }
    // and each phi_x (row) by another phase
    for (int x = 0; x < 7; ++x) {
        const cdouble phase = std::polar(1.0, ang(rng));
        for (int y = 0; y < 7; ++y) rephased(x, y) *= phase;
    }
    const auto modified = haagerup_matrix(hadamard_to_mub(rephased, "m1-rephased"));
    double worst = 0.0;
    for (int i = 0; i < 49; ++i)
        for (int j = 0; j < 49; ++j) worst = std::max(worst, std::abs(base(i, j) - modified(i, j)));
    CHECK(worst < 1e-13);
}

TEST_CASE("cluster_eigenvalues merging") {
    const auto clusters = cluster_eigenvalues({-1.0, -1.0 + 1e-9, 0.5, 0.5 + 2e-7, 1.0}, 1e-7);
    REQUIRE(clusters.size() == 4);
    CHECK(clusters[0].multiplicity == 2);
    CHECK(clusters[1].multiplicity == 1);
    CHECK(clusters[2].multiplicity == 1);
    CHECK(clusters[3].multiplicity == 1);
}

TEST_CASE("spectra computed concurrently agree with the serial result") {
    const Tolerances tol;
    const auto pair = hadamard_to_mub(d7_m1(), "d7-m1");
    const auto serial = spectrum(pair, tol);

    std::vector<std::thread> workers;
    std::vector<HaagerupSpectrum> out(4);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] { out[t] = spectrum(pair, tol); });
    for (auto& w : workers) w.join();

    for (const auto& spec : out) {
        REQUIRE(spec.eigenvalues.size() == serial.eigenvalues.size());
        for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
            CHECK(spec.eigenvalues[i] == serial.eigenvalues[i]);
    }
}

TEST_CASE("table1_expected self-consistency") {
    for (const auto& id : catalog_ids()) {
        const auto e = table1_expected(id, 0.7);
        int total = 0;
        for (const auto& c : e.clusters) total += c.multiplicity;
        const int d = id[1] == '4' ? 4 : (id[1] == '6' ? 6 : 7);
        CHECK(total == (e.has_quartic_clusters ? d * d - 12 : d * d));
        CHECK(std::is_sorted(e.clusters.begin(), e.clusters.end(),
                             [](const Cluster& a, const Cluster& b) { return a.value < b.value; }));
    }
    CHECK_THROWS_AS(table1_expected("bogus"), std::out_of_range);
}
