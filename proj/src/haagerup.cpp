#include "mubcert/haagerup.hpp"

#include <algorithm>
#include <cmath>

namespace mubcert {

RealSymmetricMatrix haagerup_matrix(const MubPair& pair) {
    const int d = pair.d;
    const ComplexMatrix& h = pair.H;
    RealSymmetricMatrix lam(d * d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int t = 0; t < d; ++t) {
                    const cdouble prod =
                        std::conj(h(z, y)) * h(z, t) * std::conj(h(x, t)) * h(x, y);
                    lam.set(x * d + y, z * d + t, d * prod.real());
                }
    return lam;
}

std::vector<Cluster> cluster_eigenvalues(const std::vector<double>& ascending, double gap) {
    std::vector<Cluster> clusters;
    if (ascending.empty()) return clusters;
    double sum = ascending[0];
    int count = 1;
    for (size_t i = 1; i < ascending.size(); ++i) {
        if (ascending[i] - ascending[i - 1] > gap) {
            clusters.push_back({sum / count, count});
            sum = 0.0;
            count = 0;
        }
        sum += ascending[i];
        ++count;
    }
    clusters.push_back({sum / count, count});
    return clusters;
}

HaagerupSpectrum spectrum(const MubPair& pair, const Tolerances& tol) {
    HaagerupSpectrum spec;
    spec.label = pair.label;
    spec.d = pair.d;
    spec.eigenvalues = eig_sym(haagerup_matrix(pair), tol).values;
    spec.clusters = cluster_eigenvalues(spec.eigenvalues, tol.cluster);
    spec.nearest_to_minus_one = std::abs(spec.eigenvalues.front() + 1.0);
    for (double v : spec.eigenvalues)
        spec.nearest_to_minus_one = std::min(spec.nearest_to_minus_one, std::abs(v + 1.0));
    return spec;
}

MinusOneTest has_minus_one(const HaagerupSpectrum& spec, const Tolerances& tol) {
    return {spec.nearest_to_minus_one <= tol.cluster, spec.nearest_to_minus_one};
}

HaagerupSpectrum fourier_spectrum_closed_form(const AbelianGroup& g, const Tolerances& tol) {
    HaagerupSpectrum spec;
    spec.label = "fourier-" + group_label(g) + "-closed-form";
    spec.d = static_cast<int>(g.order);
    spec.eigenvalues.reserve(static_cast<size_t>(g.order) * g.order);
    for (long long r = 0; r < g.order; ++r)
        for (long long s = 0; s < g.order; ++s)
            spec.eigenvalues.push_back(
                pairing(g, element_at(g, r), element_at(g, s)).real());
    std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end());
    spec.clusters = cluster_eigenvalues(spec.eigenvalues, tol.cluster);
    spec.nearest_to_minus_one = std::abs(spec.eigenvalues.front() + 1.0);
    for (double v : spec.eigenvalues)
        spec.nearest_to_minus_one = std::min(spec.nearest_to_minus_one, std::abs(v + 1.0));
    return spec;
}

nlohmann::json spectrum_to_json(const HaagerupSpectrum& spec, const Tolerances& tol) {
    const MinusOneTest m1 = has_minus_one(spec, tol);
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : spec.clusters)
        clusters.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
    return {{"label", spec.label},
            {"d", spec.d},
            {"eigenvalues", spec.eigenvalues},
            {"clusters", clusters},
            {"has_minus_one", m1.present},
            {"distance_to_minus_one", m1.distance}};
}

Table1Expectation table1_expected(const std::string& id, double a) {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    Table1Expectation e;
    auto sort_clusters = [&]() {
        std::sort(e.clusters.begin(), e.clusters.end(),
                  [](const Cluster& l, const Cluster& r) { return l.value < r.value; });
    };
    if (id == "d4-f4") {
        const double sa = std::abs(std::sin(a));
        e.clusters = {{-1.0, 4}, {-sa, 2}, {sa, 2}, {1.0, 8}};
        sort_clusters();
        return e;
    }
    if (id == "d6-m1") {
        e.clusters = {{-1.0, 5}, {-2.0 / 3.0, 6}, {0.0, 10}, {1.0, 15}};
        return e;
    }
    if (id == "d6-m2") {
        const double root = std::sqrt(7.0 * (7.0 - 4.0 * s3));
        e.clusters = {{-1.0, 5},
                      {-(s3 - 1.0), 2},
                      {-(root + 2.0 * s3 - 3.0) / 2.0, 4},
                      {-(2.0 - s3), 4},
                      {(root - 2.0 * s3 + 3.0) / 2.0, 4},
                      {3.0 * s3 - 5.0, 2},
                      {1.0, 15}};
        sort_clusters();
        return e;
    }
    if (id == "d6-m3") {
        e.clusters = {{-1.0, 9}, {0.25, 16}, {1.0, 11}};
        return e;
    }
    if (id == "d7-m1") {
        const double s22 = std::sqrt(22.0), s65 = std::sqrt(65.0);
        e.clusters = {{-1.0, 1},
                      {-(9.0 + s22) / 14.0, 2},
                      {-(3.0 * s65 + 1.0) / 28.0, 1},
                      {-11.0 / 14.0, 1},
                      {-(5.0 + 3.0 * s2) / 14.0, 5},
                      {-0.5, 1},
                      {(s22 - 9.0) / 14.0, 2},
                      {-(5.0 - 3.0 * s2) / 14.0, 5},
                      {(3.0 * s65 - 1.0) / 28.0, 1},
                      {13.0 / 14.0, 2},
                      {1.0, 16}};
        sort_clusters();
        e.has_quartic_clusters = true;
        return e;
    }
    if (id == "d7-m2") {
        const double s57 = std::sqrt(57.0);
        e.clusters = {{-s57 / 8.0, 8}, {-0.75, 8},      {-s2 / 4.0, 6},
                      {s2 / 4.0, 6},   {s57 / 8.0, 8},  {1.0, 13}};
        return e;
    }
    throw std::out_of_range("table1_expected: unknown catalog id '" + id + "'");
}

double quartic_residual(double x) {
    // Horner form of 19208 x^4 + 15092 x^3 - 12642 x^2 - 6167 x + 3031.
    return (((19208.0 * x + 15092.0) * x - 12642.0) * x - 6167.0) * x + 3031.0;
}

}  // namespace mubcert
