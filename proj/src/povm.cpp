#include "mubcert/povm.hpp"

#include <cmath>
#include <sstream>

#include "mubcert/region.hpp"

namespace mubcert {

namespace {

constexpr double kRadicandSlack = 1e-14;  // clamp guard at the analytic zeros of the radicands

double clamped_sqrt(double radicand, const char* who) {
    if (radicand < 0.0) {
        if (radicand < -kRadicandSlack) {
            std::ostringstream msg;
            msg << who << ": negative radicand " << radicand;
            throw std::out_of_range(msg.str());
        }
        radicand = 0.0;
    }
    return std::sqrt(radicand);
}

}  // namespace

const char* joint_kind_name(JointKind k) {
    switch (k) {
        case JointKind::luders_a_branch: return "luders-A-branch";
        case JointKind::luders_b_branch: return "luders-B-branch";
        case JointKind::vertex: return "vertex";
        case JointKind::qubit: return "qubit";
        case JointKind::custom: return "custom";
    }
    return "custom";
}

namespace {

ValidationReport validate_effects(int d, const std::vector<ComplexMatrix>& effects,
                                  const Tolerances& tol) {
    ValidationReport report;
    double herm_dev = 0.0;
    double min_eig = 0.0;
    for (const auto& e : effects) {
        herm_dev = std::max(herm_dev, e.hermiticity_defect());
        min_eig = std::min(min_eig, min_eig_hermitian(e, Tolerances{.match = 1e-6}));
    }
    report.checks.push_back({"hermiticity", herm_dev <= tol.match, herm_dev});
    report.checks.push_back({"positivity", min_eig >= -tol.psd, std::max(0.0, -min_eig)});

    ComplexMatrix sum(d, d);
    for (const auto& e : effects) sum += e;
    const double norm_dev = (sum - ComplexMatrix::identity(d)).max_abs();
    report.checks.push_back({"normalization", norm_dev <= tol.match, norm_dev});
    return report;
}

}  // namespace

ValidationReport Observable::validate(const Tolerances& tol) const {
    return validate_effects(d, effects, tol);
}

ValidationReport JointObservable::validate(const Tolerances& tol) const {
    return validate_effects(d, effects, tol);
}

void check_noise_range(double nu, int d) {
    if (d < 2) throw std::invalid_argument("check_noise_range: d must be >= 2");
    const double lo = 1.0 / (1.0 - d);
    if (nu < lo - 1e-12 || nu > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "noise parameter " << nu << " outside [" << lo << ", 1] for d = " << d;
        throw std::out_of_range(msg.str());
    }
}

std::pair<Observable, Observable> sharp_observables(const MubPair& pair) {
    const int d = pair.d;
    Observable a{d, {}}, b{d, {}};
    a.effects.reserve(d);
    b.effects.reserve(d);
    for (int x = 0; x < d; ++x) {
        ComplexMatrix proj(d, d);
        proj(x, x) = 1.0;
        a.effects.push_back(std::move(proj));
    }
    for (int y = 0; y < d; ++y) {
        std::vector<cdouble> psi(d);
        for (int x = 0; x < d; ++x) psi[x] = pair.H(x, y);
        b.effects.push_back(ComplexMatrix::outer(psi));
    }
    return {std::move(a), std::move(b)};
}

Observable uniform_observable(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("uniform_observable: d, m must be >= 1");
    Observable u{d, {}};
    u.effects.assign(m, (1.0 / m) * ComplexMatrix::identity(d));
    return u;
}

Observable noisy(const Observable& x, double nu) {
    check_noise_range(nu, x.d);
    const int m = x.outcomes();
    Observable out{x.d, {}};
    out.effects.reserve(m);
    const ComplexMatrix white = ((1.0 - nu) / m) * ComplexMatrix::identity(x.d);
    for (const auto& e : x.effects) out.effects.push_back(nu * e + white);
    return out;
}

SmearingCoefficients smearing(double nu, int d) {
    if (d < 3) throw std::invalid_argument("smearing: requires d >= 3");
    check_noise_range(nu, d);
    const double r_plus = clamped_sqrt(1.0 + (d - 1) * nu, "smearing");
    const double r_minus = clamped_sqrt(1.0 - nu, "smearing");
    SmearingCoefficients c;
    c.u = (r_plus - r_minus) / std::sqrt(static_cast<double>(d));
    c.v = r_minus;
    c.gamma = ((d - 2) * (1.0 - nu) + 2.0 * r_minus * r_plus) / d;
    return c;
}

double gamma_nu(double nu, int d) {
    if (d < 2) throw std::invalid_argument("gamma_nu: d must be >= 2");
    check_noise_range(nu, d);
    const double r_plus = clamped_sqrt(1.0 + (d - 1) * nu, "gamma_nu");
    const double r_minus = clamped_sqrt(1.0 - nu, "gamma_nu");
    return ((d - 2) * (1.0 - nu) + 2.0 * r_minus * r_plus) / d;
}

JointObservable luders_joint(const MubPair& pair, const NoiseParams& p) {
    const int d = pair.d;
    if (d < 3)
        throw std::invalid_argument(
            "luders_joint: requires d >= 3 (the qubit case is handled by qubit_joint)");
    check_noise_range(p.lambda, d);
    check_noise_range(p.mu, d);
    if (p.lambda < 0.0 && p.mu < 0.0)
        throw std::invalid_argument(
            "luders_joint: no point of Gamma_d has both parameters negative");
    if (!on_gamma(d, p.lambda, p.mu)) {
        std::ostringstream msg;
        msg << "luders_joint: (" << p.lambda << ", " << p.mu << ") is not on Gamma_" << d
            << " (ellipse residual " << ellipse_residual(d, p.lambda, p.mu) << ")";
        throw std::invalid_argument(msg.str());
    }

    // mu >= 0: square roots of A_lambda; otherwise lambda >= 0 and the roles swap.
    const bool a_branch = p.mu >= 0.0;
    const SmearingCoefficients c = smearing(a_branch ? p.lambda : p.mu, d);
    const double w_a = a_branch ? c.u * c.u : c.v * c.v;
    const double w_b = a_branch ? c.v * c.v : c.u * c.u;
    const double w_cross = c.u * c.v / std::sqrt(static_cast<double>(d));

    const auto [a, b] = sharp_observables(pair);
    JointObservable joint;
    joint.d = d;
    joint.outcomes_per_margin = d;
    joint.kind = a_branch ? JointKind::luders_a_branch : JointKind::luders_b_branch;
    joint.effects.reserve(static_cast<size_t>(d) * d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            const ComplexMatrix cross = a.effects[x] * b.effects[y] + b.effects[y] * a.effects[x];
            joint.effects.push_back((w_a / d) * a.effects[x] + (w_b / d) * b.effects[y] +
                                    w_cross * cross);
        }
#ifndef NDEBUG
    // On the overlap both branch formulas must agree entrywise.
    if (p.lambda >= 0.0 && p.mu >= 0.0) {
        const SmearingCoefficients o = smearing(a_branch ? p.mu : p.lambda, d);
        const double oa = a_branch ? o.v * o.v : o.u * o.u;
        const double ob = a_branch ? o.u * o.u : o.v * o.v;
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                const ComplexMatrix cross =
                    a.effects[x] * b.effects[y] + b.effects[y] * a.effects[x];
                const ComplexMatrix alt = (oa / d) * a.effects[x] + (ob / d) * b.effects[y] +
                                          (o.u * o.v / std::sqrt(static_cast<double>(d))) * cross;
                if (joint.effect(x, y).max_diff(alt) > 1e-10)
                    throw numerical_error("luders_joint: branch formulas disagree on the overlap");
            }
    }
#endif
    return joint;
}

ComplexMatrix vertex_projection(const MubPair& pair, int x, int y) {
    const int d = pair.d;
    const auto [a, b] = sharp_observables(pair);
    const ComplexMatrix cross = a.effects[x] * b.effects[y] + b.effects[y] * a.effects[x];
    ComplexMatrix pi = a.effects[x] + b.effects[y] - cross;
    pi *= static_cast<double>(d) / (d - 1);
    return pi;
}

JointObservable vertex_joint(const MubPair& pair) {
    const int d = pair.d;
    if (d < 3) throw std::invalid_argument("vertex_joint: requires d >= 3");
    JointObservable joint;
    joint.d = d;
    joint.outcomes_per_margin = d;
    joint.kind = JointKind::vertex;
    joint.effects.reserve(static_cast<size_t>(d) * d);
    const double scale = 1.0 / (d * (d - 2.0));
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            joint.effects.push_back(scale * (eye - vertex_projection(pair, x, y)));
    return joint;
}

namespace {

ComplexMatrix pauli_combination(double coeff0, const std::array<double, 3>& r, double weight) {
    // coeff0 * I + weight * r . sigma
    ComplexMatrix m(2, 2);
    m(0, 0) = cdouble(coeff0 + weight * r[2], 0.0);
    m(1, 1) = cdouble(coeff0 - weight * r[2], 0.0);
    m(0, 1) = cdouble(weight * r[0], -weight * r[1]);
    m(1, 0) = cdouble(weight * r[0], weight * r[1]);
    return m;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

Observable qubit_observable(const std::array<double, 3>& bloch) {
    Observable obs{2, {}};
    obs.effects.push_back(pauli_combination(0.5, bloch, 0.5));
    obs.effects.push_back(pauli_combination(0.5, bloch, -0.5));
    return obs;
}

JointObservable qubit_joint(const std::array<double, 3>& a_vec,
                            const std::array<double, 3>& b_vec, const NoiseParams& p) {
    const Tolerances tol;
    if (std::abs(dot3(a_vec, a_vec) - 1.0) > 1e-10 || std::abs(dot3(b_vec, b_vec) - 1.0) > 1e-10)
        throw std::invalid_argument("qubit_joint: Bloch vectors must be unit length");
    if (std::abs(dot3(a_vec, b_vec)) > tol.match)
        throw std::invalid_argument(
            "qubit_joint: Bloch vectors must be orthogonal (mutual unbiasedness)");
    const double r2 = p.lambda * p.lambda + p.mu * p.mu;
    if (r2 > 1.0 + tol.psd) {
        std::ostringstream msg;
        msg << "qubit_joint: (lambda, mu) = (" << p.lambda << ", " << p.mu
            << ") lies outside the unit disk (lambda^2 + mu^2 = " << r2
            << " > 1); the pair (A_lambda, B_mu) is incompatible";
        throw std::invalid_argument(msg.str());
    }

    JointObservable joint;
    joint.d = 2;
    joint.outcomes_per_margin = 2;
    joint.kind = JointKind::qubit;
    for (int xi = 0; xi < 2; ++xi)
        for (int yi = 0; yi < 2; ++yi) {
            const double xs = xi == 0 ? 1.0 : -1.0;
            const double ys = yi == 0 ? 1.0 : -1.0;
            std::array<double, 3> r;
            for (int k = 0; k < 3; ++k) r[k] = xs * p.lambda * a_vec[k] + ys * p.mu * b_vec[k];
            joint.effects.push_back(pauli_combination(0.25, r, 0.25));
        }
    return joint;
}

std::pair<Observable, Observable> margins(const JointObservable& c) {
    const int m = c.outcomes_per_margin;
    Observable first{c.d, {}}, second{c.d, {}};
    for (int x = 0; x < m; ++x) {
        ComplexMatrix sum(c.d, c.d);
        for (int y = 0; y < m; ++y) sum += c.effect(x, y);
        first.effects.push_back(std::move(sum));
    }
    for (int y = 0; y < m; ++y) {
        ComplexMatrix sum(c.d, c.d);
        for (int x = 0; x < m; ++x) sum += c.effect(x, y);
        second.effects.push_back(std::move(sum));
    }
    return {std::move(first), std::move(second)};
}

std::vector<ComplexMatrix> e_operators(const MubPair& pair) {
    const int d = pair.d;
    const auto [a, b] = sharp_observables(pair);
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<size_t>(d) * d);
    for (int z = 0; z < d; ++z)
        for (int t = 0; t < d; ++t) {
            ComplexMatrix e = a.effects[z] * b.effects[t] + b.effects[t] * a.effects[z];
            e *= 0.5;
            ops.push_back(std::move(e));
        }
    return ops;
}

KMatrixResult k_matrix(double a, double b, double c, double e, int d) {
    if (d < 2) throw std::invalid_argument("k_matrix: d must be >= 2");
    KMatrixResult result{RealSymmetricMatrix(d * d)};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int t = 0; t < d; ++t) {
                    const double v =
                        a * (x == z) + b * (y == t) + 2.0 * c * (x == z && y == t) + e;
                    result.K.set(x * d + y, z * d + t, v);
                }
    result.values = {2.0 * c, d * a + 2.0 * c, d * b + 2.0 * c,
                     d * a + d * b + 2.0 * c + d * d * e};
    result.multiplicities = {(d - 1) * (d - 1), d - 1, d - 1, 1};
    result.invertible = true;
    for (double v : result.values)
        if (std::abs(v) <= 1e-12) result.invertible = false;
    return result;
}

int effect_rank(const ComplexMatrix& effect, const Tolerances& tol) {
    return hermitian_rank(effect, tol);
}

namespace {

nlohmann::json effects_to_json(const std::vector<ComplexMatrix>& effects) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : effects) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < e.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < e.cols(); ++j)
                row.push_back({e(i, j).real(), e(i, j).imag()});
            rows.push_back(std::move(row));
        }
        arr.push_back(std::move(rows));
    }
    return arr;
}

}  // namespace

nlohmann::json observable_to_json(const Observable& obs) {
    return {{"d", obs.d}, {"outcomes", obs.outcomes()}, {"effects", effects_to_json(obs.effects)}};
}

nlohmann::json joint_to_json(const JointObservable& c) {
    return {{"d", c.d},
            {"outcomes_per_margin", c.outcomes_per_margin},
            {"kind", joint_kind_name(c.kind)},
            {"effects", effects_to_json(c.effects)}};
}

}  // namespace mubcert
