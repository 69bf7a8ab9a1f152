#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mubcert/common.hpp"
#include "mubcert/complex_matrix.hpp"
#include "mubcert/mub_catalog.hpp"
#include "mubcert/numerics.hpp"

namespace mubcert {

/// An observable: outcome-indexed positive operators summing to the identity.
struct Observable {
    int d = 0;
    std::vector<ComplexMatrix> effects;

    int outcomes() const { return static_cast<int>(effects.size()); }

    /// Hermiticity, positivity and normalization, judged against tol.
    ValidationReport validate(const Tolerances& tol = {}) const;
};

enum class JointKind { luders_a_branch, luders_b_branch, vertex, qubit, custom };

const char* joint_kind_name(JointKind k);

/// An observable on the product outcome set, effects indexed (x,y) -> x*m + y
/// where m is the per-margin outcome count.
struct JointObservable {
    int d = 0;
    int outcomes_per_margin = 0;
    std::vector<ComplexMatrix> effects;
    JointKind kind = JointKind::custom;

    const ComplexMatrix& effect(int x, int y) const {
        return effects[static_cast<size_t>(x) * outcomes_per_margin + y];
    }
    ComplexMatrix& effect(int x, int y) {
        return effects[static_cast<size_t>(x) * outcomes_per_margin + y];
    }

    ValidationReport validate(const Tolerances& tol = {}) const;
};

/// Noise weights for the smeared pair (A_lambda, B_mu); both must lie in
/// [1/(1-d), 1].
struct NoiseParams {
    double lambda = 1.0;
    double mu = 1.0;
    int d = 0;
};

/// The square-root coefficients of the noisy effects,
///   u_nu = ( sqrt(1+(d-1)nu) - sqrt(1-nu) ) / sqrt(d),   v_nu = sqrt(1-nu),
/// together with gamma_nu = 1 - u_nu^2, the noise weight of the other margin
/// of the Lueders joint observable.
struct SmearingCoefficients {
    double u = 0.0;
    double v = 0.0;
    double gamma = 0.0;
};

/// Throws std::out_of_range unless nu lies in [1/(1-d), 1] (tiny slack).
void check_noise_range(double nu, int d);

/// The sharp rank-1 observables of a MUB pair: A(x) = |phi_x><phi_x| on the
/// standard basis, B(y) = |psi_y><psi_y| with (psi_y)_x = H[x][y].
std::pair<Observable, Observable> sharp_observables(const MubPair& pair);

/// All effects equal to I/m.
Observable uniform_observable(int d, int m);

/// nu * X + (1 - nu) * U, defined for nu in [1/(1-d), 1].
Observable noisy(const Observable& x, double nu);

SmearingCoefficients smearing(double nu, int d);

/// gamma_nu alone; defined for d >= 2.
double gamma_nu(double nu, int d);

/// The Lueders joint observable of (A_lambda, B_mu) for (lambda, mu) on the
/// arc Gamma_d, d >= 3. Uses the A-branch (square roots of A_lambda) when
/// mu >= 0 and the B-branch when lambda >= 0; on the overlap the two agree.
JointObservable luders_joint(const MubPair& pair, const NoiseParams& p);

/// The joint observable of the exceptional vertex pair
/// (A_{1/(1-d)}, B_{1/(1-d)}): each effect is I - Pi(x,y) scaled by
/// 1/(d(d-2)), where Pi(x,y) projects onto span{phi_x, psi_y}. Requires d >= 3.
JointObservable vertex_joint(const MubPair& pair);

/// The orthogonal projection onto span{phi_x, psi_y}.
ComplexMatrix vertex_projection(const MubPair& pair, int x, int y);

/// Qubit joint observable C(x,y) = (I + x lambda a.sigma + y mu b.sigma)/4 for
/// orthogonal unit Bloch vectors a, b; defined on the disk lambda^2 + mu^2 <= 1.
/// Outcome index 0 is the + outcome, 1 the - outcome.
JointObservable qubit_joint(const std::array<double, 3>& a_vec,
                            const std::array<double, 3>& b_vec, const NoiseParams& p);

/// Two-outcome qubit observable with effects (I +- r.sigma)/2.
Observable qubit_observable(const std::array<double, 3>& bloch);

std::pair<Observable, Observable> margins(const JointObservable& c);

/// The d^2 Jordan products E(z,t) = (A(z)B(t) + B(t)A(z))/2, indexed z*d + t.
std::vector<ComplexMatrix> e_operators(const MubPair& pair);

/// The transition matrix K_{(x,y),(z,t)} = a d_{xz} + b d_{yt} + 2c d_{xz}d_{yt} + e
/// with its four closed-form spectral values
///   2c, da+2c, db+2c, da+db+2c+d^2 e
/// of multiplicities (d-1)^2, d-1, d-1, 1. K is invertible iff all four are
/// nonzero.
struct KMatrixResult {
    RealSymmetricMatrix K;
    std::array<double, 4> values{};
    std::array<int, 4> multiplicities{};
    bool invertible = false;
};

KMatrixResult k_matrix(double a, double b, double c, double e, int d);

/// Rank of one Hermitian effect, relative to its largest eigenvalue magnitude.
int effect_rank(const ComplexMatrix& effect, const Tolerances& tol = {});

nlohmann::json observable_to_json(const Observable& obs);
nlohmann::json joint_to_json(const JointObservable& c);

}  // namespace mubcert
