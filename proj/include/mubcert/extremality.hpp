#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mubcert/common.hpp"
#include "mubcert/haagerup.hpp"
#include "mubcert/povm.hpp"
#include "mubcert/region.hpp"

namespace mubcert {

enum class Verdict { extremal, not_extremal, not_compatible, not_applicable };

const char* verdict_name(Verdict v);

/// One machine-checkable evidence record backing a certificate. Raw numeric
/// values are always embedded so tolerance sensitivity stays auditable.
struct Evidence {
    std::string code;
    std::string detail;
    double value = 0.0;
};

struct RangeWitness {
    int x = 0;
    int y1 = 0;
    int y2 = 0;
    int dimension = 0;  ///< dim( ran C(x,y1)  intersect  ran C(x,y2) )
};

struct Certificate {
    std::string pair_label;
    int d = 0;
    double lambda = 0.0;
    double mu = 0.0;
    Verdict verdict = Verdict::not_applicable;
    std::vector<Evidence> reasons;
    double minus_one_distance = -1.0;  ///< distance of sp(Lambda) to -1; < 0 when not computed
    int gram_rank_value = -1;          ///< rank of the joint effects; -1 when the oracle did not run
    int max_effect_rank = -1;
    std::optional<RangeWitness> witness;
    bool oracle_ran = false;
    bool oracle_agreement = true;
};

struct CertifyOptions {
    bool run_oracle = false;
    Tolerances tol{};
};

/// Certifies the pair (A_lambda, B_mu) at a point of the arc Gamma_d, d >= 3:
/// extremal iff lambda != 0, mu != 0 and -1 is not an eigenvalue of the
/// Haagerup matrix. With run_oracle set, additionally builds the Lueders joint
/// observable and cross-checks the verdict against the Gram rank of its d^2
/// effects (rank d^2 with rank-1 effects iff extremal).
Certificate certify_gamma_point(const MubPair& pair, double lambda, double mu,
                                const CertifyOptions& opts = {});

/// Certifies the exceptional vertex pair (A_{1/(1-d)}, B_{1/(1-d)}), d >= 3:
/// extremal iff d = 3. For d >= 4 the certificate carries an explicit range
/// intersection witness (x, y1, y2) of dimension d - 3.
Certificate certify_vertex(const MubPair& pair, const CertifyOptions& opts = {});

/// Certifies a Fourier-conjugate pair at an arc point by group parity
/// (extremal iff the order is odd), cross-checked against the closed-form
/// spectrum; a cross-check failure flips oracle_agreement and the verdict
/// follows the numeric result.
Certificate certify_fourier(const AbelianGroup& g, double lambda, double mu,
                            const CertifyOptions& opts = {});

/// The d = 2 route: every point of the circle yields a non-extremal pair,
/// witnessed by the explicit convex decomposition of qubit_nonextremal_witness.
Certificate certify_qubit_circle(double lambda, double mu, const CertifyOptions& opts = {});

struct IndependenceReport {
    int rank = 0;
    bool independent = false;
    int max_effect_rank = 0;
};

/// Gram rank of the joint observable's effects; independent iff the rank is
/// the full d^2. Also reports the largest effect rank so callers can apply the
/// rank-1 extremality criterion.
IndependenceReport independence_oracle(const JointObservable& c, const Tolerances& tol = {});

/// The explicit non-extremality decomposition of a compatible qubit pair:
/// observables A+-, B+- with Bloch vectors lambda*a +- mu*b and mu*b +- lambda*a,
/// averaging back to (A_lambda, B_mu). Each half is compatible because its
/// Bloch norm combination equals sqrt(lambda^2 + mu^2) <= 1.
struct QubitWitness {
    Observable a_plus, b_plus, a_minus, b_minus;
    std::array<double, 3> bloch_a_plus{}, bloch_b_plus{}, bloch_a_minus{}, bloch_b_minus{};
    double compat_norm_plus = 0.0;   ///< (|p+q| + |p-q|)/2 for the + pair
    double compat_norm_minus = 0.0;  ///< same for the - pair
};

QubitWitness qubit_nonextremal_witness(const std::array<double, 3>& a_vec,
                                       const std::array<double, 3>& b_vec, double lambda,
                                       double mu);

nlohmann::json certificate_to_json(const Certificate& cert);

}  // namespace mubcert
