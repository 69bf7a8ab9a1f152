#include "mubcert/extremality.hpp"

#include <cmath>
#include <sstream>

namespace mubcert {

namespace {

constexpr double kZeroTol = 1e-12;  // threshold for the strict conditions lambda, mu != 0

void push(Certificate& cert, const std::string& code, const std::string& detail, double value) {
    cert.reasons.push_back({code, detail, value});
}

void run_luders_oracle(Certificate& cert, const MubPair& pair, const NoiseParams& p,
                       const CertifyOptions& opts) {
    const JointObservable joint = luders_joint(pair, p);
    const IndependenceReport rep = independence_oracle(joint, opts.tol);
    cert.oracle_ran = true;
    cert.gram_rank_value = rep.rank;
    cert.max_effect_rank = rep.max_effect_rank;
    const int dim2 = pair.d * pair.d;
    push(cert, "rank-deficit", "d^2 minus Gram rank of the Lueders effects",
         static_cast<double>(dim2 - rep.rank));
    push(cert, "max-effect-rank", "largest rank among the d^2 joint effects",
         static_cast<double>(rep.max_effect_rank));
    const bool oracle_extremal = rep.independent && rep.max_effect_rank == 1;
    cert.oracle_agreement = (cert.verdict == Verdict::extremal) == oracle_extremal;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::extremal: return "extremal";
        case Verdict::not_extremal: return "not_extremal";
        case Verdict::not_compatible: return "not_compatible";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

IndependenceReport independence_oracle(const JointObservable& c, const Tolerances& tol) {
    IndependenceReport rep;
    rep.rank = gram_rank(c.effects, tol);
    rep.independent = rep.rank == static_cast<int>(c.effects.size());
    rep.max_effect_rank = 0;
    for (const auto& e : c.effects)
        rep.max_effect_rank = std::max(rep.max_effect_rank, effect_rank(e, tol));
    return rep;
}

Certificate certify_gamma_point(const MubPair& pair, double lambda, double mu,
                                const CertifyOptions& opts) {
    Certificate cert;
    cert.pair_label = pair.label;
    cert.d = pair.d;
    cert.lambda = lambda;
    cert.mu = mu;

    if (pair.d < 3) {
        cert.verdict = Verdict::not_applicable;
        push(cert, "dimension", "arc certification requires d >= 3; use the qubit route for d = 2",
             pair.d);
        return cert;
    }

    const RegionPoint pt = region_contains(pair.d, lambda, mu);
    if (pt.cls != RegionClass::on_gamma_arc) {
        cert.verdict = Verdict::not_applicable;
        push(cert, "off-arc-residual", "ellipse equation residual at the requested point",
             pt.ellipse_residual);
        push(cert, "chord-value", "(d-1)(lambda+mu) - (d-3); the arc requires >= 0",
             pt.chord_value);
        push(cert, "classification", region_class_name(pt.cls), 0.0);
        return cert;
    }

    const double cond_i_value = std::min(std::abs(lambda), std::abs(mu));
    const bool cond_i = cond_i_value > kZeroTol;
    push(cert, "theorem-1-condition-i", "min(|lambda|, |mu|); must be nonzero", cond_i_value);

    const HaagerupSpectrum spec = spectrum(pair, opts.tol);
    const MinusOneTest m1 = has_minus_one(spec, opts.tol);
    cert.minus_one_distance = m1.distance;
    push(cert, "minus-one-distance", "distance of sp(Lambda) to -1", m1.distance);

    cert.verdict = (cond_i && !m1.present) ? Verdict::extremal : Verdict::not_extremal;

    if (opts.run_oracle)
        run_luders_oracle(cert, pair, NoiseParams{lambda, mu, pair.d}, opts);
    return cert;
}

Certificate certify_vertex(const MubPair& pair, const CertifyOptions& opts) {
    Certificate cert;
    cert.pair_label = pair.label;
    cert.d = pair.d;
    if (pair.d < 3) {
        cert.verdict = Verdict::not_applicable;
        push(cert, "dimension", "the exceptional vertex pair exists only for d >= 3", pair.d);
        return cert;
    }
    const int d = pair.d;
    cert.lambda = cert.mu = 1.0 / (1.0 - d);

    const JointObservable joint = vertex_joint(pair);

    if (d >= 4) {
        // Two effects in the same row have ranges {phi_x, psi_y}^perp that
        // intersect nontrivially as soon as d >= 4.
        RangeWitness w{0, 0, 1, 0};
        const auto u = range_columns(joint.effect(w.x, w.y1), opts.tol);
        const auto v = range_columns(joint.effect(w.x, w.y2), opts.tol);
        w.dimension = subspace_intersection_dim(u, v, opts.tol);
        cert.witness = w;
        push(cert, "range-intersection-witness",
             "dim of ran C(0,0) intersect ran C(0,1); nonzero forbids extremality",
             static_cast<double>(w.dimension));
        cert.verdict = w.dimension >= 1 ? Verdict::not_extremal : Verdict::extremal;
        if (opts.run_oracle) {
            const IndependenceReport rep = independence_oracle(joint, opts.tol);
            cert.oracle_ran = true;
            cert.gram_rank_value = rep.rank;
            cert.max_effect_rank = rep.max_effect_rank;
            push(cert, "max-effect-rank", "largest joint effect rank (d-2 at the vertex)",
                 static_cast<double>(rep.max_effect_rank));
            // Rank-1 plus independence would certify extremality; at d >= 4
            // the effects have rank d-2 >= 2, consistent with the witness.
            cert.oracle_agreement =
                (cert.verdict == Verdict::extremal) ==
                (rep.independent && rep.max_effect_rank == 1);
        }
        return cert;
    }

    // d == 3: every effect is rank-1 and the effects are independent iff
    // -1 is not an eigenvalue of Lambda and the vertex K matrix is invertible.
    const IndependenceReport rep = independence_oracle(joint, opts.tol);
    cert.oracle_ran = true;
    cert.gram_rank_value = rep.rank;
    cert.max_effect_rank = rep.max_effect_rank;
    push(cert, "max-effect-rank", "largest joint effect rank; extremality needs 1",
         static_cast<double>(rep.max_effect_rank));
    push(cert, "gram-rank", "Gram rank of the 9 vertex effects; extremality needs 9",
         static_cast<double>(rep.rank));

    const HaagerupSpectrum spec = spectrum(pair, opts.tol);
    const MinusOneTest m1 = has_minus_one(spec, opts.tol);
    cert.minus_one_distance = m1.distance;
    push(cert, "minus-one-distance", "distance of sp(Lambda) to -1", m1.distance);

    const double cvtx = 1.0 / ((d - 2.0) * (d - 1.0));
    const KMatrixResult k = k_matrix(-cvtx, -cvtx, cvtx, 1.0 / (d * (d - 2.0)), d);
    push(cert, "k-invertible", "all four spectral values of the vertex K matrix nonzero",
         k.invertible ? 1.0 : 0.0);

    cert.verdict = (rep.independent && rep.max_effect_rank == 1) ? Verdict::extremal
                                                                 : Verdict::not_extremal;
    const bool algebraic_route = !m1.present && k.invertible;
    cert.oracle_agreement = rep.independent == algebraic_route;
    return cert;
}

Certificate certify_fourier(const AbelianGroup& g, double lambda, double mu,
                            const CertifyOptions& opts) {
    Certificate cert;
    cert.pair_label = "fourier-" + group_label(g);
    cert.d = static_cast<int>(g.order);
    cert.lambda = lambda;
    cert.mu = mu;

    if (cert.d < 3) {
        cert.verdict = Verdict::not_applicable;
        push(cert, "dimension", "parity certification requires d >= 3", cert.d);
        return cert;
    }
    const RegionPoint pt = region_contains(cert.d, lambda, mu);
    if (pt.cls != RegionClass::on_gamma_arc) {
        cert.verdict = Verdict::not_applicable;
        push(cert, "off-arc-residual", "ellipse equation residual at the requested point",
             pt.ellipse_residual);
        push(cert, "chord-value", "(d-1)(lambda+mu) - (d-3); the arc requires >= 0",
             pt.chord_value);
        return cert;
    }

    const HaagerupSpectrum closed = fourier_spectrum_closed_form(g, opts.tol);
    const MinusOneTest m1 = has_minus_one(closed, opts.tol);
    cert.minus_one_distance = m1.distance;
    push(cert, "minus-one-distance", "closed-form spectrum distance to -1", m1.distance);

    const double cond_i_value = std::min(std::abs(lambda), std::abs(mu));
    push(cert, "theorem-1-condition-i", "min(|lambda|, |mu|); must be nonzero", cond_i_value);
    if (cond_i_value <= kZeroTol) {
        cert.verdict = Verdict::not_extremal;
        return cert;
    }

    const bool odd = cert.d % 2 == 1;
    push(cert, "parity", odd ? "group order is odd" : "group order is even", odd ? 1.0 : 0.0);
    const bool numeric_extremal = !m1.present;
    cert.oracle_ran = true;
    cert.oracle_agreement = odd == numeric_extremal;
    cert.verdict = numeric_extremal ? Verdict::extremal : Verdict::not_extremal;
    return cert;
}

namespace {

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

std::array<double, 3> combine3(double ca, const std::array<double, 3>& a, double cb,
                               const std::array<double, 3>& b) {
    return {ca * a[0] + cb * b[0], ca * a[1] + cb * b[1], ca * a[2] + cb * b[2]};
}

double compat_norm(const std::array<double, 3>& p, const std::array<double, 3>& q) {
    return 0.5 * norm3(combine3(1, p, 1, q)) + 0.5 * norm3(combine3(1, p, -1, q));
}

}  // namespace

QubitWitness qubit_nonextremal_witness(const std::array<double, 3>& a_vec,
                                       const std::array<double, 3>& b_vec, double lambda,
                                       double mu) {
    const double r2 = lambda * lambda + mu * mu;
    if (r2 > 1.0 + 1e-10)
        throw std::invalid_argument("qubit_nonextremal_witness: point outside the unit disk");
    if (r2 <= kZeroTol * kZeroTol)
        throw std::invalid_argument(
            "qubit_nonextremal_witness: degenerate at lambda = mu = 0 (the two decomposition "
            "pairs coincide)");
    QubitWitness w;
    w.bloch_a_plus = combine3(lambda, a_vec, mu, b_vec);
    w.bloch_a_minus = combine3(lambda, a_vec, -mu, b_vec);
    w.bloch_b_plus = combine3(mu, b_vec, lambda, a_vec);
    w.bloch_b_minus = combine3(mu, b_vec, -lambda, a_vec);
    w.a_plus = qubit_observable(w.bloch_a_plus);
    w.a_minus = qubit_observable(w.bloch_a_minus);
    w.b_plus = qubit_observable(w.bloch_b_plus);
    w.b_minus = qubit_observable(w.bloch_b_minus);
    w.compat_norm_plus = compat_norm(w.bloch_a_plus, w.bloch_b_plus);
    w.compat_norm_minus = compat_norm(w.bloch_a_minus, w.bloch_b_minus);
    return w;
}

Certificate certify_qubit_circle(double lambda, double mu, const CertifyOptions& opts) {
    Certificate cert;
    cert.pair_label = "qubit";
    cert.d = 2;
    cert.lambda = lambda;
    cert.mu = mu;

    const RegionPoint pt = region_contains(2, lambda, mu);
    if (pt.cls != RegionClass::on_gamma_arc) {
        cert.verdict = Verdict::not_applicable;
        push(cert, "off-circle-residual", "lambda^2 + mu^2 - 1 at the requested point",
             pt.ellipse_residual);
        push(cert, "classification", region_class_name(pt.cls), 0.0);
        return cert;
    }

    // Fixed Bloch convention: a = +z (standard basis), b = +x (Fourier basis).
    const std::array<double, 3> a_vec{0.0, 0.0, 1.0};
    const std::array<double, 3> b_vec{1.0, 0.0, 0.0};
    cert.verdict = Verdict::not_extremal;
    const QubitWitness w = qubit_nonextremal_witness(a_vec, b_vec, lambda, mu);
    push(cert, "qubit-decomposition",
         "(A_lambda, B_mu) = ((A+,B+) + (A-,B-))/2 with distinct compatible halves", 1.0);
    push(cert, "compat-norm-plus", "Bloch norm combination of the + half; <= 1 means compatible",
         w.compat_norm_plus);
    push(cert, "compat-norm-minus", "Bloch norm combination of the - half; <= 1 means compatible",
         w.compat_norm_minus);

    if (opts.run_oracle) {
        const JointObservable joint =
            qubit_joint(a_vec, b_vec, NoiseParams{lambda, mu, 2});
        const IndependenceReport rep = independence_oracle(joint, opts.tol);
        cert.oracle_ran = true;
        cert.gram_rank_value = rep.rank;
        cert.max_effect_rank = rep.max_effect_rank;
        push(cert, "rank-deficit", "4 minus Gram rank of the qubit joint effects",
             static_cast<double>(4 - rep.rank));
        cert.oracle_agreement = !rep.independent;  // dependence confirms non-extremality
    }
    return cert;
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json reasons = nlohmann::json::array();
    for (const auto& r : cert.reasons)
        reasons.push_back({{"code", r.code}, {"detail", r.detail}, {"value", r.value}});
    nlohmann::json j{{"pair_label", cert.pair_label},
                     {"d", cert.d},
                     {"lambda", cert.lambda},
                     {"mu", cert.mu},
                     {"verdict", verdict_name(cert.verdict)},
                     {"reasons", reasons},
                     {"minus_one_distance", cert.minus_one_distance},
                     {"gram_rank", cert.gram_rank_value},
                     {"oracle_agreement", cert.oracle_agreement},
                     {"oracle_ran", cert.oracle_ran},
                     {"max_effect_rank", cert.max_effect_rank}};
    if (cert.witness) {
        j["witness"] = {{"x", cert.witness->x},
                        {"y1", cert.witness->y1},
                        {"y2", cert.witness->y2},
                        {"dimension", cert.witness->dimension}};
    }
    return j;
}

}  // namespace mubcert
