#include "mubcert/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mubcert {

RealSymmetricMatrix RealSymmetricMatrix::from_entries(int n, const std::vector<double>& entries) {
    if (static_cast<size_t>(n) * n != entries.size())
        throw std::invalid_argument("RealSymmetricMatrix: entry count does not match n*n");
    RealSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = 0.5 * (entries[static_cast<size_t>(i) * n + j] +
                                    entries[static_cast<size_t>(j) * n + i]);
            m.set(i, j, v);
        }
    return m;
}

namespace {

double offdiag_sq(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return s;
}

}  // namespace

EigResult eig_sym(const RealSymmetricMatrix& m, const Tolerances& tol, bool want_vectors) {
    (void)tol;  // residuals are bounded by the convergence stop, not steered by it
    const int n = m.size();
    std::vector<double> a = m.entries();
    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
    }

    const double frob = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
    const double stop = std::max(1e-300, 1e-30 * frob * frob);

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_sq(a, n) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<size_t>(p) * n + p];
                const double aqq = a[static_cast<size_t>(q) * n + q];
                // Skip rotations that can no longer move the result.
                if (std::abs(apq) <= 1e-18 * (std::abs(app) + std::abs(aqq) + frob)) {
                    a[static_cast<size_t>(p) * n + q] = a[static_cast<size_t>(q) * n + p] = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[static_cast<size_t>(p) * n + p] = app - t * apq;
                a[static_cast<size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<size_t>(p) * n + q] = a[static_cast<size_t>(q) * n + p] = 0.0;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double& akp = a[static_cast<size_t>(k) * n + p];
                    double& akq = a[static_cast<size_t>(k) * n + q];
                    const double kp = akp, kq = akq;
                    akp = kp - s * (kq + tau * kp);
                    akq = kq + s * (kp - tau * kq);
                    a[static_cast<size_t>(p) * n + k] = akp;
                    a[static_cast<size_t>(q) * n + k] = akq;
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        double& vkp = v[static_cast<size_t>(k) * n + p];
                        double& vkq = v[static_cast<size_t>(k) * n + q];
                        const double kp = vkp, kq = vkq;
                        vkp = kp - s * (kq + tau * kp);
                        vkq = kq + s * (kp - tau * kq);
                    }
                }
            }
        }
    }
    if (sweep == kMaxSweeps && offdiag_sq(a, n) > stop) {
        std::ostringstream msg;
        msg << "eig_sym: Jacobi did not converge after " << kMaxSweeps
            << " sweeps (n=" << n << ", off-diagonal norm "
            << std::sqrt(offdiag_sq(a, n)) << ", ||M||_F " << frob << ")";
        throw numerical_error(msg.str());
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<size_t>(i) * n + i] < a[static_cast<size_t>(j) * n + j];
    });

    EigResult out;
    out.values.resize(n);
    for (int k = 0; k < n; ++k) out.values[k] = a[static_cast<size_t>(order[k]) * n + order[k]];
    if (want_vectors) {
        out.vectors.assign(n, std::vector<double>(n));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                out.vectors[k][i] = v[static_cast<size_t>(i) * n + order[k]];
    }

    // Cheap internal consistency check: eigenvalue sum must reproduce the trace.
    const double tr = m.trace();
    const double sum = std::accumulate(out.values.begin(), out.values.end(), 0.0);
    const double scale = std::max(1.0, m.max_abs());
    if (std::abs(sum - tr) > 1e-10 * n * scale) {
        std::ostringstream msg;
        msg << "eig_sym: trace check failed (sum " << sum << " vs trace " << tr << ")";
        throw numerical_error(msg.str());
    }
    return out;
}

namespace {

/// Hermitian part of m embedded as the real symmetric matrix [[X, -Y], [Y, X]];
/// every eigenvalue of the Hermitian matrix shows up exactly twice.
RealSymmetricMatrix embed_hermitian(const ComplexMatrix& m) {
    if (!m.square()) throw std::invalid_argument("embed_hermitian: matrix not square");
    const int n = m.rows();
    RealSymmetricMatrix t(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cdouble h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            t.set(i, j, h.real());
            t.set(n + i, n + j, h.real());
            t.set(i, n + j, -h.imag());
        }
    return t;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol) {
    const int n = m.rows();
    const EigResult full = eig_sym(embed_hermitian(m), tol, false);
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) out[k] = full.values[2 * k];
    return out;
}

double min_eig_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.square()) throw std::invalid_argument("min_eig_hermitian: matrix not square");
    const double defect = m.hermiticity_defect();
    if (defect > tol.match) {
        std::ostringstream msg;
        msg << "min_eig_hermitian: input is not Hermitian (defect " << defect << " > "
            << tol.match << ")";
        throw std::invalid_argument(msg.str());
    }
    return hermitian_eigenvalues(m, tol).front();
}

int gram_rank(const std::vector<ComplexMatrix>& ops, const Tolerances& tol) {
    if (ops.empty()) throw std::invalid_argument("gram_rank: empty operator list");
    const int m = static_cast<int>(ops.size());
    ComplexMatrix gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) gram(i, j) = hs_inner(ops[i], ops[j]);
    const std::vector<double> ev = hermitian_eigenvalues(gram, tol);
    const double top = ev.back();
    if (top <= 0.0) return 0;
    int rank = 0;
    for (double v : ev)
        if (v > tol.rank * top) ++rank;
    return rank;
}

int hermitian_rank(const ComplexMatrix& m, const Tolerances& tol) {
    const std::vector<double> ev = hermitian_eigenvalues(m, tol);
    double top = 0.0;
    for (double v : ev) top = std::max(top, std::abs(v));
    if (top <= 0.0) return 0;
    int rank = 0;
    for (double v : ev)
        if (std::abs(v) > tol.rank * top) ++rank;
    return rank;
}

std::vector<ComplexMatrix> range_columns(const ComplexMatrix& m, const Tolerances& tol) {
    const int n = m.rows();
    const EigResult full = eig_sym(embed_hermitian(m), tol, true);
    double top = 0.0;
    for (double v : full.values) top = std::max(top, std::abs(v));
    std::vector<ComplexMatrix> cols;
    if (top <= 0.0) return cols;
    for (int k = 0; k < 2 * n; ++k) {
        if (std::abs(full.values[k]) <= tol.rank * top) continue;
        // Real eigenvector (u; w) of the embedding maps back to u + i w. The
        // mapped set may contain complex-linearly dependent vectors, which is
        // harmless for span computations.
        std::vector<cdouble> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = cdouble(full.vectors[k][i], full.vectors[k][n + i]);
        cols.push_back(ComplexMatrix::column(v));
    }
    return cols;
}

int subspace_intersection_dim(const std::vector<ComplexMatrix>& u,
                              const std::vector<ComplexMatrix>& v,
                              const Tolerances& tol) {
    if (u.empty() || v.empty()) return 0;
    if (u.front().rows() != v.front().rows())
        throw std::invalid_argument("subspace_intersection_dim: ambient dimensions differ");
    std::vector<ComplexMatrix> joint = u;
    joint.insert(joint.end(), v.begin(), v.end());
    return gram_rank(u, tol) + gram_rank(v, tol) - gram_rank(joint, tol);
}

}  // namespace mubcert
