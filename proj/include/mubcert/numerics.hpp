#pragma once

#include <vector>

#include "mubcert/common.hpp"
#include "mubcert/complex_matrix.hpp"

namespace mubcert {

/// Dense real symmetric matrix. Construction symmetrizes, so
/// entry(i,j) == entry(j,i) holds exactly afterwards.
class RealSymmetricMatrix {
  public:
    explicit RealSymmetricMatrix(int n)
        : n_(n), entries_(static_cast<size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("RealSymmetricMatrix: n must be >= 1");
    }

    /// Builds from arbitrary row-major entries, replacing M by (M + M^T)/2.
    static RealSymmetricMatrix from_entries(int n, const std::vector<double>& entries);

    int size() const { return n_; }

    double operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }

    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double v) {
        entries_[static_cast<size_t>(i) * n_ + j] = v;
        entries_[static_cast<size_t>(j) * n_ + i] = v;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : entries_) m = std::max(m, std::abs(v));
        return m;
    }

    const std::vector<double>& entries() const { return entries_; }

  private:
    int n_;
    std::vector<double> entries_;
};

/// Eigendecomposition result; values ascending, vectors[k] belongs to values[k].
struct EigResult {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;  // empty unless requested
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
/// Unconditionally stable at the sizes used here (n <= 144); throws
/// numerical_error if the off-diagonal norm has not collapsed after the
/// sweep cap.
EigResult eig_sym(const RealSymmetricMatrix& m, const Tolerances& tol = {},
                  bool want_vectors = false);

/// Eigenvalues of a Hermitian matrix, ascending, via the standard embedding
/// of the d x d Hermitian matrix as a 2d x 2d real symmetric matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol = {});

/// Smallest eigenvalue of the Hermitian part of m. Rejects inputs whose
/// hermiticity defect exceeds tol.match.
double min_eig_hermitian(const ComplexMatrix& m, const Tolerances& tol = {});

/// Dimension of the span of a family of equally shaped operators, decided by
/// the eigenvalues of their Hilbert-Schmidt Gram matrix: eigenvalues above
/// tol.rank times the largest one count towards the rank.
int gram_rank(const std::vector<ComplexMatrix>& ops, const Tolerances& tol = {});

/// Rank of a Hermitian operator from its eigenvalue magnitudes, relative to
/// the largest magnitude.
int hermitian_rank(const ComplexMatrix& m, const Tolerances& tol = {});

/// Spanning columns of the range of a Hermitian PSD operator (eigenvectors
/// with eigenvalue above tol.rank times the largest). The returned list may
/// overcount vectors but always spans exactly the range.
std::vector<ComplexMatrix> range_columns(const ComplexMatrix& m, const Tolerances& tol = {});

/// dim(span U  intersect  span V) via dim U + dim V - dim(U union V).
/// Inputs are lists of column vectors in the same ambient dimension.
int subspace_intersection_dim(const std::vector<ComplexMatrix>& u,
                              const std::vector<ComplexMatrix>& v,
                              const Tolerances& tol = {});

}  // namespace mubcert
