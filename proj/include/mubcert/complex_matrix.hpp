#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mubcert {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. Everything in this project lives in
/// dimension d <= 12 (operators) or d^2 <= 144 (Haagerup/K matrices), so a
/// plain value type with eager arithmetic is all that is needed.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("ComplexMatrix: negative shape");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    /// Rank-one projector |u><u| (u need not be normalized; it is not rescaled).
    static ComplexMatrix outer(const std::vector<cdouble>& u) {
        const int n = static_cast<int>(u.size());
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = u[i] * std::conj(u[j]);
        return m;
    }

    /// Column vector as an n-by-1 matrix.
    static ComplexMatrix column(const std::vector<cdouble>& u) {
        ComplexMatrix m(static_cast<int>(u.size()), 1);
        for (size_t i = 0; i < u.size(); ++i) m.entries_[i] = u[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cdouble& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const cdouble& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<cdouble>& entries() const { return entries_; }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    cdouble trace() const {
        require_square("trace");
        cdouble t = 0.0;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Largest entry modulus; the matrix max-norm used for comparisons.
    double max_abs() const {
        double m = 0.0;
        for (const auto& z : entries_) m = std::max(m, std::abs(z));
        return m;
    }

    /// max_ij |M_ij - conj(M_ji)|.
    double hermiticity_defect() const {
        require_square("hermiticity_defect");
        double m = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o, "+");
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o, "-");
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }

    ComplexMatrix& operator*=(cdouble s) {
        for (auto& z : entries_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cdouble s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch in *");
        ComplexMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const cdouble aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    /// max_ij |A_ij - B_ij|.
    double max_diff(const ComplexMatrix& o) const {
        require_same_shape(o, "max_diff");
        double m = 0.0;
        for (size_t k = 0; k < entries_.size(); ++k)
            m = std::max(m, std::abs(entries_[k] - o.entries_[k]));
        return m;
    }

  private:
    void require_square(const char* op) const {
        if (!square()) throw std::invalid_argument(std::string("ComplexMatrix: ") + op + " needs a square matrix");
    }
    void require_same_shape(const ComplexMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("ComplexMatrix: shape mismatch in ") + op);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cdouble> entries_;
};

/// Hilbert-Schmidt inner product tr(A^dag B).
inline cdouble hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("hs_inner: shape mismatch");
    cdouble t = 0.0;
    for (size_t k = 0; k < a.entries().size(); ++k)
        t += std::conj(a.entries()[k]) * b.entries()[k];
    return t;
}

}  // namespace mubcert
