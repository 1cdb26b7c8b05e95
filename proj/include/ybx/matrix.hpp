#pragma once

#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "ybx/errors.hpp"
#include "ybx/field.hpp"

namespace ybx {

/// Dense row-major matrix over an exact field F. Entry (r,c) of an operator
/// matrix holds the e_r-coordinate of the image of the c-th basis vector.
template <class F>
class Matrix {
 public:
  using value_type = F;

  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  F& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const F& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }

  /// Product with zero-skipping: the operators built from structure constants
  /// are very sparse and this keeps triple-tensor contractions cheap.
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t k = 0; k < cols_; ++k) {
        const F& a = at(i, k);
        if (is_zero(a)) continue;
        for (size_t j = 0; j < o.cols_; ++j) {
          const F& b = o.at(k, j);
          if (is_zero(b)) continue;
          r.at(i, j) += a * b;
        }
      }
    }
    return r;
  }

  Matrix scaled(const F& s) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero_matrix() const {
    for (const auto& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  std::optional<std::tuple<size_t, size_t, F>> first_nonzero() const {
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!is_zero(at(i, j))) return std::make_tuple(i, j, at(i, j));
    return std::nullopt;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<F> r(rows_, F(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        if (is_zero(at(i, j)) || is_zero(v[j])) continue;
        r[i] += at(i, j) * v[j];
      }
    return r;
  }

  /// In-place reduced row echelon form; returns the pivot columns.
  /// Pivot rows are chosen by entry complexity to limit coefficient growth.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t best = rows_;
      for (size_t r = row; r < rows_; ++r) {
        if (is_zero(at(r, col))) continue;
        if (best == rows_ || complexity(at(r, col)) < complexity(at(best, col))) best = r;
      }
      if (best == rows_) continue;
      swap_rows(row, best);
      F inv_piv = inverse(at(row, col));
      for (size_t j = col; j < cols_; ++j) {
        if (!is_zero(at(row, j))) at(row, j) = at(row, j) * inv_piv;
      }
      for (size_t r = 0; r < rows_; ++r) {
        if (r == row || is_zero(at(r, col))) continue;
        F f = at(r, col);
        for (size_t j = col; j < cols_; ++j) {
          if (is_zero(at(row, j))) continue;
          at(r, j) = at(r, j) - f * at(row, j);
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix m(*this);
    return m.rref().size();
  }

  /// Exact inverse by Gauss-Jordan elimination on [this | I].
  Matrix inverse_matrix() const {
    if (rows_ != cols_) throw DimensionError("inverse of a non-square matrix");
    size_t n = rows_;
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, n + i) = F(1);
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
      throw SingularMatrixError("matrix is singular");
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
  }

  bool invertible() const {
    if (rows_ != cols_) return false;
    return rank() == rows_;
  }

  /// Basis of the right null space {v : Mv = 0}.
  std::vector<std::vector<F>> nullspace() const {
    Matrix m(*this);
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<F> v(cols_, F(0));
      v[freec] = F(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, freec);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Kronecker product consistent with the flat tensor indexing
  /// e_i (x) e_j -> i*n + j: (a(x)b)[(i*rb+k),(j*cb+l)] = a[i,j]*b[k,l].
  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j) {
        const F& aij = a.at(i, j);
        if (is_zero(aij)) continue;
        for (size_t k = 0; k < b.rows_; ++k)
          for (size_t l = 0; l < b.cols_; ++l) {
            const F& bkl = b.at(k, l);
            if (is_zero(bkl)) continue;
            r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
          }
      }
    return r;
  }

  std::string str() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
      out << (i == 0 ? "[" : " ");
      for (size_t j = 0; j < cols_; ++j) out << (j ? " " : "[") << to_string(at(i, j));
      out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<F> e_;
};

}  // namespace ybx
