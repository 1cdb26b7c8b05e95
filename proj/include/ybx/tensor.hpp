#pragma once

#include <cmath>

#include "ybx/matrix.hpp"

namespace ybx {

/// A linear map V(x)V -> V(x)V in coordinates: dim = n = dim V, mat is n^2 x n^2.
/// Column i*n+j holds the image of e_i (x) e_j.
template <class F>
struct Operator {
  size_t dim = 0;
  Matrix<F> mat;

  bool operator==(const Operator& o) const { return dim == o.dim && mat == o.mat; }
  bool operator!=(const Operator& o) const { return !(*this == o); }
};

template <class F>
Operator<F> make_operator(Matrix<F> mat) {
  if (mat.rows() != mat.cols()) throw DimensionError("operator matrix must be square");
  size_t n = 0;
  while (n * n < mat.rows()) ++n;
  if (n * n != mat.rows()) throw DimensionError("operator matrix side must be a perfect square");
  return Operator<F>{n, std::move(mat)};
}

template <class F>
Operator<F> identity_operator(size_t n) {
  return Operator<F>{n, Matrix<F>::identity(n * n)};
}

/// The twist tau(v (x) w) = w (x) v as a permutation matrix.
template <class F>
Matrix<F> twist_matrix(size_t n) {
  if (n < 1) throw DimensionError("twist needs dimension >= 1");
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(j * n + i, i * n + j) = F(1);
  return m;
}

template <class F>
Operator<F> twist_operator(size_t n) {
  return Operator<F>{n, twist_matrix<F>(n)};
}

/// Composition R after S (matrix product under the column convention).
template <class F>
Operator<F> compose(const Operator<F>& r, const Operator<F>& s) {
  if (r.dim != s.dim) throw DimensionError("operator composition dimension mismatch");
  return Operator<F>{r.dim, r.mat * s.mat};
}

/// R acting on slots 1,2 of V (x) V (x) V: R (x) I.
template <class F>
Matrix<F> lift12(const Operator<F>& r) {
  return Matrix<F>::kron(r.mat, Matrix<F>::identity(r.dim));
}

/// R acting on slots 2,3: I (x) R.
template <class F>
Matrix<F> lift23(const Operator<F>& r) {
  return Matrix<F>::kron(Matrix<F>::identity(r.dim), r.mat);
}

/// R acting on slots 1,3: (I (x) tau) (R (x) I) (I (x) tau).
template <class F>
Matrix<F> lift13(const Operator<F>& r) {
  size_t n = r.dim;
  Matrix<F> mid = Matrix<F>::kron(Matrix<F>::identity(n), twist_matrix<F>(n));
  return mid * lift12(r) * mid;
}

/// [R,S,T] = R12 S13 T23 - T23 S13 R12 on V (x) V (x) V.
template <class F>
Matrix<F> yb_commutator(const Operator<F>& r, const Operator<F>& s, const Operator<F>& t) {
  if (r.dim != s.dim || s.dim != t.dim) throw DimensionError("yb_commutator dimension mismatch");
  Matrix<F> a = lift12(r), b = lift13(s), c = lift23(t);
  return a * (b * c) - c * (b * a);
}

/// Basis change R -> (Q (x) Q) R (Q (x) Q)^{-1}.
template <class F>
Operator<F> conjugate(const Operator<F>& r, const Matrix<F>& q) {
  if (q.rows() != r.dim || q.cols() != r.dim) throw DimensionError("conjugation shape mismatch");
  Matrix<F> qq = Matrix<F>::kron(q, q);
  return Operator<F>{r.dim, qq * r.mat * qq.inverse_matrix()};
}

}  // namespace ybx
