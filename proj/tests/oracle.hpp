#pragma once

// Test-only reference implementations, kept independent of the library's
// kron/lift machinery: operators act on triple tensors by explicit index
// bookkeeping instead of Kronecker products.

#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/tensor.hpp"

namespace oracle {

enum class Slots { S12, S23, S13 };

/// Applies the n^2 x n^2 operator matrix to the chosen pair of slots of a
/// dense coefficient vector over V (x) V (x) V.
template <class F>
std::vector<F> apply_slots(const ybx::Matrix<F>& op, size_t n, Slots slots,
                           const std::vector<F>& vec) {
  std::vector<F> out(n * n * n, F(0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        const F& coeff = vec[(a * n + b) * n + c];
        if (ybx::is_zero(coeff)) continue;
        size_t pair;
        switch (slots) {
          case Slots::S12:
            pair = a * n + b;
            break;
          case Slots::S23:
            pair = b * n + c;
            break;
          default:
            pair = a * n + c;
            break;
        }
        for (size_t x = 0; x < n; ++x)
          for (size_t y = 0; y < n; ++y) {
            const F& m = op.at(x * n + y, pair);
            if (ybx::is_zero(m)) continue;
            size_t idx;
            switch (slots) {
              case Slots::S12:
                idx = (x * n + y) * n + c;
                break;
              case Slots::S23:
                idx = (a * n + x) * n + y;
                break;
              default:
                idx = (x * n + b) * n + y;
                break;
            }
            out[idx] += coeff * m;
          }
      }
  return out;
}

/// The n^3 x n^3 matrix of the slot action, column by column.
template <class F>
ybx::Matrix<F> slot_matrix(const ybx::Matrix<F>& op, size_t n, Slots slots) {
  size_t dim = n * n * n;
  ybx::Matrix<F> out(dim, dim);
  for (size_t col = 0; col < dim; ++col) {
    std::vector<F> basis(dim, F(0));
    basis[col] = F(1);
    std::vector<F> img = apply_slots(op, n, slots, basis);
    for (size_t row = 0; row < dim; ++row) out.at(row, col) = img[row];
  }
  return out;
}

/// Braid residual computed entirely through the slot-action oracle.
template <class F>
ybx::Matrix<F> braid_residual(const ybx::Operator<F>& r) {
  ybx::Matrix<F> a = slot_matrix(r.mat, r.dim, Slots::S12);
  ybx::Matrix<F> b = slot_matrix(r.mat, r.dim, Slots::S23);
  return a * b * a - b * a * b;
}

template <class F>
ybx::Matrix<F> qybe_residual(const ybx::Operator<F>& r) {
  ybx::Matrix<F> a = slot_matrix(r.mat, r.dim, Slots::S12);
  ybx::Matrix<F> b = slot_matrix(r.mat, r.dim, Slots::S13);
  ybx::Matrix<F> c = slot_matrix(r.mat, r.dim, Slots::S23);
  return a * b * c - c * b * a;
}

template <class F>
ybx::Matrix<F> yb_commutator(const ybx::Operator<F>& r, const ybx::Operator<F>& s,
                             const ybx::Operator<F>& t) {
  ybx::Matrix<F> a = slot_matrix(r.mat, r.dim, Slots::S12);
  ybx::Matrix<F> b = slot_matrix(s.mat, s.dim, Slots::S13);
  ybx::Matrix<F> c = slot_matrix(t.mat, t.dim, Slots::S23);
  return a * b * c - c * b * a;
}

}  // namespace oracle
