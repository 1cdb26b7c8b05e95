#pragma once

#include <string>
#include <vector>

#include "ybx/algebra.hpp"
#include "ybx/operators.hpp"
#include "ybx/verify.hpp"

namespace ybx {

/// 4-tuple (V, phi, e, eps): phi an operator on V (x) V, a distinguished
/// vector e and covector eps with the compatibilities checked below.
template <class F>
struct YBStructure {
  size_t dim = 0;
  Operator<F> phi;
  std::vector<F> e;    // coordinates in V
  std::vector<F> eps;  // covector coordinates

  bool operator==(const YBStructure& o) const {
    return dim == o.dim && phi == o.phi && e == o.e && eps == o.eps;
  }
  bool operator!=(const YBStructure& o) const { return !(*this == o); }
};

namespace duality_detail {
/// (I (x) eps) as an n x n^2 matrix: e_i (x) e_j -> eps_j e_i.
template <class F>
Matrix<F> id_tensor_eps(size_t n, const std::vector<F>& eps) {
  Matrix<F> m(n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, i * n + j) = eps[j];
  return m;
}

/// (eps (x) I) as an n x n^2 matrix: e_i (x) e_j -> eps_i e_j.
template <class F>
Matrix<F> eps_tensor_id(size_t n, const std::vector<F>& eps) {
  Matrix<F> m(n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(j, i * n + j) = eps[i];
  return m;
}

template <class F>
std::vector<F> basis_tensor(size_t n, size_t i, const std::vector<F>& v, bool basis_first) {
  std::vector<F> r(n * n, F(0));
  for (size_t m = 0; m < n; ++m) {
    if (is_zero(v[m])) continue;
    r[basis_first ? i * n + m : m * n + i] = v[m];
  }
  return r;
}
}  // namespace duality_detail

/// Clause-by-clause verification:
///   ii)  phi invertible and a braid solution;
///   iii) phi(x (x) e) = e (x) x and phi(e (x) x) = x (x) e for basis x;
///   iv)  (I (x) eps) phi = eps (x) I and (eps (x) I) phi = I (x) eps.
template <class F>
CheckReport check_yb_structure(const YBStructure<F>& s) {
  size_t n = s.dim;
  if (s.phi.dim != n || s.e.size() != n || s.eps.size() != n)
    throw ValidationError("yb structure shape mismatch");
  CheckReport rep;

  BraidResult<F> braid = check_braid(s.phi);
  rep.add("phi_braid", braid.residual.is_zero,
          braid.residual.is_zero ? ""
                                 : Residual<F>::decode_index(std::get<0>(*braid.residual.witness), n));
  rep.add("phi_invertible", braid.invertible, "");

  bool iii = true;
  std::string iii_wit;
  for (size_t i = 0; i < n && iii; ++i) {
    std::vector<F> xe = s.phi.mat.apply(duality_detail::basis_tensor(n, i, s.e, /*basis_first=*/true));
    if (xe != duality_detail::basis_tensor(n, i, s.e, /*basis_first=*/false)) {
      iii = false;
      iii_wit = "x=e" + std::to_string(i);
      break;
    }
    std::vector<F> ex = s.phi.mat.apply(duality_detail::basis_tensor(n, i, s.e, /*basis_first=*/false));
    if (ex != duality_detail::basis_tensor(n, i, s.e, /*basis_first=*/true)) {
      iii = false;
      iii_wit = "x=e" + std::to_string(i);
    }
  }
  rep.add("e_compatibility", iii, iii_wit);

  Matrix<F> ieps = duality_detail::id_tensor_eps(n, s.eps);
  Matrix<F> epsi = duality_detail::eps_tensor_id(n, s.eps);
  bool iv = (ieps * s.phi.mat == epsi) && (epsi * s.phi.mat == ieps);
  rep.add("eps_compatibility", iv, "");
  return rep;
}

/// Morphism conditions for f: (V,phi,e,eps) -> (V',phi',e',eps'):
///   v)   (f (x) f) phi = phi' (f (x) f);
///   vi)  f(e) = e';
///   vii) eps' f = eps.
template <class F>
CheckReport check_yb_morphism(const YBStructure<F>& src, const YBStructure<F>& dst,
                              const Matrix<F>& f) {
  if (f.rows() != dst.dim || f.cols() != src.dim) throw DimensionError("morphism shape mismatch");
  CheckReport rep;
  Matrix<F> ff = Matrix<F>::kron(f, f);
  rep.add("intertwines_phi", ff * src.phi.mat == dst.phi.mat * ff, "");
  rep.add("preserves_e", f.apply(src.e) == dst.e, "");
  bool vii = true;
  for (size_t j = 0; j < src.dim; ++j) {
    F s(0);
    for (size_t i = 0; i < dst.dim; ++i) s += dst.eps[i] * f.at(i, j);
    if (!(s == src.eps[j])) {
      vii = false;
      break;
    }
  }
  rep.add("preserves_eps", vii, "");
  return rep;
}

/// Unital algebra A -> (A, phi_A, 1_A, 0) with
/// phi_A(a (x) b) = ab (x) 1 + 1 (x) ab - a (x) b.
template <class F>
YBStructure<F> functor_f_alg(const AssocAlgebra<F>& a) {
  return YBStructure<F>{a.dim, assoc_yb(a, AssocParams<F>{F(1), F(1), F(1)}), a.unit,
                        std::vector<F>(a.dim, F(0))};
}

/// Coalgebra C -> (C, psi_C, 0, eps) with
/// psi_C(x (x) y) = D(x) eps(y) + eps(x) D(y) - x (x) y.
template <class F>
YBStructure<F> functor_g_coalg(const Coalgebra<F>& c) {
  size_t n = c.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t col = i * n + j;
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) {
          F v = c.cop(i, k, l) * c.counit[j] + c.counit[i] * c.cop(j, k, l);
          if (!is_zero(v)) m.at(k * n + l, col) += v;
        }
      m.at(col, col) -= F(1);
    }
  return YBStructure<F>{n, Operator<F>{n, std::move(m)}, std::vector<F>(n, F(0)), c.counit};
}

/// Lie algebra L -> (L + k x0, phi, x0, 0) with x0 adjoined central and
/// phi(x (x) y) = [x,y] (x) x0 + y (x) x.
template <class F>
YBStructure<F> functor_f_lie(const LieAlgebra<F>& l) {
  size_t n = l.dim + 1;  // x0 at index n-1
  LieAlgebra<F> ext{n, std::vector<F>(n * n * n, F(0))};
  for (size_t i = 0; i < l.dim; ++i)
    for (size_t j = 0; j < l.dim; ++j)
      for (size_t k = 0; k < l.dim; ++k) ext.bracket_ref(i, j, k) = l.bracket(i, j, k);
  std::vector<F> x0(n, F(0));
  x0[n - 1] = F(1);
  GradedLieAlgebra<F> g = trivially_graded(ext);
  YBStructure<F> s;
  s.dim = n;
  s.phi = super_yb(g, x0, F(1));
  s.e = x0;
  s.eps = std::vector<F>(n, F(0));
  return s;
}

/// Lie coalgebra M -> (M + k x0, psi, 0, nu = x0^*) with D(x0) = 0 and
/// psi(x (x) y) = D(x) nu(y) + y (x) x.
template <class F>
YBStructure<F> functor_g_liecoalg(const LieCoalgebra<F>& mco) {
  size_t n = mco.dim + 1;  // x0 at index n-1
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t col = i * n + j;
      if (j == n - 1 && i < mco.dim) {
        // nu(y) = 1 exactly on x0; D(x0) = 0 kills the i = x0 case
        for (size_t k = 0; k < mco.dim; ++k)
          for (size_t l = 0; l < mco.dim; ++l) {
            const F& v = mco.cob(i, k, l);
            if (!is_zero(v)) m.at(k * n + l, col) += v;
          }
      }
      m.at(j * n + i, col) += F(1);
    }
  std::vector<F> nu(n, F(0));
  nu[n - 1] = F(1);
  return YBStructure<F>{n, Operator<F>{n, std::move(m)}, std::vector<F>(n, F(0)), nu};
}

/// Duality: (V, phi, e, eps) -> (V*, phi transposed under the canonical
/// pairing, eps as the new vector, evaluation-at-e as the new covector).
template <class F>
YBStructure<F> dualize_yb(const YBStructure<F>& s) {
  return YBStructure<F>{s.dim, Operator<F>{s.dim, s.phi.mat.transpose()}, s.eps, s.e};
}

/// Componentwise equality of the two duality identities, starting from an
/// algebra and from its dual coalgebra.
template <class F>
CheckReport check_duality_identities(const AssocAlgebra<F>& a) {
  CheckReport rep;
  Coalgebra<F> astar = dualize_assoc(a);

  YBStructure<F> lhs1 = dualize_yb(functor_f_alg(a));
  YBStructure<F> rhs1 = functor_g_coalg(astar);
  rep.add("dual_of_algebra_image_phi", lhs1.phi == rhs1.phi, "");
  rep.add("dual_of_algebra_image_e", lhs1.e == rhs1.e, "");
  rep.add("dual_of_algebra_image_eps", lhs1.eps == rhs1.eps, "");

  YBStructure<F> lhs2 = dualize_yb(functor_g_coalg(astar));
  YBStructure<F> rhs2 = functor_f_alg(dualize_coalg(astar));
  rep.add("dual_of_coalgebra_image_phi", lhs2.phi == rhs2.phi, "");
  rep.add("dual_of_coalgebra_image_e", lhs2.e == rhs2.e, "");
  rep.add("dual_of_coalgebra_image_eps", lhs2.eps == rhs2.eps, "");
  return rep;
}

}  // namespace ybx
