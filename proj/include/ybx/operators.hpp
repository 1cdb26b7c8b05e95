#pragma once

#include <functional>
#include <utility>

#include "ybx/algebra.hpp"
#include "ybx/tensor.hpp"

namespace ybx {

// Operator families from algebra data. Every map is written down column by
// column for the basis tensors e_i (x) e_j; products/brackets come from the
// structure constants.

template <class F>
struct AssocParams {
  F alpha, beta, gamma;
};

enum class AssocCase { I, II, III, None };

inline const char* assoc_case_name(AssocCase c) {
  switch (c) {
    case AssocCase::I:
      return "i";
    case AssocCase::II:
      return "ii";
    case AssocCase::III:
      return "iii";
    case AssocCase::None:
      return "none";
  }
  return "?";
}

/// Which clause of the classification the triple satisfies:
/// (i) alpha = gamma != 0, beta != 0; (ii) beta = gamma != 0, alpha != 0;
/// (iii) alpha = beta = 0, gamma != 0; otherwise none.
template <class F>
AssocCase classify_assoc_params(const AssocParams<F>& p) {
  bool a0 = is_zero(p.alpha), b0 = is_zero(p.beta), g0 = is_zero(p.gamma);
  if (!g0 && !b0 && p.alpha == p.gamma) return AssocCase::I;
  if (!g0 && !a0 && p.beta == p.gamma) return AssocCase::II;
  if (a0 && b0 && !g0) return AssocCase::III;
  return AssocCase::None;
}

/// Parameters of the closed-form inverse: (1/beta, 1/alpha, 1/gamma) in cases
/// (i)/(ii) and (0, 0, 1/gamma) in case (iii).
template <class F>
AssocParams<F> assoc_inverse_params(const AssocParams<F>& p) {
  switch (classify_assoc_params(p)) {
    case AssocCase::I:
    case AssocCase::II:
      return {inverse(p.beta), inverse(p.alpha), inverse(p.gamma)};
    case AssocCase::III:
      return {F(0), F(0), inverse(p.gamma)};
    case AssocCase::None:
      break;
  }
  throw NotYangBaxterError("parameter triple matches no classification clause");
}

namespace build {

// column fillers; col = i*n + j for the argument e_i (x) e_j

template <class F>
void ab_tensor_unit(Matrix<F>& m, const AssocAlgebra<F>& a, size_t i, size_t j, const F& coeff,
                    bool reversed = false) {
  if (is_zero(coeff)) return;
  size_t n = a.dim;
  size_t col = i * n + j;
  size_t p = reversed ? j : i, q = reversed ? i : j;
  for (size_t k = 0; k < n; ++k) {
    const F& c = a.prod(p, q, k);
    if (is_zero(c)) continue;
    for (size_t u = 0; u < n; ++u) {
      if (is_zero(a.unit[u])) continue;
      m.at(k * n + u, col) += coeff * c * a.unit[u];
    }
  }
}

template <class F>
void unit_tensor_ab(Matrix<F>& m, const AssocAlgebra<F>& a, size_t i, size_t j, const F& coeff,
                    bool reversed = false) {
  if (is_zero(coeff)) return;
  size_t n = a.dim;
  size_t col = i * n + j;
  size_t p = reversed ? j : i, q = reversed ? i : j;
  for (size_t k = 0; k < n; ++k) {
    const F& c = a.prod(p, q, k);
    if (is_zero(c)) continue;
    for (size_t u = 0; u < n; ++u) {
      if (is_zero(a.unit[u])) continue;
      m.at(u * n + k, col) += coeff * a.unit[u] * c;
    }
  }
}

template <class F>
void bracket_tensor_vec(Matrix<F>& m, size_t n, const std::vector<F>& f, size_t i, size_t j,
                        const std::vector<F>& z, const F& coeff, bool z_first = false,
                        bool reversed = false) {
  if (is_zero(coeff)) return;
  size_t col = i * n + j;
  size_t p = reversed ? j : i, q = reversed ? i : j;
  for (size_t k = 0; k < n; ++k) {
    const F& c = detail::sc(f, n, p, q, k);
    if (is_zero(c)) continue;
    for (size_t u = 0; u < n; ++u) {
      if (is_zero(z[u])) continue;
      size_t row = z_first ? u * n + k : k * n + u;
      m.at(row, col) += coeff * c * z[u];
    }
  }
}

}  // namespace build

/// R(a (x) b) = alpha ab (x) 1 + beta 1 (x) ab - gamma a (x) b.
template <class F>
Operator<F> assoc_yb(const AssocAlgebra<F>& a, const AssocParams<F>& p) {
  size_t n = a.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::ab_tensor_unit(m, a, i, j, p.alpha);
      build::unit_tensor_ab(m, a, i, j, p.beta);
      m.at(i * n + j, i * n + j) -= p.gamma;
    }
  return Operator<F>{n, std::move(m)};
}

/// Two-parameter colored operator
/// R(u,v)(a (x) b) = p(u-v) 1 (x) ab + q(u-v) ab (x) 1 - (pu - qv) b (x) a.
template <class F>
Operator<F> colored_yb(const AssocAlgebra<F>& a, const F& p, const F& q, const F& u, const F& v) {
  size_t n = a.dim;
  F diff = u - v;
  F ca = p * diff, cb = q * diff, cg = p * u - q * v;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::unit_tensor_ab(m, a, i, j, ca);
      build::ab_tensor_unit(m, a, i, j, cb);
      m.at(j * n + i, i * n + j) -= cg;
    }
  return Operator<F>{n, std::move(m)};
}

/// Closed-form inverse of the colored operator, defined when pu != qv and
/// qu != pv:
/// R^{-1}(u,v)(a (x) b) = p(u-v)/((qu-pv)(pu-qv)) ba (x) 1
///                      + q(u-v)/((qu-pv)(pu-qv)) 1 (x) ba - 1/(pu-qv) b (x) a.
template <class F>
Operator<F> colored_yb_inverse(const AssocAlgebra<F>& a, const F& p, const F& q, const F& u,
                               const F& v) {
  F puqv = p * u - q * v;
  F qupv = q * u - p * v;
  if (is_zero(puqv) || is_zero(qupv))
    throw NonInvertibleColorError("colored operator not invertible: pu = qv or qu = pv");
  size_t n = a.dim;
  F denom_inv = inverse(F(qupv * puqv));
  F diff = u - v;
  F ca = p * diff * denom_inv;  // ba (x) 1
  F cb = q * diff * denom_inv;  // 1 (x) ba
  F cg = inverse(puqv);         // b (x) a
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::ab_tensor_unit(m, a, i, j, ca, /*reversed=*/true);
      build::unit_tensor_ab(m, a, i, j, cb, /*reversed=*/true);
      m.at(j * n + i, i * n + j) -= cg;
    }
  return Operator<F>{n, std::move(m)};
}

/// One-parameter operator with the multiplicative spectral value s:
/// S(a (x) b) = (s-1) 1 (x) ab + q(s-1) ab (x) 1 - (s-q) b (x) a.
template <class F>
Operator<F> spectral_yb(const AssocAlgebra<F>& a, const F& q, const F& s) {
  if (is_zero(s)) throw ValidationError("spectral value s must be nonzero");
  size_t n = a.dim;
  F sm1 = s - F(1);
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::unit_tensor_ab(m, a, i, j, sm1);
      build::ab_tensor_unit(m, a, i, j, F(q * sm1));
      m.at(j * n + i, i * n + j) -= s - q;
    }
  return Operator<F>{n, std::move(m)};
}

/// S^{-1}(a (x) b) = (s-1)/((qs-1)(s-q)) ba (x) 1 + q(s-1)/((qs-1)(s-q)) 1 (x) ba
///                 - 1/(s-q) b (x) a, defined for s not in {q, 1/q}.
template <class F>
Operator<F> spectral_yb_inverse(const AssocAlgebra<F>& a, const F& q, const F& s) {
  if (is_zero(s)) throw ValidationError("spectral value s must be nonzero");
  F smq = s - q;
  F qsm1 = q * s - F(1);
  if (is_zero(smq) || is_zero(qsm1))
    throw NonInvertibleSpectralError("spectral operator not invertible at s in {q, 1/q}");
  size_t n = a.dim;
  F denom_inv = inverse(F(qsm1 * smq));
  F sm1 = s - F(1);
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::ab_tensor_unit(m, a, i, j, F(sm1 * denom_inv), /*reversed=*/true);
      build::unit_tensor_ab(m, a, i, j, F(q * sm1 * denom_inv), /*reversed=*/true);
      m.at(j * n + i, i * n + j) -= inverse(smq);
    }
  return Operator<F>{n, std::move(m)};
}

namespace detail {
template <class F>
void require_central(const GradedLieAlgebra<F>& l, const std::vector<F>& z) {
  if (z.size() != l.dim) throw DimensionError("z has wrong dimension");
  if (!is_central(l.dim, l.f, z)) throw ZNotCentralError("z is not central");
}

template <class F>
void require_central_even(const GradedLieAlgebra<F>& l, const std::vector<F>& z) {
  require_central(l, z);
  if (!l.z2_or_trivial())
    throw ValidationError("sign-graded construction needs a Z2 (or trivial) grading");
  auto deg = degree_of(l, z);
  if (!deg) throw ZNotHomogeneousError("z is not homogeneous");
  for (unsigned c : *deg)
    if (c % 2 != 0) throw ZNotEvenDegreeError("z must have even degree");
}

/// The Z2 sign (-1)^{|x||y|} as a field element.
template <class F>
F z2_sign(const GradedLieAlgebra<F>& l, size_t i, size_t j) {
  return (l.parity(i) * l.parity(j)) % 2 ? F(-1) : F(1);
}
}  // namespace detail

/// x (x) y -> alpha [x,y] (x) z + (-1)^{|x||y|} y (x) x  (z central, even).
template <class F>
Operator<F> super_yb(const GradedLieAlgebra<F>& l, const std::vector<F>& z, const F& alpha) {
  detail::require_central_even(l, z);
  size_t n = l.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, alpha);
      m.at(j * n + i, i * n + j) += detail::z2_sign(l, i, j);
    }
  return Operator<F>{n, std::move(m)};
}

/// Its closed-form inverse: x (x) y -> alpha z (x) [x,y] + (-1)^{|x||y|} y (x) x.
template <class F>
Operator<F> super_yb_inverse(const GradedLieAlgebra<F>& l, const std::vector<F>& z, const F& alpha) {
  detail::require_central_even(l, z);
  size_t n = l.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, alpha, /*z_first=*/true);
      m.at(j * n + i, i * n + j) += detail::z2_sign(l, i, j);
    }
  return Operator<F>{n, std::move(m)};
}

/// Two-coefficient variant: x (x) y -> alpha [x,y] (x) z + (-1)^{|x||y|} beta y (x) x.
template <class F>
Operator<F> super_yb_scaled(const GradedLieAlgebra<F>& l, const std::vector<F>& z, const F& alpha,
                            const F& beta) {
  if (is_zero(beta)) throw BetaZeroError("beta must be nonzero");
  detail::require_central_even(l, z);
  size_t n = l.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, alpha);
      m.at(j * n + i, i * n + j) += detail::z2_sign(l, i, j) * beta;
    }
  return Operator<F>{n, std::move(m)};
}

/// Inverse of the two-coefficient variant:
/// x (x) y -> (alpha/beta^2) z (x) [x,y] + (-1)^{|x||y|} (1/beta) y (x) x.
template <class F>
Operator<F> super_yb_scaled_inverse(const GradedLieAlgebra<F>& l, const std::vector<F>& z,
                                    const F& alpha, const F& beta) {
  if (is_zero(beta)) throw BetaZeroError("beta must be nonzero");
  detail::require_central_even(l, z);
  size_t n = l.dim;
  F binv = inverse(beta);
  F coeff = alpha * binv * binv;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, coeff, /*z_first=*/true);
      m.at(j * n + i, i * n + j) += detail::z2_sign(l, i, j) * binv;
    }
  return Operator<F>{n, std::move(m)};
}

/// Colored graded operator, coefficients supplied per color pair:
/// R(u,v)(a (x) b) = aval [a,b] (x) z + bval (-1)^{|a||b|} a (x) b
/// (no twist: the second term keeps the a (x) b order).
template <class F>
Operator<F> colored_super_yb(const GradedLieAlgebra<F>& l, const std::vector<F>& z, const F& aval,
                             const F& bval) {
  detail::require_central_even(l, z);
  size_t n = l.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, aval);
      m.at(i * n + j, i * n + j) += detail::z2_sign(l, i, j) * bval;
    }
  return Operator<F>{n, std::move(m)};
}

/// General color-function version on a (G,theta)-Lie algebra:
/// R(x (x) y) = alpha [x,y] (x) z + theta(a,b) x (x) y for x in L_a, y in L_b;
/// z central and homogeneous.
template <class F>
Operator<F> gtheta_yb(const GradedLieAlgebra<F>& l, const std::vector<F>& z, const F& alpha) {
  detail::require_central(l, z);
  if (!degree_of(l, z)) throw ZNotHomogeneousError("z is not homogeneous");
  size_t n = l.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, alpha);
      m.at(i * n + j, i * n + j) += l.theta(l.degree[i], l.degree[j]);
    }
  return Operator<F>{n, std::move(m)};
}

/// Its stated inverse: R^{-1}(x (x) y) = alpha [y,x] (x) z + theta(b,a) x (x) y.
template <class F>
Operator<F> gtheta_yb_inverse(const GradedLieAlgebra<F>& l, const std::vector<F>& z, const F& alpha) {
  detail::require_central(l, z);
  if (!degree_of(l, z)) throw ZNotHomogeneousError("z is not homogeneous");
  size_t n = l.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, alpha, /*z_first=*/false, /*reversed=*/true);
      m.at(i * n + j, i * n + j) += l.theta(l.degree[j], l.degree[i]);
    }
  return Operator<F>{n, std::move(m)};
}

/// Classical YBE solution r(x (x) y) = [x,y] (x) z + alpha x (x) y, z central.
/// `require_central = false` builds the raw map for counterexample probes.
template <class F>
Operator<F> classical_r(const LieAlgebra<F>& l, const std::vector<F>& z, const F& alpha,
                        bool require_central = true) {
  if (z.size() != l.dim) throw DimensionError("z has wrong dimension");
  if (require_central && !is_central(l.dim, l.f, z)) throw ZNotCentralError("z is not central");
  size_t n = l.dim;
  Matrix<F> m(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      build::bracket_tensor_vec(m, n, l.f, i, j, z, F(1));
      m.at(i * n + j, i * n + j) += alpha;
    }
  return Operator<F>{n, std::move(m)};
}

template <class F>
struct WxzTriple {
  Operator<F> w, x, z;
};

/// W(a(x)b) = ab(x)1 + lambda 1(x)ab - b(x)a;
/// Z(a(x)b) = mu ab(x)1 + 1(x)ab - b(x)a;
/// X(a(x)b) = ab(x)1 + 1(x)ab - b(x)a.
template <class F>
WxzTriple<F> wxz_assoc(const AssocAlgebra<F>& a, const F& lambda, const F& mu) {
  size_t n = a.dim;
  auto fill = [&](const F& c_ab1, const F& c_1ab) {
    Matrix<F> m(n * n, n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        build::ab_tensor_unit(m, a, i, j, c_ab1);
        build::unit_tensor_ab(m, a, i, j, c_1ab);
        m.at(j * n + i, i * n + j) -= F(1);
      }
    return Operator<F>{n, std::move(m)};
  };
  return WxzTriple<F>{fill(F(1), lambda), fill(F(1), F(1)), fill(mu, F(1))};
}

/// From any colored family: W = R(s,s), X = R(s,t), Z = R(t,t).
template <class F>
WxzTriple<F> wxz_from_colored(const std::function<Operator<F>(const F&, const F&)>& family, const F& s,
                              const F& t) {
  return WxzTriple<F>{family(s, s), family(s, t), family(t, t)};
}

/// From a unital Poisson algebra with {x,1} = 0:
/// W(x(x)y) = {x,y}(x)1 + x(x)y; X(x(x)y) = 1(x){x,y} + x(x)y;
/// Z(x(x)y) = 1(x)x*y + x*y(x)1 - y(x)x.
template <class F>
WxzTriple<F> wxz_poisson(const PoissonAlgebra<F>& p) {
  size_t n = p.product.dim;
  // bracket-unit precondition first: Leibniz already forces {x,1} = 0, so a
  // violating input would otherwise surface as a generic axiom failure
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      F s(0);
      for (size_t j = 0; j < n; ++j) s += p.product.unit[j] * p.br(i, j, k);
      if (!is_zero(s)) throw BracketUnitError("bracket with the unit must vanish");
    }
  CheckReport axioms = check_poisson(p, /*require_unit=*/true);
  if (!axioms.all_pass()) throw ValidationError("wxz_poisson input fails the Poisson axioms");

  Matrix<F> w(n * n, n * n), x(n * n, n * n), z(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t col = i * n + j;
      build::bracket_tensor_vec(w, n, p.bracket, i, j, p.product.unit, F(1));
      w.at(col, col) += F(1);
      build::bracket_tensor_vec(x, n, p.bracket, i, j, p.product.unit, F(1), /*z_first=*/true);
      x.at(col, col) += F(1);
      build::unit_tensor_ab(z, p.product, i, j, F(1));
      build::ab_tensor_unit(z, p.product, i, j, F(1));
      z.at(j * n + i, col) -= F(1);
    }
  return WxzTriple<F>{Operator<F>{n, std::move(w)}, Operator<F>{n, std::move(x)},
                      Operator<F>{n, std::move(z)}};
}

/// The mutually inverse braid pair with parameters (q, 1/q, 1/q) and (q, 1/q, q).
template <class F>
std::pair<Operator<F>, Operator<F>> baxterization_pair(const AssocAlgebra<F>& a, const F& q) {
  if (is_zero(q)) throw QZeroError("q must be nonzero");
  F qi = inverse(q);
  return {assoc_yb(a, AssocParams<F>{q, qi, qi}), assoc_yb(a, AssocParams<F>{q, qi, q})};
}

}  // namespace ybx
