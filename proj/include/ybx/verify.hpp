#pragma once

#include <array>
#include <functional>
#include <optional>
#include <sstream>

#include "ybx/algebra.hpp"
#include "ybx/report.hpp"
#include "ybx/tensor.hpp"

namespace ybx {

/// Exact residual of an operator identity. is_zero holds iff every entry is
/// the field zero; otherwise witness points at the first nonzero entry.
template <class F>
struct Residual {
  Matrix<F> matrix;
  bool is_zero = false;
  std::optional<std::tuple<size_t, size_t, F>> witness;

  static Residual of(Matrix<F> m) {
    Residual r;
    r.witness = m.first_nonzero();
    r.is_zero = !r.witness.has_value();
    r.matrix = std::move(m);
    return r;
  }

  /// Decodes a flat n^3 residual coordinate into tensor slot indices.
  static std::string decode_index(size_t flat, size_t n) {
    size_t c = flat % n;
    flat /= n;
    size_t b = flat % n;
    size_t a = flat / n;
    std::ostringstream out;
    out << "e" << a << "(x)e" << b << "(x)e" << c;
    return out.str();
  }
};

template <class F>
struct BraidResult {
  Residual<F> residual;
  bool invertible = false;
};

/// Braid equation R12 R23 R12 = R23 R12 R23, plus invertibility of R.
template <class F>
BraidResult<F> check_braid(const Operator<F>& r) {
  Matrix<F> a = lift12(r), b = lift23(r);
  BraidResult<F> out;
  out.residual = Residual<F>::of(a * (b * a) - b * (a * b));
  out.invertible = r.mat.invertible();
  return out;
}

/// Constant QYBE R12 R13 R23 = R23 R13 R12.
template <class F>
Residual<F> check_qybe(const Operator<F>& r) {
  Matrix<F> a = lift12(r), b = lift13(r), c = lift23(r);
  return Residual<F>::of(a * (b * c) - c * (b * a));
}

template <class F>
struct TransferResult {
  bool braid = false;
  bool qybe_r_tau = false;
  bool qybe_tau_r = false;
  bool consistent() const { return braid == qybe_r_tau && braid == qybe_tau_r; }
};

/// R satisfies the braid equation iff R tau satisfies QYBE iff tau R does.
template <class F>
TransferResult<F> check_transfer(const Operator<F>& r) {
  Operator<F> tau = twist_operator<F>(r.dim);
  TransferResult<F> t;
  t.braid = check_braid(r).residual.is_zero;
  t.qybe_r_tau = check_qybe(compose(r, tau)).is_zero;
  t.qybe_tau_r = check_qybe(compose(tau, r)).is_zero;
  return t;
}

/// Colored QYBE R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v).
template <class F>
Residual<F> check_colored_qybe(const Operator<F>& r_uv, const Operator<F>& r_uw,
                               const Operator<F>& r_vw) {
  Matrix<F> a = lift12(r_uv), b = lift13(r_uw), c = lift23(r_vw);
  return Residual<F>::of(a * (b * c) - c * (b * a));
}

template <class F>
struct OneParamResult {
  Residual<F> standard;  // S12(s1/s2) S13(s1/s3) S23(s2/s3) = S23(s2/s3) S13(s1/s3) S12(s1/s2)
  Residual<F> variant;   // same LHS against S23(s2/s3) S13(s1/s2) S12(s1/s2), evaluated, not asserted
};

/// One-parameter YBE for a multiplicative spectral family s -> S(s); argument
/// differences appear as ratios. The standard form is the contract; the
/// variant form (third factor of the RHS at s1/s2) is computed alongside so
/// callers can log which one holds.
template <class F>
OneParamResult<F> check_one_param(const std::function<Operator<F>(const F&)>& family, const F& s1,
                                  const F& s2, const F& s3) {
  F r12 = s1 * inverse(s2), r13 = s1 * inverse(s3), r23 = s2 * inverse(s3);
  Matrix<F> a = lift12(family(r12));
  Matrix<F> b13 = lift13(family(r13));
  Matrix<F> c = lift23(family(r23));
  Matrix<F> lhs = a * (b13 * c);
  OneParamResult<F> out;
  out.standard = Residual<F>::of(lhs - c * (b13 * a));
  Matrix<F> b12 = lift13(family(r12));
  out.variant = Residual<F>::of(lhs - c * (b12 * a));
  return out;
}

/// Scalar coefficient functions of a colored ansatz.
template <class F>
struct ColoredCoeffs {
  std::function<F(const F&, const F&)> alpha, beta, gamma;
};

/// The affine solution family: alpha = p(u-v), beta = q(u-v), gamma = pu - qv.
template <class F>
ColoredCoeffs<F> affine_coeffs(const F& p, const F& q) {
  return ColoredCoeffs<F>{
      [p](const F& u, const F& v) { return F(p * (u - v)); },
      [q](const F& u, const F& v) { return F(q * (u - v)); },
      [p, q](const F& u, const F& v) { return F(p * u - q * v); },
  };
}

/// The five scalar compatibility equations the colored ansatz must satisfy,
/// evaluated exactly at one color triple (u,v,w).
template <class F>
std::array<F, 5> e_system_residuals(const ColoredCoeffs<F>& cf, const F& u, const F& v, const F& w) {
  F a_uv = cf.alpha(u, v), a_uw = cf.alpha(u, w), a_vw = cf.alpha(v, w);
  F b_uv = cf.beta(u, v), b_uw = cf.beta(u, w), b_vw = cf.beta(v, w);
  F g_uv = cf.gamma(u, v), g_uw = cf.gamma(u, w), g_vw = cf.gamma(v, w);

  std::array<F, 5> e{F(0), F(0), F(0), F(0), F(0)};
  e[0] = (b_vw - g_vw) * (a_uv * b_uw - a_uw * b_uv) + (a_uv - g_uv) * (a_vw * b_uw - a_uw * b_vw);
  e[1] = b_vw * (b_uv - g_uv) * (a_uw - g_uw) + (a_vw - g_vw) * (b_uw * g_uv - b_uv * g_uw);
  e[2] = a_uv * b_vw * (a_uw - g_uw) + a_vw * g_uw * (g_uv - a_uv) +
         g_vw * (a_uv * g_uw - a_uw * g_uv);
  e[3] = a_uv * b_vw * (b_uw - g_uw) + b_vw * g_uw * (g_uv - b_uv) +
         g_vw * (b_uv * g_uw - b_uw * g_uv);
  e[4] = a_uv * (a_vw - g_vw) * (b_uw - g_uw) + (b_uv - g_uv) * (a_uw * g_vw - a_vw * g_uw);
  return e;
}

/// The four commutator conditions [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z].
template <class F>
std::array<Residual<F>, 4> check_wxz(const Operator<F>& w, const Operator<F>& x,
                                     const Operator<F>& z) {
  return {Residual<F>::of(yb_commutator(w, w, w)), Residual<F>::of(yb_commutator(z, z, z)),
          Residual<F>::of(yb_commutator(w, x, x)), Residual<F>::of(yb_commutator(x, x, z))};
}

/// Classical YBE [r12, r13] + [r12, r23] + [r13, r23] = 0 with operator
/// commutators of the lifted matrices.
template <class F>
Residual<F> check_classical_ybe(const Operator<F>& r) {
  Matrix<F> a = lift12(r), b = lift13(r), c = lift23(r);
  auto comm = [](const Matrix<F>& x, const Matrix<F>& y) { return x * y - y * x; };
  return Residual<F>::of(comm(a, b) + comm(a, c) + comm(b, c));
}

/// Color-function condition for the graded construction with z in L_g:
/// theta(g,a) = theta(a,g) = theta(g,g) = 1 for every occupied degree a.
template <class F>
CheckReport gtheta_condition(const GradedLieAlgebra<F>& l, const std::vector<F>& z) {
  auto g = degree_of(l, z);
  if (!g) throw ZNotHomogeneousError("z is not homogeneous");
  CheckReport rep;
  bool ga = true, ag = true;
  std::string ga_wit, ag_wit;
  for (size_t i = 0; i < l.dim; ++i) {
    const auto& a = l.degree[i];
    if (ga && !is_one(l.theta(*g, a))) {
      ga = false;
      ga_wit = AbelianGroup::str(a);
    }
    if (ag && !is_one(l.theta(a, *g))) {
      ag = false;
      ag_wit = AbelianGroup::str(a);
    }
  }
  rep.add("theta(g,a)=1", ga, ga_wit);
  rep.add("theta(a,g)=1", ag, ag_wit);
  rep.add("theta(g,g)=1", is_one(l.theta(*g, *g)), "");
  return rep;
}

/// Scalar condition for colored graded families:
/// beta(u,w) alpha(v,w) - alpha(u,w) beta(v,w), zero iff compatible at (u,v,w).
template <class F>
F colored_super_condition(const std::function<F(const F&, const F&)>& alpha,
                          const std::function<F(const F&, const F&)>& beta, const F& u, const F& v,
                          const F& w) {
  return beta(u, w) * alpha(v, w) - alpha(u, w) * beta(v, w);
}

}  // namespace ybx
