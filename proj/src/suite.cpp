#include "ybx/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "ybx/catalog.hpp"
#include "ybx/duality.hpp"
#include "ybx/frt.hpp"
#include "ybx/json_io.hpp"
#include "ybx/operators.hpp"
#include "ybx/rng.hpp"
#include "ybx/verify.hpp"

namespace ybx {

namespace {

template <class F>
bool is_identity(const Operator<F>& op) {
  return op.mat == Matrix<F>::identity(op.dim * op.dim);
}

template <class F>
bool mutually_inverse(const Operator<F>& a, const Operator<F>& b) {
  return is_identity(compose(a, b)) && is_identity(compose(b, a));
}

/// Everything the suite constructs, re-examined by the transfer criterion.
struct Registry {
  std::vector<Operator<Rat>> over_q;
  std::vector<Operator<RationalFunction>> over_qq;

  void add(const Operator<Rat>& op) { over_q.push_back(op); }
  void add(const Operator<RationalFunction>& op) { over_qq.push_back(op); }
};

struct Ctx {
  uint64_t seed;
  Registry registry;

  RatSampler sampler(uint64_t criterion) const {
    return RatSampler(SplitMix64(seed).fork(criterion));
  }
};

std::string fmt(const Rat& x) { return x.get_str(); }

// --- criterion 1 ------------------------------------------------------------

CriterionResult c01_assoc_classification(Ctx& ctx) {
  CriterionResult res{"01_assoc_family_classification",
                      "YB operators from associative algebras: three-case classification (iff) "
                      "and closed-form inverses",
                      true,
                      {}};
  RatSampler s = ctx.sampler(1);
  const char* names[] = {"dual_numbers", "split", "group_c2", "mat2"};
  size_t solutions = 0, non_solutions = 0;
  for (const char* name : names) {
    AssocAlgebra<Rat> a = catalog::get(name).assoc;
    for (int casekind = 0; casekind < 3; ++casekind) {
      for (int rep = 0; rep < 5; ++rep) {
        AssocParams<Rat> p{Rat(0), Rat(0), Rat(0)};
        if (casekind == 0) {  // alpha = gamma != 0, beta != 0
          p.alpha = p.gamma = s.nonzero();
          p.beta = s.nonzero();
        } else if (casekind == 1) {  // beta = gamma != 0, alpha != 0
          p.beta = p.gamma = s.nonzero();
          p.alpha = s.nonzero();
        } else {  // alpha = beta = 0, gamma != 0
          p.gamma = s.nonzero();
        }
        Operator<Rat> r = assoc_yb(a, p);
        Operator<Rat> rinv = assoc_yb(a, assoc_inverse_params(p));
        ctx.registry.add(r);
        ctx.registry.add(rinv);
        BraidResult<Rat> br = check_braid(r);
        if (!br.residual.is_zero || !br.invertible || !mutually_inverse(r, rinv)) {
          res.pass = false;
          res.details.push_back(std::string("unexpected failure on ") + name + " case " +
                                assoc_case_name(classify_assoc_params(p)));
        }
        ++solutions;
      }
    }
    for (int rep = 0; rep < 5; ++rep) {
      // none-case sampler: all components nonzero, alpha != gamma, beta != gamma
      Rat gamma = s.nonzero();
      Rat alpha = s.nonzero_avoiding(&gamma, &gamma + 1);
      Rat beta = s.nonzero_avoiding(&gamma, &gamma + 1);
      AssocParams<Rat> p{alpha, beta, gamma};
      if (classify_assoc_params(p) != AssocCase::None) {
        res.pass = false;
        res.details.push_back("sampler produced a classified triple");
        continue;
      }
      Operator<Rat> r = assoc_yb(a, p);
      ctx.registry.add(r);
      if (check_braid(r).residual.is_zero) {
        res.pass = false;
        res.details.push_back(std::string("braid residual vanished for a none-triple on ") + name);
      }
      ++non_solutions;
    }
  }
  res.details.push_back("solutions verified: " + std::to_string(solutions) +
                        " (braid=0, invertible, inverse composes); none-triples with nonzero "
                        "residual: " +
                        std::to_string(non_solutions));
  res.details.push_back(
      "none-sampler: components nonzero with alpha != gamma, beta != gamma (the zero map and "
      "other braid-but-singular degenerations are excluded by construction)");
  return res;
}

// --- criterion 2 ------------------------------------------------------------

CriterionResult c02_transfer(Ctx& ctx) {
  CriterionResult res{"02_braid_qybe_transfer",
                      "R satisfies the braid equation iff R tau satisfies constant QYBE iff "
                      "tau R does, over every operator the suite constructs",
                      true,
                      {}};
  size_t n_q = 0, n_qq = 0;
  for (const auto& op : ctx.registry.over_q) {
    if (!check_transfer(op).consistent()) {
      res.pass = false;
      res.details.push_back("transfer booleans disagree for a Q operator");
    }
    ++n_q;
  }
  for (const auto& op : ctx.registry.over_qq) {
    if (!check_transfer(op).consistent()) {
      res.pass = false;
      res.details.push_back("transfer booleans disagree for a Q(q) operator");
    }
    ++n_qq;
  }
  res.details.push_back("operators examined: " + std::to_string(n_q) + " over Q, " +
                        std::to_string(n_qq) + " over Q(q)");
  return res;
}

// --- criterion 3 ------------------------------------------------------------

CriterionResult c03_reference_rmatrix(Ctx& ctx) {
  CriterionResult res{"03_dim2_rmatrix_frt",
                      "the two-dimensional R-matrix family: QYBE over Q(q) and its FRT "
                      "commutation relations (rank 8, published lists inside the computed span)",
                      true,
                      {}};
  RationalFunction q = RationalFunction::variable();
  for (int eta = 0; eta <= 1; ++eta) {
    Operator<RationalFunction> r = reference_rmatrix(q, eta);
    ctx.registry.add(r);
    if (!check_qybe(r).is_zero) {
      res.pass = false;
      res.details.push_back("QYBE residual nonzero for eta=" + std::to_string(eta));
    }
    RelationSet<RationalFunction> computed = frt_relations(r);
    RelationSet<RationalFunction> published = reference_relations(q, eta);
    if (computed.rank() != 8) {
      res.pass = false;
      res.details.push_back("computed relation rank " + std::to_string(computed.rank()) +
                            " != 8 for eta=" + std::to_string(eta));
    }
    SpanCompareResult<RationalFunction> cmp = compare_spans(published, computed);
    bool contained = cmp.relation == SpanRelation::Equal ||
                     cmp.relation == SpanRelation::FirstInsideSecond;
    if (!contained) {
      res.pass = false;
      res.details.push_back(std::string("published relations not inside the computed span for eta=") +
                            std::to_string(eta) + " (" + span_relation_name(cmp.relation) + ")");
    }
    res.details.push_back("eta=" + std::to_string(eta) + ": published list rank " +
                          std::to_string(published.rank()) + ", span comparison: " +
                          span_relation_name(cmp.relation));
  }
  return res;
}

// --- criterion 4 ------------------------------------------------------------

CriterionResult c04_colored_family(Ctx& ctx) {
  CriterionResult res{"04_colored_affine_family",
                      "the affine colored family solves the two-parameter QYBE; closed-form "
                      "inverse on its stated domain",
                      true,
                      {}};
  RatSampler s = ctx.sampler(4);
  size_t samples = 0, inverses = 0;
  for (const char* name : {"dual_numbers", "mat2"}) {
    AssocAlgebra<Rat> a = catalog::get(name).assoc;
    for (int rep = 0; rep < 32; ++rep) {
      Rat p = s.rational(), q = s.rational();
      Rat u = s.rational(), v = s.rational(), w = s.rational();
      Operator<Rat> ruv = colored_yb(a, p, q, u, v);
      Operator<Rat> ruw = colored_yb(a, p, q, u, w);
      Operator<Rat> rvw = colored_yb(a, p, q, v, w);
      ctx.registry.add(ruv);
      ctx.registry.add(ruw);
      ctx.registry.add(rvw);
      if (!check_colored_qybe(ruv, ruw, rvw).is_zero) {
        res.pass = false;
        res.details.push_back(std::string("colored QYBE residual nonzero on ") + name);
      }
      ++samples;
      if (!is_zero(Rat(p * u - q * v)) && !is_zero(Rat(q * u - p * v))) {
        Operator<Rat> rinv = colored_yb_inverse(a, p, q, u, v);
        ctx.registry.add(rinv);
        if (!mutually_inverse(ruv, rinv)) {
          res.pass = false;
          res.details.push_back(std::string("colored inverse failed to compose on ") + name);
        }
        ++inverses;
      }
    }
  }
  res.details.push_back("sampled color points: " + std::to_string(samples) +
                        "; inverse compositions on the invertibility domain: " +
                        std::to_string(inverses));
  return res;
}

// --- criterion 5 ------------------------------------------------------------

CriterionResult c05_e_system(Ctx& ctx) {
  CriterionResult res{"05_colored_coefficient_system",
                      "the five scalar compatibility equations vanish for the affine ansatz "
                      "alpha=p(u-v), beta=q(u-v), gamma=pu-qv",
                      true,
                      {}};
  RatSampler s = ctx.sampler(5);
  size_t points = 0;
  for (int rep = 0; rep < 32; ++rep) {
    Rat p = s.rational(), q = s.rational();
    Rat u = s.rational(), v = s.rational(), w = s.rational();
    ColoredCoeffs<Rat> cf = affine_coeffs(p, q);
    std::array<Rat, 5> e = e_system_residuals(cf, u, v, w);
    for (size_t k = 0; k < 5; ++k)
      if (!is_zero(e[k])) {
        res.pass = false;
        res.details.push_back("equation e" + std::to_string(k + 1) + " nonzero at sample " +
                              std::to_string(rep));
      }
    ++points;
  }
  res.details.push_back("sampled (p,q,u,v,w) points, all five equations exactly zero: " +
                        std::to_string(points));
  return res;
}

// --- criterion 6 ------------------------------------------------------------

CriterionResult c06_spectral(Ctx& ctx) {
  CriterionResult res{"06_one_parameter_family",
                      "the multiplicative spectral family solves the one-parameter YBE "
                      "(standard form asserted, printed variant logged) with closed-form inverse",
                      true,
                      {}};
  RatSampler s = ctx.sampler(6);
  size_t variant_zero = 0, variant_nonzero = 0, inverses = 0;
  auto run_algebra = [&](const AssocAlgebra<Rat>& a, int count, const char* name) {
    for (int rep = 0; rep < count; ++rep) {
      Rat q = s.nonzero();
      Rat qinv = Rat(1) / q;
      auto bad = [&](const Rat& v) { return v == q || v == qinv; };
      // the spectral values and every argument ratio stay off the
      // non-invertible locus {q, 1/q}
      Rat s1, s2, s3;
      for (;;) {
        s1 = s.nonzero();
        s2 = s.nonzero();
        s3 = s.nonzero();
        if (!bad(s1) && !bad(s2) && !bad(s3) && !bad(Rat(s1 / s2)) && !bad(Rat(s1 / s3)) &&
            !bad(Rat(s2 / s3)))
          break;
      }
      std::function<Operator<Rat>(const Rat&)> family = [&](const Rat& ratio) {
        return spectral_yb(a, q, ratio);
      };
      OneParamResult<Rat> out = check_one_param(family, s1, s2, s3);
      if (!out.standard.is_zero) {
        res.pass = false;
        res.details.push_back(std::string("standard-form residual nonzero on ") + name);
      }
      (out.variant.is_zero ? variant_zero : variant_nonzero) += 1;
      for (const Rat& ratio : {s1, s2, s3, Rat(s1 / s2), Rat(s1 / s3), Rat(s2 / s3)}) {
        Operator<Rat> fwd = spectral_yb(a, q, ratio);
        Operator<Rat> bwd = spectral_yb_inverse(a, q, ratio);
        ctx.registry.add(fwd);
        ctx.registry.add(bwd);
        if (!mutually_inverse(fwd, bwd)) {
          res.pass = false;
          res.details.push_back(std::string("spectral inverse failed to compose on ") + name);
        }
        ++inverses;
      }
    }
  };
  run_algebra(catalog::dual_numbers(), 14, "dual_numbers");
  run_algebra(catalog::mat2(), 2, "mat2");
  res.details.push_back("printed-variant outcome (logged, not asserted): zero at " +
                        std::to_string(variant_zero) + " samples, nonzero at " +
                        std::to_string(variant_nonzero) + " samples");
  res.details.push_back("inverse compositions verified: " + std::to_string(inverses));
  return res;
}

// --- criterion 7 ------------------------------------------------------------

CriterionResult c07_baxterization_pair(Ctx& ctx) {
  CriterionResult res{"07_reciprocal_parameter_pair",
                      "R_{q,1/q,1/q} and R_{q,1/q,q} are mutually inverse braid solutions",
                      true,
                      {}};
  RatSampler s = ctx.sampler(7);
  size_t pairs = 0;
  for (const char* name : {"dual_numbers", "mat2"}) {
    AssocAlgebra<Rat> a = catalog::get(name).assoc;
    for (int rep = 0; rep < 5; ++rep) {
      Rat q = s.nonzero();
      auto [fwd, bwd] = baxterization_pair(a, q);
      ctx.registry.add(fwd);
      ctx.registry.add(bwd);
      if (!mutually_inverse(fwd, bwd) || !check_braid(fwd).residual.is_zero ||
          !check_braid(bwd).residual.is_zero) {
        res.pass = false;
        res.details.push_back(std::string("pair failed on ") + name + " at q=" + fmt(q));
      }
      ++pairs;
    }
  }
  res.details.push_back("mutually inverse braid pairs verified: " + std::to_string(pairs));
  return res;
}

// --- criterion 8 ------------------------------------------------------------

CriterionResult c08_wxz_systems(Ctx& ctx) {
  CriterionResult res{"08_wxz_systems",
                      "WXZ systems: associative triple, triples from both colored families, "
                      "and the Poisson triple — all four commutator conditions",
                      true,
                      {}};
  RatSampler s = ctx.sampler(8);
  size_t systems = 0;
  auto expect_all_zero = [&](const WxzTriple<Rat>& t, const std::string& label) {
    std::array<Residual<Rat>, 4> r = check_wxz(t.w, t.x, t.z);
    for (size_t k = 0; k < 4; ++k)
      if (!r[k].is_zero) {
        res.pass = false;
        static const char* cond[] = {"[W,W,W]", "[Z,Z,Z]", "[W,X,X]", "[X,X,Z]"};
        res.details.push_back(label + ": " + cond[k] + " nonzero");
      }
    ctx.registry.add(t.w);
    ctx.registry.add(t.x);
    ctx.registry.add(t.z);
    ++systems;
  };

  AssocAlgebra<Rat> dn = catalog::dual_numbers();
  for (int rep = 0; rep < 8; ++rep)
    expect_all_zero(wxz_assoc(dn, s.rational(), s.rational()), "assoc dual_numbers");
  AssocAlgebra<Rat> m2 = catalog::mat2();
  for (int rep = 0; rep < 2; ++rep)
    expect_all_zero(wxz_assoc(m2, s.rational(), s.rational()), "assoc mat2");

  for (int rep = 0; rep < 2; ++rep) {
    Rat p = s.rational(), q = s.rational();
    std::function<Operator<Rat>(const Rat&, const Rat&)> family =
        [&](const Rat& u, const Rat& v) { return colored_yb(dn, p, q, u, v); };
    expect_all_zero(wxz_from_colored(family, s.rational(), s.rational()), "colored affine");
  }

  GradedLieAlgebra<Rat> gl = catalog::gl11();
  std::vector<Rat> zc{Rat(1), Rat(1), Rat(0), Rat(0)};
  for (int rep = 0; rep < 2; ++rep) {
    // alpha(u,v) = f(v) = v, beta(u,v) = g(v) = 1
    std::function<Operator<Rat>(const Rat&, const Rat&)> family =
        [&](const Rat&, const Rat& v) { return colored_super_yb(gl, zc, v, Rat(1)); };
    expect_all_zero(wxz_from_colored(family, s.rational(), s.rational()), "colored graded");
  }

  expect_all_zero(wxz_poisson(catalog::mat2_poisson()), "poisson mat2");
  res.details.push_back("WXZ systems with all four conditions exactly zero: " +
                        std::to_string(systems));
  return res;
}

// --- criterion 9 ------------------------------------------------------------

CriterionResult c09_graded_operators(Ctx& ctx) {
  CriterionResult res{"09_graded_bracket_operators",
                      "bracket-plus-sign operators on Z2-graded and plain Lie algebras: braid "
                      "solutions with closed-form inverses; colored variant iff its scalar "
                      "condition holds",
                      true,
                      {}};
  RatSampler s = ctx.sampler(9);

  struct Input {
    const char* label;
    GradedLieAlgebra<Rat> l;
    std::vector<Rat> z;
  };
  std::vector<Input> inputs;
  inputs.push_back({"gl11", catalog::gl11(), {Rat(1), Rat(1), Rat(0), Rat(0)}});
  inputs.push_back(
      {"heisenberg3", trivially_graded(catalog::heisenberg3()), {Rat(0), Rat(0), Rat(1)}});

  for (const Input& in : inputs) {
    for (int rep = 0; rep < 5; ++rep) {
      Rat alpha = s.rational();
      Operator<Rat> phi = super_yb(in.l, in.z, alpha);
      Operator<Rat> phi_inv = super_yb_inverse(in.l, in.z, alpha);
      ctx.registry.add(phi);
      ctx.registry.add(phi_inv);
      BraidResult<Rat> br = check_braid(phi);
      if (!br.residual.is_zero || !br.invertible || !mutually_inverse(phi, phi_inv)) {
        res.pass = false;
        res.details.push_back(std::string("single-coefficient operator failed on ") + in.label);
      }
      Rat beta = s.nonzero();
      Operator<Rat> phi2 = super_yb_scaled(in.l, in.z, alpha, beta);
      Operator<Rat> phi2_inv = super_yb_scaled_inverse(in.l, in.z, alpha, beta);
      ctx.registry.add(phi2);
      ctx.registry.add(phi2_inv);
      if (!check_braid(phi2).residual.is_zero || !mutually_inverse(phi2, phi2_inv)) {
        res.pass = false;
        res.details.push_back(std::string("two-coefficient operator failed on ") + in.label);
      }
    }
  }

  // colored graded family with alpha(u,v) = f(v) = v, beta(u,v) = g(v) = 1:
  // the scalar condition holds identically, so the colored QYBE must vanish.
  GradedLieAlgebra<Rat> gl = catalog::gl11();
  std::vector<Rat> zc{Rat(1), Rat(1), Rat(0), Rat(0)};
  auto alpha_f = [](const Rat&, const Rat& v) { return v; };
  auto beta_g = [](const Rat&, const Rat&) { return Rat(1); };
  size_t triples = 0;
  for (int rep = 0; rep < 16; ++rep) {
    Rat u = s.rational(), v = s.rational(), w = s.rational();
    Rat cond = colored_super_condition<Rat>(alpha_f, beta_g, u, v, w);
    Operator<Rat> ruv = colored_super_yb(gl, zc, alpha_f(u, v), beta_g(u, v));
    Operator<Rat> ruw = colored_super_yb(gl, zc, alpha_f(u, w), beta_g(u, w));
    Operator<Rat> rvw = colored_super_yb(gl, zc, alpha_f(v, w), beta_g(v, w));
    ctx.registry.add(ruv);
    ctx.registry.add(ruw);
    ctx.registry.add(rvw);
    if (!is_zero(cond) || !check_colored_qybe(ruv, ruw, rvw).is_zero) {
      res.pass = false;
      res.details.push_back("preset colored family failed at sample " + std::to_string(rep));
    }
    ++triples;
  }

  // violated condition: alpha(u,v) = u, beta = 1 at (2,3,5)
  auto alpha_u = [](const Rat& u, const Rat&) { return u; };
  Rat u(2), v(3), w(5);
  Rat cond = colored_super_condition<Rat>(alpha_u, beta_g, u, v, w);
  Operator<Rat> ruv = colored_super_yb(gl, zc, alpha_u(u, v), Rat(1));
  Operator<Rat> ruw = colored_super_yb(gl, zc, alpha_u(u, w), Rat(1));
  Operator<Rat> rvw = colored_super_yb(gl, zc, alpha_u(v, w), Rat(1));
  bool violated_nonzero = !is_zero(cond) && !check_colored_qybe(ruv, ruw, rvw).is_zero;
  if (!violated_nonzero) {
    res.pass = false;
    res.details.push_back("violated-condition instance unexpectedly satisfied the colored QYBE");
  }
  res.details.push_back("preset color triples verified: " + std::to_string(triples) +
                        "; violated instance alpha(u,v)=u at (2,3,5): condition residual " +
                        fmt(cond) + ", colored QYBE residual nonzero");
  return res;
}

// --- criterion 10 -----------------------------------------------------------

/// gl11 with an extra odd central generator; a valid color-graded structure
/// whose theta-condition fails for z = the odd generator.
GradedLieAlgebra<Rat> gl11_plus_odd_center() {
  GradedLieAlgebra<Rat> gl = catalog::gl11();
  GradedLieAlgebra<Rat> ext;
  ext.dim = 5;
  ext.f.assign(5 * 5 * 5, Rat(0));
  ext.group = gl.group;
  ext.degree = {{0}, {0}, {1}, {1}, {1}};
  ext.theta_gen = gl.theta_gen;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      for (size_t k = 0; k < 4; ++k) ext.bracket_ref(i, j, k) = gl.bracket(i, j, k);
  return ext;
}

CriterionResult c10_gtheta(Ctx& ctx) {
  CriterionResult res{"10_color_function_condition",
                      "color-graded operator solves constant QYBE exactly when "
                      "theta(g,a)=theta(a,g)=theta(g,g)=1; counterexample search for odd z",
                      true,
                      {}};
  RatSampler s = ctx.sampler(10);

  GradedLieAlgebra<Rat> gl = catalog::gl11();
  std::vector<Rat> z_even{Rat(1), Rat(1), Rat(0), Rat(0)};
  if (!gtheta_condition(gl, z_even).all_pass()) {
    res.pass = false;
    res.details.push_back("theta-condition unexpectedly failed for even z on gl11");
  }
  for (int rep = 0; rep < 5; ++rep) {
    Rat alpha = s.rational();
    Operator<Rat> r = gtheta_yb(gl, z_even, alpha);
    Operator<Rat> r_inv = gtheta_yb_inverse(gl, z_even, alpha);
    ctx.registry.add(r);
    ctx.registry.add(r_inv);
    if (!check_qybe(r).is_zero || !mutually_inverse(r, r_inv)) {
      res.pass = false;
      res.details.push_back("color-graded operator failed on gl11 with even z");
    }
  }

  GradedLieAlgebra<Rat> ext = gl11_plus_odd_center();
  std::vector<Rat> z_odd(5, Rat(0));
  z_odd[4] = Rat(1);
  CheckReport cond = gtheta_condition(ext, z_odd);
  if (cond.all_pass()) {
    res.pass = false;
    res.details.push_back("theta-condition unexpectedly held for odd z");
  }
  bool counterexample = false;
  int found_alpha = 0;
  for (int alpha = 1; alpha <= 5 && !counterexample; ++alpha) {
    Operator<Rat> r = gtheta_yb(ext, z_odd, Rat(alpha));
    ctx.registry.add(r);
    if (!check_qybe(r).is_zero) {
      counterexample = true;
      found_alpha = alpha;
    }
  }
  if (counterexample) {
    res.details.push_back("odd-z structure: theta(g,g) = -1 fails the condition and QYBE residual "
                          "is nonzero (counterexample at alpha=" +
                          std::to_string(found_alpha) + ")");
  } else {
    res.details.push_back(
        "odd-z structure: condition fails but no nonzero QYBE residual within the search bound "
        "(alpha in 1..5); sub-check inconclusive");
  }
  return res;
}

// --- criterion 11 -----------------------------------------------------------

CriterionResult c11_classical(Ctx& ctx) {
  CriterionResult res{"11_classical_ybe",
                      "bracket-plus-scalar map on a Lie algebra with central z solves the "
                      "classical YBE; fails for non-central z",
                      true,
                      {}};
  RatSampler s = ctx.sampler(11);
  struct Input {
    const char* label;
    LieAlgebra<Rat> l;
    std::vector<Rat> z;
  };
  std::vector<Input> inputs;
  inputs.push_back({"heisenberg3", catalog::heisenberg3(), {Rat(0), Rat(0), Rat(1)}});
  inputs.push_back({"abelian3", catalog::abelian(3), {Rat(1), Rat(0), Rat(0)}});
  size_t checks = 0;
  for (const Input& in : inputs)
    for (int rep = 0; rep < 5; ++rep) {
      Operator<Rat> r = classical_r(in.l, in.z, s.rational());
      ctx.registry.add(r);
      if (!check_classical_ybe(r).is_zero) {
        res.pass = false;
        res.details.push_back(std::string("classical residual nonzero on ") + in.label);
      }
      ++checks;
    }

  // non-central probe on sl2 (z := e is not central and the residual is
  // genuinely nonzero there)
  LieAlgebra<Rat> sl2 = catalog::sl2();
  std::vector<Rat> bad_z{Rat(1), Rat(0), Rat(0)};
  Operator<Rat> r = classical_r(sl2, bad_z, Rat(2), /*require_central=*/false);
  ctx.registry.add(r);
  if (check_classical_ybe(r).is_zero) {
    res.pass = false;
    res.details.push_back("classical residual vanished for non-central z on sl2");
  }
  // finding: on heisenberg3 the equation holds for every z, central or not,
  // because all brackets land in the center; the non-central counterexample
  // therefore lives on sl2
  LieAlgebra<Rat> h3 = catalog::heisenberg3();
  bool h3_all_z = true;
  for (size_t zi = 0; zi < 3; ++zi) {
    std::vector<Rat> z(3, Rat(0));
    z[zi] = Rat(1);
    if (!check_classical_ybe(classical_r(h3, z, Rat(1), /*require_central=*/false)).is_zero)
      h3_all_z = false;
  }
  res.details.push_back("central cases verified: " + std::to_string(checks) +
                        "; non-central z on sl2 yields a nonzero residual; finding: on "
                        "heisenberg3 the residual vanishes for every basis z (brackets are "
                        "central), measured " +
                        std::string(h3_all_z ? "all-zero" : "nonzero"));
  return res;
}

// --- criterion 12 -----------------------------------------------------------

CriterionResult c12_duality(Ctx& ctx) {
  CriterionResult res{"12_yb_structures_duality",
                      "functor images are YB structures (all four clauses); duality identities "
                      "hold componentwise; dualizing twice returns the original operator",
                      true,
                      {}};
  auto expect_structure = [&](const YBStructure<Rat>& s, const std::string& label) {
    CheckReport rep = check_yb_structure(s);
    ctx.registry.add(s.phi);
    if (!rep.all_pass()) {
      res.pass = false;
      res.details.push_back(label + " failed: " + rep.summary());
    }
  };

  size_t structures = 0;
  for (const char* name : {"k1", "dual_numbers", "split", "group_c2", "mat2"}) {
    AssocAlgebra<Rat> a = catalog::get(name).assoc;
    expect_structure(functor_f_alg(a), std::string("F(") + name + ")");
    expect_structure(functor_g_coalg(dualize_assoc(a)), std::string("G(dual ") + name + ")");
    structures += 2;
  }
  std::vector<std::pair<const char*, LieAlgebra<Rat>>> lies = {
      {"sl2", catalog::sl2()},
      {"heisenberg3", catalog::heisenberg3()},
      {"abelian3", catalog::abelian(3)}};
  for (const auto& [name, l] : lies) {
    expect_structure(functor_f_lie(l), std::string("Flie(") + name + ")");
    expect_structure(functor_g_liecoalg(dualize_lie(l)), std::string("Gliecoalg(dual ") + name + ")");
    structures += 2;
  }

  for (const char* name : {"dual_numbers", "group_c2", "k1"}) {
    CheckReport rep = check_duality_identities(catalog::get(name).assoc);
    if (!rep.all_pass()) {
      res.pass = false;
      res.details.push_back(std::string("duality identities failed on ") + name + ": " +
                            rep.summary());
    }
  }

  YBStructure<Rat> f_dn = functor_f_alg(catalog::dual_numbers());
  YBStructure<Rat> f_h3 = functor_f_lie(catalog::heisenberg3());
  if (dualize_yb(dualize_yb(f_dn)).phi != f_dn.phi || dualize_yb(dualize_yb(f_h3)).phi != f_h3.phi) {
    res.pass = false;
    res.details.push_back("dualizing twice did not return the original operator");
  }
  res.details.push_back("YB structures verified: " + std::to_string(structures) +
                        "; duality identities componentwise equal on dual_numbers, group_c2, k1");
  return res;
}

// --- criterion 13 -----------------------------------------------------------

CriterionResult c13_bracket_as_product(Ctx&) {
  CriterionResult res{"13_bracket_as_product",
                      "a Lie algebra is Poisson with product = bracket iff all brackets are "
                      "central; induced nonunital structure passes the Poisson axioms",
                      true,
                      {}};
  BracketAsProductResult h3 = bracket_as_product(catalog::heisenberg3());
  if (!h3.holds || !h3.self_test.all_pass()) {
    res.pass = false;
    res.details.push_back("heisenberg3 should satisfy the criterion with a valid induced "
                          "structure");
  }
  for (size_t n : {1, 2, 4}) {
    BracketAsProductResult ab = bracket_as_product(catalog::abelian(n));
    if (!ab.holds || !ab.self_test.all_pass()) {
      res.pass = false;
      res.details.push_back("abelian(" + std::to_string(n) + ") should satisfy the criterion");
    }
  }
  if (bracket_as_product(catalog::sl2()).holds) {
    res.pass = false;
    res.details.push_back("sl2 must not satisfy the criterion ([e,f]=h is not central)");
  }
  res.details.push_back(
      "holds for heisenberg3 and abelian(n) with the induced nonunital Poisson axioms exact; "
      "fails for sl2");
  return res;
}

// --- assembly ----------------------------------------------------------------

std::vector<CriterionResult> run_core_criteria(uint64_t seed, std::vector<double>* timings) {
  Ctx ctx{seed, {}};
  std::vector<CriterionResult> out;
  using Runner = std::function<CriterionResult(Ctx&)>;
  std::vector<Runner> runners = {
      c01_assoc_classification, // 01 also fills the registry criterion 02 walks
      c03_reference_rmatrix,
      c04_colored_family,
      c05_e_system,
      c06_spectral,
      c07_baxterization_pair,
      c08_wxz_systems,
      c09_graded_operators,
      c10_gtheta,
      c11_classical,
      c12_duality,
      c13_bracket_as_product,
  };
  for (const Runner& run : runners) {
    auto t0 = std::chrono::steady_clock::now();
    out.push_back(run(ctx));
    auto t1 = std::chrono::steady_clock::now();
    if (timings) timings->push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  // transfer runs last so the registry covers every constructed operator,
  // then the report is sorted by name
  auto t0 = std::chrono::steady_clock::now();
  out.push_back(c02_transfer(ctx));
  auto t1 = std::chrono::steady_clock::now();
  if (timings) timings->push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());

  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return out[a].name < out[b].name; });
  std::vector<CriterionResult> sorted;
  std::vector<double> sorted_times;
  for (size_t i : order) {
    sorted.push_back(std::move(out[i]));
    if (timings) sorted_times.push_back((*timings)[i]);
  }
  if (timings) *timings = std::move(sorted_times);
  return sorted;
}

json core_results_json(uint64_t seed, const std::vector<CriterionResult>& results) {
  json arr = json::array();
  for (const auto& r : results) {
    arr.push_back(json{{"name", r.name}, {"anchor", r.anchor}, {"pass", r.pass},
                       {"details", r.details}});
  }
  return json{{"seed", seed},
              {"generator", "splitmix64"},
              {"sampling", "numerators in [-99,99], denominators in [1,99], exact at each point"},
              {"criteria", arr}};
}

}  // namespace

json SuiteReport::to_json() const {
  json j = core_results_json(seed, results);
  j["overall_pass"] = all_pass;
  if (with_timings) {
    json t = json::array();
    for (double ms : timings_ms) t.push_back(ms);
    j["timings_ms_nondeterministic"] = t;
  }
  return j;
}

std::string SuiteReport::render_text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.anchor << "\n";
    for (const auto& d : r.details) out << "        " << d << "\n";
  }
  out << (all_pass ? "OVERALL: PASS" : "OVERALL: FAIL") << " (seed " << seed << ")\n";
  return out.str();
}

SuiteReport run_acceptance_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.seed = opt.seed;
  rep.with_timings = opt.timings;
  std::vector<double> timings;
  rep.results = run_core_criteria(opt.seed, opt.timings ? &timings : nullptr);

  // criterion 14: a second full run at the same seed must serialize to the
  // same bytes
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CriterionResult> again = run_core_criteria(opt.seed, nullptr);
  std::string bytes1 = core_results_json(opt.seed, rep.results).dump();
  std::string bytes2 = core_results_json(opt.seed, again).dump();
  CriterionResult det{"14_determinism",
                      "fixed seed, fixed inputs: two consecutive runs serialize to identical "
                      "bytes",
                      bytes1 == bytes2,
                      {"compared " + std::to_string(bytes1.size()) + " report bytes"}};
  auto t1 = std::chrono::steady_clock::now();
  rep.results.push_back(std::move(det));
  if (opt.timings) {
    timings.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    rep.timings_ms = std::move(timings);
  }

  rep.all_pass = true;
  for (const auto& r : rep.results)
    if (!r.pass) rep.all_pass = false;
  return rep;
}

}  // namespace ybx
