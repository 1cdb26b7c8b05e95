#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ybx/matrix.hpp"
#include "ybx/report.hpp"

namespace ybx {

// Structure-constant conventions, used consistently everywhere:
//   associative / Lie / graded bracket:  c[(i*n + j)*n + k] = coefficient of
//     e_k in e_i * e_j (resp. <e_i, e_j>);
//   coproducts: d[(k*n + i)*n + j] = coefficient of e_i (x) e_j in D(e_k).

namespace detail {
template <class F>
const F& sc(const std::vector<F>& c, size_t n, size_t i, size_t j, size_t k) {
  return c[(i * n + j) * n + k];
}

inline std::string tuple_str(std::initializer_list<size_t> ix) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (size_t v : ix) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << ")";
  return out.str();
}
}  // namespace detail

template <class F>
struct AssocAlgebra {
  size_t dim = 0;
  std::vector<F> c;     // dim^3 product constants
  std::vector<F> unit;  // coordinates of 1

  const F& prod(size_t i, size_t j, size_t k) const { return detail::sc(c, dim, i, j, k); }
  F& prod_ref(size_t i, size_t j, size_t k) { return c[(i * dim + j) * dim + k]; }
};

template <class F>
struct LieAlgebra {
  size_t dim = 0;
  std::vector<F> f;  // dim^3 bracket constants

  const F& bracket(size_t i, size_t j, size_t k) const { return detail::sc(f, dim, i, j, k); }
  F& bracket_ref(size_t i, size_t j, size_t k) { return f[(i * dim + j) * dim + k]; }
};

/// Finite abelian group Z_{d1} x ... x Z_{dr}; elements are component vectors.
struct AbelianGroup {
  std::vector<unsigned> orders;

  size_t rank() const { return orders.size(); }
  size_t size() const {
    size_t s = 1;
    for (unsigned d : orders) s *= d;
    return s;
  }
  std::vector<unsigned> add(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> r(orders.size());
    for (size_t s = 0; s < orders.size(); ++s) r[s] = (a[s] + b[s]) % orders[s];
    return r;
  }
  std::vector<unsigned> zero() const { return std::vector<unsigned>(orders.size(), 0); }
  std::vector<unsigned> element(size_t index) const {
    std::vector<unsigned> r(orders.size());
    for (size_t s = 0; s < orders.size(); ++s) {
      r[s] = static_cast<unsigned>(index % orders[s]);
      index /= orders[s];
    }
    return r;
  }
  static std::string str(const std::vector<unsigned>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  }
};

/// G-graded algebra with bracket twisted by a color function theta.
/// theta is given on group-generator pairs and extended as a bicharacter;
/// basis vectors are homogeneous by construction (one degree each).
template <class F>
struct GradedLieAlgebra {
  size_t dim = 0;
  std::vector<F> f;
  AbelianGroup group;
  std::vector<std::vector<unsigned>> degree;  // per basis vector
  std::vector<F> theta_gen;                   // rank x rank values theta(g_s, g_t)

  const F& bracket(size_t i, size_t j, size_t k) const { return detail::sc(f, dim, i, j, k); }
  F& bracket_ref(size_t i, size_t j, size_t k) { return f[(i * dim + j) * dim + k]; }

  const F& theta_on_generators(size_t s, size_t t) const { return theta_gen[s * group.rank() + t]; }

  /// Bicharacter extension: theta(a,b) = prod_{s,t} theta(g_s,g_t)^{a_s b_t}.
  F theta(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    F r(1);
    for (size_t s = 0; s < group.rank(); ++s) {
      if (a[s] == 0) continue;
      for (size_t t = 0; t < group.rank(); ++t) {
        if (b[t] == 0) continue;
        const F& base = theta_on_generators(s, t);
        for (unsigned e = 0; e < a[s] * b[t]; ++e) r = r * base;
      }
    }
    return r;
  }

  bool trivially_graded() const {
    for (const auto& d : degree)
      for (unsigned v : d)
        if (v != 0) return false;
    return true;
  }

  /// True when the grading group is trivial or a single Z_2 factor, the shape
  /// the sign (-1)^{|x||y|} constructions assume.
  bool z2_or_trivial() const {
    if (group.rank() == 0) return true;
    if (group.rank() == 1 && group.orders[0] == 2) return true;
    return trivially_graded();
  }

  /// Z_2 parity of basis vector i (0 for trivially graded input).
  unsigned parity(size_t i) const {
    unsigned p = 0;
    for (size_t s = 0; s < group.rank(); ++s) p += degree[i][s];
    return p % 2;
  }
};

template <class F>
struct Coalgebra {
  size_t dim = 0;
  std::vector<F> d;  // d[(k*n+i)*n+j]: coefficient of e_i (x) e_j in D(e_k)
  std::vector<F> counit;

  const F& cop(size_t k, size_t i, size_t j) const { return detail::sc(d, dim, k, i, j); }
  F& cop_ref(size_t k, size_t i, size_t j) { return d[(k * dim + i) * dim + j]; }
};

template <class F>
struct LieCoalgebra {
  size_t dim = 0;
  std::vector<F> d;

  const F& cob(size_t k, size_t i, size_t j) const { return detail::sc(d, dim, k, i, j); }
  F& cob_ref(size_t k, size_t i, size_t j) { return d[(k * dim + i) * dim + j]; }
};

/// Associative product * plus a bracket acting on it by the Leibniz rule.
template <class F>
struct PoissonAlgebra {
  AssocAlgebra<F> product;
  std::vector<F> bracket;

  const F& br(size_t i, size_t j, size_t k) const { return detail::sc(bracket, product.dim, i, j, k); }
};

// ---------------------------------------------------------------------------
// axiom checkers
// ---------------------------------------------------------------------------

template <class F>
void require_constants_shape(size_t dim, const std::vector<F>& c, const char* what) {
  if (c.size() != dim * dim * dim)
    throw ValidationError(std::string(what) + ": constants array must have dim^3 entries");
}

template <class F>
CheckReport check_assoc(const AssocAlgebra<F>& a, bool require_unit = true) {
  size_t n = a.dim;
  require_constants_shape(n, a.c, "assoc algebra");
  if (require_unit && a.unit.size() != n) throw ValidationError("assoc algebra: unit must have dim entries");
  CheckReport rep;

  bool ok = true;
  std::string wit;
  for (size_t i = 0; i < n && ok; ++i)
    for (size_t j = 0; j < n && ok; ++j)
      for (size_t k = 0; k < n && ok; ++k)
        for (size_t l = 0; l < n && ok; ++l) {
          F lhs(0), rhs(0);
          for (size_t m = 0; m < n; ++m) {
            lhs += a.prod(i, j, m) * a.prod(m, k, l);
            rhs += a.prod(j, k, m) * a.prod(i, m, l);
          }
          if (!(lhs == rhs)) {
            ok = false;
            wit = detail::tuple_str({i, j, k, l});
          }
        }
  rep.add("associativity", ok, wit);

  if (require_unit) {
    bool lok = true, rok = true;
    std::string lwit, rwit;
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        F left(0), right(0);
        for (size_t i = 0; i < n; ++i) {
          left += a.unit[i] * a.prod(i, j, k);
          right += a.unit[i] * a.prod(j, i, k);
        }
        F want = (j == k) ? F(1) : F(0);
        if (lok && !(left == want)) {
          lok = false;
          lwit = detail::tuple_str({j, k});
        }
        if (rok && !(right == want)) {
          rok = false;
          rwit = detail::tuple_str({j, k});
        }
      }
    rep.add("left_unit", lok, lwit);
    rep.add("right_unit", rok, rwit);
  }
  return rep;
}

template <class F>
CheckReport check_lie(const LieAlgebra<F>& l) {
  size_t n = l.dim;
  require_constants_shape(n, l.f, "lie algebra");
  CheckReport rep;

  bool anti = true;
  std::string awit;
  for (size_t i = 0; i < n && anti; ++i)
    for (size_t j = 0; j < n && anti; ++j)
      for (size_t k = 0; k < n && anti; ++k)
        if (!(l.bracket(i, j, k) == -l.bracket(j, i, k))) {
          anti = false;
          awit = detail::tuple_str({i, j});
        }
  rep.add("antisymmetry", anti, awit);

  bool jac = true;
  std::string jwit;
  for (size_t i = 0; i < n && jac; ++i)
    for (size_t j = 0; j < n && jac; ++j)
      for (size_t k = 0; k < n && jac; ++k)
        for (size_t t = 0; t < n && jac; ++t) {
          F s(0);
          for (size_t m = 0; m < n; ++m) {
            s += l.bracket(i, j, m) * l.bracket(m, k, t);
            s += l.bracket(j, k, m) * l.bracket(m, i, t);
            s += l.bracket(k, i, m) * l.bracket(m, j, t);
          }
          if (!is_zero(s)) {
            jac = false;
            jwit = detail::tuple_str({i, j, k});
          }
        }
  rep.add("jacobi", jac, jwit);
  return rep;
}

template <class F>
CheckReport check_graded_lie(const GradedLieAlgebra<F>& g) {
  size_t n = g.dim;
  require_constants_shape(n, g.f, "graded lie algebra");
  size_t r = g.group.rank();
  if (g.degree.size() != n) throw ValidationError("graded lie algebra: one degree per basis vector required");
  for (const auto& d : g.degree)
    if (d.size() != r) throw ValidationError("graded lie algebra: degree rank mismatch");
  if (g.theta_gen.size() != r * r)
    throw ValidationError("graded lie algebra: theta must be given on all generator pairs");
  CheckReport rep;

  // color-function laws, verified on every pair/triple of group elements;
  // with the bicharacter extension this reduces to well-definedness
  // (root-of-unity orders) plus theta(a,b)theta(b,a)=1, but we check the laws
  // directly as stated.
  bool color = true;
  std::string cwit;
  size_t gsize = g.group.size();
  std::vector<std::vector<unsigned>> elems(gsize);
  for (size_t x = 0; x < gsize; ++x) elems[x] = g.group.element(x);
  for (size_t x = 0; x < gsize && color; ++x) {
    for (size_t y = 0; y < gsize && color; ++y) {
      if (!is_one(F(g.theta(elems[x], elems[y]) * g.theta(elems[y], elems[x])))) {
        color = false;
        cwit = AbelianGroup::str(elems[x]) + AbelianGroup::str(elems[y]);
        break;
      }
      for (size_t z = 0; z < gsize; ++z) {
        F lhs1 = g.theta(g.group.add(elems[x], elems[y]), elems[z]);
        F rhs1 = g.theta(elems[x], elems[z]) * g.theta(elems[y], elems[z]);
        F lhs2 = g.theta(elems[x], g.group.add(elems[y], elems[z]));
        F rhs2 = g.theta(elems[x], elems[y]) * g.theta(elems[x], elems[z]);
        if (!(lhs1 == rhs1) || !(lhs2 == rhs2)) {
          color = false;
          cwit = AbelianGroup::str(elems[x]) + AbelianGroup::str(elems[y]) + AbelianGroup::str(elems[z]);
          break;
        }
      }
    }
  }
  rep.add("color_function", color, cwit);

  bool graded = true;
  std::string gwit;
  for (size_t i = 0; i < n && graded; ++i)
    for (size_t j = 0; j < n && graded; ++j) {
      std::vector<unsigned> want = g.group.add(g.degree[i], g.degree[j]);
      for (size_t k = 0; k < n; ++k)
        if (!is_zero(g.bracket(i, j, k)) && g.degree[k] != want) {
          graded = false;
          gwit = detail::tuple_str({i, j, k});
          break;
        }
    }
  rep.add("graduation", graded, gwit);

  bool anti = true;
  std::string awit;
  for (size_t i = 0; i < n && anti; ++i)
    for (size_t j = 0; j < n && anti; ++j) {
      F t = g.theta(g.degree[i], g.degree[j]);
      for (size_t k = 0; k < n; ++k)
        if (!(g.bracket(i, j, k) == -(t * g.bracket(j, i, k)))) {
          anti = false;
          awit = detail::tuple_str({i, j});
          break;
        }
    }
  rep.add("theta_antisymmetry", anti, awit);

  // theta(c,a)<x,<y,z>> + theta(b,c)<z,<x,y>> + theta(a,b)<y,<z,x>> = 0
  // for x in L_a, y in L_b, z in L_c.
  bool jac = true;
  std::string jwit;
  for (size_t i = 0; i < n && jac; ++i)
    for (size_t j = 0; j < n && jac; ++j)
      for (size_t k = 0; k < n && jac; ++k) {
        const auto &a = g.degree[i], &b = g.degree[j], &c = g.degree[k];
        F tca = g.theta(c, a), tbc = g.theta(b, c), tab = g.theta(a, b);
        for (size_t t = 0; t < n; ++t) {
          F s(0);
          for (size_t m = 0; m < n; ++m) {
            s += tca * (g.bracket(j, k, m) * g.bracket(i, m, t));
            s += tbc * (g.bracket(i, j, m) * g.bracket(k, m, t));
            s += tab * (g.bracket(k, i, m) * g.bracket(j, m, t));
          }
          if (!is_zero(s)) {
            jac = false;
            jwit = detail::tuple_str({i, j, k});
            break;
          }
        }
      }
  rep.add("theta_jacobi", jac, jwit);
  return rep;
}

template <class F>
CheckReport check_coalgebra(const Coalgebra<F>& c) {
  size_t n = c.dim;
  require_constants_shape(n, c.d, "coalgebra");
  if (c.counit.size() != n) throw ValidationError("coalgebra: counit must have dim entries");
  CheckReport rep;

  bool coassoc = true;
  std::string cwit;
  for (size_t k = 0; k < n && coassoc; ++k)
    for (size_t i = 0; i < n && coassoc; ++i)
      for (size_t j = 0; j < n && coassoc; ++j)
        for (size_t l = 0; l < n && coassoc; ++l) {
          F lhs(0), rhs(0);
          for (size_t m = 0; m < n; ++m) {
            lhs += c.cop(k, m, l) * c.cop(m, i, j);
            rhs += c.cop(k, i, m) * c.cop(m, j, l);
          }
          if (!(lhs == rhs)) {
            coassoc = false;
            cwit = detail::tuple_str({k, i, j, l});
          }
        }
  rep.add("coassociativity", coassoc, cwit);

  bool lok = true, rok = true;
  std::string lwit, rwit;
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < n; ++j) {
      F left(0), right(0);
      for (size_t i = 0; i < n; ++i) {
        left += c.counit[i] * c.cop(k, i, j);   // (eps (x) I) D
        right += c.counit[i] * c.cop(k, j, i);  // (I (x) eps) D
      }
      F want = (k == j) ? F(1) : F(0);
      if (lok && !(left == want)) {
        lok = false;
        lwit = detail::tuple_str({k, j});
      }
      if (rok && !(right == want)) {
        rok = false;
        rwit = detail::tuple_str({k, j});
      }
    }
  rep.add("counit_left", lok, lwit);
  rep.add("counit_right", rok, rwit);
  return rep;
}

template <class F>
CheckReport check_lie_coalgebra(const LieCoalgebra<F>& m) {
  size_t n = m.dim;
  require_constants_shape(n, m.d, "lie coalgebra");
  CheckReport rep;

  bool anti = true;
  std::string awit;
  for (size_t k = 0; k < n && anti; ++k)
    for (size_t i = 0; i < n && anti; ++i)
      for (size_t j = 0; j < n && anti; ++j)
        if (!(m.cob(k, i, j) == -m.cob(k, j, i))) {
          anti = false;
          awit = detail::tuple_str({k, i, j});
        }
  rep.add("co_antisymmetry", anti, awit);

  // transpose of the summed Jacobi identity
  bool jac = true;
  std::string jwit;
  for (size_t l = 0; l < n && jac; ++l)
    for (size_t i = 0; i < n && jac; ++i)
      for (size_t j = 0; j < n && jac; ++j)
        for (size_t k = 0; k < n && jac; ++k) {
          F s(0);
          for (size_t m2 = 0; m2 < n; ++m2) {
            s += m.cob(l, m2, k) * m.cob(m2, i, j);
            s += m.cob(l, m2, i) * m.cob(m2, j, k);
            s += m.cob(l, m2, j) * m.cob(m2, k, i);
          }
          if (!is_zero(s)) {
            jac = false;
            jwit = detail::tuple_str({i, j, k, l});
          }
        }
  rep.add("co_jacobi", jac, jwit);
  return rep;
}

template <class F>
CheckReport check_poisson(const PoissonAlgebra<F>& p, bool require_unit = true) {
  size_t n = p.product.dim;
  require_constants_shape(n, p.bracket, "poisson bracket");
  CheckReport rep = check_assoc(p.product, require_unit);

  LieAlgebra<F> lie{n, p.bracket};
  CheckReport lierep = check_lie(lie);
  for (auto& it : lierep.items) rep.add("bracket_" + it.name, it.pass, it.witness);

  // {x, y*z} = {x,y}*z + y*{x,z}
  bool leib = true;
  std::string lwit;
  for (size_t i = 0; i < n && leib; ++i)
    for (size_t j = 0; j < n && leib; ++j)
      for (size_t k = 0; k < n && leib; ++k)
        for (size_t l = 0; l < n && leib; ++l) {
          F lhs(0), rhs(0);
          for (size_t m = 0; m < n; ++m) {
            lhs += p.product.prod(j, k, m) * p.br(i, m, l);
            rhs += p.br(i, j, m) * p.product.prod(m, k, l);
            rhs += p.br(i, k, m) * p.product.prod(j, m, l);
          }
          if (!(lhs == rhs)) {
            leib = false;
            lwit = detail::tuple_str({i, j, k, l});
          }
        }
  rep.add("leibniz", leib, lwit);
  return rep;
}

// ---------------------------------------------------------------------------
// center, duals, bracket-as-product criterion
// ---------------------------------------------------------------------------

template <class F>
struct CenterElement {
  std::vector<F> coords;
  std::optional<std::vector<unsigned>> degree;  // set for graded input when homogeneous
};

namespace detail {
template <class F>
std::vector<std::vector<F>> center_basis(size_t n, const std::vector<F>& f) {
  // rows indexed by (j,k): sum_i z_i f[i][j][k] = 0
  Matrix<F> m(n * n, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i) m.at(j * n + k, i) = sc(f, n, i, j, k);
  return m.nullspace();
}
}  // namespace detail

template <class F>
std::vector<CenterElement<F>> center(const LieAlgebra<F>& l) {
  std::vector<CenterElement<F>> out;
  for (auto& v : detail::center_basis(l.dim, l.f)) out.push_back({std::move(v), std::nullopt});
  return out;
}

template <class F>
std::vector<CenterElement<F>> center(const GradedLieAlgebra<F>& g) {
  std::vector<CenterElement<F>> out;
  for (auto& v : detail::center_basis(g.dim, g.f)) {
    std::optional<std::vector<unsigned>> deg;
    for (size_t i = 0; i < g.dim; ++i) {
      if (is_zero(v[i])) continue;
      if (!deg) {
        deg = g.degree[i];
      } else if (*deg != g.degree[i]) {
        deg.reset();
        break;
      }
    }
    out.push_back({std::move(v), deg});
  }
  return out;
}

/// Degree of z when it is homogeneous (the zero vector counts as degree 0);
/// nullopt when z mixes degrees.
template <class F>
std::optional<std::vector<unsigned>> degree_of(const GradedLieAlgebra<F>& l,
                                               const std::vector<F>& z) {
  std::optional<std::vector<unsigned>> deg;
  for (size_t i = 0; i < l.dim; ++i) {
    if (is_zero(z[i])) continue;
    if (!deg) {
      deg = l.degree[i];
    } else if (*deg != l.degree[i]) {
      return std::nullopt;
    }
  }
  if (!deg) deg = l.group.zero();
  return deg;
}

/// Is [z, x] = 0 for every x (graded or plain bracket constants)?
template <class F>
bool is_central(size_t n, const std::vector<F>& f, const std::vector<F>& z) {
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      F s(0);
      for (size_t i = 0; i < n; ++i) s += z[i] * detail::sc(f, n, i, j, k);
      if (!is_zero(s)) return false;
    }
  return true;
}

template <class F>
Coalgebra<F> dualize_assoc(const AssocAlgebra<F>& a) {
  size_t n = a.dim;
  Coalgebra<F> c{n, std::vector<F>(n * n * n, F(0)), a.unit};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) c.cop_ref(k, i, j) = a.prod(i, j, k);
  return c;
}

/// Dual of a coalgebra: the algebra on C* with product Delta^T and unit = counit.
template <class F>
AssocAlgebra<F> dualize_coalg(const Coalgebra<F>& c) {
  size_t n = c.dim;
  AssocAlgebra<F> a{n, std::vector<F>(n * n * n, F(0)), c.counit};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) a.prod_ref(i, j, k) = c.cop(k, i, j);
  return a;
}

template <class F>
LieCoalgebra<F> dualize_lie(const LieAlgebra<F>& l) {
  size_t n = l.dim;
  LieCoalgebra<F> m{n, std::vector<F>(n * n * n, F(0))};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) m.cob_ref(k, i, j) = l.bracket(i, j, k);
  return m;
}

template <class F>
LieAlgebra<F> dualize_lie_coalg(const LieCoalgebra<F>& m) {
  size_t n = m.dim;
  LieAlgebra<F> l{n, std::vector<F>(n * n * n, F(0))};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) l.bracket_ref(i, j, k) = m.cob(k, i, j);
  return l;
}

struct BracketAsProductResult {
  bool holds = false;        // [x,y] central for all x,y
  CheckReport self_test;     // nonunital Poisson axioms for * := bracket, when holds
};

/// A Lie algebra carries a Poisson structure with * equal to the bracket
/// exactly when all brackets land in the center.
template <class F>
BracketAsProductResult bracket_as_product(const LieAlgebra<F>& l) {
  size_t n = l.dim;
  BracketAsProductResult res;
  res.holds = true;
  for (size_t i = 0; i < n && res.holds; ++i)
    for (size_t j = 0; j < n && res.holds; ++j)
      for (size_t k = 0; k < n && res.holds; ++k)
        for (size_t t = 0; t < n; ++t) {
          F s(0);
          for (size_t m = 0; m < n; ++m) s += l.bracket(i, j, m) * l.bracket(m, k, t);
          if (!is_zero(s)) {
            res.holds = false;
            break;
          }
        }
  if (res.holds) {
    PoissonAlgebra<F> p{AssocAlgebra<F>{n, l.f, {}}, l.f};
    res.self_test = check_poisson(p, /*require_unit=*/false);
  }
  return res;
}

/// Field promotion for algebra data (explicit, Q -> Q(i) or Q -> Q(q)).
template <class To, class From>
std::vector<To> promote_vector(const std::vector<From>& v) {
  std::vector<To> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(To(x));
  return r;
}

template <class To, class From>
AssocAlgebra<To> promote(const AssocAlgebra<From>& a) {
  return AssocAlgebra<To>{a.dim, promote_vector<To>(a.c), promote_vector<To>(a.unit)};
}

template <class To, class From>
LieAlgebra<To> promote(const LieAlgebra<From>& l) {
  return LieAlgebra<To>{l.dim, promote_vector<To>(l.f)};
}

template <class To, class From>
GradedLieAlgebra<To> promote(const GradedLieAlgebra<From>& g) {
  return GradedLieAlgebra<To>{g.dim, promote_vector<To>(g.f), g.group, g.degree,
                              promote_vector<To>(g.theta_gen)};
}

/// A plain Lie algebra viewed as trivially graded (all degrees 0, theta = 1).
template <class F>
GradedLieAlgebra<F> trivially_graded(const LieAlgebra<F>& l) {
  GradedLieAlgebra<F> g;
  g.dim = l.dim;
  g.f = l.f;
  g.group = AbelianGroup{{1}};
  g.degree.assign(l.dim, {0});
  g.theta_gen = {F(1)};
  return g;
}

}  // namespace ybx
