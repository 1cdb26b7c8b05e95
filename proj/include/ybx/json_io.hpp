#pragma once

#include <variant>

#include <json.hpp>

#include "ybx/algebra.hpp"
#include "ybx/duality.hpp"
#include "ybx/frt.hpp"
#include "ybx/gaussian.hpp"
#include "ybx/rational_function.hpp"
#include "ybx/scalar.hpp"
#include "ybx/tensor.hpp"

namespace ybx {

using json = nlohmann::json;

// Wire formats.
//   Matrix: {"rows":r,"cols":c,"field":"Q"|"Qi"|"Qq","entries":[...]} with
//     Q entries ["num","den"], Qi entries [["re_n","re_d"],["im_n","im_d"]],
//     Qq entries {"num":["a/b",...],"den":[...]} (coefficients lowest-first).
//   Operator: {"dim":n,"matrix":<Matrix>}.
//   Algebra: {"kind":...,"dim":n,"constants":[[i,j,k,"a/b"],...], "unit":[...],
//     "counit":[...], "bracket":[[i,j,k,"a/b"],...],
//     "grading":{"group":[d1,...],"degrees":[[...],...],"theta":[[s,t,"v"],...]}}
//     (sparse triples, omitted entries are zero; indices 0-based).

template <class F>
struct JsonCodec;

template <>
struct JsonCodec<Rat> {
  static json to(const Rat& x) {
    return json::array({x.get_num().get_str(), x.get_den().get_str()});
  }
  static Rat from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("Q entry must be [num, den]");
    Rat r(mpz_class(j[0].get<std::string>()), mpz_class(j[1].get<std::string>()));
    if (sgn(r.get_den()) == 0) throw ValidationError("Q entry with zero denominator");
    r.canonicalize();
    return r;
  }
};

template <>
struct JsonCodec<Gaussian> {
  static json to(const Gaussian& x) {
    return json::array({JsonCodec<Rat>::to(x.re()), JsonCodec<Rat>::to(x.im())});
  }
  static Gaussian from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("Qi entry must be [re, im]");
    return Gaussian(JsonCodec<Rat>::from(j[0]), JsonCodec<Rat>::from(j[1]));
  }
};

template <>
struct JsonCodec<RationalFunction> {
  static json poly(const Polynomial& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) {
      const Rat& c = p.coeff(static_cast<size_t>(k));
      arr.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    }
    if (arr.empty()) arr.push_back("0/1");
    return arr;
  }
  static Polynomial poly_from(const json& j) {
    if (!j.is_array()) throw ValidationError("Qq coefficient list must be an array");
    std::vector<Rat> c;
    for (const auto& item : j) c.push_back(rat_parse(item.get<std::string>()));
    return Polynomial(std::move(c));
  }
  static json to(const RationalFunction& x) {
    return json{{"num", poly(x.num())}, {"den", poly(x.den())}};
  }
  static RationalFunction from(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
      throw ValidationError("Qq entry must be {num, den}");
    return RationalFunction(poly_from(j["num"]), poly_from(j["den"]));
  }
};

template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json entries = json::array();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) entries.push_back(JsonCodec<F>::to(m.at(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", field_name<F>()}, {"entries", entries}};
}

template <class F>
Matrix<F> matrix_from_json_as(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ValidationError("matrix JSON needs rows, cols, entries");
  size_t r = j["rows"].get<size_t>(), c = j["cols"].get<size_t>();
  const json& entries = j["entries"];
  if (entries.size() != r * c) throw ValidationError("matrix JSON entry count mismatch");
  Matrix<F> m(r, c);
  size_t k = 0;
  for (size_t i = 0; i < r; ++i)
    for (size_t jj = 0; jj < c; ++jj) m.at(i, jj) = JsonCodec<F>::from(entries[k++]);
  return m;
}

using AnyMatrix = std::variant<Matrix<Rat>, Matrix<Gaussian>, Matrix<RationalFunction>>;

AnyMatrix matrix_from_json(const json& j);

template <class F>
json operator_to_json(const Operator<F>& op) {
  return json{{"dim", op.dim}, {"matrix", matrix_to_json(op.mat)}};
}

using AnyOperator = std::variant<Operator<Rat>, Operator<Gaussian>, Operator<RationalFunction>>;

AnyOperator operator_from_json(const json& j);

template <class F>
json yb_structure_to_json(const YBStructure<F>& s) {
  json e = json::array(), eps = json::array();
  for (const auto& x : s.e) e.push_back(JsonCodec<F>::to(x));
  for (const auto& x : s.eps) eps.push_back(JsonCodec<F>::to(x));
  return json{{"dim", s.dim}, {"phi", operator_to_json(s.phi)}, {"e", e}, {"eps", eps}};
}

template <class F>
YBStructure<F> yb_structure_from_json_as(const json& j) {
  if (!j.contains("dim") || !j.contains("phi") || !j.contains("e") || !j.contains("eps"))
    throw ValidationError("yb structure JSON needs dim, phi, e, eps");
  YBStructure<F> s;
  s.dim = j["dim"].get<size_t>();
  AnyOperator phi = operator_from_json(j["phi"]);
  if (auto* op = std::get_if<Operator<F>>(&phi))
    s.phi = *op;
  else
    throw ValidationError("yb structure phi is over a different field than expected");
  if (j["e"].size() != s.dim || j["eps"].size() != s.dim)
    throw ValidationError("yb structure e/eps must have dim entries");
  for (const auto& x : j["e"]) s.e.push_back(JsonCodec<F>::from(x));
  for (const auto& x : j["eps"]) s.eps.push_back(JsonCodec<F>::from(x));
  if (s.phi.dim != s.dim) throw ValidationError("yb structure phi dimension mismatch");
  return s;
}

template <class F>
json relation_set_to_json(const RelationSet<F>& s) {
  json rels = json::array();
  for (const auto& row : s.rows) {
    json terms = json::array();
    for (size_t m = 0; m < row.size(); ++m) {
      if (is_zero(row[m])) continue;
      size_t g1 = m / (s.n * s.n), g2 = m % (s.n * s.n);
      terms.push_back(json::array({g1 / s.n, g1 % s.n, g2 / s.n, g2 % s.n, to_string(row[m])}));
    }
    rels.push_back(json{{"terms", terms}, {"text", relation_to_string(s.n, row)}});
  }
  return json{{"n", s.n}, {"field", field_name<F>()}, {"rank", s.rank()}, {"relations", rels}};
}

// --- algebra data -----------------------------------------------------------

enum class AlgebraKind { Assoc, Lie, GradedLie, Coalg, LieCoalg, Poisson };

AlgebraKind algebra_kind_from_name(const std::string& s);
std::string algebra_kind_name(AlgebraKind k);

/// Parsed algebra input; graded structures keep a Q and a Q(i) variant
/// depending on whether theta needs the imaginary unit.
struct AlgebraData {
  AlgebraKind kind = AlgebraKind::Assoc;
  AssocAlgebra<Rat> assoc;
  LieAlgebra<Rat> lie;
  Coalgebra<Rat> coalg;
  LieCoalgebra<Rat> liecoalg;
  PoissonAlgebra<Rat> poisson;
  GradedLieAlgebra<Rat> graded;
  GradedLieAlgebra<Gaussian> graded_qi;
  bool graded_needs_i = false;
};

AlgebraData algebra_from_json(const json& j);

json algebra_to_json(const AssocAlgebra<Rat>& a);
json algebra_to_json(const LieAlgebra<Rat>& l);
json algebra_to_json(const GradedLieAlgebra<Rat>& g);
json algebra_to_json(const Coalgebra<Rat>& c);
json algebra_to_json(const LieCoalgebra<Rat>& m);
json algebra_to_json(const PoissonAlgebra<Rat>& p);

}  // namespace ybx
