#include "ybx/json_io.hpp"

namespace ybx {

AnyMatrix matrix_from_json(const json& j) {
  if (!j.contains("field")) throw ValidationError("matrix JSON needs a field tag");
  switch (field_tag_from_name(j["field"].get<std::string>())) {
    case FieldTag::Q:
      return matrix_from_json_as<Rat>(j);
    case FieldTag::Qi:
      return matrix_from_json_as<Gaussian>(j);
    case FieldTag::Qq:
      return matrix_from_json_as<RationalFunction>(j);
  }
  throw ValidationError("unreachable field tag");
}

AnyOperator operator_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("matrix")) throw ValidationError("operator JSON needs dim, matrix");
  size_t dim = j["dim"].get<size_t>();
  AnyMatrix m = matrix_from_json(j["matrix"]);
  return std::visit(
      [dim](auto&& mat) -> AnyOperator {
        using F = typename std::decay_t<decltype(mat)>::value_type;
        if (mat.rows() != dim * dim || mat.cols() != dim * dim)
          throw ValidationError("operator matrix must be dim^2 x dim^2");
        return Operator<F>{dim, std::move(mat)};
      },
      std::move(m));
}

AlgebraKind algebra_kind_from_name(const std::string& s) {
  if (s == "assoc") return AlgebraKind::Assoc;
  if (s == "lie") return AlgebraKind::Lie;
  if (s == "graded_lie") return AlgebraKind::GradedLie;
  if (s == "coalg") return AlgebraKind::Coalg;
  if (s == "lie_coalg") return AlgebraKind::LieCoalg;
  if (s == "poisson") return AlgebraKind::Poisson;
  throw ValidationError("unknown algebra kind: " + s);
}

std::string algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Assoc:
      return "assoc";
    case AlgebraKind::Lie:
      return "lie";
    case AlgebraKind::GradedLie:
      return "graded_lie";
    case AlgebraKind::Coalg:
      return "coalg";
    case AlgebraKind::LieCoalg:
      return "lie_coalg";
    case AlgebraKind::Poisson:
      return "poisson";
  }
  return "?";
}

namespace {

std::vector<Rat> constants_from_triples(const json& j, size_t dim, const char* what) {
  std::vector<Rat> c(dim * dim * dim, Rat(0));
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of [i,j,k,value]");
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4)
      throw ValidationError(std::string(what) + " entries must be [i,j,k,value]");
    size_t i = t[0].get<size_t>(), jj = t[1].get<size_t>(), k = t[2].get<size_t>();
    if (i >= dim || jj >= dim || k >= dim)
      throw ValidationError(std::string(what) + " index out of range");
    c[(i * dim + jj) * dim + k] = rat_parse(t[3].get<std::string>());
  }
  return c;
}

std::vector<Rat> vector_from_json(const json& j, size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim)
    throw ValidationError(std::string(what) + " must be an array of dim rational strings");
  std::vector<Rat> v;
  for (const auto& item : j) v.push_back(rat_parse(item.get<std::string>()));
  return v;
}

json triples_to_json(const std::vector<Rat>& c, size_t dim) {
  json arr = json::array();
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) {
        const Rat& v = c[(i * dim + j) * dim + k];
        if (is_zero(v)) continue;
        arr.push_back(json::array({i, j, k, v.get_str()}));
      }
  return arr;
}

json vector_to_json(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

}  // namespace

AlgebraData algebra_from_json(const json& j) {
  if (!j.contains("kind") || !j.contains("dim")) throw ValidationError("algebra JSON needs kind, dim");
  AlgebraData out;
  out.kind = algebra_kind_from_name(j["kind"].get<std::string>());
  size_t dim = j["dim"].get<size_t>();
  if (dim == 0) throw ValidationError("algebra dimension must be positive");
  std::vector<Rat> constants =
      j.contains("constants") ? constants_from_triples(j["constants"], dim, "constants")
                              : std::vector<Rat>(dim * dim * dim, Rat(0));

  switch (out.kind) {
    case AlgebraKind::Assoc: {
      out.assoc = AssocAlgebra<Rat>{dim, constants, vector_from_json(j.at("unit"), dim, "unit")};
      break;
    }
    case AlgebraKind::Lie: {
      out.lie = LieAlgebra<Rat>{dim, constants};
      break;
    }
    case AlgebraKind::Coalg: {
      out.coalg = Coalgebra<Rat>{dim, constants, vector_from_json(j.at("counit"), dim, "counit")};
      break;
    }
    case AlgebraKind::LieCoalg: {
      out.liecoalg = LieCoalgebra<Rat>{dim, constants};
      break;
    }
    case AlgebraKind::Poisson: {
      out.poisson = PoissonAlgebra<Rat>{
          AssocAlgebra<Rat>{dim, constants, vector_from_json(j.at("unit"), dim, "unit")},
          constants_from_triples(j.at("bracket"), dim, "bracket")};
      break;
    }
    case AlgebraKind::GradedLie: {
      if (!j.contains("grading")) throw ValidationError("graded_lie algebra JSON needs a grading block");
      const json& g = j["grading"];
      AbelianGroup group;
      for (const auto& d : g.at("group")) {
        unsigned order = d.get<unsigned>();
        if (order == 0) throw ValidationError("grading group orders must be positive");
        group.orders.push_back(order);
      }
      size_t rank = group.rank();
      std::vector<std::vector<unsigned>> degrees;
      for (const auto& row : g.at("degrees")) {
        std::vector<unsigned> deg;
        for (const auto& x : row) deg.push_back(x.get<unsigned>());
        if (deg.size() != rank) throw ValidationError("degree rank mismatch in grading block");
        for (size_t s = 0; s < rank; ++s)
          if (deg[s] >= group.orders[s]) throw ValidationError("degree component out of range");
        degrees.push_back(std::move(deg));
      }
      if (degrees.size() != dim) throw ValidationError("one degree per basis vector required");

      std::vector<Gaussian> theta(rank * rank, Gaussian(1));
      bool needs_i = false;
      if (g.contains("theta")) {
        for (const auto& t : g["theta"]) {
          if (!t.is_array() || t.size() != 3)
            throw ValidationError("theta entries must be [gen_a, gen_b, value]");
          size_t a = t[0].get<size_t>(), b = t[1].get<size_t>();
          if (a >= rank || b >= rank) throw ValidationError("theta generator index out of range");
          Gaussian v = scalar_parse<Gaussian>(t[2].get<std::string>());
          theta[a * rank + b] = v;
          if (!is_zero(v.im())) needs_i = true;
        }
      }
      out.graded_needs_i = needs_i;
      if (needs_i) {
        out.graded_qi = GradedLieAlgebra<Gaussian>{dim, promote_vector<Gaussian>(constants), group,
                                                   degrees, theta};
      } else {
        std::vector<Rat> theta_q;
        theta_q.reserve(theta.size());
        for (const auto& v : theta) theta_q.push_back(v.re());
        out.graded = GradedLieAlgebra<Rat>{dim, constants, group, degrees, theta_q};
      }
      break;
    }
  }
  return out;
}

json algebra_to_json(const AssocAlgebra<Rat>& a) {
  return json{{"kind", "assoc"},
              {"dim", a.dim},
              {"constants", triples_to_json(a.c, a.dim)},
              {"unit", vector_to_json(a.unit)}};
}

json algebra_to_json(const LieAlgebra<Rat>& l) {
  return json{{"kind", "lie"}, {"dim", l.dim}, {"constants", triples_to_json(l.f, l.dim)}};
}

json algebra_to_json(const GradedLieAlgebra<Rat>& g) {
  json theta = json::array();
  for (size_t s = 0; s < g.group.rank(); ++s)
    for (size_t t = 0; t < g.group.rank(); ++t)
      theta.push_back(json::array({s, t, g.theta_on_generators(s, t).get_str()}));
  json degrees = json::array();
  for (const auto& d : g.degree) degrees.push_back(d);
  return json{{"kind", "graded_lie"},
              {"dim", g.dim},
              {"constants", triples_to_json(g.f, g.dim)},
              {"grading", json{{"group", g.group.orders}, {"degrees", degrees}, {"theta", theta}}}};
}

json algebra_to_json(const Coalgebra<Rat>& c) {
  return json{{"kind", "coalg"},
              {"dim", c.dim},
              {"constants", triples_to_json(c.d, c.dim)},
              {"counit", vector_to_json(c.counit)}};
}

json algebra_to_json(const LieCoalgebra<Rat>& m) {
  return json{{"kind", "lie_coalg"}, {"dim", m.dim}, {"constants", triples_to_json(m.d, m.dim)}};
}

json algebra_to_json(const PoissonAlgebra<Rat>& p) {
  return json{{"kind", "poisson"},
              {"dim", p.product.dim},
              {"constants", triples_to_json(p.product.c, p.product.dim)},
              {"unit", vector_to_json(p.product.unit)},
              {"bracket", triples_to_json(p.bracket, p.product.dim)}};
}

}  // namespace ybx
