// ybx — exact Yang-Baxter workbench.
//
// Subcommands: catalog, construct, verify, frt, duality, suite. All numeric
// I/O is exact (Q, Q(i) or Q(q)); every verification prints a residual status
// that is either exactly zero or carries a witness entry.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ybx/catalog.hpp"
#include "ybx/duality.hpp"
#include "ybx/frt.hpp"
#include "ybx/json_io.hpp"
#include "ybx/operators.hpp"
#include "ybx/rng.hpp"
#include "ybx/scalar.hpp"
#include "ybx/suite.hpp"
#include "ybx/verify.hpp"

namespace {

using ybx::json;
using ybx::Rat;
using ybx::RationalFunction;

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ybx::ValidationError("cannot open output path: " + path);
  out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ybx::ValidationError("cannot open input path: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ybx::ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

/// Loads algebra data from a catalog name or a JSON file path.
ybx::AlgebraData load_algebra(const std::string& ref) {
  if (ref.size() > 5 && ref.substr(ref.size() - 5) == ".json") {
    return ybx::algebra_from_json(read_json_file(ref));
  }
  ybx::catalog::Entry e = ybx::catalog::get(ref);
  ybx::AlgebraData d;
  switch (e.kind) {
    case ybx::catalog::Kind::Assoc:
      d.kind = ybx::AlgebraKind::Assoc;
      d.assoc = e.assoc;
      break;
    case ybx::catalog::Kind::Lie:
      d.kind = ybx::AlgebraKind::Lie;
      d.lie = e.lie;
      break;
    case ybx::catalog::Kind::GradedLie:
      d.kind = ybx::AlgebraKind::GradedLie;
      d.graded = e.graded;
      break;
    case ybx::catalog::Kind::Poisson:
      d.kind = ybx::AlgebraKind::Poisson;
      d.poisson = e.poisson;
      break;
  }
  return d;
}

ybx::AssocAlgebra<Rat> need_assoc(const ybx::AlgebraData& d) {
  if (d.kind != ybx::AlgebraKind::Assoc)
    throw ybx::ValidationError("this family needs an associative algebra input");
  return d.assoc;
}

/// Families over an associative algebra, generic in the field so that
/// --field Qq/Qi can build with formal or Gaussian parameters.
template <class F>
std::optional<json> construct_assoc_family(const std::string& family, const std::string& algebra,
                                           const std::vector<std::string>& params) {
  auto param = [&](size_t i) -> F {
    if (i >= params.size()) throw ybx::ValidationError("missing family parameter");
    return ybx::scalar_parse<F>(params[i]);
  };
  if (family == "twist") {
    Rat n = ybx::scalar_parse<Rat>(params.at(0));
    return ybx::operator_to_json(ybx::twist_operator<F>(static_cast<size_t>(n.get_num().get_si())));
  }
  if (family == "reference-rmatrix") {
    Rat eta = ybx::scalar_parse<Rat>(params.at(1));
    return ybx::operator_to_json(
        ybx::reference_rmatrix(param(0), static_cast<int>(eta.get_num().get_si())));
  }
  auto get_algebra = [&]() {
    return ybx::promote<F>(need_assoc(load_algebra(algebra)));
  };
  if (family == "assoc-r") {
    return ybx::operator_to_json(
        ybx::assoc_yb(get_algebra(), ybx::AssocParams<F>{param(0), param(1), param(2)}));
  }
  if (family == "colored-r" || family == "colored-r-inverse") {
    auto a = get_algebra();
    auto op = family == "colored-r"
                  ? ybx::colored_yb(a, param(0), param(1), param(2), param(3))
                  : ybx::colored_yb_inverse(a, param(0), param(1), param(2), param(3));
    return ybx::operator_to_json(op);
  }
  if (family == "spectral-s" || family == "spectral-s-inverse") {
    auto a = get_algebra();
    auto op = family == "spectral-s" ? ybx::spectral_yb(a, param(0), param(1))
                                     : ybx::spectral_yb_inverse(a, param(0), param(1));
    return ybx::operator_to_json(op);
  }
  if (family == "wxz-assoc") {
    auto t = ybx::wxz_assoc(get_algebra(), param(0), param(1));
    return json{{"W", ybx::operator_to_json(t.w)},
                {"X", ybx::operator_to_json(t.x)},
                {"Z", ybx::operator_to_json(t.z)}};
  }
  if (family == "baxterization") {
    auto pr = ybx::baxterization_pair(get_algebra(), param(0));
    return json{{"forward", ybx::operator_to_json(pr.first)},
                {"inverse", ybx::operator_to_json(pr.second)}};
  }
  return std::nullopt;
}

ybx::GradedLieAlgebra<Rat> need_graded(const ybx::AlgebraData& d) {
  if (d.kind == ybx::AlgebraKind::GradedLie) {
    if (d.graded_needs_i)
      throw ybx::ValidationError("this command path supports rational-valued theta only");
    return d.graded;
  }
  if (d.kind == ybx::AlgebraKind::Lie) return ybx::trivially_graded(d.lie);
  throw ybx::ValidationError("this family needs a (graded) Lie algebra input");
}

std::vector<Rat> parse_vector(const std::string& csv, size_t dim) {
  std::vector<Rat> v;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) v.push_back(ybx::rat_parse(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (v.size() != dim)
    throw ybx::ValidationError("vector needs exactly " + std::to_string(dim) + " components");
  return v;
}

json residual_json(const ybx::Residual<Rat>& r, size_t dim) {
  json j{{"is_zero", r.is_zero}};
  if (r.witness) {
    j["witness"] = json{{"row", std::get<0>(*r.witness)},
                        {"col", std::get<1>(*r.witness)},
                        {"value", ybx::to_string(std::get<2>(*r.witness))},
                        {"row_decoded", ybx::Residual<Rat>::decode_index(std::get<0>(*r.witness), dim)}};
  }
  return j;
}

template <class F>
ybx::Operator<F> load_operator_as(const std::string& path) {
  ybx::AnyOperator any = ybx::operator_from_json(read_json_file(path));
  if (auto* op = std::get_if<ybx::Operator<F>>(&any)) return *op;
  throw ybx::ValidationError("operator in " + path + " is over a different field than expected");
}

int cmd_catalog(const std::string& action, const std::string& name, const std::string& out) {
  if (action == "list") {
    json j = json::array();
    for (const auto& n : ybx::catalog::names()) j.push_back(n);
    emit(json{{"catalog", j}}, out);
    return 0;
  }
  ybx::catalog::Entry e = ybx::catalog::get(name);
  json j;
  switch (e.kind) {
    case ybx::catalog::Kind::Assoc:
      j = ybx::algebra_to_json(e.assoc);
      break;
    case ybx::catalog::Kind::Lie:
      j = ybx::algebra_to_json(e.lie);
      break;
    case ybx::catalog::Kind::GradedLie:
      j = ybx::algebra_to_json(e.graded);
      break;
    case ybx::catalog::Kind::Poisson:
      j = ybx::algebra_to_json(e.poisson);
      break;
  }
  j["name"] = name;
  emit(j, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ybx — exact Yang-Baxter workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string out_path = "-";
  app.add_option("--json", out_path, "output path for JSON reports ('-' for stdout)");

  // catalog ------------------------------------------------------------------
  auto* cat = app.add_subcommand("catalog", "list or show the built-in structures");
  std::string cat_action = "list", cat_name;
  cat->add_option("action", cat_action, "list | show")->check(CLI::IsMember({"list", "show"}));
  cat->add_option("name", cat_name, "structure name for 'show'");

  // construct ------------------------------------------------------------------
  auto* con = app.add_subcommand("construct", "build an operator family as exact matrices");
  std::string con_family, con_algebra, con_z, con_field = "Q";
  std::vector<std::string> con_params;
  con->add_option("--field", con_field, "scalar field for parameters: Q | Qi | Qq")
      ->check(CLI::IsMember({"Q", "Qi", "Qq"}));
  con->add_option("family", con_family,
                  "assoc-r | colored-r | colored-r-inverse | spectral-s | spectral-s-inverse | "
                  "super-phi | super-phi-inverse | super-phi-ab | super-phi-ab-inverse | "
                  "colored-super-r | gtheta-r | gtheta-r-inverse | classical-r | wxz-assoc | "
                  "wxz-poisson | baxterization | reference-rmatrix | twist")
      ->required();
  con->add_option("--algebra", con_algebra, "catalog name or algebra JSON path");
  con->add_option("--z", con_z, "central element coordinates, comma-separated rationals");
  con->add_option("params", con_params, "family parameters (exact scalars)");

  // verify ---------------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "check an equation exactly");
  std::string ver_check;
  std::vector<std::string> ver_ops;
  std::string ver_algebra, ver_z;
  std::vector<std::string> ver_params;
  uint64_t ver_seed = 0;
  ver->add_option("--check", ver_check,
                  "braid | qybe | transfer | colored | one-param | e-system | wxz | classical | "
                  "gtheta-cond | colored-super-cond")
      ->required();
  ver->add_option("--op", ver_ops, "operator JSON path(s)");
  ver->add_option("--algebra", ver_algebra, "catalog name or algebra JSON path");
  ver->add_option("--z", ver_z, "central element coordinates");
  ver->add_option("--seed", ver_seed, "seed for sampled checks");
  ver->add_option("params", ver_params, "check parameters");

  // frt ------------------------------------------------------------------------
  auto* frt = app.add_subcommand("frt", "quadratic relation extraction and comparison");
  std::string frt_op, frt_q = "q";
  int frt_eta = -1;
  bool frt_compare = false, frt_search = false;
  frt->add_option("--op", frt_op, "operator JSON path");
  frt->add_option("--reference-rmatrix", frt_eta, "use the reference matrix with this eta (0|1)");
  frt->add_option("--q", frt_q, "value for q (exact scalar; 'q' keeps it formal over Q(q))");
  frt->add_flag("--compare-reference", frt_compare,
                "compare extracted relations with the published lists");
  frt->add_flag("--search-2dim", frt_search,
                "exploratory: search 2-dim algebras and parameter triples reproducing the "
                "reference matrix (findings logged, nothing asserted)");

  // duality ----------------------------------------------------------------------
  auto* dua = app.add_subcommand("duality", "YB-structure functors and duality identities");
  std::string dua_functor, dua_algebra, dua_structure;
  bool dua_identities = false;
  dua->add_option("--functor", dua_functor, "F | G | Flie | Gliecoalg | D");
  dua->add_option("--algebra", dua_algebra, "catalog name or algebra JSON path");
  dua->add_option("--check-structure", dua_structure, "verify a YB-structure JSON file clause by clause");
  dua->add_flag("--check-identities", dua_identities, "verify the duality identities exactly");

  // suite --------------------------------------------------------------------------
  auto* sui = app.add_subcommand("suite", "run the full acceptance suite");
  uint64_t suite_seed = 0;
  bool suite_timings = false;
  sui->add_option("--seed", suite_seed, "seed for all sampled checks");
  sui->add_flag("--timings", suite_timings, "append a timing block (excluded from determinism)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cat) {
      if (cat_action == "show" && cat_name.empty())
        throw ybx::ValidationError("catalog show needs a name");
      return cmd_catalog(cat_action, cat_name, out_path);
    }

    if (*con) {
      auto param = [&](size_t i) -> Rat {
        if (i >= con_params.size()) throw ybx::ValidationError("missing family parameter");
        return ybx::scalar_parse<Rat>(con_params[i]);
      };
      std::optional<json> generic;
      switch (ybx::field_tag_from_name(con_field)) {
        case ybx::FieldTag::Q:
          generic = construct_assoc_family<Rat>(con_family, con_algebra, con_params);
          break;
        case ybx::FieldTag::Qi:
          generic = construct_assoc_family<ybx::Gaussian>(con_family, con_algebra, con_params);
          break;
        case ybx::FieldTag::Qq:
          generic = construct_assoc_family<RationalFunction>(con_family, con_algebra, con_params);
          break;
      }
      if (generic) {
        emit(*generic, out_path);
        return 0;
      }
      if (con_field != "Q")
        throw ybx::ValidationError("family " + con_family + " is only available over Q");
      json j;
      if (con_family == "super-phi" || con_family == "super-phi-inverse") {
        auto l = need_graded(load_algebra(con_algebra));
        auto z = parse_vector(con_z, l.dim);
        auto op = con_family == "super-phi" ? ybx::super_yb(l, z, param(0))
                                            : ybx::super_yb_inverse(l, z, param(0));
        j = ybx::operator_to_json(op);
      } else if (con_family == "super-phi-ab" || con_family == "super-phi-ab-inverse") {
        auto l = need_graded(load_algebra(con_algebra));
        auto z = parse_vector(con_z, l.dim);
        auto op = con_family == "super-phi-ab"
                      ? ybx::super_yb_scaled(l, z, param(0), param(1))
                      : ybx::super_yb_scaled_inverse(l, z, param(0), param(1));
        j = ybx::operator_to_json(op);
      } else if (con_family == "gtheta-r" || con_family == "gtheta-r-inverse") {
        auto l = need_graded(load_algebra(con_algebra));
        auto z = parse_vector(con_z, l.dim);
        auto op = con_family == "gtheta-r" ? ybx::gtheta_yb(l, z, param(0))
                                           : ybx::gtheta_yb_inverse(l, z, param(0));
        j = ybx::operator_to_json(op);
      } else if (con_family == "colored-super-r") {
        // valuewise preset: f and g are polynomials in the color v, followed
        // by the colors u, v; builds R(u,v) with alpha = f(v), beta = g(v)
        auto l = need_graded(load_algebra(con_algebra));
        auto z = parse_vector(con_z, l.dim);
        RationalFunction f = ybx::scalar_parse<RationalFunction>(con_params.at(0));
        RationalFunction g = ybx::scalar_parse<RationalFunction>(con_params.at(1));
        Rat v = param(3);
        j = ybx::operator_to_json(ybx::colored_super_yb(l, z, f.eval(v), g.eval(v)));
      } else if (con_family == "classical-r") {
        auto d = load_algebra(con_algebra);
        if (d.kind != ybx::AlgebraKind::Lie)
          throw ybx::ValidationError("classical-r needs a Lie algebra input");
        auto z = parse_vector(con_z, d.lie.dim);
        j = ybx::operator_to_json(ybx::classical_r(d.lie, z, param(0)));
      } else if (con_family == "wxz-poisson") {
        auto d = load_algebra(con_algebra);
        if (d.kind != ybx::AlgebraKind::Poisson)
          throw ybx::ValidationError("wxz-poisson needs a Poisson algebra input");
        auto t = ybx::wxz_poisson(d.poisson);
        j = json{{"W", ybx::operator_to_json(t.w)},
                 {"X", ybx::operator_to_json(t.x)},
                 {"Z", ybx::operator_to_json(t.z)}};
      } else {
        throw ybx::ValidationError("unknown family: " + con_family);
      }
      emit(j, out_path);
      return 0;
    }

    if (*ver) {
      json j{{"check", ver_check}, {"seed", ver_seed}};
      bool pass = false;
      if (ver_check == "braid") {
        auto op = load_operator_as<Rat>(ver_ops.at(0));
        auto br = ybx::check_braid(op);
        j["residual"] = residual_json(br.residual, op.dim);
        j["invertible"] = br.invertible;
        pass = br.residual.is_zero && br.invertible;
      } else if (ver_check == "qybe") {
        auto op = load_operator_as<Rat>(ver_ops.at(0));
        auto r = ybx::check_qybe(op);
        j["residual"] = residual_json(r, op.dim);
        pass = r.is_zero;
      } else if (ver_check == "transfer") {
        auto op = load_operator_as<Rat>(ver_ops.at(0));
        auto t = ybx::check_transfer(op);
        j["braid"] = t.braid;
        j["qybe_r_tau"] = t.qybe_r_tau;
        j["qybe_tau_r"] = t.qybe_tau_r;
        pass = t.consistent();
      } else if (ver_check == "colored") {
        auto r_uv = load_operator_as<Rat>(ver_ops.at(0));
        auto r_uw = load_operator_as<Rat>(ver_ops.at(1));
        auto r_vw = load_operator_as<Rat>(ver_ops.at(2));
        auto r = ybx::check_colored_qybe(r_uv, r_uw, r_vw);
        j["residual"] = residual_json(r, r_uv.dim);
        pass = r.is_zero;
      } else if (ver_check == "one-param") {
        auto a = need_assoc(load_algebra(ver_algebra));
        Rat q = ybx::scalar_parse<Rat>(ver_params.at(0));
        Rat s1 = ybx::scalar_parse<Rat>(ver_params.at(1));
        Rat s2 = ybx::scalar_parse<Rat>(ver_params.at(2));
        Rat s3 = ybx::scalar_parse<Rat>(ver_params.at(3));
        std::function<ybx::Operator<Rat>(const Rat&)> family = [&](const Rat& ratio) {
          return ybx::spectral_yb(a, q, ratio);
        };
        auto r = ybx::check_one_param(family, s1, s2, s3);
        j["standard_form"] = residual_json(r.standard, a.dim);
        j["printed_variant_logged"] = residual_json(r.variant, a.dim);
        pass = r.standard.is_zero;
      } else if (ver_check == "e-system") {
        Rat p = ybx::scalar_parse<Rat>(ver_params.at(0));
        Rat q = ybx::scalar_parse<Rat>(ver_params.at(1));
        auto cf = ybx::affine_coeffs(p, q);
        ybx::RatSampler s{ybx::SplitMix64(ver_seed)};
        json samples = json::array();
        pass = true;
        for (int rep = 0; rep < 32; ++rep) {
          Rat u = s.rational(), v = s.rational(), w = s.rational();
          auto e = ybx::e_system_residuals(cf, u, v, w);
          bool all_zero = true;
          json evals = json::array();
          for (const auto& x : e) {
            evals.push_back(ybx::to_string(x));
            if (!ybx::is_zero(x)) all_zero = false;
          }
          samples.push_back(json{{"u", ybx::to_string(u)},
                                 {"v", ybx::to_string(v)},
                                 {"w", ybx::to_string(w)},
                                 {"residuals", evals}});
          if (!all_zero) pass = false;
        }
        j["samples"] = samples;
      } else if (ver_check == "wxz") {
        auto w = load_operator_as<Rat>(ver_ops.at(0));
        auto x = load_operator_as<Rat>(ver_ops.at(1));
        auto z = load_operator_as<Rat>(ver_ops.at(2));
        auto rs = ybx::check_wxz(w, x, z);
        static const char* cond[] = {"WWW", "ZZZ", "WXX", "XXZ"};
        pass = true;
        for (size_t k = 0; k < 4; ++k) {
          j[cond[k]] = residual_json(rs[k], w.dim);
          if (!rs[k].is_zero) pass = false;
        }
      } else if (ver_check == "classical") {
        auto op = load_operator_as<Rat>(ver_ops.at(0));
        auto r = ybx::check_classical_ybe(op);
        j["residual"] = residual_json(r, op.dim);
        pass = r.is_zero;
      } else if (ver_check == "gtheta-cond") {
        auto l = need_graded(load_algebra(ver_algebra));
        auto z = parse_vector(ver_z, l.dim);
        auto rep = ybx::gtheta_condition(l, z);
        json items = json::array();
        for (const auto& it : rep.items)
          items.push_back(json{{"condition", it.name}, {"pass", it.pass}, {"witness", it.witness}});
        j["conditions"] = items;
        pass = rep.all_pass();
      } else if (ver_check == "colored-super-cond") {
        // params: f and g as polynomials in v, then u, v, w
        RationalFunction f = ybx::scalar_parse<RationalFunction>(ver_params.at(0));
        RationalFunction g = ybx::scalar_parse<RationalFunction>(ver_params.at(1));
        Rat u = ybx::scalar_parse<Rat>(ver_params.at(2));
        Rat v = ybx::scalar_parse<Rat>(ver_params.at(3));
        Rat w = ybx::scalar_parse<Rat>(ver_params.at(4));
        auto alpha = [&](const Rat&, const Rat& vv) { return f.eval(vv); };
        auto beta = [&](const Rat&, const Rat& vv) { return g.eval(vv); };
        Rat cond = ybx::colored_super_condition<Rat>(alpha, beta, u, v, w);
        j["condition_residual"] = ybx::to_string(cond);
        pass = ybx::is_zero(cond);
      } else {
        throw ybx::ValidationError("unknown check: " + ver_check);
      }
      j["pass"] = pass;
      emit(j, out_path);
      return pass ? 0 : 1;
    }

    if (*frt) {
      if (frt_search) {
        // bounded exploratory search: which assoc-family operators over Q(q)
        // reproduce the reference matrix? Tries both catalog 2-dim algebras,
        // both basis orders, twist compositions on either side, and the
        // transposed target (row-convention reading). Findings are logged,
        // nothing is asserted.
        RationalFunction q = RationalFunction::variable();
        json findings = json::array();
        std::vector<std::pair<std::string, ybx::AssocAlgebra<RationalFunction>>> algebras;
        algebras.push_back(
            {"dual_numbers", ybx::promote<RationalFunction>(ybx::catalog::dual_numbers())});
        algebras.push_back({"split", ybx::promote<RationalFunction>(ybx::catalog::split())});
        {
          // basis order (x, 1) variants
          auto swap_basis = [](const ybx::AssocAlgebra<RationalFunction>& a) {
            ybx::AssocAlgebra<RationalFunction> s = a;
            for (size_t i = 0; i < 2; ++i)
              for (size_t j = 0; j < 2; ++j)
                for (size_t k = 0; k < 2; ++k)
                  s.c[(i * 2 + j) * 2 + k] = a.prod(1 - i, 1 - j, 1 - k);
            s.unit = {a.unit[1], a.unit[0]};
            return s;
          };
          algebras.push_back({"dual_numbers[x,1]", swap_basis(algebras[0].second)});
          algebras.push_back({"split[x,1]", swap_basis(algebras[1].second)});
        }
        std::vector<std::pair<std::string, RationalFunction>> values = {
            {"1", RationalFunction(1)},
            {"-1", RationalFunction(-1)},
            {"q", q},
            {"-q", -q},
            {"1/q", ybx::inverse(q)},
            {"-1/q", -ybx::inverse(q)},
            {"1-q", RationalFunction(1) - q},
            {"q-1", q - RationalFunction(1)},
            {"0", RationalFunction(0)}};
        auto tau = ybx::twist_operator<RationalFunction>(2);
        for (int eta = 0; eta <= 1; ++eta) {
          auto target = ybx::reference_rmatrix(q, eta);
          auto target_t = target.mat.transpose();
          for (const auto& [aname, alg] : algebras)
            for (const auto& [an, av] : values)
              for (const auto& [bn, bv] : values)
                for (const auto& [gn, gv] : values) {
                  auto r = ybx::assoc_yb(alg, ybx::AssocParams<RationalFunction>{av, bv, gv});
                  std::vector<std::pair<const char*, ybx::Matrix<RationalFunction>>> forms = {
                      {"R", r.mat},
                      {"R.tau", ybx::compose(r, tau).mat},
                      {"tau.R", ybx::compose(tau, r).mat}};
                  for (const auto& [fname, fmat] : forms) {
                    const char* how = nullptr;
                    if (fmat == target.mat)
                      how = "column convention";
                    else if (fmat == target_t)
                      how = "row convention (transposed)";
                    if (how)
                      findings.push_back(json{{"eta", eta},
                                              {"algebra", aname},
                                              {"alpha", an},
                                              {"beta", bn},
                                              {"gamma", gn},
                                              {"form", fname},
                                              {"match", how}});
                  }
                }
        }
        emit(json{{"search", "2-dim reference matrix"}, {"findings", findings}}, out_path);
        return 0;
      }

      json j;
      if (frt_eta >= 0 && frt_q == "q") {
        RationalFunction q = RationalFunction::variable();
        auto r = ybx::reference_rmatrix(q, frt_eta);
        auto rels = ybx::frt_relations(r);
        j["relations"] = ybx::relation_set_to_json(rels);
        if (frt_compare) {
          auto ref = ybx::reference_relations(q, frt_eta);
          auto cmp = ybx::compare_spans(ref, rels);
          j["reference_rank"] = ref.rank();
          j["span_comparison"] = ybx::span_relation_name(cmp.relation);
        }
      } else if (frt_eta >= 0) {
        Rat qv = ybx::scalar_parse<Rat>(frt_q);
        auto r = ybx::reference_rmatrix(qv, frt_eta);
        auto rels = ybx::frt_relations(r);
        j["relations"] = ybx::relation_set_to_json(rels);
        if (frt_compare) {
          auto ref = ybx::reference_relations(qv, frt_eta);
          auto cmp = ybx::compare_spans(ref, rels);
          j["reference_rank"] = ref.rank();
          j["span_comparison"] = ybx::span_relation_name(cmp.relation);
        }
      } else if (!frt_op.empty()) {
        ybx::AnyOperator any = ybx::operator_from_json(read_json_file(frt_op));
        std::visit([&](const auto& op) { j["relations"] = ybx::relation_set_to_json(ybx::frt_relations(op)); },
                   any);
      } else {
        throw ybx::ValidationError("frt needs --op or --reference-rmatrix");
      }
      emit(j, out_path);
      return 0;
    }

    if (*dua) {
      json j;
      if (!dua_structure.empty()) {
        auto s = ybx::yb_structure_from_json_as<Rat>(read_json_file(dua_structure));
        auto rep = ybx::check_yb_structure(s);
        json items = json::array();
        for (const auto& it : rep.items)
          items.push_back(json{{"clause", it.name}, {"pass", it.pass}, {"witness", it.witness}});
        j["clauses"] = items;
        j["pass"] = rep.all_pass();
        emit(j, out_path);
        return rep.all_pass() ? 0 : 1;
      }
      if (dua_identities) {
        auto a = need_assoc(load_algebra(dua_algebra));
        auto rep = ybx::check_duality_identities(a);
        json items = json::array();
        for (const auto& it : rep.items) items.push_back(json{{"component", it.name}, {"pass", it.pass}});
        j["identities"] = items;
        j["pass"] = rep.all_pass();
        emit(j, out_path);
        return rep.all_pass() ? 0 : 1;
      }
      auto d = load_algebra(dua_algebra);
      ybx::YBStructure<Rat> s;
      if (dua_functor == "F") {
        s = ybx::functor_f_alg(need_assoc(d));
      } else if (dua_functor == "G") {
        s = ybx::functor_g_coalg(ybx::dualize_assoc(need_assoc(d)));
      } else if (dua_functor == "Flie") {
        if (d.kind != ybx::AlgebraKind::Lie) throw ybx::ValidationError("Flie needs a Lie algebra");
        s = ybx::functor_f_lie(d.lie);
      } else if (dua_functor == "Gliecoalg") {
        if (d.kind != ybx::AlgebraKind::Lie)
          throw ybx::ValidationError("Gliecoalg takes a Lie algebra and dualizes it");
        s = ybx::functor_g_liecoalg(ybx::dualize_lie(d.lie));
      } else if (dua_functor == "D") {
        s = ybx::dualize_yb(ybx::functor_f_alg(need_assoc(d)));
      } else {
        throw ybx::ValidationError("unknown functor: " + dua_functor);
      }
      auto rep = ybx::check_yb_structure(s);
      j["structure"] = ybx::yb_structure_to_json(s);
      json items = json::array();
      for (const auto& it : rep.items)
        items.push_back(json{{"clause", it.name}, {"pass", it.pass}, {"witness", it.witness}});
      j["clauses"] = items;
      j["pass"] = rep.all_pass();
      emit(j, out_path);
      return rep.all_pass() ? 0 : 1;
    }

    if (*sui) {
      ybx::SuiteReport rep = ybx::run_acceptance_suite(ybx::SuiteOptions{suite_seed, suite_timings});
      std::cerr << rep.render_text();
      emit(rep.to_json(), out_path);
      return rep.all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    json err{{"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
