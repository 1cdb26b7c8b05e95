#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybx/catalog.hpp"
#include "ybx/json_io.hpp"
#include "ybx/rng.hpp"

using namespace ybx;

namespace {

template <class F>
Matrix<F> roundtrip(const Matrix<F>& m) {
  json j = matrix_to_json(m);
  AnyMatrix back = matrix_from_json(j);
  REQUIRE(std::holds_alternative<Matrix<F>>(back));
  return std::get<Matrix<F>>(back);
}

}  // namespace

TEST_CASE("matrix json round trips across all three fields") {
  RatSampler s{SplitMix64(51)};
  Matrix<Rat> mq(3, 2);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 2; ++j) mq.at(i, j) = s.rational();
  CHECK(roundtrip(mq) == mq);
  CHECK(matrix_to_json(mq)["field"] == "Q");

  Matrix<Gaussian> mi(2, 2);
  mi.at(0, 0) = Gaussian::i();
  mi.at(1, 1) = Gaussian(Rat(1, 2), Rat(-3));
  CHECK(roundtrip(mi) == mi);
  CHECK(matrix_to_json(mi)["field"] == "Qi");

  RationalFunction q = RationalFunction::variable();
  Matrix<RationalFunction> mr(2, 2);
  mr.at(0, 0) = (q * q - RationalFunction(1)) * inverse(q + RationalFunction(2));
  mr.at(1, 0) = -q;
  CHECK(roundtrip(mr) == mr);
  json j = matrix_to_json(mr);
  CHECK(j["field"] == "Qq");
  // reduced canonical form survives the trip: lowest-degree-first "a/b" lists
  CHECK(j["entries"][0]["num"].size() == 3);
}

TEST_CASE("matrix json rejects malformed input") {
  json j{{"rows", 2}, {"cols", 2}, {"field", "Q"}, {"entries", json::array()}};
  CHECK_THROWS_AS(matrix_from_json(j), ValidationError);
  j["entries"] = json::array({1, 2, 3, 4});
  CHECK_THROWS_AS(matrix_from_json(j), std::exception);
  json bad_field{{"rows", 1},
                 {"cols", 1},
                 {"field", "R"},
                 {"entries", json::array({json::array({"1", "1"})})}};
  CHECK_THROWS_AS(matrix_from_json(bad_field), ValidationError);
  json zero_den{{"rows", 1},
                {"cols", 1},
                {"field", "Q"},
                {"entries", json::array({json::array({"1", "0"})})}};
  CHECK_THROWS_AS(matrix_from_json(zero_den), ValidationError);
}

TEST_CASE("operator json") {
  Operator<Rat> tau = twist_operator<Rat>(2);
  json j = operator_to_json(tau);
  AnyOperator back = operator_from_json(j);
  REQUIRE(std::holds_alternative<Operator<Rat>>(back));
  CHECK(std::get<Operator<Rat>>(back) == tau);

  j["dim"] = 3;  // shape no longer matches
  CHECK_THROWS_AS(operator_from_json(j), ValidationError);
}

TEST_CASE("algebra json round trips") {
  for (const char* name : {"dual_numbers", "mat2"}) {
    AssocAlgebra<Rat> a = catalog::get(name).assoc;
    AlgebraData d = algebra_from_json(algebra_to_json(a));
    REQUIRE(d.kind == AlgebraKind::Assoc);
    CHECK(d.assoc.c == a.c);
    CHECK(d.assoc.unit == a.unit);
  }
  LieAlgebra<Rat> l = catalog::sl2();
  AlgebraData dl = algebra_from_json(algebra_to_json(l));
  REQUIRE(dl.kind == AlgebraKind::Lie);
  CHECK(dl.lie.f == l.f);

  GradedLieAlgebra<Rat> g = catalog::gl11();
  AlgebraData dg = algebra_from_json(algebra_to_json(g));
  REQUIRE(dg.kind == AlgebraKind::GradedLie);
  CHECK(!dg.graded_needs_i);
  CHECK(dg.graded.f == g.f);
  CHECK(dg.graded.degree == g.degree);
  CHECK(dg.graded.theta_gen == g.theta_gen);

  PoissonAlgebra<Rat> p = catalog::mat2_poisson();
  AlgebraData dp = algebra_from_json(algebra_to_json(p));
  REQUIRE(dp.kind == AlgebraKind::Poisson);
  CHECK(dp.poisson.bracket == p.bracket);

  Coalgebra<Rat> c = dualize_assoc(catalog::dual_numbers());
  AlgebraData dc = algebra_from_json(algebra_to_json(c));
  REQUIRE(dc.kind == AlgebraKind::Coalg);
  CHECK(dc.coalg.d == c.d);
  CHECK(dc.coalg.counit == c.counit);
}

TEST_CASE("graded algebra json with imaginary theta") {
  json j{{"kind", "graded_lie"},
         {"dim", 2},
         {"constants", json::array()},
         {"grading",
          json{{"group", json::array({4, 4})},
               {"degrees", json::array({json::array({1, 0}), json::array({0, 1})})},
               {"theta", json::array({json::array({0, 1, "i"}), json::array({1, 0, "-i"})})}}}};
  AlgebraData d = algebra_from_json(j);
  REQUIRE(d.kind == AlgebraKind::GradedLie);
  CHECK(d.graded_needs_i);
  CHECK(d.graded_qi.theta({1, 0}, {0, 1}) == Gaussian::i());
  CHECK(check_graded_lie(d.graded_qi).all_pass());
}

TEST_CASE("algebra json validation errors") {
  CHECK_THROWS_AS(algebra_from_json(json{{"kind", "assoc"}}), ValidationError);
  CHECK_THROWS_AS(algebra_from_json(json{{"kind", "ring"}, {"dim", 2}}), ValidationError);
  json out_of_range{{"kind", "lie"},
                    {"dim", 2},
                    {"constants", json::array({json::array({0, 1, 5, "1"})})}};
  CHECK_THROWS_AS(algebra_from_json(out_of_range), ValidationError);
  json bad_degree{{"kind", "graded_lie"},
                  {"dim", 1},
                  {"grading", json{{"group", json::array({2})},
                                   {"degrees", json::array({json::array({3})})}}}};
  CHECK_THROWS_AS(algebra_from_json(bad_degree), ValidationError);
}

TEST_CASE("relation set json") {
  RationalFunction q = RationalFunction::variable();
  RelationSet<RationalFunction> rels = reference_relations(q, 0);
  json j = relation_set_to_json(rels);
  CHECK(j["rank"] == 8);
  CHECK(j["n"] == 2);
  CHECK(j["relations"].size() == 8);
  // rendered text uses the a,b,c,d names in dimension 2
  std::string text = j["relations"][0]["text"].get<std::string>();
  CHECK(text.find("a") != std::string::npos);
}
