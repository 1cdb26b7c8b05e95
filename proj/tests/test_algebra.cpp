#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybx/algebra.hpp"
#include "ybx/catalog.hpp"
#include "ybx/gaussian.hpp"

using namespace ybx;

namespace {

/// Direct transcription of the two superalgebra identities, independent of
/// check_graded_lie: [x,y] = -(-1)^{|x||y|}[y,x] and
/// (-1)^{|z||x|}[x,[y,z]] + (-1)^{|x||y|}[y,[z,x]] + (-1)^{|y||z|}[z,[x,y]] = 0.
bool super_axioms_direct(const GradedLieAlgebra<Rat>& g) {
  size_t n = g.dim;
  auto sign = [&](size_t i, size_t j) { return (g.parity(i) * g.parity(j)) % 2 ? Rat(-1) : Rat(1); };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (!(g.bracket(i, j, k) == Rat(-sign(i, j) * g.bracket(j, i, k)))) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t t = 0; t < n; ++t) {
          Rat s(0);
          for (size_t m = 0; m < n; ++m) {
            s += sign(k, i) * g.bracket(j, k, m) * g.bracket(i, m, t);
            s += sign(i, j) * g.bracket(k, i, m) * g.bracket(j, m, t);
            s += sign(j, k) * g.bracket(i, j, m) * g.bracket(k, m, t);
          }
          if (!is_zero(s)) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("catalog associative algebras pass their axioms") {
  for (const char* name : {"k1", "dual_numbers", "split", "group_c2", "mat2"}) {
    CHECK(check_assoc(catalog::get(name).assoc).all_pass());
  }
  CHECK(catalog::dual_numbers().prod(1, 1, 0) == Rat(0));  // x*x = 0
  CHECK(catalog::split().prod(1, 1, 0) == Rat(1));         // x*x = 1
}

TEST_CASE("catalog names") {
  auto names = catalog::names();
  CHECK(names.size() >= 9);
  CHECK_THROWS_AS(catalog::get("nope"), ValidationError);
  CHECK(catalog::get("abelian5").lie.dim == 5);
  CHECK_THROWS_AS(catalog::get("abelianx"), ValidationError);
}

TEST_CASE("associativity failure carries a witness") {
  // e0*e0 = e1, e0*e1 = e0, everything else 0: (e0 e0)e0 = 0 but e0(e0 e0) = e0
  AssocAlgebra<Rat> bad{2, std::vector<Rat>(8, Rat(0)), {}};
  bad.prod_ref(0, 0, 1) = Rat(1);
  bad.prod_ref(0, 1, 0) = Rat(1);
  CheckReport rep = check_assoc(bad, /*require_unit=*/false);
  const CheckItem* item = rep.find("associativity");
  REQUIRE(item != nullptr);
  CHECK(!item->pass);
  CHECK(!item->witness.empty());
}

TEST_CASE("lie checkers") {
  CHECK(check_lie(catalog::sl2()).all_pass());
  CHECK(check_lie(catalog::heisenberg3()).all_pass());
  CHECK(check_lie(catalog::abelian(3)).all_pass());

  LieAlgebra<Rat> bad = catalog::heisenberg3();
  bad.bracket_ref(0, 1, 2) = Rat(1);
  bad.bracket_ref(1, 0, 2) = Rat(1);  // antisymmetry broken at (0,1)
  CheckReport rep = check_lie(bad);
  const CheckItem* item = rep.find("antisymmetry");
  REQUIRE(item != nullptr);
  CHECK(!item->pass);
  CHECK(item->witness == "(0,1)");

  // sl2 with a corrupted bracket fails Jacobi
  LieAlgebra<Rat> nojac = catalog::sl2();
  nojac.bracket_ref(0, 1, 0) = Rat(1);
  nojac.bracket_ref(1, 0, 0) = Rat(-1);
  CHECK(!check_lie(nojac).all_pass());
}

TEST_CASE("gl11 is a color-graded structure and a superalgebra") {
  GradedLieAlgebra<Rat> g = catalog::gl11();
  CHECK(check_graded_lie(g).all_pass());
  CHECK(super_axioms_direct(g));

  // the identity E11 + E22 is central of degree 0
  std::vector<Rat> id{Rat(1), Rat(1), Rat(0), Rat(0)};
  CHECK(is_central(g.dim, g.f, id));
  auto zs = center(g);
  bool found = false;
  for (const auto& z : zs) {
    if (z.coords == id) {
      found = true;
      REQUIRE(z.degree.has_value());
      CHECK(*z.degree == std::vector<unsigned>{0});
    }
  }
  CHECK(found);
  CHECK(zs.size() == 1);
}

TEST_CASE("graded checker with broken sign agrees with the direct transcription") {
  GradedLieAlgebra<Rat> g = catalog::gl11();
  g.bracket_ref(2, 3, 0) = Rat(1);
  g.bracket_ref(3, 2, 0) = Rat(-1);  // wrong sign for odd-odd pair
  CHECK(!check_graded_lie(g).all_pass());
  CHECK(!super_axioms_direct(g));
}

TEST_CASE("trivially graded checker accepts exactly what check_lie accepts") {
  for (const char* name : {"sl2", "heisenberg3", "abelian3"}) {
    LieAlgebra<Rat> l = catalog::get(name).lie;
    CHECK(check_graded_lie(trivially_graded(l)).all_pass() == check_lie(l).all_pass());
  }
  LieAlgebra<Rat> bad = catalog::sl2();
  bad.bracket_ref(0, 1, 0) = Rat(1);
  bad.bracket_ref(1, 0, 0) = Rat(-1);
  CHECK(check_graded_lie(trivially_graded(bad)).all_pass() == check_lie(bad).all_pass());
}

TEST_CASE("color function over Q(i): Z4 x Z4 grading") {
  // off-diagonal theta(g1,g2) = i, theta(g2,g1) = -i is a legitimate
  // antisymmetric bicharacter on Z4 x Z4
  GradedLieAlgebra<Gaussian> g;
  g.dim = 2;
  g.f.assign(8, Gaussian(0));
  g.group = AbelianGroup{{4, 4}};
  g.degree = {{1, 0}, {0, 1}};
  g.theta_gen = {Gaussian(1), Gaussian::i(), -Gaussian::i(), Gaussian(1)};
  CHECK(check_graded_lie(g).all_pass());
  CHECK(g.theta({1, 0}, {0, 1}) == Gaussian::i());
  CHECK(g.theta({2, 0}, {0, 1}) == Gaussian(-1));
  CHECK(g.theta({1, 0}, {0, 3}) == -Gaussian::i());

  // theta(g,g) = i on a single Z4 violates theta(a,b)theta(b,a) = 1
  GradedLieAlgebra<Gaussian> bad1;
  bad1.dim = 1;
  bad1.f.assign(1, Gaussian(0));
  bad1.group = AbelianGroup{{4}};
  bad1.degree = {{1}};
  bad1.theta_gen = {Gaussian::i()};
  CHECK(!check_graded_lie(bad1).all_pass());

  // theta(g1,g2) = 2 is not a root of unity: the bicharacter laws fail mod 4
  GradedLieAlgebra<Gaussian> bad2 = g;
  bad2.theta_gen = {Gaussian(1), Gaussian(2), Gaussian(Rat(1, 2)), Gaussian(1)};
  CHECK(!check_graded_lie(bad2).all_pass());
}

TEST_CASE("center computations") {
  auto h3 = center(catalog::heisenberg3());
  REQUIRE(h3.size() == 1);
  CHECK(h3[0].coords == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});

  CHECK(center(catalog::abelian(3)).size() == 3);
  CHECK(center(catalog::sl2()).empty());

  // every center basis vector brackets to zero exactly
  for (const auto& z : center(catalog::heisenberg3()))
    CHECK(is_central(3, catalog::heisenberg3().f, z.coords));
}

TEST_CASE("coalgebra duals") {
  // 1-dim: dual of k has D(e) = e (x) e, eps(e) = 1
  Coalgebra<Rat> c1 = dualize_assoc(catalog::k1());
  CHECK(c1.cop(0, 0, 0) == Rat(1));
  CHECK(c1.counit[0] == Rat(1));
  CHECK(check_coalgebra(c1).all_pass());

  // dual of dual numbers: D(x*) = 1* (x) x* + x* (x) 1*, D(1*) = 1* (x) 1*
  Coalgebra<Rat> cd = dualize_assoc(catalog::dual_numbers());
  CHECK(cd.cop(1, 0, 1) == Rat(1));
  CHECK(cd.cop(1, 1, 0) == Rat(1));
  CHECK(cd.cop(1, 1, 1) == Rat(0));
  CHECK(cd.cop(0, 0, 0) == Rat(1));
  CHECK(check_coalgebra(cd).all_pass());

  // dualizing twice returns the original constants
  for (const char* name : {"dual_numbers", "split", "mat2"}) {
    AssocAlgebra<Rat> a = catalog::get(name).assoc;
    AssocAlgebra<Rat> back = dualize_coalg(dualize_assoc(a));
    CHECK(back.c == a.c);
    CHECK(back.unit == a.unit);
  }

  // dual of an algebra passing check_assoc passes check_coalgebra
  for (const char* name : {"k1", "dual_numbers", "split", "group_c2", "mat2"}) {
    AssocAlgebra<Rat> a = catalog::get(name).assoc;
    REQUIRE(check_assoc(a).all_pass());
    CHECK(check_coalgebra(dualize_assoc(a)).all_pass());
  }
}

TEST_CASE("lie coalgebra duals") {
  for (const char* name : {"sl2", "heisenberg3", "abelian3"}) {
    LieAlgebra<Rat> l = catalog::get(name).lie;
    LieCoalgebra<Rat> m = dualize_lie(l);
    CHECK(check_lie_coalgebra(m).all_pass());
    CHECK(dualize_lie_coalg(m).f == l.f);
  }
  LieCoalgebra<Rat> bad = dualize_lie(catalog::heisenberg3());
  bad.cob_ref(2, 0, 1) = Rat(2);  // breaks co-antisymmetry
  CHECK(!check_lie_coalgebra(bad).all_pass());
}

TEST_CASE("poisson checker") {
  PoissonAlgebra<Rat> p = catalog::mat2_poisson();
  CHECK(check_poisson(p).all_pass());

  // breaking Leibniz: scale one bracket entry
  PoissonAlgebra<Rat> bad = p;
  bad.bracket[(0 * 4 + 1) * 4 + 1] += Rat(1);
  CHECK(!check_poisson(bad).all_pass());
}

TEST_CASE("bracket-as-product criterion") {
  BracketAsProductResult h3 = bracket_as_product(catalog::heisenberg3());
  CHECK(h3.holds);
  CHECK(h3.self_test.all_pass());
  // nonunital: the self-test must not contain unit items
  CHECK(h3.self_test.find("left_unit") == nullptr);

  CHECK(bracket_as_product(catalog::abelian(2)).holds);
  CHECK(!bracket_as_product(catalog::sl2()).holds);
}

TEST_CASE("malformed constants are rejected") {
  AssocAlgebra<Rat> a = catalog::dual_numbers();
  a.c.pop_back();
  CHECK_THROWS_AS(check_assoc(a), ValidationError);
  GradedLieAlgebra<Rat> g = catalog::gl11();
  g.degree.pop_back();
  CHECK_THROWS_AS(check_graded_lie(g), ValidationError);
}
