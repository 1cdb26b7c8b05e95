#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybx/gaussian.hpp"
#include "ybx/polynomial.hpp"
#include "ybx/rational_function.hpp"
#include "ybx/rng.hpp"
#include "ybx/scalar.hpp"

using namespace ybx;

TEST_CASE("rational exactness") {
  RatSampler s{SplitMix64(1)};
  for (int rep = 0; rep < 200; ++rep) {
    Rat a = s.rational();
    CHECK(is_zero(Rat(a + (-a))));
    if (!is_zero(a)) CHECK(Rat(a * inverse(a)) == 1);
  }
}

TEST_CASE("rat_parse") {
  CHECK(rat_parse("3") == Rat(3));
  CHECK(rat_parse("-3/6") == Rat(-1, 2));
  CHECK(rat_parse("4/2") == Rat(2));
  CHECK_THROWS_AS(rat_parse("1/0"), ValidationError);
  CHECK_THROWS_AS(rat_parse("x"), ValidationError);
  CHECK_THROWS_AS(rat_parse("1/2/3"), ValidationError);
  CHECK_THROWS_AS(rat_parse(""), ValidationError);
}

TEST_CASE("gaussian field") {
  Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(-1));
  Gaussian x(Rat(2), Rat(-3));
  CHECK(is_zero(Gaussian(x + (-x))));
  CHECK(is_one(Gaussian(x * inverse(x))));
  CHECK_THROWS_AS(inverse(Gaussian(0)), DivisionByZeroError);
  // fourth roots of unity close under multiplication
  Gaussian r = i;
  for (int k = 0; k < 3; ++k) r = r * i;
  CHECK(is_one(r));
  CHECK(to_string(Gaussian(Rat(1, 2), Rat(-1))) == "1/2-1i");
}

TEST_CASE("polynomial arithmetic and gcd") {
  Polynomial q = Polynomial::variable();
  Polynomial a = q * q - Polynomial(1);            // q^2 - 1
  Polynomial b = q - Polynomial(1);                // q - 1
  Polynomial g = Polynomial::gcd(a, b);
  CHECK(g == b);  // monic already
  Polynomial quot, rem;
  Polynomial::divmod(a, b, quot, rem);
  CHECK(rem.is_zero());
  CHECK(quot == q + Polynomial(1));
  CHECK(a.eval(Rat(3)) == Rat(8));
  CHECK_THROWS_AS(Polynomial::divmod(a, Polynomial(), quot, rem), DivisionByZeroError);

  // divmod contract a = q*b + r on random inputs
  RatSampler s{SplitMix64(7)};
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Rat> ca, cb;
    for (int k = 0; k < 6; ++k) ca.push_back(s.rational());
    for (int k = 0; k < 3; ++k) cb.push_back(s.rational());
    Polynomial pa(ca), pb(cb);
    if (pb.is_zero()) continue;
    Polynomial::divmod(pa, pb, quot, rem);
    CHECK(quot * pb + rem == pa);
    CHECK(rem.degree() < pb.degree());
  }
}

TEST_CASE("rational function canonical form") {
  Polynomial q = Polynomial::variable();
  RationalFunction f(q * q - Polynomial(1), Polynomial(2) * q - Polynomial(2));
  // (q^2-1)/(2q-2) reduces to (q+1)/2 with monic denominator: num (1/2)q + 1/2, den 1
  CHECK(f.den() == Polynomial(1));
  CHECK(f.num() == Polynomial(std::vector<Rat>{Rat(1, 2), Rat(1, 2)}));

  RatSampler s{SplitMix64(11)};
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<Rat> ca{s.rational(), s.rational(), s.rational()};
    std::vector<Rat> cb{s.rational(), s.rational()};
    Polynomial pa(ca), pb(cb);
    if (pb.is_zero()) continue;
    RationalFunction x(pa, pb);
    RationalFunction y(pb, Polynomial(std::vector<Rat>{Rat(1), Rat(2)}));
    RationalFunction z = x * y + inverse(RationalFunction(Polynomial(3)) + y);
    // always reduced with monic denominator
    CHECK(Polynomial::gcd(z.num(), z.den()).degree() <= 0);
    CHECK(is_one(z.den().leading()));
    CHECK(is_zero(RationalFunction(z - z)));
    if (!z.is_zero()) CHECK(is_one(RationalFunction(z * inverse(z))));
  }
  CHECK_THROWS_AS(RationalFunction(Polynomial(1), Polynomial()), DivisionByZeroError);
  CHECK_THROWS_AS(RationalFunction(q, q - Polynomial(2)).eval(Rat(2)), DivisionByZeroError);
}

TEST_CASE("scalar expression parsing") {
  CHECK(scalar_parse<Rat>("-5/3 + 1") == Rat(-2, 3));
  CHECK(scalar_parse<Rat>("2^5") == Rat(32));
  CHECK(scalar_parse<Rat>("(1+2)*4/6") == Rat(2));
  CHECK(scalar_parse<Gaussian>("1 - 2*i") == Gaussian(Rat(1), Rat(-2)));
  RationalFunction expect(Polynomial(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}),
                          Polynomial(std::vector<Rat>{Rat(-1), Rat(1)}));
  CHECK(scalar_parse<RationalFunction>("(q^2+1)/(q-1)") == expect);
  CHECK_THROWS_AS(scalar_parse<Rat>("q"), ValidationError);
  CHECK_THROWS_AS(scalar_parse<Rat>("i"), ValidationError);
  CHECK_THROWS_AS(scalar_parse<Gaussian>("q"), ValidationError);
  CHECK_THROWS_AS(scalar_parse<RationalFunction>("1/(q-q)"), DivisionByZeroError);
  CHECK_THROWS_AS(scalar_parse<Rat>("2+"), ValidationError);
}

TEST_CASE("sampler policy bounds") {
  RatSampler s{SplitMix64(42)};
  for (int rep = 0; rep < 500; ++rep) {
    Rat r = s.rational();
    CHECK(abs(r.get_num()) <= 99 * 99);  // canonical form of num<=99/den<=99
    CHECK(r.get_den() >= 1);
    CHECK(r.get_den() <= 99);
    CHECK(r >= Rat(-99));
    CHECK(r <= Rat(99));
  }
  CHECK(!is_zero(s.nonzero()));
}
