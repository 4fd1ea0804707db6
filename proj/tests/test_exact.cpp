#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "theta/exact.hpp"

using namespace theta;
using theta::test::embed;

TEST_CASE("zeta satisfies the ninth cyclotomic polynomial", "[exact]") {
  Cyclotomic const z = Cyclotomic::zeta(1);
  REQUIRE(z.pow(9) == Cyclotomic(1L));
  REQUIRE(z.pow(3) != Cyclotomic(1L));
  REQUIRE(z.pow(6) + z.pow(3) + Cyclotomic(1L) == Cyclotomic());
  REQUIRE(Cyclotomic::zeta(-1) * z == Cyclotomic(1L));
  REQUIRE(Cyclotomic::zeta3(1).pow(3) == Cyclotomic(1L));
  REQUIRE(Cyclotomic::zeta3(0) + Cyclotomic::zeta3(1) + Cyclotomic::zeta3(2)
          == Cyclotomic());
}

TEST_CASE("field operations agree with the complex embedding", "[exact]") {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    Cyclotomic const a = test::random_cyclotomic(rng);
    Cyclotomic const b = test::random_cyclotomic(rng);
    Cyclotomic const c = test::random_cyclotomic(rng);
    CHECK(test::close(embed(a * b), embed(a) * embed(b)));
    CHECK(test::close(embed(a + b), embed(a) + embed(b)));
    CHECK(test::close(embed(a.conj()), std::conj(embed(a))));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic(1L));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("Galois action", "[exact]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Cyclotomic const a = test::random_cyclotomic(rng);
    Cyclotomic const b = test::random_cyclotomic(rng);
    for (int k : {1, 2, 4, 5, 7, 8}) {
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
    CHECK(a.galois(1) == a);
    Cyclotomic prod(1L);
    for (int k : {1, 2, 4, 5, 7, 8}) {
      prod *= a.galois(k);
    }
    REQUIRE(prod.is_rational());
    CHECK(prod.coefficient(0) == a.norm());
  }
  CHECK(Cyclotomic::zeta(1).galois(2) == Cyclotomic::zeta(2));
}

TEST_CASE("roots of unity", "[exact]") {
  for (int e = 0; e < 18; ++e) {
    Cyclotomic const r = Cyclotomic::root_of_unity(e);
    CHECK(r.root_of_unity_index() == e);
    CHECK(test::close(embed(r), std::polar(1.0, std::numbers::pi * e / 9)));
  }
  CHECK(Cyclotomic::root_of_unity(2) == Cyclotomic::zeta(1));
  CHECK(Cyclotomic::root_of_unity(9) == Cyclotomic(-1L));
  CHECK_FALSE(Cyclotomic(2L).root_of_unity_index());
  CHECK_FALSE((Cyclotomic(1L) + Cyclotomic::zeta(1)).root_of_unity_index());
}

TEST_CASE("as_integer", "[exact]") {
  CHECK(as_integer(Cyclotomic(-12L)) == -12);
  CHECK(as_integer(Cyclotomic(BigInt("123456789012345678901234567890")))
        == BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(as_integer(Cyclotomic(BigRational(1, 2))),
                  NotRationalInteger);
  CHECK_THROWS_AS(as_integer(Cyclotomic::zeta(3)), NotRationalInteger);
  CHECK_THROWS_AS(Cyclotomic().inverse(), Error);
}

TEST_CASE("binomial", "[exact]") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(28, 2) == 378);
  CHECK(binomial(89, 6) == BigInt("581106988"));
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
}
