#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactfield/exactfield.hpp"

using namespace ef;

namespace {

Cyc7 z(long k) { return Cyc7::zeta(k); }

Cyc7 random_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-13, 13), den(1, 13);
  std::array<Rat, 6> c;
  for (auto& x : c) x = Rat(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return Cyc7(c);
}

const Cyc7 lam1 = z(1) - z(6), lam2 = z(4) - z(3), lam3 = z(2) - z(5);
const Cyc7 eta1 = z(1) + z(6), eta2 = z(4) + z(3), eta3 = z(2) + z(5);

}  // namespace

TEST_CASE("roots of unity and the cyclotomic relation") {
  CHECK(z(1) * z(6) == Cyc7(1));
  Cyc7 s;
  for (int k = 0; k < 7; ++k) s += z(k);
  CHECK(s.is_zero());
  CHECK(z(7) == Cyc7(1));
  CHECK(z(-1) == z(6));
}

TEST_CASE("gauss sum") {
  Cyc7 g = gauss_sum();
  CHECK(g == Cyc7(1) + Cyc7(2) * (z(1) + z(2) + z(4)));
  CHECK(g * g == Cyc7(-7));
  CHECK(g == lam1 + lam2 + lam3);
  Cyc7 ap = (Cyc7(1) + g) * Cyc7(Rat(1, 2)), am = (Cyc7(1) - g) * Cyc7(Rat(1, 2));
  CHECK(ap + am == Cyc7(1));
  CHECK(z(1) + z(2) + z(4) == -am);
  CHECK(z(3) + z(5) + z(6) == -ap);
}

TEST_CASE("printed identities among lambda and eta") {
  Cyc7 a = gauss_sum();
  CHECK(lam1 * lam2 * lam3 == a);
  CHECK(eta1 + eta2 + eta3 == Cyc7(-1));
  CHECK(eta1 * eta2 * eta3 == Cyc7(1));
  CHECK(lam1 * lam1 == eta3 - Cyc7(2));
  CHECK(lam2 * lam2 == eta1 - Cyc7(2));
  CHECK(lam3 * lam3 == eta2 - Cyc7(2));
  CHECK(lam1 * lam2 == eta3 - eta2);
  CHECK(lam2 * lam3 == eta1 - eta3);
  CHECK(lam3 * lam1 == eta2 - eta1);
  CHECK(a * eta1 == lam1 - Cyc7(2) * lam2);
  CHECK(a * eta2 == lam2 - Cyc7(2) * lam3);
  CHECK(a * eta3 == lam3 - Cyc7(2) * lam1);
}

TEST_CASE("galois action") {
  CHECK(galois_theta(z(1), 1) == z(3));
  CHECK(galois_theta(z(1), 3) == z(6));
  CHECK(galois_theta(eta1, 1) == eta2);
  CHECK(conj(eta1) == eta1);
  CHECK(conj(lam2) == -lam2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Cyc7 x = random_cyc(rng), y = random_cyc(rng);
    CHECK(galois_theta(x * y, 1) == galois_theta(x, 1) * galois_theta(y, 1));
    CHECK(galois_theta(x, 6) == x);
  }
  // order exactly 6
  CHECK(galois_theta(z(1), 2) != z(1));
  CHECK(galois_theta(z(1), 3) != z(1));
}

TEST_CASE("field axioms on seeded random triples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    Cyc7 a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) REQUIRE(a * inv(a) == Cyc7(1));
    FieldElem x(a, b), y(c, a), w(b, c);
    REQUIRE((x * y) * w == x * (y * w));
    REQUIRE(x * (y + w) == x * y + x * w);
    if (!x.is_zero()) REQUIRE(x * inv(x) == FieldElem(1));
  }
  for (long a = 0; a < 31; ++a)
    for (long b = 1; b < 31; ++b) {
      Fp x(a, 31), y(b, 31);
      REQUIRE((x / y) * y == x);
    }
}

TEST_CASE("canonical form and division by zero") {
  std::array<Rat, 7> r{};
  for (auto& c : r) c = 3;
  CHECK(Cyc7::from_redundant(r).is_zero());
  CHECK_THROWS_AS(inv(Cyc7()), DivByZero);
  CHECK_THROWS_AS(inv(Fp(0, 31)), DivByZero);
  CHECK_THROWS_AS(inv(FieldElem()), DivByZero);
}

TEST_CASE("sqrt2 tower") {
  FieldElem r2 = FieldElem::sqrt2();
  CHECK(r2 * r2 == FieldElem(2));
  CHECK(galois_theta(r2, 1) == r2);
}

TEST_CASE("dual numbers") {
  using D = DualNum<Rat>;
  CHECK(D(1, 1) * D(1, -1) == D(1, 0));
  D x(3, 5);
  CHECK(ef::pow(x, 4, Rat(1)) == D(81, 4 * 27 * 5));
}

TEST_CASE("text round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    FieldElem x(random_cyc(rng), i % 3 ? random_cyc(rng) : Cyc7());
    CHECK(parse_field(to_string(x)) == x);
  }
  CHECK(parse_field("1 + 2*z + 2*z^2 + 2*z^4") == FieldElem(gauss_sum()));
  CHECK(parse_field("(1/2)*r2 - 3/4") == FieldElem(Cyc7(Rat(-3, 4)), Cyc7(Rat(1, 2))));
  CHECK_THROWS_AS(parse_field("1 + q"), ParseError);
}

TEST_CASE("prime field reduction of rationals") {
  CHECK(to_fp(Rat(1, 2), 31) == Fp(16, 31));
  CHECK_THROWS(to_fp(Rat(1, 31), 31));
}
