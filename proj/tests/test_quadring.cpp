#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/quadring.hpp"
#include "testutil.hpp"

using namespace cubic;
using namespace cubic::testutil;

TEST_CASE("discriminant validation") {
  CHECK_NOTHROW(Discriminant(5));
  CHECK_NOTHROW(Discriminant(-31));
  CHECK_NOTHROW(Discriminant(8));
  CHECK_NOTHROW(Discriminant(-4));
  CHECK_NOTHROW(Discriminant(-3));
  CHECK_THROWS_AS(Discriminant(0), std::domain_error);
  CHECK_THROWS_AS(Discriminant(7), std::domain_error);    // 3 mod 4
  CHECK_THROWS_AS(Discriminant(-5), std::domain_error);   // 3 mod 4
  CHECK_THROWS_AS(Discriminant(9), std::domain_error);    // square
  CHECK_THROWS_AS(Discriminant(16), std::domain_error);   // square
  CHECK(Discriminant(5).odd());
  CHECK(Discriminant(-31).odd());
  CHECK_FALSE(Discriminant(8).odd());
}

TEST_CASE("tau squares to D/4") {
  for (long dv : {5L, -31L, 8L, 12L, -23L}) {
    Discriminant d(dv);
    CHECK(tau(d) * tau(d) == quad_rat(make_rat(dv, 4), d));
  }
}

TEST_CASE("field arithmetic on paper elements") {
  Discriminant d5(5);
  const QuadElem e(rat(-1, 2), rat(1, 2), d5);  // omega - 1
  CHECK(e * quad_int(1, d5) == e);
  CHECK(norm(e) == rat(-1));
  CHECK(inverse(e) == QuadElem(rat(1, 2), rat(1, 2), d5));
  CHECK(e * inverse(e) == quad_int(1, d5));
  CHECK(conj(e) == QuadElem(rat(-1, 2), rat(-1, 2), d5));
  CHECK(norm(quad_int(1, d5)) == 1);
  CHECK(norm(tau(d5)) == rat(-5, 4));
  CHECK(norm(tau(Discriminant(8))) == rat(-2));
}

TEST_CASE("error paths") {
  Discriminant d5(5), d8(8);
  CHECK_THROWS_AS(quad_int(1, d5) + quad_int(1, d8), std::domain_error);
  CHECK_THROWS_AS(quad_int(1, d5) * tau(d8), std::domain_error);
  CHECK_THROWS_AS(inverse(quad_int(0, d5)), std::domain_error);
  CHECK_THROWS_AS(orientation(tau(d5), tau(d8)), std::domain_error);
}

TEST_CASE("ring membership") {
  Discriminant d5(5);
  CHECK(is_in_ring(QuadElem(rat(-1, 2), rat(1, 2), d5)));   // omega - 1
  CHECK_FALSE(is_in_ring(QuadElem(rat(1, 2), rat(0), d5)));
  CHECK(is_in_ring(ring_generator(d5)));
  CHECK_FALSE(is_in_ring(tau(d5)));  // sqrt(5)/2 alone is not in R_5

  Discriminant d8(8);
  CHECK(is_in_ring(QuadElem(rat(3), rat(5, 2), d8)));  // s integral, 2t integral
  CHECK(is_in_ring(tau(d8)));
  CHECK_FALSE(is_in_ring(QuadElem(rat(1, 2), rat(1, 2), d8)));
}

TEST_CASE("orientation basics") {
  for (long dv : {5L, -31L, 8L, 12L}) {
    Discriminant d(dv);
    CHECK(orientation(quad_int(1, d), ring_generator(d)) == 1);
    const QuadElem w = ring_generator(d);
    CHECK(orientation(w, w) == 0);
  }
  Discriminant d5(5);
  CHECK(orientation(QuadElem(rat(-1, 2), rat(1, 2), d5), quad_int(1, d5)) == rat(-1));
}

TEST_CASE("norm is multiplicative and nonzero away from zero") {
  std::mt19937_64 rng(20240501);
  Discriminant d(5), dneg(-31);
  for (int i = 0; i < 1000; ++i) {
    const Discriminant& dd = (i % 2 == 0) ? d : dneg;
    const QuadElem a = random_elem(rng, dd), b = random_elem(rng, dd);
    CHECK(norm(a * b) == norm(a) * norm(b));
    if (!a.is_zero()) CHECK(norm(a) != 0);
  }
}

TEST_CASE("ring closure under + and *") {
  std::mt19937_64 rng(20240502);
  for (long dv : {5L, 8L, -31L, 12L}) {
    Discriminant d(dv);
    for (int i = 0; i < 250; ++i) {
      const QuadElem a = random_ring_elem(rng, d), b = random_ring_elem(rng, d);
      REQUIRE(is_in_ring(a));
      REQUIRE(is_in_ring(b));
      CHECK(is_in_ring(a + b));
      CHECK(is_in_ring(a * b));
    }
  }
}

TEST_CASE("orientation scales by the norm") {
  std::mt19937_64 rng(20240503);
  Discriminant d(5), dneg(-31);
  for (int i = 0; i < 300; ++i) {
    const Discriminant& dd = (i % 2 == 0) ? d : dneg;
    const QuadElem e = random_elem(rng, dd), a = random_elem(rng, dd), b = random_elem(rng, dd);
    CHECK(orientation(e * a, e * b) == norm(e) * orientation(a, b));
    CHECK(orientation(a, b) == -orientation(b, a));
  }
}
