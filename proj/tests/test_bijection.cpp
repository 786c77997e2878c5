#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubic/bijection.hpp"
#include "cubic/classgroup.hpp"
#include "testutil.hpp"

using namespace cubic;
using namespace cubic::testutil;

TEST_CASE("form_to_pair reproduces the worked data") {
  Discriminant d5(5);
  const BalancedPair p5 = form_to_pair(CubicForm{-1, 1, 0, 1});
  CHECK(p5.ideal.alpha() == QuadElem(rat(-1, 2), rat(1, 2), d5));
  CHECK(p5.ideal.beta() == quad_int(1, d5));
  CHECK(p5.delta == QuadElem(rat(-1, 2), rat(1, 2), d5));
  CHECK(signed_norm(p5.ideal) == rat(-1));
  CHECK(validate_pair(p5).pass());

  Discriminant d31(-31);
  const BalancedPair p31 = form_to_pair(CubicForm{-1, -1, 1, 4});
  CHECK(p31.ideal.alpha() == QuadElem(rat(7, 2), rat(-1, 2), d31));
  CHECK(p31.ideal.beta() == QuadElem(rat(13, 2), rat(1, 2), d31));
  CHECK(p31.delta == p31.ideal.alpha() * p31.ideal.beta());
  CHECK(validate_pair(p31).pass());
}

TEST_CASE("form_to_pair rejects bad input") {
  CHECK_THROWS_AS(form_to_pair(CubicForm{2, 2, 0, 2}), std::domain_error);  // not projective
  CHECK_THROWS_AS(form_to_pair(CubicForm{1, 0, 0, 0}), std::domain_error);  // discriminant 0
  CHECK_THROWS_AS(form_to_pair(CubicForm{0, 1, 0, 4}), std::domain_error);  // discriminant 16
}

TEST_CASE("identity pair maps to the module R_D with unit delta") {
  for (long dv : {5L, -31L, 8L}) {
    Discriminant d(dv);
    const BalancedPair p = form_to_pair(identity_form(d));
    CHECK(same_module(p.ideal, unit_ideal(d)));
    CHECK(abs(norm(p.delta)) == 1);
  }
}

TEST_CASE("pair_to_form on the unit pair") {
  for (long dv : {8L, 12L, -4L, -8L}) {
    Discriminant d(dv);
    const BalancedPair unit{OrientedIdeal(quad_int(1, d), tau(d)), quad_int(1, d)};
    CHECK(pair_to_form(unit) == CubicForm{0, 1, 0, Int(dv / 4)});
  }
  for (long dv : {5L, -31L, -23L, 13L}) {
    Discriminant d(dv);
    const BalancedPair unit{unit_ideal(d), quad_int(1, d)};
    CHECK(pair_to_form(unit) == CubicForm{0, 1, 1, Int((dv + 3) / 4)});
  }
}

TEST_CASE("pair_to_form rejects unbalanced pairs") {
  Discriminant d(5);
  // integrality failure: delta^-1 * 1 = 1/2 is not in the ring
  CHECK_THROWS_AS(pair_to_form({unit_ideal(d), quad_int(2, d)}), std::domain_error);
  // integral but wrong: read-off coefficients disagree with the covariant
  CHECK_THROWS_AS(pair_to_form({unit_ideal(d), ring_generator(d)}), std::domain_error);
  CHECK_THROWS_AS(pair_to_form({unit_ideal(d), quad_int(0, d)}), std::domain_error);
}

TEST_CASE("round trip is the exact identity") {
  const CubicForm paper[] = {{-1, -1, 1, 4}, {1, -2, 0, 1}, {7, 1, -1, 0},
                             {-1, 1, 0, 1},  {-3, 2, -1, 1}, {-8, 5, -3, 2}};
  for (const CubicForm& f : paper) CHECK(pair_to_form(form_to_pair(f)) == f);

  for (long dv : {-31L, 5L}) {
    const auto forms = enumerate_projective(Discriminant(dv), 4);
    REQUIRE(!forms.empty());
    for (const CubicForm& f : forms) {
      const BalancedPair p = form_to_pair(f);
      CHECK(validate_pair(p).pass());
      CHECK(pair_to_form(p) == f);
      // ring parity rule for the read-off coefficients
      const QuadElem dinv = inverse(p.delta);
      const QuadElem a = p.ideal.alpha(), b = p.ideal.beta();
      for (const QuadElem& e : {dinv * a * a * a, dinv * a * a * b, dinv * a * b * b,
                                dinv * b * b * b})
        CHECK(is_in_ring(e));
    }
  }
}

TEST_CASE("lemma check singles out the matching pair") {
  const CubicForm f5{-1, 1, 0, 1};
  CHECK(lemma_check(f5, form_to_pair(f5)));
  const CubicForm f31{1, -2, 0, 1};
  CHECK(lemma_check(f31, form_to_pair(f31)));
  CHECK_FALSE(lemma_check(f5, {unit_ideal(Discriminant(5)), quad_int(1, Discriminant(5))}));
}
