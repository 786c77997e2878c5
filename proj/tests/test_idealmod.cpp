#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cubic/bijection.hpp"
#include "cubic/classgroup.hpp"
#include "cubic/idealmod.hpp"
#include "testutil.hpp"

using namespace cubic;
using namespace cubic::testutil;

namespace {

// random invertible-by-construction ideal: a form ideal scaled by a random
// nonzero ring element, occasionally a product of two such
OrientedIdeal random_ideal(std::mt19937_64& rng, const std::vector<CubicForm>& forms) {
  std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
  const BalancedPair p = form_to_pair(forms[pick(rng)]);
  QuadElem c = random_ring_elem(rng, p.ideal.disc());
  while (c.is_zero()) c = random_ring_elem(rng, p.ideal.disc());
  OrientedIdeal j(c * p.ideal.alpha(), c * p.ideal.beta());
  if (pick(rng) % 3 == 0) j = product(j, form_to_pair(forms[pick(rng)]).ideal);
  return j;
}

}  // namespace

TEST_CASE("oriented ideal construction validates the basis") {
  Discriminant d(5);
  const QuadElem w = ring_generator(d);
  CHECK_NOTHROW(OrientedIdeal(quad_int(1, d), w));
  CHECK_THROWS_AS(OrientedIdeal(quad_int(1, d), quad_int(2, d)), std::domain_error);  // dependent
  CHECK_THROWS_AS(OrientedIdeal(quad_int(1, d), w + w), std::domain_error);  // not omega-closed
}

TEST_CASE("signed norms of simple ideals") {
  for (long dv : {5L, -31L, 8L}) {
    Discriminant d(dv);
    CHECK(signed_norm(unit_ideal(d)) == 1);
  }
  Discriminant d5(5);
  const QuadElem om1(rat(-1, 2), rat(1, 2), d5);  // omega - 1
  CHECK(signed_norm(OrientedIdeal(om1, quad_int(1, d5))) == rat(-1));
  Discriminant d31(-31);
  CHECK(signed_norm(OrientedIdeal(quad_int(2, d31), ring_generator(d31))) == 2);
}

TEST_CASE("hnf canonicalizes the worked module") {
  Discriminant d(-31);
  const QuadElem w = ring_generator(d);
  const OrientedIdeal j =
      span_ideal({quad_int(4, d), quad_int(2, d) * w, w - quad_int(8, d)}, 1);
  CHECK(j.alpha() == quad_int(4, d));
  CHECK(j.beta() == w);
  CHECK(signed_norm(j) == 4);
}

TEST_CASE("hnf preserves orientation and is idempotent") {
  Discriminant d(5);
  const OrientedIdeal swapped(ring_generator(d), quad_int(1, d));
  REQUIRE(signed_norm(swapped) == rat(-1));
  const OrientedIdeal h = hnf(swapped);
  CHECK(signed_norm(h) == rat(-1));
  CHECK(same_module(h, unit_ideal(d)));
  CHECK(hnf(h) == h);

  std::mt19937_64 rng(20240701);
  const auto forms = enumerate_projective(Discriminant(-31), 3);
  for (int i = 0; i < 50; ++i) {
    const OrientedIdeal j = random_ideal(rng, forms);
    const OrientedIdeal h1 = hnf(j);
    CHECK(hnf(h1) == h1);
    CHECK(same_module(h1, j));
    CHECK(signed_norm(h1) == signed_norm(j));
  }
}

TEST_CASE("degenerate spans are rejected") {
  Discriminant d(5);
  CHECK_THROWS_AS(span_ideal({quad_int(2, d), quad_int(3, d)}, 1), std::domain_error);
  CHECK_THROWS_AS(span_ideal({quad_int(0, d)}, 1), std::domain_error);
}

TEST_CASE("products of ideals") {
  Discriminant d(-31);
  const QuadElem w = ring_generator(d);
  const OrientedIdeal two_w(quad_int(2, d), w);

  const OrientedIdeal sq = product(two_w, two_w);
  CHECK(sq.alpha() == quad_int(4, d));
  CHECK(sq.beta() == w);
  CHECK(signed_norm(sq) == 4);

  const BalancedPair p = form_to_pair(CubicForm{-1, -1, 1, 4});
  const OrientedIdeal jr = product(p.ideal, unit_ideal(d));
  CHECK(same_module(jr, p.ideal));
  CHECK(signed_norm(jr) == signed_norm(p.ideal));
}

TEST_CASE("product norms multiply and the operation is commutative/associative") {
  std::mt19937_64 rng(20240702);
  const auto forms31 = enumerate_projective(Discriminant(-31), 3);
  const auto forms5 = enumerate_projective(Discriminant(5), 3);
  for (int i = 0; i < 100; ++i) {
    const auto& forms = (i % 2 == 0) ? forms31 : forms5;
    const OrientedIdeal a = random_ideal(rng, forms), b = random_ideal(rng, forms);
    const OrientedIdeal ab = product(a, b);
    CHECK(signed_norm(ab) == signed_norm(a) * signed_norm(b));
    CHECK(product(b, a) == ab);  // hnf output is canonical
    if (i % 4 == 0) {
      const OrientedIdeal c = random_ideal(rng, forms);
      CHECK(same_module(product(ab, c), product(a, product(b, c))));
    }
  }
}

TEST_CASE("signed norm magnitude equals the module index") {
  // independent oracle: |det| of the integer coordinate matrix over (1, omega)
  std::mt19937_64 rng(20240703);
  const auto forms = enumerate_projective(Discriminant(5), 3);
  for (int i = 0; i < 60; ++i) {
    OrientedIdeal j = random_ideal(rng, forms);
    const QuadElem w = ring_generator(j.disc());
    // coordinates: e = x + y*omega with y = 2t, x = s - t for odd D
    auto coords = [&](const QuadElem& e) {
      const Rat y = 2 * e.t();
      const Rat x = j.disc().odd() ? Rat(e.s() - e.t()) : e.s();
      return std::pair<Rat, Rat>(x, y);
    };
    const auto [xa, ya] = coords(j.alpha());
    const auto [xb, yb] = coords(j.beta());
    if (xa.get_den() != 1 || ya.get_den() != 1 || xb.get_den() != 1 || yb.get_den() != 1)
      continue;  // fractional ideal: index is not defined
    const Rat det = xa * yb - xb * ya;
    CHECK(abs(det) == abs(signed_norm(j)));
    (void)w;
  }
}

TEST_CASE("expressing elements in a basis") {
  Discriminant d(-31);
  const QuadElem w = ring_generator(d);
  const OrientedIdeal four_w(quad_int(4, d), w);
  CHECK(express_in_basis(w - quad_int(8, d), four_w) == std::pair<Int, Int>(-2, 1));
  CHECK(express_in_basis(quad_int(0, d), four_w) == std::pair<Int, Int>(0, 0));

  const BalancedPair p = form_to_pair(CubicForm{-1, -1, 1, 4});
  const QuadElem combo =
      quad_int(3, d) * p.ideal.alpha() + quad_int(2, d) * p.ideal.beta();
  CHECK(express_in_basis(combo, p.ideal) == std::pair<Int, Int>(3, 2));

  CHECK_THROWS_AS(express_in_basis(QuadElem(rat(1, 2), rat(0), d), four_w), std::domain_error);
}

TEST_CASE("validate_pair on unit and worked pairs") {
  for (long dv : {5L, -31L, 8L}) {
    Discriminant d(dv);
    const PairReport unit = validate_pair({unit_ideal(d), quad_int(1, d)});
    CHECK(unit.pass());

    const PairReport bad = validate_pair({unit_ideal(d), tau(d)});
    CHECK_FALSE(bad.norm_matches);
    CHECK_FALSE(bad.pass());
  }

  Discriminant d5(5);
  const QuadElem om1(rat(-1, 2), rat(1, 2), d5);
  const BalancedPair pair{OrientedIdeal(om1, quad_int(1, d5)), om1};
  const PairReport rep = validate_pair(pair);
  CHECK(rep.pass());
  CHECK(signed_norm(pair.ideal) == rat(-1));
  CHECK(norm(pair.delta) == rat(-1));

  CHECK_FALSE(validate_pair({unit_ideal(d5), quad_int(0, d5)}).pass());
}
