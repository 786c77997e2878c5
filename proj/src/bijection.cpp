#include "cubic/bijection.hpp"

#include <array>
#include <stdexcept>

namespace cubic {

namespace {

// delta^-1 alpha^(3-i) beta^i for i = 0..3
std::array<QuadElem, 4> basis_cubes(const BalancedPair& pair) {
  const QuadElem &a = pair.ideal.alpha(), &b = pair.ideal.beta();
  if (pair.delta.is_zero()) throw std::domain_error("delta is not invertible");
  const QuadElem dinv = inverse(pair.delta);
  return {dinv * a * a * a, dinv * a * a * b, dinv * a * b * b, dinv * b * b * b};
}

}  // namespace

BalancedPair form_to_pair(const CubicForm& f) {
  const Discriminant d(discriminant(f));
  if (!is_projective(f)) throw std::domain_error("form is not projective");
  const CovariantForm c = covariant(f);
  const QuadElem alpha(c.c1, half(f.a1), d);
  const QuadElem beta(c.c2, half(f.a2), d);
  if (orientation(alpha, beta) == 0)
    throw std::logic_error("degenerate covariant basis for nonsquare discriminant");
  return BalancedPair{OrientedIdeal(alpha, beta), alpha * beta};
}

CubicForm pair_to_form(const BalancedPair& pair) {
  const std::array<QuadElem, 4> e = basis_cubes(pair);
  std::array<Int, 4> a;
  std::array<Rat, 4> c;
  for (int i = 0; i < 4; ++i) {
    if (!is_in_ring(e[i]))
      throw std::domain_error("unbalanced pair: delta^-1 J^3 leaves the ring");
    a[i] = to_int(2 * e[i].t());
    c[i] = e[i].s();
  }
  const CubicForm f{a[0], a[1], a[2], a[3]};
  if (covariant(f) != CovariantForm{c[0], c[1], c[2], c[3]})
    throw std::domain_error("unbalanced pair: read-off coefficients are not the covariant");
  if (discriminant(f) != pair.ideal.disc().value())
    throw std::domain_error("unbalanced pair: discriminant mismatch");
  return f;
}

bool lemma_check(const CubicForm& f, const BalancedPair& pair) {
  if (pair.delta.is_zero()) throw std::domain_error("delta is not invertible");
  const Discriminant& d = pair.ideal.disc();
  const std::array<QuadElem, 4> e = basis_cubes(pair);
  const CovariantForm c = covariant(f);
  const std::array<Rat, 4> cs = {c.c0, c.c1, c.c2, c.c3};
  const std::array<Int, 4> as = {f.a0, f.a1, f.a2, f.a3};
  for (int i = 0; i < 4; ++i)
    if (e[i] != QuadElem(cs[i], half(as[i]), d)) return false;
  return true;
}

}  // namespace cubic
