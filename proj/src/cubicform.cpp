#include "cubic/cubicform.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubic {

bool operator==(const CubicForm& f, const CubicForm& g) {
  return f.a0 == g.a0 && f.a1 == g.a1 && f.a2 == g.a2 && f.a3 == g.a3;
}

bool operator!=(const CubicForm& f, const CubicForm& g) { return !(f == g); }

bool operator<(const CubicForm& f, const CubicForm& g) {
  if (f.a0 != g.a0) return f.a0 < g.a0;
  if (f.a1 != g.a1) return f.a1 < g.a1;
  if (f.a2 != g.a2) return f.a2 < g.a2;
  return f.a3 < g.a3;
}

bool operator==(const CovariantForm& f, const CovariantForm& g) {
  return f.c0 == g.c0 && f.c1 == g.c1 && f.c2 == g.c2 && f.c3 == g.c3;
}

bool operator!=(const CovariantForm& f, const CovariantForm& g) { return !(f == g); }

bool operator==(const HessianQuad& a, const HessianQuad& b) {
  return a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2;
}

Unimodular::Unimodular(Int p, Int q, Int r, Int s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  if (p_ * s_ - q_ * r_ != 1) throw std::domain_error("matrix is not in SL2(Z)");
}

Unimodular Unimodular::identity() { return Unimodular(1, 0, 0, 1); }

Unimodular operator*(const Unimodular& a, const Unimodular& b) {
  return Unimodular(a.p() * b.p() + a.q() * b.r(), a.p() * b.q() + a.q() * b.s(),
                    a.r() * b.p() + a.s() * b.r(), a.r() * b.q() + a.s() * b.s());
}

bool operator==(const Unimodular& a, const Unimodular& b) {
  return a.p() == b.p() && a.q() == b.q() && a.r() == b.r() && a.s() == b.s();
}

Int discriminant(const CubicForm& f) {
  const Int &a0 = f.a0, &a1 = f.a1, &a2 = f.a2, &a3 = f.a3;
  return a0 * a0 * a3 * a3 - 3 * a1 * a1 * a2 * a2 + 4 * a1 * a1 * a1 * a3 +
         4 * a0 * a2 * a2 * a2 - 6 * a0 * a1 * a2 * a3;
}

HessianQuad hessian(const CubicForm& f) {
  return HessianQuad{f.a1 * f.a1 - f.a0 * f.a2, f.a1 * f.a2 - f.a0 * f.a3,
                     f.a2 * f.a2 - f.a1 * f.a3};
}

bool is_projective(const CubicForm& f) {
  const HessianQuad h = hessian(f);
  return gcd(gcd(h.q0, h.q1), h.q2) == 1;
}

namespace {

// Substitution on expanded coefficients (b0, b1, b2, b3) of
// b0 x^3 + b1 x^2 y + b2 x y^2 + b3 y^3 under (x, y) -> (px + qy, rx + sy).
template <typename T>
std::array<T, 4> substitute_expanded(const std::array<T, 4>& b, const Unimodular& g) {
  const Int &p = g.p(), &q = g.q(), &r = g.r(), &s = g.s();
  std::array<T, 4> out;
  out[0] = b[0] * (p * p * p) + b[1] * (p * p * r) + b[2] * (p * r * r) + b[3] * (r * r * r);
  out[1] = b[0] * (3 * p * p * q) + b[1] * (p * p * s + 2 * p * q * r) +
           b[2] * (2 * p * r * s + q * r * r) + b[3] * (3 * r * r * s);
  out[2] = b[0] * (3 * p * q * q) + b[1] * (2 * p * q * s + q * q * r) +
           b[2] * (p * s * s + 2 * q * r * s) + b[3] * (3 * r * s * s);
  out[3] = b[0] * (q * q * q) + b[1] * (q * q * s) + b[2] * (q * s * s) + b[3] * (s * s * s);
  return out;
}

}  // namespace

CubicForm act(const CubicForm& f, const Unimodular& g) {
  const std::array<Int, 4> b = {f.a0, 3 * f.a1, 3 * f.a2, f.a3};
  const std::array<Int, 4> o = substitute_expanded(b, g);
  if (!mpz_divisible_ui_p(o[1].get_mpz_t(), 3) || !mpz_divisible_ui_p(o[2].get_mpz_t(), 3))
    throw std::logic_error("act: middle coefficients not divisible by 3");
  return CubicForm{o[0], o[1] / 3, o[2] / 3, o[3]};
}

CovariantForm act(const CovariantForm& f, const Unimodular& g) {
  const std::array<Rat, 4> b = {f.c0, 3 * f.c1, 3 * f.c2, f.c3};
  const std::array<Rat, 4> o = substitute_expanded(b, g);
  return CovariantForm{o[0], o[1] / 3, o[2] / 3, o[3]};
}

CovariantForm covariant(const CubicForm& f) {
  const Int &a0 = f.a0, &a1 = f.a1, &a2 = f.a2, &a3 = f.a3;
  return CovariantForm{half(2 * a1 * a1 * a1 - 3 * a0 * a1 * a2 + a0 * a0 * a3),
                       half(a1 * a1 * a2 - 2 * a0 * a2 * a2 + a0 * a1 * a3),
                       half(-(a1 * a2 * a2 - 2 * a1 * a1 * a3 + a0 * a2 * a3)),
                       half(-(2 * a2 * a2 * a2 - 3 * a1 * a2 * a3 + a0 * a3 * a3))};
}

namespace {

// product of homogeneous binary polynomials given as coefficient vectors
std::vector<Rat> poly_mul(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  std::vector<Rat> w(u.size() + v.size() - 1, Rat(0));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
  return w;
}

}  // namespace

bool syzygy_check(const CubicForm& f) {
  const Int d = discriminant(f);
  const CovariantForm c = covariant(f);
  const HessianQuad h = hessian(f);
  const std::vector<Rat> pp = {c.c0, 3 * c.c1, 3 * c.c2, c.c3};
  const std::vector<Rat> p = {Rat(f.a0), Rat(3 * f.a1), Rat(3 * f.a2), Rat(f.a3)};
  const std::vector<Rat> q = {Rat(h.q0), Rat(h.q1), Rat(h.q2)};
  std::vector<Rat> lhs = poly_mul(pp, pp);
  const std::vector<Rat> p2 = poly_mul(p, p);
  const Rat d4 = make_rat(d, 4);
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= d4 * p2[i];
  return lhs == poly_mul(poly_mul(q, q), q);
}

}  // namespace cubic
