#pragma once

#include "cubic/quadring.hpp"

namespace cubic {

// Binary cubic form in the triplicate convention:
//   a0 x^3 + 3 a1 x^2 y + 3 a2 x y^2 + a3 y^3.
// The stored quadruple is (a0, a1, a2, a3); displayed polynomials carry
// middle coefficients 3*a1 and 3*a2.
struct CubicForm {
  Int a0, a1, a2, a3;
};

bool operator==(const CubicForm& f, const CubicForm& g);
bool operator!=(const CubicForm& f, const CubicForm& g);
// lexicographic on (a0, a1, a2, a3)
bool operator<(const CubicForm& f, const CubicForm& g);

// Half-integer cubic form c0 x^3 + 3 c1 x^2 y + 3 c2 x y^2 + c3 y^3 with
// 2*c_i integral; houses the covariant p'.
struct CovariantForm {
  Rat c0, c1, c2, c3;
};

bool operator==(const CovariantForm& f, const CovariantForm& g);
bool operator!=(const CovariantForm& f, const CovariantForm& g);

// Integral quadratic form q0 x^2 + q1 x y + q2 y^2.
struct HessianQuad {
  Int q0, q1, q2;
};

bool operator==(const HessianQuad& a, const HessianQuad& b);

// Element of SL2(Z); validated at construction.
class Unimodular {
 public:
  Unimodular(Int p, Int q, Int r, Int s);
  static Unimodular identity();
  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& s() const { return s_; }

 private:
  Int p_, q_, r_, s_;
};

Unimodular operator*(const Unimodular& a, const Unimodular& b);
bool operator==(const Unimodular& a, const Unimodular& b);

Int discriminant(const CubicForm& f);

// Hessian triple (a1^2 - a0 a2, a1 a2 - a0 a3, a2^2 - a1 a3). The middle
// coefficient carries the sign that makes p'^2 - (D/4) p^2 = q^3 an exact
// identity; the projectivity gcd is sign-insensitive.
HessianQuad hessian(const CubicForm& f);

// true iff gcd of the Hessian triple is 1
bool is_projective(const CubicForm& f);

// Right action (f.g)(x, y) = f(px + qy, rx + sy), re-read in the triplicate
// convention (the expanded x^2 y and x y^2 coefficients are divisible by 3).
CubicForm act(const CubicForm& f, const Unimodular& g);
CovariantForm act(const CovariantForm& f, const Unimodular& g);

CovariantForm covariant(const CubicForm& f);

// Polynomial identity p'(x,y)^2 - (D/4) p(x,y)^2 == hessian(p)(x,y)^3,
// expanded symbolically, where D = discriminant(f).
bool syzygy_check(const CubicForm& f);

}  // namespace cubic
