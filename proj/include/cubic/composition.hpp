#pragma once

#include <array>
#include <map>
#include <utility>

#include "cubic/bijection.hpp"
#include "cubic/cubicform.hpp"

namespace cubic {

// Sparse exact polynomial in x1, y1, x2, y2 with coefficients in Q(sqrt(D)).
// Keys are exponent quadruples (e1, f1, e2, f2); zero coefficients are absent.
class MultiPoly {
 public:
  using Key = std::array<int, 4>;

  explicit MultiPoly(Discriminant d) : disc_(std::move(d)) {}
  const Discriminant& disc() const { return disc_; }
  const std::map<Key, QuadElem>& terms() const { return terms_; }

  void add_term(const Key& key, const QuadElem& coefficient);
  // coefficient of the monomial, zero element if absent
  QuadElem coeff(const Key& key) const;

  // polynomial whose coefficients are the tau_D-parts (a = 2t) of this one's
  MultiPoly tau_part() const;
  // polynomial of the rational parts (s)
  MultiPoly rational_part() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const QuadElem& c) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  Discriminant disc_;
  std::map<Key, QuadElem> terms_;
};

// f placed in variable slot 1 (x1, y1) or 2 (x2, y2), expanded with the
// triplicate multipliers (1, 3, 3, 1).
MultiPoly form_poly(const CubicForm& f, int slot, const Discriminant& d);
MultiPoly covariant_poly(const CovariantForm& c, int slot, const Discriminant& d);

// X = m1 x1x2 + m2 x1y2 + m3 y1x2 + m4 y1y2 and likewise Y.
struct BilinearMap {
  std::array<Int, 4> m;
  std::array<Int, 4> n;
};

MultiPoly bilinear_poly(const std::array<Int, 4>& coeffs, const Discriminant& d);

// P(X, Y) with the bilinear maps substituted for X and Y.
MultiPoly substitute(const CubicForm& p, const BilinearMap& xy, const Discriminant& d);
MultiPoly substitute(const CovariantForm& p, const BilinearMap& xy, const Discriminant& d);

// Coefficients of p~ = p' + p*tau_D, i.e. c_i + a_i*tau_D.
std::array<QuadElem, 4> tilde(const CubicForm& f);

// The 16-term bi-cubic expansion p1~(x1,y1) * p2~(x2,y2). Its tau_D-part is
// p1'p2 + p1p2' and its rational part is p1'p2' + p1p2*D/4.
MultiPoly tilde_product(const CubicForm& f1, const CubicForm& f2);

struct VerificationReport {
  // P(X,Y) = p1'(x1,y1) p2(x2,y2) + p1(x1,y1) p2'(x2,y2)
  bool composition_identity = false;
  // P'(X,Y) = p1' p2' + p1 p2 D/4
  bool covariant_identity = false;
  bool pass() const { return composition_identity && covariant_identity; }
};

struct CompositionResult {
  CubicForm P;
  BilinearMap xy;
  VerificationReport verification;
};

// The composition law: map both forms to balanced pairs, multiply the ideals,
// read P off the product pair, and verify the defining identity symbolically.
// The returned X, Y come from the canonical basis of J1*J2 and generally
// differ from other valid witnesses; P is unique only up to SL2(Z).
CompositionResult compose(const CubicForm& f1, const CubicForm& f2);

// true iff P(X,Y) = p1'p2 + p1p2' holds symbolically for the given X, Y.
bool verify_composition(const CubicForm& f1, const CubicForm& f2, const CubicForm& p,
                        const BilinearMap& xy);

}  // namespace cubic
