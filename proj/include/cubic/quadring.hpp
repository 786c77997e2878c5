#pragma once

#include <gmpxx.h>

namespace cubic {

using Int = mpz_class;
using Rat = mpq_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
bool is_perfect_square(const Int& n);

// Exact n/d in lowest terms.
Rat make_rat(const Int& num, const Int& den);

// num/2, the workhorse for half-integer coefficients.
Rat half(const Int& num);

// n/d must be an integer; returns it.
Int to_int(const Rat& q);

// Discriminant of a quadratic order: nonzero, nonsquare, congruent to
// 0 or 1 mod 4. Validated once at construction; every value carrying a
// Discriminant is inside a valid Q(sqrt(D)).
class Discriminant {
 public:
  explicit Discriminant(Int d);
  const Int& value() const { return d_; }
  // true iff D is odd (D = 1 mod 4); then omega = 1/2 + tau_D, else omega = tau_D.
  bool odd() const { return mpz_odd_p(d_.get_mpz_t()) != 0; }
  friend bool operator==(const Discriminant& a, const Discriminant& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Discriminant& a, const Discriminant& b) { return a.d_ != b.d_; }

 private:
  Int d_;
};

// Element s + t*sqrt(D) of Q(sqrt(D)) with exact rational coordinates.
//
// Coordinates are kept in the (1, sqrt(D)) basis, not (1, omega): ring
// elements c + a*tau_D appear as (s, t) = (c, a/2), and conj/norm/orientation
// are branch-free in both parity cases of D.
class QuadElem {
 public:
  QuadElem(Rat s, Rat t, Discriminant disc);
  const Rat& s() const { return s_; }
  const Rat& t() const { return t_; }
  const Discriminant& disc() const { return disc_; }
  bool is_zero() const;

 private:
  Rat s_, t_;
  Discriminant disc_;
};

QuadElem quad_rat(const Rat& s, const Discriminant& d);
QuadElem quad_int(const Int& n, const Discriminant& d);
// tau_D = sqrt(D)/2
QuadElem tau(const Discriminant& d);
// omega, the ring generator: R_D = Z + Z*omega
QuadElem ring_generator(const Discriminant& d);

QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem operator*(const QuadElem& a, const QuadElem& b);
QuadElem operator/(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a);
bool operator==(const QuadElem& a, const QuadElem& b);
bool operator!=(const QuadElem& a, const QuadElem& b);

QuadElem conj(const QuadElem& e);
// s^2 - t^2*D; multiplicative, nonzero for e != 0 since D is nonsquare.
Rat norm(const QuadElem& e);
QuadElem inverse(const QuadElem& e);
// Membership in R_D = Z + Z*omega: 2s and 2t integers with 2s = 2tD (mod 2).
bool is_in_ring(const QuadElem& e);
// The orientation functional (conj(a)*b - conj(b)*a)/sqrt(D) = 2(s_a t_b - s_b t_a).
// Antisymmetric and Q-bilinear; orientation(e*a, e*b) = norm(e)*orientation(a, b).
Rat orientation(const QuadElem& a, const QuadElem& b);

}  // namespace cubic
