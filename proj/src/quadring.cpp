#include "cubic/quadring.hpp"

#include <stdexcept>
#include <utility>

namespace cubic {

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num);
  r /= Rat(den);
  return r;
}

Rat half(const Int& num) { return make_rat(num, 2); }

Int to_int(const Rat& q) {
  if (q.get_den() != 1) throw std::domain_error("to_int: not an integer");
  return q.get_num();
}

Discriminant::Discriminant(Int d) : d_(std::move(d)) {
  if (d_ == 0) throw std::domain_error("discriminant must be nonzero");
  unsigned long m = mpz_fdiv_ui(d_.get_mpz_t(), 4);
  if (m != 0 && m != 1)
    throw std::domain_error("discriminant must be 0 or 1 mod 4");
  if (is_perfect_square(d_))
    throw std::domain_error("discriminant must not be a perfect square");
}

QuadElem::QuadElem(Rat s, Rat t, Discriminant disc)
    : s_(std::move(s)), t_(std::move(t)), disc_(std::move(disc)) {}

bool QuadElem::is_zero() const { return s_ == 0 && t_ == 0; }

QuadElem quad_rat(const Rat& s, const Discriminant& d) { return QuadElem(s, Rat(0), d); }

QuadElem quad_int(const Int& n, const Discriminant& d) { return QuadElem(Rat(n), Rat(0), d); }

QuadElem tau(const Discriminant& d) { return QuadElem(Rat(0), half(1), d); }

QuadElem ring_generator(const Discriminant& d) {
  return d.odd() ? QuadElem(half(1), half(1), d) : tau(d);
}

namespace {
void require_same_disc(const QuadElem& a, const QuadElem& b) {
  if (a.disc() != b.disc())
    throw std::domain_error("mismatched discriminants");
}
}  // namespace

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
  require_same_disc(a, b);
  return QuadElem(a.s() + b.s(), a.t() + b.t(), a.disc());
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
  require_same_disc(a, b);
  return QuadElem(a.s() - b.s(), a.t() - b.t(), a.disc());
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
  require_same_disc(a, b);
  const Rat d(a.disc().value());
  return QuadElem(a.s() * b.s() + a.t() * b.t() * d, a.s() * b.t() + a.t() * b.s(), a.disc());
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * inverse(b); }

QuadElem operator-(const QuadElem& a) { return QuadElem(-a.s(), -a.t(), a.disc()); }

bool operator==(const QuadElem& a, const QuadElem& b) {
  return a.disc() == b.disc() && a.s() == b.s() && a.t() == b.t();
}

bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

QuadElem conj(const QuadElem& e) { return QuadElem(e.s(), -e.t(), e.disc()); }

Rat norm(const QuadElem& e) { return e.s() * e.s() - e.t() * e.t() * Rat(e.disc().value()); }

QuadElem inverse(const QuadElem& e) {
  if (e.is_zero()) throw std::domain_error("inversion of zero");
  const Rat n = norm(e);
  return QuadElem(e.s() / n, -e.t() / n, e.disc());
}

bool is_in_ring(const QuadElem& e) {
  const Rat s2 = 2 * e.s();
  const Rat t2 = 2 * e.t();
  if (s2.get_den() != 1 || t2.get_den() != 1) return false;
  const Int r = s2.get_num() - t2.get_num() * e.disc().value();
  return mpz_even_p(r.get_mpz_t()) != 0;
}

Rat orientation(const QuadElem& a, const QuadElem& b) {
  require_same_disc(a, b);
  return 2 * (a.s() * b.t() - b.s() * a.t());
}

}  // namespace cubic
