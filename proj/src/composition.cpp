#include "cubic/composition.hpp"

#include <stdexcept>
#include <vector>

namespace cubic {

void MultiPoly::add_term(const Key& key, const QuadElem& coefficient) {
  if (coefficient.disc() != disc_) throw std::domain_error("mismatched discriminants");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!coefficient.is_zero()) terms_.emplace(key, coefficient);
    return;
  }
  const QuadElem sum = it->second + coefficient;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

QuadElem MultiPoly::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? quad_int(0, disc_) : it->second;
}

MultiPoly MultiPoly::tau_part() const {
  MultiPoly out(disc_);
  for (const auto& [key, value] : terms_) out.add_term(key, quad_rat(2 * value.t(), disc_));
  return out;
}

MultiPoly MultiPoly::rational_part() const {
  MultiPoly out(disc_);
  for (const auto& [key, value] : terms_) out.add_term(key, quad_rat(value.s(), disc_));
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.disc_ != b.disc_) throw std::domain_error("mismatched discriminants");
  MultiPoly out = a;
  for (const auto& [key, value] : b.terms_) out.add_term(key, value);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.disc_ != b.disc_) throw std::domain_error("mismatched discriminants");
  MultiPoly out(a.disc_);
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_)
      out.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]}, va * vb);
  return out;
}

MultiPoly MultiPoly::scaled(const QuadElem& c) const {
  MultiPoly out(disc_);
  for (const auto& [key, value] : terms_) out.add_term(key, value * c);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.disc_ == b.disc_ && a.terms_ == b.terms_;
}

namespace {

MultiPoly::Key slot_key(int slot, int i) {
  if (slot == 1) return {3 - i, i, 0, 0};
  if (slot == 2) return {0, 0, 3 - i, i};
  throw std::domain_error("slot must be 1 or 2");
}

const int kTriplicate[4] = {1, 3, 3, 1};

}  // namespace

MultiPoly form_poly(const CubicForm& f, int slot, const Discriminant& d) {
  MultiPoly out(d);
  const Int a[4] = {f.a0, f.a1, f.a2, f.a3};
  for (int i = 0; i < 4; ++i) out.add_term(slot_key(slot, i), quad_rat(Rat(a[i] * kTriplicate[i]), d));
  return out;
}

MultiPoly covariant_poly(const CovariantForm& c, int slot, const Discriminant& d) {
  MultiPoly out(d);
  const Rat cs[4] = {c.c0, c.c1, c.c2, c.c3};
  for (int i = 0; i < 4; ++i) out.add_term(slot_key(slot, i), quad_rat(cs[i] * kTriplicate[i], d));
  return out;
}

MultiPoly bilinear_poly(const std::array<Int, 4>& coeffs, const Discriminant& d) {
  static const MultiPoly::Key keys[4] = {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
  MultiPoly out(d);
  for (int i = 0; i < 4; ++i) out.add_term(keys[i], quad_rat(Rat(coeffs[i]), d));
  return out;
}

namespace {

MultiPoly one_poly(const Discriminant& d) {
  MultiPoly out(d);
  out.add_term({0, 0, 0, 0}, quad_int(1, d));
  return out;
}

// sum_i w_i * X^(3-i) * Y^i for weights already in triplicate expansion
MultiPoly weighted_substitution(const std::array<Rat, 4>& weights, const BilinearMap& xy,
                                const Discriminant& d) {
  const MultiPoly x = bilinear_poly(xy.m, d);
  const MultiPoly y = bilinear_poly(xy.n, d);
  MultiPoly out(d);
  for (int i = 0; i < 4; ++i) {
    MultiPoly term = one_poly(d);
    for (int k = 0; k < 3 - i; ++k) term = term * x;
    for (int k = 0; k < i; ++k) term = term * y;
    out = out + term.scaled(quad_rat(weights[i] * kTriplicate[i], d));
  }
  return out;
}

}  // namespace

MultiPoly substitute(const CubicForm& p, const BilinearMap& xy, const Discriminant& d) {
  return weighted_substitution({Rat(p.a0), Rat(p.a1), Rat(p.a2), Rat(p.a3)}, xy, d);
}

MultiPoly substitute(const CovariantForm& p, const BilinearMap& xy, const Discriminant& d) {
  return weighted_substitution({p.c0, p.c1, p.c2, p.c3}, xy, d);
}

std::array<QuadElem, 4> tilde(const CubicForm& f) {
  const Discriminant d(discriminant(f));
  const CovariantForm c = covariant(f);
  return {QuadElem(c.c0, half(f.a0), d), QuadElem(c.c1, half(f.a1), d),
          QuadElem(c.c2, half(f.a2), d), QuadElem(c.c3, half(f.a3), d)};
}

MultiPoly tilde_product(const CubicForm& f1, const CubicForm& f2) {
  const Int d1 = discriminant(f1);
  if (d1 != discriminant(f2)) throw std::domain_error("mismatched discriminants");
  const Discriminant d(d1);
  const std::array<QuadElem, 4> t1 = tilde(f1), t2 = tilde(f2);
  MultiPoly p1(d), p2(d);
  for (int i = 0; i < 4; ++i) {
    p1.add_term(slot_key(1, i), t1[i] * quad_int(kTriplicate[i], d));
    p2.add_term(slot_key(2, i), t2[i] * quad_int(kTriplicate[i], d));
  }
  return p1 * p2;
}

namespace {

// p1' p2 + p1 p2' as a rational-coefficient MultiPoly
MultiPoly composition_rhs(const CubicForm& f1, const CubicForm& f2, const Discriminant& d) {
  return covariant_poly(covariant(f1), 1, d) * form_poly(f2, 2, d) +
         form_poly(f1, 1, d) * covariant_poly(covariant(f2), 2, d);
}

// p1' p2' + p1 p2 D/4
MultiPoly covariant_rhs(const CubicForm& f1, const CubicForm& f2, const Discriminant& d) {
  const Rat d4 = make_rat(d.value(), 4);
  return covariant_poly(covariant(f1), 1, d) * covariant_poly(covariant(f2), 2, d) +
         (form_poly(f1, 1, d) * form_poly(f2, 2, d)).scaled(quad_rat(d4, d));
}

}  // namespace

CompositionResult compose(const CubicForm& f1, const CubicForm& f2) {
  const Int dv = discriminant(f1);
  if (dv != discriminant(f2)) throw std::domain_error("mismatched discriminants");
  const Discriminant d(dv);

  const BalancedPair p1 = form_to_pair(f1);
  const BalancedPair p2 = form_to_pair(f2);
  const int sign = signed_norm(p1.ideal) * signed_norm(p2.ideal) > 0 ? 1 : -1;
  const std::vector<QuadElem> gens = {
      p1.ideal.alpha() * p2.ideal.alpha(), p1.ideal.alpha() * p2.ideal.beta(),
      p1.ideal.beta() * p2.ideal.alpha(), p1.ideal.beta() * p2.ideal.beta()};
  const OrientedIdeal j = span_ideal(gens, sign);

  BilinearMap xy;
  for (int i = 0; i < 4; ++i) {
    const auto [m, n] = express_in_basis(gens[i], j);
    xy.m[i] = m;
    xy.n[i] = n;
  }

  const BalancedPair prod{j, p1.delta * p2.delta};
  const CubicForm p = pair_to_form(prod);

  VerificationReport report;
  report.composition_identity = substitute(p, xy, d) == composition_rhs(f1, f2, d);
  report.covariant_identity = substitute(covariant(p), xy, d) == covariant_rhs(f1, f2, d);
  if (!report.pass()) throw std::logic_error("composition failed symbolic verification");
  if (discriminant(p) != dv || !is_projective(p))
    throw std::logic_error("composition produced an invalid form");
  return CompositionResult{p, xy, report};
}

bool verify_composition(const CubicForm& f1, const CubicForm& f2, const CubicForm& p,
                        const BilinearMap& xy) {
  const Int dv = discriminant(f1);
  if (dv != discriminant(f2) || dv != discriminant(p))
    throw std::domain_error("mismatched discriminants");
  const Discriminant d(dv);
  if (!is_projective(p)) throw std::domain_error("composition candidate is not projective");
  return substitute(p, xy, d) == composition_rhs(f1, f2, d);
}

}  // namespace cubic
