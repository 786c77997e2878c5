#include "cubic/idealmod.hpp"

#include <stdexcept>
#include <utility>

namespace cubic {

namespace {

// coordinates of e over (1, omega): e = x + y*omega with y = 2t, x = s - (D mod 2)*t
std::pair<Rat, Rat> omega_coords(const QuadElem& e) {
  const Rat y = 2 * e.t();
  const Rat x = e.disc().odd() ? Rat(e.s() - e.t()) : e.s();
  return {x, y};
}

QuadElem from_omega_coords(const Rat& x, const Rat& y, const Discriminant& d) {
  const Rat s = d.odd() ? Rat(x + y / 2) : x;
  return QuadElem(s, y / 2, d);
}

bool is_ring_module(const QuadElem& alpha, const QuadElem& beta) {
  const QuadElem w = ring_generator(alpha.disc());
  for (const QuadElem& e : {w * alpha, w * beta}) {
    const Rat det = alpha.s() * beta.t() - beta.s() * alpha.t();
    const Rat m = (e.s() * beta.t() - beta.s() * e.t()) / det;
    const Rat n = (alpha.s() * e.t() - e.s() * alpha.t()) / det;
    if (m.get_den() != 1 || n.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

OrientedIdeal::OrientedIdeal(QuadElem alpha, QuadElem beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.disc() != beta_.disc()) throw std::domain_error("mismatched discriminants");
  if (orientation(alpha_, beta_) == 0)
    throw std::domain_error("basis elements are linearly dependent");
  if (!is_ring_module(alpha_, beta_))
    throw std::domain_error("Z-span of basis is not an R_D-module");
}

bool operator==(const OrientedIdeal& a, const OrientedIdeal& b) {
  return a.alpha() == b.alpha() && a.beta() == b.beta();
}

Rat signed_norm(const OrientedIdeal& ideal) { return orientation(ideal.alpha(), ideal.beta()); }

OrientedIdeal span_ideal(const std::vector<QuadElem>& gens, int orientation_sign) {
  if (gens.empty()) throw std::domain_error("span of no generators");
  const Discriminant d = gens.front().disc();

  // integer coordinate rows over (1, omega): coords = (content/denom) * rows
  Int denom = 1;
  std::vector<std::pair<Rat, Rat>> coords;
  coords.reserve(gens.size());
  for (const QuadElem& g : gens) {
    if (g.disc() != d) throw std::domain_error("mismatched discriminants");
    coords.push_back(omega_coords(g));
    denom = lcm(denom, lcm(coords.back().first.get_den(), coords.back().second.get_den()));
  }
  std::vector<std::pair<Int, Int>> rows;
  Int content = 0;
  for (const auto& [x, y] : coords) {
    Int xi = to_int(x * Rat(denom));
    Int yi = to_int(y * Rat(denom));
    content = gcd(gcd(content, xi), yi);
    rows.emplace_back(std::move(xi), std::move(yi));
  }
  if (content == 0) throw std::domain_error("degenerate span: zero module");
  for (auto& [x, y] : rows) {
    x /= content;
    y /= content;
  }

  // zero out the omega column below one pivot row by unimodular row pairs
  for (;;) {
    std::size_t i = rows.size(), j = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].second != 0) {
        if (i == rows.size()) {
          i = k;
        } else {
          j = k;
          break;
        }
      }
    }
    if (j == rows.size()) break;
    const Int yi = rows[i].second, yj = rows[j].second;
    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), yi.get_mpz_t(), yj.get_mpz_t());
    const Int xi = rows[i].first, xj = rows[j].first;
    rows[i] = {u * xi + v * xj, g};
    rows[j] = {(-yj / g) * xi + (yi / g) * xj, 0};
  }

  Int a = 0, b, c = 0;
  for (const auto& [x, y] : rows) {
    if (y != 0) {
      b = x;
      c = y;
    } else {
      a = gcd(a, x);
    }
  }
  if (a == 0 || c == 0) throw std::domain_error("degenerate span: rank below 2");
  if (c < 0) {
    b = -b;
    c = -c;
  }
  mpz_fdiv_r(b.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());

  const Rat cf = make_rat(content, denom);
  const QuadElem alpha = quad_rat(cf * Rat(a), d);
  QuadElem beta = from_omega_coords(cf * Rat(b), cf * Rat(c), d);
  if (orientation_sign < 0) beta = -beta;
  return OrientedIdeal(alpha, beta);
}

OrientedIdeal hnf(const OrientedIdeal& ideal) {
  const int sign = signed_norm(ideal) > 0 ? 1 : -1;
  return span_ideal({ideal.alpha(), ideal.beta()}, sign);
}

bool same_module(const OrientedIdeal& a, const OrientedIdeal& b) {
  if (a.disc() != b.disc()) return false;
  return span_ideal({a.alpha(), a.beta()}, 1) == span_ideal({b.alpha(), b.beta()}, 1);
}

OrientedIdeal product(const OrientedIdeal& j1, const OrientedIdeal& j2) {
  if (j1.disc() != j2.disc()) throw std::domain_error("mismatched discriminants");
  const int sign = signed_norm(j1) * signed_norm(j2) > 0 ? 1 : -1;
  return span_ideal({j1.alpha() * j2.alpha(), j1.alpha() * j2.beta(), j1.beta() * j2.alpha(),
                     j1.beta() * j2.beta()},
                    sign);
}

OrientedIdeal unit_ideal(const Discriminant& d) {
  return OrientedIdeal(quad_int(1, d), ring_generator(d));
}

std::pair<Rat, Rat> solve_in_basis(const QuadElem& e, const OrientedIdeal& ideal) {
  if (e.disc() != ideal.disc()) throw std::domain_error("mismatched discriminants");
  const QuadElem &a = ideal.alpha(), &b = ideal.beta();
  const Rat det = a.s() * b.t() - b.s() * a.t();
  return {(e.s() * b.t() - b.s() * e.t()) / det, (a.s() * e.t() - e.s() * a.t()) / det};
}

std::pair<Int, Int> express_in_basis(const QuadElem& e, const OrientedIdeal& ideal) {
  const auto [m, n] = solve_in_basis(e, ideal);
  if (m.get_den() != 1 || n.get_den() != 1)
    throw std::domain_error("element is not in the module");
  return {m.get_num(), n.get_num()};
}

PairReport validate_pair(const BalancedPair& pair) {
  PairReport report;
  if (pair.delta.is_zero() || pair.delta.disc() != pair.ideal.disc()) return report;
  const QuadElem dinv = inverse(pair.delta);
  const QuadElem &a = pair.ideal.alpha(), &b = pair.ideal.beta();
  report.cubes_in_ring = is_in_ring(dinv * a * a * a) && is_in_ring(dinv * a * a * b) &&
                         is_in_ring(dinv * a * b * b) && is_in_ring(dinv * b * b * b);
  const Rat sn = signed_norm(pair.ideal);
  report.norm_matches = sn * sn * sn == norm(pair.delta);
  return report;
}

}  // namespace cubic
