#pragma once

#include <utility>
#include <vector>

#include "cubic/quadring.hpp"

namespace cubic {

// Ordered Z-basis (alpha, beta) of a rank-2 R_D-submodule of Q(sqrt(D)).
// The order carries a sign: orientation(alpha, beta) is the SIGNED norm and
// the balanced condition N(J)^3 = N(delta) is stated for it. Fractional
// ideals are allowed; construction rejects dependent bases and Z-spans that
// are not closed under multiplication by omega.
class OrientedIdeal {
 public:
  OrientedIdeal(QuadElem alpha, QuadElem beta);
  const QuadElem& alpha() const { return alpha_; }
  const QuadElem& beta() const { return beta_; }
  const Discriminant& disc() const { return alpha_.disc(); }

 private:
  QuadElem alpha_, beta_;
};

bool operator==(const OrientedIdeal& a, const OrientedIdeal& b);

// (J, delta) with J^3 in delta*R_D and signed_norm(J)^3 = norm(delta).
struct BalancedPair {
  OrientedIdeal ideal;
  QuadElem delta;
};

struct PairReport {
  bool cubes_in_ring = false;
  bool norm_matches = false;
  bool pass() const { return cubes_in_ring && norm_matches; }
};

// orientation(alpha, beta); +-[R_D : J] for integral J, sign flips on swap.
Rat signed_norm(const OrientedIdeal& ideal);

// Canonical basis of the Z-span of gens, oriented to orientation_sign (+1/-1):
// in coordinates over (1, omega) the basis matrix is (g/l) * [[a, 0], [b, c]]
// with a, c > 0 and 0 <= b < a, second row negated for negative sign.
// Throws if the span has rank < 2.
OrientedIdeal span_ideal(const std::vector<QuadElem>& gens, int orientation_sign);

// Canonical form of the same module, orientation sign preserved; idempotent.
OrientedIdeal hnf(const OrientedIdeal& ideal);

// Equality as Z-modules (orientation ignored), decided via canonical bases.
bool same_module(const OrientedIdeal& a, const OrientedIdeal& b);

// Canonical basis of J1*J2, spanned by the four pairwise products of basis
// elements, oriented so signed_norm(product) = signed_norm(J1)*signed_norm(J2).
OrientedIdeal product(const OrientedIdeal& j1, const OrientedIdeal& j2);

// R_D with its positively oriented basis (1, omega).
OrientedIdeal unit_ideal(const Discriminant& d);

// Exact rational solution of e = m*alpha + n*beta.
std::pair<Rat, Rat> solve_in_basis(const QuadElem& e, const OrientedIdeal& ideal);

// Integer coordinates of e in the basis; throws if e is not in the module.
std::pair<Int, Int> express_in_basis(const QuadElem& e, const OrientedIdeal& ideal);

// Checks the two balanced-pair conditions exactly.
PairReport validate_pair(const BalancedPair& pair);

}  // namespace cubic
