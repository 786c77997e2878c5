#pragma once

#include "cubic/cubicform.hpp"
#include "cubic/idealmod.hpp"

namespace cubic {

// f -> (J, delta) with J = Z*alpha + Z*beta, alpha = c1 + a1*tau_D,
// beta = c2 + a2*tau_D, delta = alpha*beta. The basis is taken in this
// order even when its orientation is negative; round-trip exactness is
// the arbiter. Requires f projective of valid discriminant.
BalancedPair form_to_pair(const CubicForm& f);

// (J, delta) -> f, reading a_i from delta^-1 alpha^(3-i) beta^i = c_i + a_i*tau_D.
// The simultaneously read c_i must be half-integers satisfying the ring
// parity rule and must equal covariant(f); violations signal an unbalanced
// pair. No re-orientation happens here; that is the caller's job.
CubicForm pair_to_form(const BalancedPair& pair);

// true iff delta^-1 (alpha x + beta y)^3 = covariant(f) + f*tau_D coefficientwise.
bool lemma_check(const CubicForm& f, const BalancedPair& pair);

}  // namespace cubic
