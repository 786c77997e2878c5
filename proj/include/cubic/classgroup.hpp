#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cubic/composition.hpp"
#include "cubic/cubicform.hpp"

namespace cubic {

struct SearchParams {
  int max_depth = 24;
  // coefficient ceiling = multiplier * max absolute input coefficient
  long ceiling_multiplier = 64;
};

// Outcome of the bounded equivalence search. A present witness g always
// satisfies act(f, g) = h exactly; an absent one means "not found within
// bound", never "inequivalent".
struct EquivalenceVerdict {
  std::optional<Unimodular> witness;
  int max_depth = 0;
  Int ceiling;
  bool found() const { return witness.has_value(); }
};

// The class of the unit pair (R_D, 1): (0,1,0,D/4) for even D,
// (0,1,1,(D+3)/4) for odd D.
CubicForm identity_form(const Discriminant& d);

// Breadth-first search from f over right multiplication by T, T^-1, S with a
// visited set on forms, pruning any form whose max |coefficient| exceeds the
// ceiling. Sound always; complete only within the bound.
EquivalenceVerdict equivalent(const CubicForm& f, const CubicForm& h,
                              const SearchParams& params = {});

// All projective forms of discriminant D with |a_i| <= bound, in
// lexicographic coefficient order.
std::vector<CubicForm> enumerate_projective(const Discriminant& d, const Int& bound);

// Group table of SL2(Z)-classes found within the coefficient bound.
// Representatives are the lexicographically least members of their classes.
struct ClassTable {
  Int d;
  std::vector<CubicForm> representatives;
  std::size_t identity_index = 0;
  // table[i][j] = class index of compose(representatives[i], representatives[j]).P
  std::vector<std::vector<std::size_t>> table;
};

// Enumerate, partition by `equivalent`, compose representatives pairwise, and
// verify the group axioms plus x*x*x = identity. A composition result that
// matches no representative (bound too small) raises an error rather than
// being dropped.
ClassTable enumerate_classes(const Discriminant& d, const Int& bound,
                             const SearchParams& params = {});

// compose(f, f).P; inverse in the class group since every class has order 3.
CubicForm inverse(const CubicForm& f);

}  // namespace cubic
