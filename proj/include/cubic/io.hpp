#pragma once

#include <json.hpp>

#include <array>
#include <string>
#include <string_view>

#include "cubic/classgroup.hpp"
#include "cubic/composition.hpp"
#include "cubic/cubicform.hpp"
#include "cubic/idealmod.hpp"
#include "cubic/quadring.hpp"

// Text and JSON rendering. Conventions:
//   rational    "p/q" (just "p" when q = 1)
//   element     "s+t*sqrt(D)"
//   form        "a0,a1,a2,a3" (triplicate: the polynomial is a0 x^3 + 3a1 x^2 y + ...)
//   matrix      "p,q,r,s"
//   ideal       "[alpha; beta]"
// Parsing throws std::invalid_argument for syntax errors and
// std::domain_error for well-formed but semantically invalid input.

namespace cubic {

using json = nlohmann::json;

std::string to_string(const Rat& q);
std::string to_string(const QuadElem& e);
std::string to_string(const CubicForm& f);
std::string to_string(const CovariantForm& c);
std::string to_string(const HessianQuad& h);
std::string to_string(const OrientedIdeal& ideal);
std::string to_string(const Unimodular& g);

Int parse_int(std::string_view text);
Rat parse_rat(std::string_view text);
std::array<Int, 4> parse_int_quad(std::string_view text);
QuadElem parse_quad(std::string_view text, const Discriminant& d);
CubicForm parse_form(std::string_view text);
// raw polynomial coefficients b0,b1,b2,b3; b1 and b2 must be divisible by 3
CubicForm parse_form_expanded(std::string_view text);
Unimodular parse_unimodular(std::string_view text);

// integers render as JSON numbers when they fit in 64 bits, else as strings
json int_to_json(const Int& n);
json rat_to_json(const Rat& q);
json form_to_json(const CubicForm& f);
json covariant_to_json(const CovariantForm& c);
json hessian_to_json(const HessianQuad& h);
json pair_to_json(const BalancedPair& pair);
json composition_to_json(const CompositionResult& result);
json verdict_to_json(const EquivalenceVerdict& verdict);
json table_to_json(const ClassTable& table);

}  // namespace cubic
