#include "cubic/classgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace cubic {

CubicForm identity_form(const Discriminant& d) {
  const Int& dv = d.value();
  CubicForm f;
  if (d.odd())
    f = CubicForm{0, 1, 1, (dv + 3) / 4};
  else
    f = CubicForm{0, 1, 0, dv / 4};
  if (discriminant(f) != dv || !is_projective(f))
    throw std::logic_error("identity form failed self-check");
  return f;
}

namespace {

Int max_abs_coeff(const CubicForm& f) {
  Int m = abs(f.a0);
  m = std::max(m, Int(abs(f.a1)));
  m = std::max(m, Int(abs(f.a2)));
  m = std::max(m, Int(abs(f.a3)));
  return m;
}

struct FormLess {
  bool operator()(const CubicForm& a, const CubicForm& b) const { return a < b; }
};

const Unimodular kShift(1, 1, 0, 1);
const Unimodular kShiftInv(1, -1, 0, 1);
const Unimodular kFlip(0, 1, -1, 0);

}  // namespace

EquivalenceVerdict equivalent(const CubicForm& f, const CubicForm& h, const SearchParams& params) {
  if (discriminant(f) != discriminant(h)) throw std::domain_error("mismatched discriminants");
  EquivalenceVerdict verdict;
  verdict.max_depth = params.max_depth;
  verdict.ceiling = params.ceiling_multiplier * std::max({max_abs_coeff(f), max_abs_coeff(h), Int(1)});
  if (f == h) {
    verdict.witness = Unimodular::identity();
    return verdict;
  }

  struct State {
    CubicForm form;
    Unimodular witness;
    int depth;
  };
  std::map<CubicForm, int, FormLess> seen;
  seen.emplace(f, 0);
  std::deque<State> frontier;
  frontier.push_back({f, Unimodular::identity(), 0});
  while (!frontier.empty()) {
    State cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur.depth >= params.max_depth) continue;
    for (const Unimodular* g : {&kShift, &kShiftInv, &kFlip}) {
      CubicForm next = act(cur.form, *g);
      if (max_abs_coeff(next) > verdict.ceiling) continue;
      if (seen.count(next)) continue;
      Unimodular w = cur.witness * *g;
      if (next == h) {
        if (act(f, w) != h) throw std::logic_error("equivalence witness failed re-check");
        verdict.witness = w;
        return verdict;
      }
      seen.emplace(next, cur.depth + 1);
      frontier.push_back({std::move(next), std::move(w), cur.depth + 1});
    }
  }
  return verdict;
}

std::vector<CubicForm> enumerate_projective(const Discriminant& d, const Int& bound) {
  if (bound < 0) throw std::domain_error("bound must be nonnegative");
  std::vector<CubicForm> out;
  for (Int a0 = -bound; a0 <= bound; ++a0)
    for (Int a1 = -bound; a1 <= bound; ++a1)
      for (Int a2 = -bound; a2 <= bound; ++a2)
        for (Int a3 = -bound; a3 <= bound; ++a3) {
          CubicForm f{a0, a1, a2, a3};
          if (discriminant(f) == d.value() && is_projective(f)) out.push_back(std::move(f));
        }
  return out;
}

namespace {

std::size_t locate_class(const CubicForm& f, const std::vector<CubicForm>& reps,
                         const SearchParams& params, const char* what) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (equivalent(f, reps[i], params).found()) return i;
  throw std::runtime_error(std::string(what) +
                           " not equivalent to any representative; coefficient bound too small");
}

void check_group_axioms(const ClassTable& t) {
  const std::size_t k = t.representatives.size();
  const std::size_t e = t.identity_index;
  for (std::size_t i = 0; i < k; ++i) {
    if (t.table[e][i] != i || t.table[i][e] != i)
      throw std::logic_error("class table: identity axiom failed");
    for (std::size_t j = 0; j < k; ++j) {
      if (t.table[i][j] != t.table[j][i])
        throw std::logic_error("class table: commutativity failed");
      for (std::size_t l = 0; l < k; ++l)
        if (t.table[t.table[i][j]][l] != t.table[i][t.table[j][l]])
          throw std::logic_error("class table: associativity failed");
    }
    if (t.table[t.table[i][i]][i] != e)
      throw std::logic_error("class table: some element does not cube to identity");
  }
}

}  // namespace

ClassTable enumerate_classes(const Discriminant& d, const Int& bound, const SearchParams& params) {
  const std::vector<CubicForm> forms = enumerate_projective(d, bound);
  ClassTable result;
  result.d = d.value();
  for (const CubicForm& f : forms) {
    bool assigned = false;
    for (const CubicForm& rep : result.representatives)
      if (equivalent(rep, f, params).found()) {
        assigned = true;
        break;
      }
    if (!assigned) result.representatives.push_back(f);
  }
  if (result.representatives.empty())
    throw std::runtime_error("no projective forms of this discriminant within the bound");

  result.identity_index =
      locate_class(identity_form(d), result.representatives, params, "identity form");

  const std::size_t k = result.representatives.size();
  result.table.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const CubicForm p = compose(result.representatives[i], result.representatives[j]).P;
      result.table[i][j] = locate_class(p, result.representatives, params, "composition result");
    }
  check_group_axioms(result);
  return result;
}

CubicForm inverse(const CubicForm& f) { return compose(f, f).P; }

}  // namespace cubic
