#include "cubic/io.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace cubic {

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const QuadElem& e) {
  const Rat t = e.t();
  std::string out = e.s().get_str();
  if (t < 0) {
    out += "-" + Rat(-t).get_str();
  } else {
    out += "+" + t.get_str();
  }
  out += "*sqrt(" + e.disc().value().get_str() + ")";
  return out;
}

std::string to_string(const CubicForm& f) {
  return f.a0.get_str() + "," + f.a1.get_str() + "," + f.a2.get_str() + "," + f.a3.get_str();
}

std::string to_string(const CovariantForm& c) {
  return c.c0.get_str() + "," + c.c1.get_str() + "," + c.c2.get_str() + "," + c.c3.get_str();
}

std::string to_string(const HessianQuad& h) {
  return h.q0.get_str() + "," + h.q1.get_str() + "," + h.q2.get_str();
}

std::string to_string(const OrientedIdeal& ideal) {
  return "[" + to_string(ideal.alpha()) + "; " + to_string(ideal.beta()) + "]";
}

std::string to_string(const Unimodular& g) {
  return g.p().get_str() + "," + g.q().get_str() + "," + g.r().get_str() + "," + g.s().get_str();
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string strip(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && (text[a] == ' ' || text[a] == '\t')) ++a;
  while (b > a && (text[b - 1] == ' ' || text[b - 1] == '\t')) --b;
  return std::string(text.substr(a, b - a));
}

}  // namespace

Int parse_int(std::string_view text) {
  const std::string s = strip(text);
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
}

Rat parse_rat(std::string_view text) {
  const std::string s = strip(text);
  Rat q;
  try {
    q = Rat(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

QuadElem parse_quad(std::string_view text, const Discriminant& d) {
  const std::string s = strip(text);
  const std::string marker = "*sqrt(";
  const std::size_t mark = s.find(marker);
  if (mark == std::string::npos) return quad_rat(parse_rat(s), d);  // bare rational
  if (s.empty() || s.back() != ')') throw std::invalid_argument("malformed element: '" + s + "'");
  const Int inside = parse_int(s.substr(mark + marker.size(), s.size() - mark - marker.size() - 1));
  if (inside != d.value())
    throw std::domain_error("element is in sqrt(" + inside.get_str() +
                            ") but the ambient discriminant is " + d.value().get_str());
  // split "s+t" / "s-t" at the sign starting the t term: the last +/- that is
  // not a leading sign and not immediately after '/'
  const std::string head = s.substr(0, mark);
  std::size_t cut = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
        head[i - 1] != '-') {
      cut = i;
      break;
    }
  }
  if (cut == std::string::npos) return QuadElem(Rat(0), parse_rat(head), d);  // "t*sqrt(D)"
  const Rat sp = parse_rat(head.substr(0, cut));
  Rat tp = parse_rat(head.substr(cut + 1));
  if (head[cut] == '-') tp = -tp;
  return QuadElem(sp, tp, d);
}

namespace {

std::array<Int, 4> parse_int4(std::string_view text, const char* what) {
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw std::invalid_argument(std::string(what) + " needs four comma-separated integers");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3])};
}

}  // namespace

std::array<Int, 4> parse_int_quad(std::string_view text) { return parse_int4(text, "quadruple"); }

CubicForm parse_form(std::string_view text) {
  const auto a = parse_int4(text, "form");
  return CubicForm{a[0], a[1], a[2], a[3]};
}

CubicForm parse_form_expanded(std::string_view text) {
  const auto b = parse_int4(text, "form");
  if (!mpz_divisible_ui_p(b[1].get_mpz_t(), 3) || !mpz_divisible_ui_p(b[2].get_mpz_t(), 3))
    throw std::domain_error("expanded middle coefficients must be divisible by 3");
  return CubicForm{b[0], b[1] / 3, b[2] / 3, b[3]};
}

Unimodular parse_unimodular(std::string_view text) {
  const auto m = parse_int4(text, "matrix");
  return Unimodular(m[0], m[1], m[2], m[3]);
}

json int_to_json(const Int& n) {
  if (n.fits_slong_p()) return json(static_cast<long>(n.get_si()));
  return json(n.get_str());
}

json rat_to_json(const Rat& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(q.get_str());
}

json form_to_json(const CubicForm& f) {
  return json{{"a", json::array({int_to_json(f.a0), int_to_json(f.a1), int_to_json(f.a2),
                                 int_to_json(f.a3)})}};
}

json covariant_to_json(const CovariantForm& c) {
  return json{{"c", json::array({rat_to_json(c.c0), rat_to_json(c.c1), rat_to_json(c.c2),
                                 rat_to_json(c.c3)})}};
}

json hessian_to_json(const HessianQuad& h) {
  return json{{"q", json::array({int_to_json(h.q0), int_to_json(h.q1), int_to_json(h.q2)})}};
}

json pair_to_json(const BalancedPair& pair) {
  return json{{"alpha", to_string(pair.ideal.alpha())},
              {"beta", to_string(pair.ideal.beta())},
              {"delta", to_string(pair.delta)}};
}

json composition_to_json(const CompositionResult& result) {
  json x = json::array(), y = json::array();
  for (int i = 0; i < 4; ++i) {
    x.push_back(int_to_json(result.xy.m[i]));
    y.push_back(int_to_json(result.xy.n[i]));
  }
  return json{{"P", form_to_json(result.P)},
              {"X", x},
              {"Y", y},
              {"verified", result.verification.pass()}};
}

json verdict_to_json(const EquivalenceVerdict& verdict) {
  if (verdict.found()) {
    const Unimodular& w = *verdict.witness;
    return json{{"equivalent", true},
                {"witness", json::array({int_to_json(w.p()), int_to_json(w.q()),
                                         int_to_json(w.r()), int_to_json(w.s())})}};
  }
  return json{{"equivalent", false},
              {"depth", verdict.max_depth},
              {"ceiling", int_to_json(verdict.ceiling)}};
}

json table_to_json(const ClassTable& table) {
  json reps = json::array();
  for (const CubicForm& f : table.representatives) reps.push_back(form_to_json(f));
  json rows = json::array();
  for (const auto& row : table.table) {
    json r = json::array();
    for (std::size_t c : row) r.push_back(c);
    rows.push_back(r);
  }
  return json{{"D", int_to_json(table.d)},
              {"reps", reps},
              {"identity", table.identity_index},
              {"table", rows}};
}

}  // namespace cubic
