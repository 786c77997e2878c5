// Command-line frontend for exact composition of binary cubic forms.
//
// Forms are entered in the triplicate convention "a0,a1,a2,a3", meaning
// a0 x^3 + 3*a1 x^2 y + 3*a2 x y^2 + a3 y^3. Pass --expanded to enter raw
// polynomial coefficients instead (the middle two must be divisible by 3).
//
// Exit codes: 0 success, 1 domain error (invalid discriminant, non-projective
// input, unbalanced pair, ...), 2 usage error (malformed arguments).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "cubic/bijection.hpp"
#include "cubic/classgroup.hpp"
#include "cubic/composition.hpp"
#include "cubic/io.hpp"

namespace {

using namespace cubic;

struct Options {
  bool json_out = false;
  bool expanded = false;
  std::string disc_text;
  std::optional<int> depth;
};

CubicForm read_form(const std::string& text, const Options& opt) {
  return opt.expanded ? parse_form_expanded(text) : parse_form(text);
}

Discriminant read_disc(const Options& opt) { return Discriminant(parse_int(opt.disc_text)); }

// checks the validity conditions one by one so the message names the violated one
void require_form_disc(const CubicForm& f, const Discriminant& d) {
  if (discriminant(f) != d.value())
    throw std::domain_error("form has discriminant " + discriminant(f).get_str() +
                            ", expected " + d.value().get_str());
}

SearchParams search_params(const Options& opt) {
  SearchParams params;
  if (const char* env = std::getenv("CUBIC_EQUIV_MAX_DEPTH")) params.max_depth = std::atoi(env);
  if (opt.depth) params.max_depth = *opt.depth;
  return params;
}

void emit(const json& j, const std::string& text, const Options& opt) {
  if (opt.json_out)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gauss-style composition of projective binary cubic forms"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json_out, "emit JSON instead of text");
  app.add_flag("--expanded", opt.expanded,
               "read forms as raw polynomial coefficients b0,b1,b2,b3");

  std::string form_text, form2_text, p_text, matrix_text;
  std::string alpha_text, beta_text, delta_text, x_text, y_text;
  std::string bound_text = "8";
  int depth_flag = 0;

  auto* disc_cmd = app.add_subcommand("disc", "discriminant of a form");
  disc_cmd->add_option("form", form_text)->required();

  auto* hess_cmd = app.add_subcommand("hessian", "Hessian quadratic of a form");
  hess_cmd->add_option("form", form_text)->required();

  auto* cov_cmd = app.add_subcommand("covariant", "the covariant cubic p'");
  cov_cmd->add_option("form", form_text)->required();

  auto* proj_cmd = app.add_subcommand("projective", "is the Hessian primitive");
  proj_cmd->add_option("form", form_text)->required();

  auto* act_cmd = app.add_subcommand("act", "apply an SL2(Z) substitution");
  act_cmd->add_option("form", form_text)->required();
  act_cmd->add_option("matrix", matrix_text)->required();

  auto* topair_cmd = app.add_subcommand("topair", "balanced pair of a projective form");
  topair_cmd->add_option("--disc", opt.disc_text)->required();
  topair_cmd->add_option("form", form_text)->required();

  auto* toform_cmd = app.add_subcommand("toform", "form of a balanced pair");
  toform_cmd->add_option("--disc", opt.disc_text)->required();
  toform_cmd->add_option("--alpha", alpha_text)->required();
  toform_cmd->add_option("--beta", beta_text)->required();
  toform_cmd->add_option("--delta", delta_text)->required();

  auto* compose_cmd = app.add_subcommand("compose", "compose two projective forms");
  compose_cmd->add_option("--disc", opt.disc_text)->required();
  compose_cmd->add_option("f1", form_text)->required();
  compose_cmd->add_option("f2", form2_text)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check P(X,Y) = p1'p2 + p1p2'");
  verify_cmd->add_option("--disc", opt.disc_text)->required();
  verify_cmd->add_option("f1", form_text)->required();
  verify_cmd->add_option("f2", form2_text)->required();
  verify_cmd->add_option("P", p_text)->required();
  verify_cmd->add_option("--X", x_text)->required();
  verify_cmd->add_option("--Y", y_text)->required();

  auto* id_cmd = app.add_subcommand("identity", "form of the trivial class");
  id_cmd->add_option("--disc", opt.disc_text)->required();

  auto* equiv_cmd = app.add_subcommand("equivalent", "bounded SL2(Z)-equivalence search");
  equiv_cmd->add_option("--disc", opt.disc_text)->required();
  equiv_cmd->add_option("f1", form_text)->required();
  equiv_cmd->add_option("f2", form2_text)->required();
  auto* depth_opt = equiv_cmd->add_option("--depth", depth_flag, "search depth");

  auto* classes_cmd = app.add_subcommand("classes", "class table at a discriminant");
  classes_cmd->add_option("--disc", opt.disc_text)->required();
  classes_cmd->add_option("--bound", bound_text, "coefficient bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }
  if (depth_opt->count() > 0) opt.depth = depth_flag;

  try {
    if (*disc_cmd) {
      const CubicForm f = read_form(form_text, opt);
      emit(json{{"discriminant", int_to_json(discriminant(f))}}, discriminant(f).get_str(), opt);
    } else if (*hess_cmd) {
      const CubicForm f = read_form(form_text, opt);
      emit(hessian_to_json(hessian(f)), to_string(hessian(f)), opt);
    } else if (*cov_cmd) {
      const CubicForm f = read_form(form_text, opt);
      emit(covariant_to_json(covariant(f)), to_string(covariant(f)), opt);
    } else if (*proj_cmd) {
      const CubicForm f = read_form(form_text, opt);
      const bool p = is_projective(f);
      emit(json{{"projective", p}}, p ? "true" : "false", opt);
    } else if (*act_cmd) {
      const CubicForm f = read_form(form_text, opt);
      const CubicForm out = act(f, parse_unimodular(matrix_text));
      emit(form_to_json(out), to_string(out), opt);
    } else if (*topair_cmd) {
      const Discriminant d = read_disc(opt);
      const CubicForm f = read_form(form_text, opt);
      require_form_disc(f, d);
      const BalancedPair pair = form_to_pair(f);
      emit(pair_to_json(pair),
           "J = " + to_string(pair.ideal) + "\ndelta = " + to_string(pair.delta), opt);
    } else if (*toform_cmd) {
      const Discriminant d = read_disc(opt);
      const QuadElem alpha = parse_quad(alpha_text, d);
      const QuadElem beta = parse_quad(beta_text, d);
      const QuadElem delta = parse_quad(delta_text, d);
      const BalancedPair pair{OrientedIdeal(alpha, beta), delta};
      const PairReport report = validate_pair(pair);
      if (!report.pass())
        throw std::domain_error(std::string("pair is not balanced: ") +
                                (!report.cubes_in_ring ? "J^3 leaves delta*R_D"
                                                       : "signed_norm(J)^3 != norm(delta)"));
      const CubicForm f = pair_to_form(pair);
      emit(form_to_json(f), to_string(f), opt);
    } else if (*compose_cmd) {
      const Discriminant d = read_disc(opt);
      const CubicForm f1 = read_form(form_text, opt);
      const CubicForm f2 = read_form(form2_text, opt);
      require_form_disc(f1, d);
      require_form_disc(f2, d);
      const CompositionResult result = compose(f1, f2);
      auto quad_text = [](const std::array<Int, 4>& v) {
        return v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + "," +
               v[3].get_str();
      };
      emit(composition_to_json(result),
           "P = " + to_string(result.P) + "\nX = " + quad_text(result.xy.m) +
               "\nY = " + quad_text(result.xy.n) + "\nverified = true",
           opt);
    } else if (*verify_cmd) {
      const Discriminant d = read_disc(opt);
      const CubicForm f1 = read_form(form_text, opt);
      const CubicForm f2 = read_form(form2_text, opt);
      const CubicForm p = read_form(p_text, opt);
      require_form_disc(f1, d);
      require_form_disc(f2, d);
      require_form_disc(p, d);
      const BilinearMap xy{parse_int_quad(x_text), parse_int_quad(y_text)};
      const bool ok = verify_composition(f1, f2, p, xy);
      emit(json{{"verified", ok}}, ok ? "true" : "false", opt);
    } else if (*id_cmd) {
      const CubicForm f = identity_form(read_disc(opt));
      emit(form_to_json(f), to_string(f), opt);
    } else if (*equiv_cmd) {
      const Discriminant d = read_disc(opt);
      const CubicForm f1 = read_form(form_text, opt);
      const CubicForm f2 = read_form(form2_text, opt);
      require_form_disc(f1, d);
      require_form_disc(f2, d);
      const EquivalenceVerdict verdict = equivalent(f1, f2, search_params(opt));
      emit(verdict_to_json(verdict),
           verdict.found() ? "equivalent " + to_string(*verdict.witness)
                           : "not-found-within-bound depth=" + std::to_string(verdict.max_depth) +
                                 " ceiling=" + verdict.ceiling.get_str(),
           opt);
    } else if (*classes_cmd) {
      const Discriminant d = read_disc(opt);
      const ClassTable table = enumerate_classes(d, parse_int(bound_text), search_params(opt));
      std::string text = "classes: " + std::to_string(table.representatives.size());
      for (std::size_t i = 0; i < table.representatives.size(); ++i)
        text += "\nrep " + std::to_string(i) + ": " + to_string(table.representatives[i]) +
                (i == table.identity_index ? " (identity)" : "");
      for (const auto& row : table.table) {
        text += "\n";
        for (std::size_t c : row) text += std::to_string(c) + " ";
        text.pop_back();
      }
      emit(table_to_json(table), text, opt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
