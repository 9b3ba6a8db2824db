#include "homfree/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "homfree/algebra.hpp"
#include "homfree/enumerate.hpp"
#include "homfree/error.hpp"
#include "homfree/expression.hpp"
#include "homfree/finite.hpp"
#include "homfree/universal.hpp"

namespace homfree {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

struct ExprOptions {
  std::vector<std::string> expr;
  bool echo = false;
  bool generate = false;
};

void add_expr_args(CLI::App* cmd, ExprOptions& o) {
  cmd->add_option("expr", o.expr, "Expression (remaining arguments are joined by spaces)")->required();
  cmd->add_flag("--echo", o.echo, "Print the fully parenthesized parse first");
}

int run_prod(const ExprOptions& o, std::ostream& out) {
  auto e = parse_expression(join(o.expr));
  if (o.echo) out << echo(*e) << '\n';
  if (is_word_expression(*e)) {
    const Word w = eval_word(*e);
    out << render(w) << '\n';
    if (o.generate) out << generating_expression(w) << '\n';
  } else {
    if (o.generate) throw ModeError("--generate needs a word expression");
    out << render(eval_algebra(*e)) << '\n';
  }
  return kOk;
}

int run_alpha(const ExprOptions& o, std::ostream& out) {
  auto e = parse_expression(join(o.expr));
  if (o.echo) out << "A(" << echo(*e) << ")\n";
  if (is_word_expression(*e)) {
    out << render(alpha_word(eval_word(*e))) << '\n';
  } else {
    out << render(alpha_alg(eval_algebra(*e))) << '\n';
  }
  return kOk;
}

int run_expand(const ExprOptions& o, std::ostream& out) {
  auto e = parse_expression(join(o.expr));
  if (o.echo) out << echo(*e) << '\n';
  out << render(eval_algebra(*e)) << '\n';
  return kOk;
}

int run_check(const std::string& file, std::ostream& out) {
  const auto report = classify(load_magma(file));
  out << format_report(report);
  return report.hom_associative() ? kOk : kViolation;
}

struct EvalOptions {
  std::string target;
  std::vector<std::string> maps;
  std::vector<std::string> expr;
};

int run_eval(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& m : o.maps) {
    const auto eq = m.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == m.size())
      throw PreconditionError("--map expects gen=label, got '" + m + "'");
    pairs.emplace_back(m.substr(0, eq), m.substr(eq + 1));
  }
  auto target = load_magma(o.target);
  const auto report = classify(target);
  if (!report.involutive_hom_semigroup()) {
    err << "target is not an involutive Hom-semigroup\n" << format_report(report);
    return kViolation;
  }
  const auto assign = GeneratorAssignment::from_labels(std::move(target), pairs);
  const Word w = eval_word(*parse_expression(join(o.expr)));
  out << assign.target().label(extend(assign, w)) << '\n';
  return kOk;
}

struct EnumOptions {
  std::size_t order = 1;
  std::vector<std::string> filters;
  bool up_to_iso = false;
  std::optional<std::size_t> limit;
};

int run_enum(const EnumOptions& o, std::ostream& out) {
  EnumerateOptions opts;
  opts.order = o.order;
  opts.up_to_iso = o.up_to_iso;
  for (const auto& f : o.filters) {
    if (f == "hom") opts.required |= kHomAssociative;
    else if (f == "sg") opts.required |= kAssociative;
    else if (f == "mult") opts.required |= kMultiplicative;
    else if (f == "inv") opts.required |= kInvolutiveHomSemigroup;
    else throw PreconditionError("unknown filter '" + f + "' (hom, inv, sg, mult)");
  }
  opts.limit = o.limit.value_or(o.filters.empty() ? 0 : 10);
  const auto result = enumerate(opts);
  out << format_census(result.census);
  for (const auto& m : result.structures) out << magma_to_json(m) << '\n';
  return kOk;
}

int run_adjoin_zero(const std::string& file, std::ostream& out, std::ostream& err) {
  const auto m = load_magma(file);
  if (auto w = check_associative(m)) {
    err << "not a semigroup: (ab)c != a(bc) at (" << m.label((*w)[0]) << "," << m.label((*w)[1]) << ","
        << m.label((*w)[2]) << ")\n";
    return kViolation;
  }
  out << magma_to_json(adjoin_zero(m), 2) << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free involutive Hom-semigroups and Hom-associative algebras"};
  app.require_subcommand(1);

  ExprOptions prod_o, alpha_o, expand_o;
  auto* prod = app.add_subcommand("prod", "Evaluate a product expression");
  add_expr_args(prod, prod_o);
  prod->add_flag("--generate", prod_o.generate, "Also print a generating expression for the result");
  auto* alpha = app.add_subcommand("alpha", "Apply alpha to an expression");
  add_expr_args(alpha, alpha_o);
  auto* expand = app.add_subcommand("expand", "Evaluate in the linear span");
  add_expr_args(expand, expand_o);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Report which laws a structure file satisfies");
  check->add_option("file", check_file, "Structure JSON")->required();

  EvalOptions eval_o;
  auto* eval = app.add_subcommand("eval", "Evaluate the universal extension into a target");
  eval->add_option("--target", eval_o.target, "Target structure JSON")->required();
  eval->add_option("--map", eval_o.maps, "gen=label (repeatable)")->take_all();
  eval->add_option("expr", eval_o.expr, "Word expression")->required();

  EnumOptions enum_o;
  auto* enm = app.add_subcommand("enum", "Census of all structures of a given order");
  enm->add_option("--order", enum_o.order, "Order, 1 to 3")->required();
  enm->add_option("--filter", enum_o.filters, "hom, inv, sg or mult (repeatable)");
  enm->add_flag("--up-to-iso", enum_o.up_to_iso, "Also count isomorphism classes");
  enm->add_option("--limit", enum_o.limit, "Maximum matching structures to print");

  std::string adjoin_file;
  auto* adjoin = app.add_subcommand("adjoin-zero", "Adjoin a zero with the constant unary map");
  adjoin->add_option("file", adjoin_file, "Structure JSON with associative product")->required();

  std::string fixture_name;
  auto* fix = app.add_subcommand("fixture", "Print a built-in example structure");
  fix->add_option("name", fixture_name, "hom_not_sg or involutive")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*prod) return run_prod(prod_o, out);
    if (*alpha) return run_alpha(alpha_o, out);
    if (*expand) return run_expand(expand_o, out);
    if (*check) return run_check(check_file, out);
    if (*eval) return run_eval(eval_o, out, err);
    if (*enm) return run_enum(enum_o, out);
    if (*adjoin) return run_adjoin_zero(adjoin_file, out, err);
    if (*fix) {
      out << magma_to_json(fixture(fixture_name), 2) << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace homfree
