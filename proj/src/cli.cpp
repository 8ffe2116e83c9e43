#include "levelrep/cli.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levelrep/harness.hpp"
#include "levelrep/level.hpp"
#include "levelrep/repr.hpp"
#include "levelrep/rewrite.hpp"
#include "levelrep/surface.hpp"

namespace levelrep {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;
constexpr Nat kUnaryWarnDepth = 64;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Nat parse_nat(const std::string& text) {
  Nat n = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    throw UsageError("expected a natural number, found '" + text + "'");
  return n;
}

std::pair<std::string, Nat> parse_binding(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=NAT, found '" + text + "'");
  return {text.substr(0, eq), parse_nat(text.substr(eq + 1))};
}

rewrite::Strategy parse_strategy(const std::string& text) {
  if (text == "innermost") return rewrite::Strategy::innermost();
  if (text == "outermost") return rewrite::Strategy::outermost();
  if (text == "random") return rewrite::Strategy::random(0);
  if (text.rfind("random:", 0) == 0) return rewrite::Strategy::random(parse_nat(text.substr(7)));
  throw UsageError("unknown strategy '" + text + "' (innermost, outermost, random[:SEED])");
}

struct Args {
  std::string expr;
  std::string expr2;
  bool json = false;
  std::vector<std::string> bindings;
  std::string strategy = "innermost";
  bool trace = false;
  std::uint64_t max_steps = 10'000'000;
  bool paper_literal = false;
  std::size_t cases = 1000;
  std::uint64_t seed = 0;
  std::size_t size = 50;
  std::uint32_t num_vars = 3;
  Nat bound = 0;
  std::uint64_t budget = 1'000'000;
};

int cmd_normalize(const Args& a, std::ostream& out) {
  NameTable names;
  Repr r = normalize(parse_level(a.expr, names));
  out << (a.json ? print_repr_json(r, names) : print_repr(r, names)) << '\n';
  return kTrue;
}

int cmd_compare(const Args& a, bool eq, std::ostream& out) {
  NameTable names;
  Level l = parse_level(a.expr, names);
  Level r = parse_level(a.expr2, names);
  Repr rl = normalize(l);
  Repr rr = normalize(r);
  bool verdict = eq ? eq_repr(rl, rr) : leq_repr(rl, rr);
  out << (verdict ? "true" : "false") << '\n';
  return verdict ? kTrue : kFalse;
}

int cmd_subst(const Args& a, std::ostream& out) {
  NameTable names;
  Repr r = normalize(parse_level(a.expr, names));
  for (const auto& text : a.bindings) {
    auto [name, n] = parse_binding(text);
    r = subst_repr(r, names.intern(name), n);
  }
  out << print_repr(r, names) << '\n';
  return kTrue;
}

int cmd_eval(const Args& a, std::ostream& out) {
  NameTable names;
  Level t = parse_level(a.expr, names);
  Valuation sigma;
  for (const auto& text : a.bindings) {
    auto [name, n] = parse_binding(text);
    sigma.bind(names.intern(name), n);
  }
  try {
    out << eval(t, sigma) << '\n';
  } catch (const UnboundVariable& e) {
    throw UsageError("no value given for variable " + names.name(e.var()));
  }
  return kTrue;
}

int cmd_rewrite(const Args& a, std::ostream& out, std::ostream& err) {
  NameTable names;
  Level t = parse_level(a.expr, names);
  rewrite::Strategy strategy = parse_strategy(a.strategy);
  if (t.succ_depth() > kUnaryWarnDepth)
    err << "warning: successor depth " << t.succ_depth() << " exceeds " << kUnaryWarnDepth
        << "; unary numerals make rewriting slow\n";
  const auto& rules =
      rewrite::builtin_ruleset(a.paper_literal ? rewrite::RuleVariant::PaperLiteral : rewrite::RuleVariant::Corrected);
  rewrite::StepObserver observer;
  if (a.trace) {
    observer = [&out](std::uint64_t step, const rewrite::RewriteRule& rule, const rewrite::Term& whole) {
      out << "step " << step << ": " << rule.to_string() << '\n' << "  " << rewrite::print_term(whole) << '\n';
    };
  }
  auto report = rewrite::reduce(rewrite::encode_level(t), rules, strategy, a.max_steps, observer);
  out << "normal form: " << rewrite::print_term(report.result) << '\n';
  try {
    out << "repr: " << print_repr(rewrite::decode_repr(report.result), names) << '\n';
  } catch (const rewrite::DecodeError&) {
    // not a representation, e.g. under the literal rules
  }
  out << "steps: " << report.steps << '\n';
  if (report.budget_exhausted) {
    err << "step budget of " << a.max_steps << " exhausted\n";
    return kFalse;
  }
  return kTrue;
}

int cmd_export(const Args& a, std::ostream& out) {
  std::optional<Level> query;
  if (!a.expr.empty()) {
    NameTable names;
    query = parse_level(a.expr, names);
  }
  out << export_framework(query);
  return kTrue;
}

int cmd_fuzz(const Args& a, std::ostream& out) {
  harness::FuzzConfig cfg;
  cfg.cases = a.cases;
  cfg.gen.seed = a.seed;
  cfg.gen.max_size = a.size;
  cfg.gen.num_vars = a.num_vars;
  cfg.diff.bound = a.bound;
  cfg.diff.budget = a.budget;
  cfg.diff.seed = a.seed;
  auto report = harness::run_fuzz(cfg);
  out << harness::report_json(report, NameTable::with_default_names(a.num_vars)) << '\n';
  return report.ok() ? kTrue : kInternal;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universe level normalizer and comparator", "levelrep"};
  app.require_subcommand(1);
  Args a;

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the canonical representation");
  normalize_cmd->add_option("EXPR", a.expr)->required();
  normalize_cmd->add_flag("--json", a.json, "JSON output");

  auto* leq_cmd = app.add_subcommand("leq", "Decide E1 <= E2 for all valuations");
  auto* eq_cmd = app.add_subcommand("eq", "Decide E1 = E2 for all valuations");
  for (auto* c : {leq_cmd, eq_cmd}) {
    c->add_option("E1", a.expr)->required();
    c->add_option("E2", a.expr2)->required();
  }

  auto* subst_cmd = app.add_subcommand("subst", "Normalize, then substitute numerals for variables");
  subst_cmd->add_option("EXPR", a.expr)->required();
  subst_cmd->add_option("BINDING", a.bindings, "NAME=NAT");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate under a valuation");
  eval_cmd->add_option("EXPR", a.expr)->required();
  eval_cmd->add_option("--val", a.bindings, "NAME=NAT,...")->delimiter(',');

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Run the rewrite system on the encoded level");
  rewrite_cmd->add_option("EXPR", a.expr)->required();
  rewrite_cmd->add_option("--strategy", a.strategy, "innermost, outermost or random[:SEED]");
  rewrite_cmd->add_flag("--trace", a.trace, "Print every step");
  rewrite_cmd->add_option("--max-steps", a.max_steps, "Step budget");
  rewrite_cmd->add_flag("--paper-literal-rules", a.paper_literal, "Use the rules exactly as originally displayed");

  auto* export_cmd = app.add_subcommand("export", "Print the rule system, optionally with an encoded query");
  export_cmd->add_option("EXPR", a.expr);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the differential harness on random levels");
  fuzz_cmd->add_option("--cases", a.cases, "Number of cases");
  fuzz_cmd->add_option("--seed", a.seed, "Generator seed");
  fuzz_cmd->add_option("--size", a.size, "Maximum node count");
  fuzz_cmd->add_option("--vars", a.num_vars, "Number of variables");
  fuzz_cmd->add_option("--bound", a.bound, "Oracle grid bound (0 picks one per case)");
  fuzz_cmd->add_option("--budget", a.budget, "Rewrite step budget per case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    if (*normalize_cmd) return cmd_normalize(a, out);
    if (*leq_cmd) return cmd_compare(a, false, out);
    if (*eq_cmd) return cmd_compare(a, true, out);
    if (*subst_cmd) return cmd_subst(a, out);
    if (*eval_cmd) return cmd_eval(a, out);
    if (*rewrite_cmd) return cmd_rewrite(a, out, err);
    if (*export_cmd) return cmd_export(a, out);
    if (*fuzz_cmd) return cmd_fuzz(a, out);
  } catch (const SyntaxError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace levelrep
