#include <array>
#include <sstream>

#include "levelrep/rewrite.hpp"

namespace levelrep::rewrite {

Term parse_side(std::string_view text, std::vector<std::string>& names, bool allow_new_vars);

RewriteRule RewriteRule::parse(std::string_view line) {
  auto arrow = line.find("-->");
  if (arrow == std::string_view::npos) throw ParseError("missing '-->' in rule '" + std::string(line) + "'");
  std::vector<std::string> names;
  Term lhs = parse_side(line.substr(0, arrow), names, true);
  if (lhs.is_var()) throw ParseError("rule lhs is a variable: '" + std::string(line) + "'");
  Term rhs = parse_side(line.substr(arrow + 3), names, false);
  return RewriteRule(std::move(lhs), std::move(rhs), std::move(names));
}

std::string RewriteRule::to_string() const {
  return print_term(lhs_, var_names_) + " --> " + print_term(rhs_, var_names_);
}

namespace {

bool match_into(const Term& p, const Term& t, Binding& b) {
  if (p.is_var()) {
    auto& slot = b[p.var_index()];
    if (!slot) {
      slot = t;
      return true;
    }
    return *slot == t;
  }
  if (t.is_var() || p.head() != t.head()) return false;
  for (std::size_t i = 0; i < p.args().size(); ++i)
    if (!match_into(p.arg(i), t.arg(i), b)) return false;
  return true;
}

}  // namespace

std::optional<Binding> match(const Term& pattern, const Term& term, std::size_t num_vars) {
  Binding b(num_vars);
  if (!match_into(pattern, term, b)) return std::nullopt;
  return b;
}

std::optional<Binding> match(const Pattern& pattern, const Term& term) {
  return match(pattern.term, term, pattern.var_names.size());
}

Term instantiate(const Term& tmpl, const Binding& binding) {
  if (tmpl.is_var()) {
    const auto& v = binding.at(tmpl.var_index());
    if (!v) throw std::logic_error("instantiate: unbound pattern variable");
    return *v;
  }
  if (tmpl.args().empty()) return tmpl;
  std::vector<Term> args;
  args.reserve(tmpl.args().size());
  for (const auto& a : tmpl.args()) args.push_back(instantiate(a, binding));
  return Term::app(tmpl.head(), std::move(args));
}

namespace {
std::atomic<std::uint32_t> next_ruleset_id{1};
}  // namespace

RuleSet::RuleSet(std::vector<RewriteRule> rules)
    : rules_(std::move(rules)),
      by_head_(static_cast<std::size_t>(Sym::Count_)),
      id_(next_ruleset_id.fetch_add(1, std::memory_order_relaxed)) {
  for (std::size_t i = 0; i < rules_.size(); ++i)
    by_head_[static_cast<std::size_t>(rules_[i].lhs().head())].push_back(i);
}

std::optional<std::pair<std::size_t, Binding>> RuleSet::find_redex(const Term& t) const {
  if (t.is_var()) return std::nullopt;
  for (std::size_t i : by_head_[static_cast<std::size_t>(t.head())]) {
    if (auto b = match(rules_[i].lhs(), t, rules_[i].num_vars())) return std::pair{i, std::move(*b)};
  }
  return std::nullopt;
}

std::string dump_rules(const RuleSet& rules) {
  std::string out;
  for (const auto& r : rules.rules()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

namespace {

// Booleans, naturals, element order and sorted-list sets.
constexpr std::array kBasicRules = {
    "and true $B --> $B",
    "and false $B --> false",
    "or true $B --> true",
    "or false $B --> $B",
    "not true --> false",
    "not false --> true",
    "ite true $U $V --> $U",
    "ite false $U $V --> $V",

    "plus $X zeroN --> $X",
    "plus $X (succN $Y) --> succN (plus $X $Y)",
    "maxN zeroN $Y --> $Y",
    "maxN (succN $X) zeroN --> succN $X",
    "maxN (succN $X) (succN $Y) --> succN (maxN $X $Y)",
    "leqN zeroN $Y --> true",
    "leqN (succN $X) zeroN --> false",
    "leqN (succN $X) (succN $Y) --> leqN $X $Y",
    "eqN zeroN zeroN --> true",
    "eqN zeroN (succN $Y) --> false",
    "eqN (succN $X) zeroN --> false",
    "eqN (succN $X) (succN $Y) --> eqN $X $Y",
    "ltN $X $Y --> leqN (succN $X) $Y",

    "leqE zeroN $Y --> leqN zeroN $Y",
    "leqE (succN $X) $Y --> leqN (succN $X) $Y",
    "leqE (As $E $X $S) $V --> ordSL (As $E $X $S) $V",
    "leqE (Bs $E $S) $V --> ordSL (Bs $E $S) $V",
    "eqE $X $Y --> and (leqE $X $Y) (leqE $Y $X)",
    "ltE $X $Y --> not (leqE $Y $X)",

    "add nil $X --> cons $X nil",
    "add (cons $Y $Q) $X --> ite (leqE $X $Y) (ite (leqE $Y $X) (cons $Y $Q) (cons $X (cons $Y $Q))) "
    "(cons $Y (add $Q $X))",
    "union $E nil --> $E",
    "union $E (cons $X $Q) --> union (add $E $X) $Q",
    "mem $X nil --> false",
    "mem $X (cons $Y $Q) --> or (eqE $X $Y) (mem $X $Q)",
    "subset nil $E --> true",
    "subset (cons $X $Q) $E --> and (mem $X $E) (subset $Q $E)",
    "eqSet nil nil --> true",
    "eqSet nil (cons $Y $Q) --> false",
    "eqSet (cons $X $P) nil --> false",
    "eqSet (cons $X $P) (cons $Y $Q) --> and (eqE $X $Y) (eqSet $P $Q)",
    "ordSet nil $F --> true",
    "ordSet (cons $X $P) nil --> false",
    "ordSet (cons $X $P) (cons $Y $Q) --> or (ltE $X $Y) (and (eqE $X $Y) (ordSet $P $Q))",
    "ltSet $E $F --> not (ordSet $F $E)",
    "del nil $X --> nil",
    "del (cons $Y $Q) $X --> ite (eqE $X $Y) $Q (cons $Y (del $Q $X))",
};

// Sublevel order and comparison.
constexpr std::array kSublevelRules = {
    "ordSL (As $E $X $S) (Bs $F $K) --> true",
    "ordSL (As $E $X $S) (As $F $Y $K) --> or (ltSet $E $F) (and (eqSet $E $F) (or (ltN $X $Y) "
    "(and (eqN $X $Y) (leqN $S $K))))",
    "ordSL (Bs $E $S) (Bs $F $K) --> or (ltSet $E $F) (and (eqSet $E $F) (leqN $S $K))",
    "ordSL (Bs $E $S) (As $F $Y $K) --> false",

    "leqSL (As $E $X $S) (Bs $F $K) --> false",
    "leqSL (Bs $E $S) (Bs $F $K) --> and (subset $F $E) (leqN $S $K)",
    "leqSL (Bs $E (succN $S)) (As $F $Y $K) --> and (subset $F $E) (leqN $S $K)",
    "leqSL (As $E $X $S) (As $F $Y $K) --> and (subset $F $E) (and (eqN $X $Y) (leqN $S $K))",
};

constexpr const char* kZeroRule = "zeroL --> maxS nil";
constexpr const char* kVarRule = "varL $X --> maxS (add nil (As (add nil $X) $X zeroN))";
constexpr const char* kVarRuleLiteral = "varL $X --> maxS (add nil (As (add nil $X) zeroN $X))";

constexpr std::array kSuccRules = {
    "succSL nil --> nil",
    "succSL (cons (Bs $E $S) $Q) --> add (succSL $Q) (Bs $E (succN $S))",
    "succSL (cons (As $E $X $S) $Q) --> add (succSL $Q) (As $E $X (succN $S))",
    "succL (maxS nil) --> maxS (add nil (Bs nil (succN zeroN)))",
};

// A shifted atom is still 0 when one of its set members is, so s(t) >= 1
// has to be added explicitly.
constexpr const char* kSuccNonEmpty =
    "succL (maxS (cons $U $Q)) --> maxS (maxHelper (succSL (cons $U $Q)) (Bs nil (succN zeroN)))";
constexpr const char* kSuccNonEmptyLiteral = "succL (maxS (cons $U $Q)) --> maxS (succSL (cons $U $Q))";

constexpr const char* kMaxHelperBase = "maxHelper nil $U --> add nil $U";
// Dominated atoms of the set are dropped and the scan continues; the single
// recursive call keeps innermost evaluation linear.
constexpr std::array kMaxHelperStep = {
    "maxHelper (cons $U $E) $V --> ite (leqSL $V $U) (add $E $U) "
    "(condAdd (not (leqSL $U $V)) (maxHelper $E $V) $U)",
    "condAdd true $Q $U --> add $Q $U",
    "condAdd false $Q $U --> $Q",
};
constexpr std::array kMaxHelperStepLiteral = {
    "maxHelper (cons $U $E) $V --> ite (leqSL $V $U) (add $E $U) "
    "(ite (leqSL $U $V) (add $E $V) (add (maxHelper $E $V) $U))",
    "condAdd true $Q $U --> add $Q $U",
    "condAdd false $Q $U --> $Q",
};

constexpr std::array kMaxRules = {
    "maxL (maxS $E) (maxS nil) --> maxS $E",
    "maxL (maxS $E) (maxS (cons $U $F)) --> maxL (maxS (maxHelper $E $U)) (maxS $F)",
};

constexpr std::array kImaxRules = {
    "ruleSL (As $E $X $S) (Bs $F $K) --> maxL (maxS (add nil (As (union $E $F) $X $S))) "
    "(maxS (add nil (Bs $F $K)))",
    "ruleSL (Bs $E $S) (Bs $F $K) --> maxL (maxS (add nil (Bs (union $E $F) $S))) "
    "(maxS (add nil (Bs $F $K)))",
    "ruleSL (Bs $E $S) (As $F $X $K) --> maxL (maxS (add nil (Bs (union $E $F) $S))) "
    "(maxS (add nil (As $F $X $K)))",
    "ruleSL (As $E $X $S) (As $F $Y $K) --> maxL (maxS (add nil (As (union $E $F) $X $S))) "
    "(maxS (add nil (As $F $Y $K)))",
    "ruleL (maxS nil) $T --> $T",
    "ruleL (maxS (cons $U $Q)) $T --> maxL (ruleHelper $U $T) (ruleL (maxS $Q) $T)",
    "ruleHelper $U (maxS nil) --> maxS nil",
    "ruleHelper $U (maxS (cons $V $Q)) --> maxL (ruleSL $U $V) (ruleHelper $U (maxS $Q))",
};

constexpr const char* kEvalSB =
    "evalS (Bs $E $S) $Y $N --> ite (and (mem $Y $E) (eqN $N zeroN)) (maxS nil) "
    "(maxS (add nil (Bs (del $E $Y) $S)))";
constexpr const char* kEvalSA =
    "evalS (As $E $X $S) $Y $N --> ite (and (mem $Y $E) (eqN $N zeroN)) (maxS nil) "
    "(ite (eqN $X $Y) (maxS (add nil (Bs (del $E $Y) (plus $S $N)))) "
    "(maxS (add nil (As (del $E $Y) $X $S))))";
constexpr const char* kEvalSALiteral =
    "evalS (As $E $X $S) $Y $N --> ite (and (mem $Y $E) (eqN $N zeroN)) (maxS nil) "
    "(ite (eqN $X $Y) (maxS (add nil (Bs nil (plus $S $N)))) "
    "(maxS (add nil (As (del $E $Y) $X $S))))";

constexpr std::array kEvalLRules = {
    "evalL (maxS nil) $Y $N --> maxS nil",
    "evalL (maxS (cons $U $Q)) $Y $N --> maxL (evalS $U $Y $N) (evalL (maxS $Q) $Y $N)",
};

RuleSet make_ruleset(RuleVariant variant) {
  const bool literal = variant == RuleVariant::PaperLiteral;
  std::vector<RewriteRule> rules;
  auto add = [&](const char* text) { rules.push_back(RewriteRule::parse(text)); };
  auto add_all = [&](const auto& group) {
    for (const char* text : group) add(text);
  };
  add_all(kBasicRules);
  add_all(kSublevelRules);
  add(kZeroRule);
  add(literal ? kVarRuleLiteral : kVarRule);
  add_all(kSuccRules);
  add(literal ? kSuccNonEmptyLiteral : kSuccNonEmpty);
  add(kMaxHelperBase);
  if (literal)
    add_all(kMaxHelperStepLiteral);
  else
    add_all(kMaxHelperStep);
  add_all(kMaxRules);
  add_all(kImaxRules);
  add(kEvalSB);
  add(literal ? kEvalSALiteral : kEvalSA);
  add_all(kEvalLRules);
  return RuleSet(std::move(rules));
}

}  // namespace

const RuleSet& builtin_ruleset(RuleVariant variant) {
  static const RuleSet corrected = make_ruleset(RuleVariant::Corrected);
  static const RuleSet literal = make_ruleset(RuleVariant::PaperLiteral);
  return variant == RuleVariant::Corrected ? corrected : literal;
}

}  // namespace levelrep::rewrite
