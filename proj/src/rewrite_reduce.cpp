#include <random>

#include "levelrep/rewrite.hpp"

namespace levelrep::rewrite {

std::string strategy_name(const Strategy& s) {
  switch (s.kind) {
    case Strategy::Kind::LeftmostInnermost: return "leftmost-innermost";
    case Strategy::Kind::LeftmostOutermost: return "leftmost-outermost";
    case Strategy::Kind::RandomPosition: return "random(" + std::to_string(s.seed) + ")";
  }
  return "?";
}

namespace {

// Leftmost-innermost normalization by recursive evaluation. Arguments are
// normalized left to right before the root is tried, and a contracted rhs is
// normalized in place with its bound variables already normal, which is the
// leftmost-innermost reduction order.
class InnermostEvaluator {
 public:
  InnermostEvaluator(const RuleSet& rules, std::uint64_t budget) : rules_(rules), budget_(budget) {}

  Term normalize(const Term& t) {
    if (t.is_var() || t.args().empty() || exhausted_) return reduce_root(t);
    std::vector<Term> args;
    args.reserve(t.args().size());
    bool changed = false;
    for (const auto& a : t.args()) {
      args.push_back(normalize(a));
      changed |= args.back().identity() != a.identity();
    }
    return reduce_root(changed ? Term::app(t.head(), std::move(args)) : t);
  }

  std::uint64_t steps() const { return steps_; }
  bool exhausted() const { return exhausted_; }

 private:
  Term reduce_root(const Term& t) {
    if (exhausted_) return t;
    auto redex = rules_.find_redex(t);
    if (!redex) return t;
    if (steps_ == budget_) {
      exhausted_ = true;
      return t;
    }
    ++steps_;
    return build(rules_.rules()[redex->first].rhs(), redex->second);
  }

  Term build(const Term& tmpl, const Binding& env) {
    if (tmpl.is_var()) return *env[tmpl.var_index()];
    std::vector<Term> args;
    args.reserve(tmpl.args().size());
    for (const auto& a : tmpl.args()) args.push_back(build(a, env));
    return reduce_root(Term::app(tmpl.head(), std::move(args)));
  }

  const RuleSet& rules_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

// One contraction at a time, with the redex position picked by a strategy.
class Stepper {
 public:
  Stepper(const RuleSet& rules, Strategy strategy) : rules_(rules), strategy_(strategy), rng_(strategy.seed) {}

  // The answer is cached on the node itself, tagged with the rule set id.
  bool is_normal(const Term& t) {
    const std::uint32_t tag = t.normal_tag();
    if (tag >> 1 == rules_.id()) return tag & 1;
    bool normal = true;
    for (const auto& a : t.args())
      if (!is_normal(a)) {
        normal = false;
        break;
      }
    if (normal) normal = !rules_.find_redex(t);
    t.set_normal_tag(rules_.id() << 1 | (normal ? 1u : 0u));
    return normal;
  }

  // Contracts one redex inside t, which must not be normal.
  Term step(const Term& t, const RewriteRule*& applied) {
    switch (strategy_.kind) {
      case Strategy::Kind::LeftmostInnermost:
        for (std::size_t i = 0; i < t.args().size(); ++i)
          if (!is_normal(t.arg(i))) return replace_arg(t, i, step(t.arg(i), applied));
        return contract(t, applied);
      case Strategy::Kind::LeftmostOutermost:
        if (auto r = root_redex(t)) return apply(*r, applied);
        for (std::size_t i = 0; i < t.args().size(); ++i)
          if (!is_normal(t.arg(i))) return replace_arg(t, i, step(t.arg(i), applied));
        break;
      case Strategy::Kind::RandomPosition: {
        std::vector<std::size_t> candidates;  // args().size() stands for the root
        for (std::size_t i = 0; i < t.args().size(); ++i)
          if (!is_normal(t.arg(i))) candidates.push_back(i);
        auto root = root_redex(t);
        if (root) candidates.push_back(t.args().size());
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        std::size_t c = candidates.at(pick(rng_));
        if (c == t.args().size()) return apply(*root, applied);
        return replace_arg(t, c, step(t.arg(c), applied));
      }
    }
    throw std::logic_error("step: no redex in a non-normal term");
  }

 private:
  using Redex = std::optional<std::pair<std::size_t, Binding>>;

  Redex root_redex(const Term& t) const { return rules_.find_redex(t); }

  Term contract(const Term& t, const RewriteRule*& applied) {
    auto r = root_redex(t);
    if (!r) throw std::logic_error("step: no redex in a non-normal term");
    return apply(*r, applied);
  }

  Term apply(const std::pair<std::size_t, Binding>& redex, const RewriteRule*& applied) {
    applied = &rules_.rules()[redex.first];
    return instantiate(applied->rhs(), redex.second);
  }

  static Term replace_arg(const Term& t, std::size_t i, Term replacement) {
    std::vector<Term> args = t.args();
    args[i] = std::move(replacement);
    return Term::app(t.head(), std::move(args));
  }

  const RuleSet& rules_;
  Strategy strategy_;
  std::mt19937_64 rng_;
};

}  // namespace

ReductionReport reduce(const Term& term, const RuleSet& rules, Strategy strategy, std::uint64_t budget,
                       const StepObserver& observer) {
  if (strategy.kind == Strategy::Kind::LeftmostInnermost && !observer) {
    InnermostEvaluator ev(rules, budget);
    Term result = ev.normalize(term);
    return {std::move(result), ev.steps(), ev.exhausted()};
  }
  Stepper stepper(rules, strategy);
  ReductionReport report{term, 0, false};
  while (!stepper.is_normal(report.result)) {
    if (report.steps == budget) {
      report.budget_exhausted = true;
      break;
    }
    const RewriteRule* applied = nullptr;
    report.result = stepper.step(report.result, applied);
    ++report.steps;
    if (observer) observer(report.steps, *applied, report.result);
  }
  return report;
}

bool is_normal_form(const Term& t, const RuleSet& rules) {
  if (rules.find_redex(t)) return false;
  for (const auto& a : t.args())
    if (!is_normal_form(a, rules)) return false;
  return true;
}

}  // namespace levelrep::rewrite
