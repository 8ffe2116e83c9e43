#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "levelrep/level.hpp"
#include "levelrep/repr.hpp"

namespace levelrep::rewrite {

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

enum class Sort : std::uint8_t { Bool, Nat, Level, SubLevel, NatSet, SubLevelSet };

/// Argument or result sort of a symbol. `Elem` is the symbol's single sort
/// parameter; `SetOfElem` is a set over it.
struct SortExpr {
  enum class Tag : std::uint8_t { Fixed, Elem, SetOfElem };
  Tag tag = Tag::Fixed;
  Sort fixed = Sort::Bool;
};

struct Symbol {
  std::string name;
  std::size_t arity = 0;
  std::vector<SortExpr> args;
  SortExpr result;
};

/// Builtin symbols. Values index builtin_signature().
enum class Sym : std::uint16_t {
  True, False, And, Or, Not,
  ZeroN, SuccN, Plus, MaxN, LeqN, EqN, LtN,
  Ite,
  Nil, Cons, Add, Union, Mem, Subset, EqSet, OrdSet, LtSet, Del,
  LeqE, EqE, LtE,
  ZeroL, SuccL, MaxL, RuleL, VarL,
  As, Bs, OrdSL, LeqSL, SuccSL, MaxHelper, CondAdd, RuleHelper, RuleSL, EvalS, EvalL,
  MaxS,
  Count_
};

const std::vector<Symbol>& builtin_signature();
const Symbol& symbol(Sym s);
std::optional<Sym> find_symbol(std::string_view name);
std::string sort_name(Sort s);

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

/// First-order term over the builtin signature, or a pattern variable when
/// used inside a rule. Immutable; copies share structure.
class Term {
 public:
  static Term app(Sym head, std::vector<Term> args = {});
  static Term var(std::uint32_t index);

  bool is_var() const { return node_->head < 0; }
  Sym head() const { return static_cast<Sym>(node_->head); }
  std::uint32_t var_index() const { return static_cast<std::uint32_t>(-node_->head - 1); }
  const std::vector<Term>& args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args[i]; }

  std::size_t size() const;
  const void* identity() const { return node_.get(); }

  /// Scratch slot on the shared node, used by reduce() to remember
  /// normal-form checks per rule set. 0 means nothing recorded.
  std::uint32_t normal_tag() const { return node_->normal_tag.load(std::memory_order_relaxed); }
  void set_normal_tag(std::uint32_t tag) const { node_->normal_tag.store(tag, std::memory_order_relaxed); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Node(std::int32_t h, std::vector<Term> a) : head(h), args(std::move(a)) {}

    std::int32_t head;
    mutable std::atomic<std::uint32_t> normal_tag{0};
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Unary numeral succN^n(zeroN).
Term numeral(Nat n);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed pattern: pattern variables are written `$Name` and numbered in
/// order of first appearance.
struct Pattern {
  Term term;
  std::vector<std::string> var_names;
};

/// Parses LF-style prefix syntax: `f a (g b c)`.
Pattern parse_pattern(std::string_view text);
Term parse_term(std::string_view text);

/// Prints in the same syntax. Variables print as `$<name>` when names are
/// given, `$<index>` otherwise.
std::string print_term(const Term& t, const std::vector<std::string>& var_names = {});

/// Sort of a ground term, or nullopt when arities or sorts do not check.
/// An unconstrained `nil` counts as a set of naturals.
std::optional<Sort> sort_of(const Term& t);

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

class RewriteRule {
 public:
  /// Parses `lhs --> rhs`. Throws ParseError when the lhs head is a variable
  /// or the rhs uses a variable the lhs does not bind.
  static RewriteRule parse(std::string_view line);

  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  std::size_t num_vars() const { return var_names_.size(); }
  const std::vector<std::string>& var_names() const { return var_names_; }

  /// `lhs --> rhs`
  std::string to_string() const;

 private:
  RewriteRule(Term l, Term r, std::vector<std::string> names)
      : lhs_(std::move(l)), rhs_(std::move(r)), var_names_(std::move(names)) {}

  Term lhs_;
  Term rhs_;
  std::vector<std::string> var_names_;
};

using Binding = std::vector<std::optional<Term>>;

/// Matches a pattern against a ground term. Repeated variables require
/// syntactically equal subterms.
std::optional<Binding> match(const Term& pattern, const Term& term, std::size_t num_vars);
std::optional<Binding> match(const Pattern& pattern, const Term& term);

Term instantiate(const Term& tmpl, const Binding& binding);

/// Rules indexed by head symbol; within a head, emission order decides.
class RuleSet {
 public:
  explicit RuleSet(std::vector<RewriteRule> rules);

  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  /// Distinct per constructed rule set, never 0.
  std::uint32_t id() const { return id_; }

  /// First rule that matches at the root, with its binding.
  std::optional<std::pair<std::size_t, Binding>> find_redex(const Term& t) const;

 private:
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> by_head_;
  std::uint32_t id_;
};

enum class RuleVariant : std::uint8_t {
  Corrected,
  /// Rules as displayed: var argument order (set, 0, x), evalS x=y emits an
  /// empty set, maxHelper stops at the first dominated atom, and the
  /// successor of a nonempty set is pointwise.
  PaperLiteral,
};

const RuleSet& builtin_ruleset(RuleVariant variant = RuleVariant::Corrected);

/// One rule per line, `lhs --> rhs`.
std::string dump_rules(const RuleSet& rules);

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

struct Strategy {
  enum class Kind : std::uint8_t { LeftmostInnermost, LeftmostOutermost, RandomPosition };
  Kind kind = Kind::LeftmostInnermost;
  std::uint64_t seed = 0;

  static Strategy innermost() { return {Kind::LeftmostInnermost, 0}; }
  static Strategy outermost() { return {Kind::LeftmostOutermost, 0}; }
  static Strategy random(std::uint64_t seed) { return {Kind::RandomPosition, seed}; }
};

std::string strategy_name(const Strategy& s);

struct ReductionReport {
  Term result;
  std::uint64_t steps = 0;
  bool budget_exhausted = false;
};

/// Called after every step with the step number, the rule and the whole term.
using StepObserver = std::function<void(std::uint64_t, const RewriteRule&, const Term&)>;

/// Rewrites until no redex remains or `budget` steps have been taken.
ReductionReport reduce(const Term& term, const RuleSet& rules, Strategy strategy, std::uint64_t budget,
                       const StepObserver& observer = {});

/// True when no rule applies anywhere in t.
bool is_normal_form(const Term& t, const RuleSet& rules);

// ---------------------------------------------------------------------------
// Encodings
// ---------------------------------------------------------------------------

Term encode_level(const Level& t);
Term encode_varset(const VarSet& e);
Term encode_sub(const SubLevel& u);
Term encode_repr(const Repr& r);

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of encode_repr on its image; throws DecodeError otherwise.
Repr decode_repr(const Term& term);

/// Normal form of encode_level(t) equals encode_repr(normalize(t)).
bool check_soundness(const Level& t, std::uint64_t budget);

struct ConfluenceReport {
  bool agree = true;
  std::vector<Strategy> strategies;
  std::vector<ReductionReport> runs;
};

/// Runs leftmost-innermost, leftmost-outermost, then random-position
/// strategies seeded from `seed` (`count` in total) and compares results.
ConfluenceReport sample_confluence(const Level& t, std::size_t count, std::uint64_t seed,
                                   std::uint64_t budget);

}  // namespace levelrep::rewrite
