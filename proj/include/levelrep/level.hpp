#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelrep/varset.hpp"

namespace levelrep {

/// Impredicative max on naturals: 0 when j is 0, max(i, j) otherwise.
constexpr Nat imax_nat(Nat i, Nat j) { return j == 0 ? 0 : (i < j ? j : i); }

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(VarId v);
  VarId var() const { return var_; }

 private:
  VarId var_;
};

/// Universe level syntax: 0 | s(t) | max(t, t) | imax(t, t) | x.
///
/// Immutable; copies share structure.
class Level {
 public:
  enum class Kind : std::uint8_t { Zero, Succ, Max, IMax, Var };

  Level();  // zero

  static Level zero() { return Level(); }
  static Level succ(Level t);
  static Level max(Level a, Level b);
  static Level imax(Level a, Level b);
  static Level var(VarId v);
  /// s^n(0)
  static Level numeral(Nat n);

  Kind kind() const { return node_->kind; }
  bool is_zero() const { return kind() == Kind::Zero; }

  /// Child of Succ.
  const Level& child() const;
  /// Operands of Max / IMax.
  const Level& left() const;
  const Level& right() const;
  VarId var() const;

  /// Number of nodes.
  std::size_t size() const;
  /// Largest number of nested successors on any root-to-leaf path.
  Nat succ_depth() const;

  friend bool operator==(const Level& a, const Level& b);

 private:
  struct Node {
    Kind kind = Kind::Zero;
    VarId v{};
    std::vector<Level> kids;
  };
  explicit Level(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Finite assignment of naturals to variables.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const VarId, Nat>> init) : map_(init) {}

  /// Binds v; rebinding an existing variable replaces its value.
  void bind(VarId v, Nat n) { map_[v] = n; }
  bool contains(VarId v) const { return map_.contains(v); }
  Nat at(VarId v) const;
  void erase(VarId v) { map_.erase(v); }

  const std::map<VarId, Nat>& bindings() const { return map_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<VarId, Nat> map_;
};

Nat eval(const Level& t, const Valuation& sigma);

VarSet vars(const Level& t);

/// Grid bound covering the witnesses the comparison proofs construct.
Nat default_oracle_bound(const Level& a, const Level& b);

/// Calls f on every valuation of `vs` with values in {0..bound}, stopping
/// when f returns true. Returns whether f stopped the enumeration.
template <class F>
bool for_each_grid_valuation(const std::vector<VarId>& vs, Nat bound, F&& f) {
  std::vector<Nat> digits(vs.size(), 0);
  Valuation sigma;
  for (;;) {
    for (std::size_t i = 0; i < vs.size(); ++i) sigma.bind(vs[i], digits[i]);
    if (f(static_cast<const Valuation&>(sigma))) return true;
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == bound) digits[i++] = 0;
    if (i == digits.size()) return false;
    ++digits[i];
  }
}

/// Bounded search for sigma with eval(lhs) > eval(rhs). A result is a genuine
/// counterexample to lhs <= rhs; nullopt proves nothing beyond the grid.
std::optional<Valuation> find_counterexample_leq(const Level& lhs, const Level& rhs, Nat bound);

}  // namespace levelrep
