#pragma once

#include <compare>
#include <utility>

#include "levelrep/level.hpp"
#include "levelrep/varset.hpp"

namespace levelrep {

/// Atom of a minimal representation.
///
///   A(E, x, S) = 0 if some y in E is 0, else x + S   (requires x in E)
///   B(E, S)    = 0 if some y in E is 0, else S       (requires S >= 1)
///
/// The side conditions are checked on construction and violations throw
/// std::invalid_argument.
class SubLevel {
 public:
  enum class Kind : std::uint8_t { A, B };

  static SubLevel a(VarSet e, VarId x, Nat shift);
  static SubLevel b(VarSet e, Nat shift);

  Kind kind() const { return kind_; }
  bool is_a() const { return kind_ == Kind::A; }
  const VarSet& set() const { return set_; }
  /// The tracked variable; only meaningful for A.
  VarId var() const { return var_; }
  Nat shift() const { return shift_; }

  /// Same kind, variable and shift with another set. The set must still
  /// contain the tracked variable for A.
  SubLevel with_set(VarSet e) const;

  friend bool operator==(const SubLevel&, const SubLevel&) = default;

 private:
  SubLevel(Kind k, VarSet e, VarId x, Nat s) : kind_(k), set_(std::move(e)), var_(x), shift_(s) {}

  Kind kind_;
  VarSet set_;
  VarId var_;
  Nat shift_;
};

Nat eval_sub(const SubLevel& u, const Valuation& sigma);

/// Semantic comparison u <= v for all valuations, decided syntactically.
bool leq_sub(const SubLevel& u, const SubLevel& v);

/// Storage order: every A before every B; A on (E, x, S), B on (E, S).
std::strong_ordering ord_sub(const SubLevel& u, const SubLevel& v);

SubLevel succ_sub(const SubLevel& u);

/// imax(u, v) == max(first, second) where first is u over E ∪ F.
std::pair<SubLevel, SubLevel> imax_sub_pair(const SubLevel& u, const SubLevel& v);

}  // namespace levelrep
