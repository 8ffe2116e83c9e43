#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "levelrep/level.hpp"
#include "levelrep/sublevel.hpp"

namespace levelrep {

/// Raised when a value breaks an internal representation invariant.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Minimal representation of a level: a set of pairwise incomparable
/// sublevels, stored in ord_sub order. The empty set denotes 0.
class Repr {
 public:
  Repr() = default;

  /// Validates ordering and incomparability; throws InvariantViolation.
  static Repr from_sorted_atoms(std::vector<SubLevel> atoms);

  std::span<const SubLevel> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  /// Largest shift over all atoms, 0 when empty.
  Nat max_shift() const;

  /// Recomputes the stored-form invariants.
  bool is_valid() const;

  friend bool operator==(const Repr&, const Repr&) = default;

 private:
  friend Repr insert_sub(const Repr& r, const SubLevel& u);
  friend Repr succ_repr(const Repr& r);

  std::vector<SubLevel> atoms_;
};

Repr repr_zero();
Repr repr_var(VarId x);
Repr succ_repr(const Repr& r);
/// Minimal representation of max(r, u).
Repr insert_sub(const Repr& r, const SubLevel& u);
Repr max_repr(const Repr& r1, const Repr& r2);
Repr imax_repr(const Repr& r1, const Repr& r2);
Repr normalize(const Level& t);

/// Semantic r1 <= r2, decided atom-wise.
bool leq_repr(const Repr& r1, const Repr& r2);
/// Semantic equivalence; by uniqueness this is syntactic equality.
bool eq_repr(const Repr& r1, const Repr& r2);

/// Representation of r with y replaced by the natural n.
Repr subst_repr(const Repr& r, VarId y, Nat n);

Nat eval_repr(const Repr& r, const Valuation& sigma);

}  // namespace levelrep
