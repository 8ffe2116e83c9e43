#include "levelrep/repr.hpp"

#include <algorithm>

namespace levelrep {

namespace {

bool ord_less(const SubLevel& u, const SubLevel& v) { return ord_sub(u, v) < 0; }

}  // namespace

Repr Repr::from_sorted_atoms(std::vector<SubLevel> atoms) {
  Repr r;
  r.atoms_ = std::move(atoms);
  if (!r.is_valid()) throw InvariantViolation("atoms are not a sorted antichain of sublevels");
  return r;
}

Nat Repr::max_shift() const {
  Nat m = 0;
  for (const auto& u : atoms_) m = std::max(m, u.shift());
  return m;
}

bool Repr::is_valid() const {
  for (std::size_t i = 0; i + 1 < atoms_.size(); ++i)
    if (!ord_less(atoms_[i], atoms_[i + 1])) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = 0; j < atoms_.size(); ++j)
      if (i != j && leq_sub(atoms_[i], atoms_[j])) return false;
  return true;
}

Repr repr_zero() { return {}; }

Repr repr_var(VarId x) { return insert_sub({}, SubLevel::a(VarSet{x}, x, 0)); }

Repr succ_repr(const Repr& r) {
  if (r.empty()) return insert_sub({}, SubLevel::b({}, 1));
  // Shifting every atom by one preserves both the order and incomparability.
  // Shifted atoms still vanish when a set member is 0, hence the extra B{}+1.
  Repr out;
  out.atoms_.reserve(r.size());
  for (const auto& u : r) out.atoms_.push_back(succ_sub(u));
  return insert_sub(out, SubLevel::b({}, 1));
}

Repr insert_sub(const Repr& r, const SubLevel& u) {
  for (const auto& v : r)
    if (leq_sub(u, v)) return r;
  Repr out;
  out.atoms_.reserve(r.size() + 1);
  for (const auto& v : r)
    if (!leq_sub(v, u)) out.atoms_.push_back(v);
  auto pos = std::lower_bound(out.atoms_.begin(), out.atoms_.end(), u, ord_less);
  out.atoms_.insert(pos, u);
  return out;
}

Repr max_repr(const Repr& r1, const Repr& r2) {
  Repr out = r1;
  for (const auto& u : r2) out = insert_sub(out, u);
  return out;
}

Repr imax_repr(const Repr& r1, const Repr& r2) {
  if (r1.empty()) return r2;
  if (r2.empty()) return {};
  Repr out;
  for (const auto& u : r1) {
    for (const auto& v : r2) {
      auto [lhs, rhs] = imax_sub_pair(u, v);
      out = insert_sub(out, lhs);
      out = insert_sub(out, rhs);
    }
  }
  return out;
}

Repr normalize(const Level& t) {
  switch (t.kind()) {
    case Level::Kind::Zero:
      return repr_zero();
    case Level::Kind::Var:
      return repr_var(t.var());
    case Level::Kind::Succ:
      return succ_repr(normalize(t.child()));
    case Level::Kind::Max:
      return max_repr(normalize(t.left()), normalize(t.right()));
    case Level::Kind::IMax:
      return imax_repr(normalize(t.left()), normalize(t.right()));
  }
  return {};
}

bool leq_repr(const Repr& r1, const Repr& r2) {
  return std::all_of(r1.begin(), r1.end(), [&](const SubLevel& u) {
    return std::any_of(r2.begin(), r2.end(), [&](const SubLevel& v) { return leq_sub(u, v); });
  });
}

bool eq_repr(const Repr& r1, const Repr& r2) { return r1 == r2; }

Repr subst_repr(const Repr& r, VarId y, Nat n) {
  Repr out;
  for (const auto& u : r) {
    bool guarded = u.set().contains(y);
    if (guarded && n == 0) continue;
    VarSet rest = set_delete(u.set(), y);
    if (u.is_a() && u.var() == y)
      out = insert_sub(out, SubLevel::b(std::move(rest), checked_add(u.shift(), n)));
    else
      out = insert_sub(out, u.with_set(std::move(rest)));
  }
  return out;
}

Nat eval_repr(const Repr& r, const Valuation& sigma) {
  Nat m = 0;
  for (const auto& u : r) m = std::max(m, eval_sub(u, sigma));
  return m;
}

}  // namespace levelrep
