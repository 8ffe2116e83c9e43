#include "levelrep/sublevel.hpp"

#include <stdexcept>

namespace levelrep {

SubLevel SubLevel::a(VarSet e, VarId x, Nat shift) {
  if (!e.contains(x)) throw std::invalid_argument("A atom: tracked variable must belong to its set");
  return SubLevel(Kind::A, std::move(e), x, shift);
}

SubLevel SubLevel::b(VarSet e, Nat shift) {
  if (shift == 0) throw std::invalid_argument("B atom: shift must be positive");
  return SubLevel(Kind::B, std::move(e), VarId{}, shift);
}

SubLevel SubLevel::with_set(VarSet e) const {
  return is_a() ? a(std::move(e), var_, shift_) : b(std::move(e), shift_);
}

Nat eval_sub(const SubLevel& u, const Valuation& sigma) {
  bool vanishes = false;
  for (VarId y : u.set())
    if (sigma.at(y) == 0) vanishes = true;
  if (vanishes) return 0;
  return u.is_a() ? checked_add(sigma.at(u.var()), u.shift()) : u.shift();
}

bool leq_sub(const SubLevel& u, const SubLevel& v) {
  // Every case needs v's guard set to be implied by u's.
  if (!set_subset(v.set(), u.set())) return false;
  if (u.is_a()) return v.is_a() && u.var() == v.var() && u.shift() <= v.shift();
  // u = B(E, S) with S >= 1: against A(F, x, K) every variable of F is >= 1.
  return v.is_a() ? u.shift() - 1 <= v.shift() : u.shift() <= v.shift();
}

std::strong_ordering ord_sub(const SubLevel& u, const SubLevel& v) {
  if (u.kind() != v.kind()) return u.is_a() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = u.set() <=> v.set(); c != 0) return c;
  if (u.is_a())
    if (auto c = u.var() <=> v.var(); c != 0) return c;
  return u.shift() <=> v.shift();
}

SubLevel succ_sub(const SubLevel& u) {
  Nat s = checked_add(u.shift(), 1);
  return u.is_a() ? SubLevel::a(u.set(), u.var(), s) : SubLevel::b(u.set(), s);
}

std::pair<SubLevel, SubLevel> imax_sub_pair(const SubLevel& u, const SubLevel& v) {
  return {u.with_set(set_union(u.set(), v.set())), v};
}

}  // namespace levelrep
