#include "levelrep/varset.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace levelrep {

Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) throw std::overflow_error("natural overflow");
  return a + b;
}

VarSet::VarSet(std::initializer_list<VarId> init) : VarSet(std::vector<VarId>(init)) {}

VarSet::VarSet(std::vector<VarId> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool VarSet::contains(VarId x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) {
  return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                                b.elems_.end());
}

VarSet set_insert(const VarSet& e, VarId x) {
  std::vector<VarId> out(e.begin(), e.end());
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it == out.end() || *it != x) out.insert(it, x);
  return VarSet(std::move(out));
}

VarSet set_union(const VarSet& e, const VarSet& f) {
  std::vector<VarId> out;
  out.reserve(e.size() + f.size());
  std::set_union(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(out));
  return VarSet(std::move(out));
}

bool set_subset(const VarSet& f, const VarSet& e) {
  return std::includes(e.begin(), e.end(), f.begin(), f.end());
}

VarSet set_delete(const VarSet& e, VarId x) {
  std::vector<VarId> out;
  out.reserve(e.size());
  std::remove_copy(e.begin(), e.end(), std::back_inserter(out), x);
  return VarSet(std::move(out));
}

bool set_lex_leq(const VarSet& e, const VarSet& f) { return (e <=> f) != std::strong_ordering::greater; }

}  // namespace levelrep
