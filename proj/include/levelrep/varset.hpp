#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace levelrep {

using Nat = std::uint64_t;

/// Adds with an overflow check; shifts never come close in practice.
Nat checked_add(Nat a, Nat b);

/// A level variable, identified by its image under the variable numbering.
struct VarId {
  std::uint32_t id = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Finite set of variables kept as a strictly increasing sequence.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<VarId> init);
  /// Sorts and removes duplicates.
  explicit VarSet(std::vector<VarId> elems);

  std::span<const VarId> elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(VarId x) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;
  /// Lexicographic on the sorted id sequences.
  friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b);

 private:
  std::vector<VarId> elems_;
};

VarSet set_insert(const VarSet& e, VarId x);
VarSet set_union(const VarSet& e, const VarSet& f);
/// f ⊆ e
bool set_subset(const VarSet& f, const VarSet& e);
VarSet set_delete(const VarSet& e, VarId x);
bool set_lex_leq(const VarSet& e, const VarSet& f);

}  // namespace levelrep
