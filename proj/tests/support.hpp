#pragma once

#include <random>
#include <string_view>

#include "levelrep/harness.hpp"
#include "levelrep/level.hpp"
#include "levelrep/repr.hpp"
#include "levelrep/surface.hpp"

namespace test_support {

using namespace levelrep;

inline const VarId X{0};
inline const VarId Y{1};
inline const VarId Z{2};

// x, y, z map to ids 0, 1, 2.
inline Level lv(std::string_view text) {
  NameTable names = NameTable::with_default_names(3);
  return parse_level(text, names);
}

inline Repr nf(std::string_view text) { return normalize(lv(text)); }

inline Repr repr_of(std::initializer_list<SubLevel> atoms) {
  Repr r;
  for (const auto& u : atoms) r = insert_sub(r, u);
  return r;
}

inline std::string show(const Repr& r) { return print_repr(r, NameTable::with_default_names(3)); }

inline Level random_level(std::uint64_t seed, std::uint64_t i, std::size_t size = 20) {
  harness::GenConfig cfg;
  cfg.seed = seed;
  cfg.max_size = size;
  return harness::gen_level(cfg, i);
}

}  // namespace test_support
