#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "levelrep/level.hpp"
#include "levelrep/repr.hpp"

namespace levelrep {

/// Bijection between variable names and VarIds. Ids are handed out densely
/// in order of first appearance.
class NameTable {
 public:
  NameTable() = default;

  /// Table with `n` variables named x, y, z, then v3, v4, ...
  static NameTable with_default_names(std::size_t n);

  VarId intern(std::string_view name);
  std::optional<VarId> lookup(std::string_view name) const;
  /// Name of v; unnamed ids print as `_<id>`.
  std::string name(VarId v) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, VarId, std::less<>> ids_;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
               const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// level := "0" | NAT | "s" "(" level ")" | "max" "(" level "," level ")"
///        | "imax" "(" level "," level ")" | IDENT
Level parse_level(std::string_view text, NameTable& names);

std::string print_level(const Level& t, const NameTable& names);

/// `max{A{x,y}(x)+0, B{}+1}`
std::string print_repr(const Repr& r, const NameTable& names);

/// `{"atoms":[{"kind":"A","set":["x"],"var":"x","shift":0}]}`
std::string print_repr_json(const Repr& r, const NameTable& names);

/// Symbol declarations and the builtin rules, then the encoded query if any.
std::string export_framework(const std::optional<Level>& query);

}  // namespace levelrep
