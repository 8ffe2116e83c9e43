#include "levelrep/surface.hpp"

#include <cctype>
#include <charconv>

#include "json.hpp"

#include "levelrep/rewrite.hpp"

namespace levelrep {

NameTable NameTable::with_default_names(std::size_t n) {
  NameTable t;
  static constexpr const char* kFirst[] = {"x", "y", "z"};
  for (std::size_t i = 0; i < n; ++i) t.intern(i < 3 ? std::string(kFirst[i]) : "v" + std::to_string(i));
  return t;
}

VarId NameTable::intern(std::string_view name) {
  if (auto id = lookup(name)) return *id;
  VarId id{static_cast<std::uint32_t>(names_.size())};
  names_.emplace_back(name);
  ids_.emplace(std::string(name), id);
  return id;
}

std::optional<VarId> NameTable::lookup(std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::string NameTable::name(VarId v) const {
  if (v.id < names_.size()) return names_[v.id];
  return "_" + std::to_string(v.id);
}

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                         const std::string& found)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                         ": expected " + describe_expected(expected) + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

class LevelParser {
 public:
  LevelParser(std::string_view text, NameTable& names) : text_(text), names_(names) {}

  Level parse() {
    Level t = level();
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"});
    return t;
  }

 private:
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw SyntaxError(line, col, std::move(expected), found);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail({"'" + std::string(1, c) + "'"});
    ++pos_;
  }

  Level level() {
    skip_ws();
    static const std::vector<std::string> kLevelStart = {"natural number", "'s'", "'max'", "'imax'",
                                                         "identifier"};
    if (pos_ >= text_.size()) fail(kLevelStart);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (!ident_start(c)) fail(kLevelStart);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "s") {
      expect('(');
      Level inner = level();
      expect(')');
      return Level::succ(std::move(inner));
    }
    if (word == "max" || word == "imax") {
      expect('(');
      Level a = level();
      expect(',');
      Level b = level();
      expect(')');
      return word == "max" ? Level::max(std::move(a), std::move(b)) : Level::imax(std::move(a), std::move(b));
    }
    return Level::var(names_.intern(word));
  }

  Level number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Nat n = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, n);
    // Numerals expand to successor chains; keep them to a sane size.
    if (ec != std::errc() || n > kMaxNumeral) {
      pos_ = start;
      fail({"natural number at most " + std::to_string(kMaxNumeral)});
    }
    return Level::numeral(n);
  }

  static constexpr Nat kMaxNumeral = 1'000'000;

  std::string_view text_;
  NameTable& names_;
  std::size_t pos_ = 0;
};

void print_level_into(const Level& t, const NameTable& names, std::string& out) {
  switch (t.kind()) {
    case Level::Kind::Zero:
      out += '0';
      return;
    case Level::Kind::Var:
      out += names.name(t.var());
      return;
    case Level::Kind::Succ: {
      Nat n = 0;
      const Level* cur = &t;
      while (cur->kind() == Level::Kind::Succ) {
        ++n;
        cur = &cur->child();
      }
      if (cur->is_zero()) {
        out += std::to_string(n);
        return;
      }
      out += "s(";
      print_level_into(t.child(), names, out);
      out += ')';
      return;
    }
    case Level::Kind::Max:
    case Level::Kind::IMax:
      out += t.kind() == Level::Kind::Max ? "max(" : "imax(";
      print_level_into(t.left(), names, out);
      out += ", ";
      print_level_into(t.right(), names, out);
      out += ')';
      return;
  }
}

std::string print_set(const VarSet& e, const NameTable& names) {
  std::string out = "{";
  bool first = true;
  for (VarId v : e) {
    if (!first) out += ',';
    first = false;
    out += names.name(v);
  }
  return out + "}";
}

}  // namespace

Level parse_level(std::string_view text, NameTable& names) { return LevelParser(text, names).parse(); }

std::string print_level(const Level& t, const NameTable& names) {
  std::string out;
  print_level_into(t, names, out);
  return out;
}

std::string print_repr(const Repr& r, const NameTable& names) {
  std::string out = "max{";
  bool first = true;
  for (const auto& u : r) {
    if (!first) out += ", ";
    first = false;
    if (u.is_a()) {
      out += "A" + print_set(u.set(), names) + "(" + names.name(u.var()) + ")+" + std::to_string(u.shift());
    } else {
      out += "B" + print_set(u.set(), names) + "+" + std::to_string(u.shift());
    }
  }
  return out + "}";
}

std::string print_repr_json(const Repr& r, const NameTable& names) {
  nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
  for (const auto& u : r) {
    nlohmann::ordered_json a;
    a["kind"] = u.is_a() ? "A" : "B";
    a["set"] = nlohmann::ordered_json::array();
    for (VarId v : u.set()) a["set"].push_back(names.name(v));
    if (u.is_a()) a["var"] = names.name(u.var());
    a["shift"] = u.shift();
    atoms.push_back(std::move(a));
  }
  nlohmann::ordered_json doc;
  doc["atoms"] = std::move(atoms);
  return doc.dump();
}

namespace {

std::string sort_expr_name(const rewrite::SortExpr& s) {
  switch (s.tag) {
    case rewrite::SortExpr::Tag::Fixed:
      return rewrite::sort_name(s.fixed);
    case rewrite::SortExpr::Tag::Elem:
      return "a";
    case rewrite::SortExpr::Tag::SetOfElem:
      return "Set a";
  }
  return "?";
}

}  // namespace

std::string export_framework(const std::optional<Level>& query) {
  std::string out;
  out += "# Universe levels as minimal representations: symbols and rewrite rules.\n";
  out += "# Pattern variables are written $X; application is prefix juxtaposition.\n\n";
  out += "# symbols\n";
  for (const auto& s : rewrite::builtin_signature()) {
    out += s.name + " : ";
    for (const auto& a : s.args) out += sort_expr_name(a) + " -> ";
    out += sort_expr_name(s.result) + "\n";
  }
  out += "\n# rules\n";
  out += rewrite::dump_rules(rewrite::builtin_ruleset());
  if (query) {
    out += "\n# query\n";
    out += rewrite::print_term(rewrite::encode_level(*query)) + "\n";
  }
  return out;
}

}  // namespace levelrep
