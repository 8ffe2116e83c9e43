#include "doctest.h"
#include "support.hpp"

#include <sstream>

#include "json.hpp"
#include "levelrep/rewrite.hpp"

using namespace levelrep;
using namespace test_support;

TEST_CASE("name table") {
  NameTable names;
  CHECK(names.intern("b") == VarId{0});
  CHECK(names.intern("a") == VarId{1});
  CHECK(names.intern("b") == VarId{0});
  CHECK(names.lookup("a") == VarId{1});
  CHECK_FALSE(names.lookup("c"));
  CHECK(names.name(VarId{1}) == "a");
  CHECK(names.name(VarId{7}) == "_7");
  NameTable d = NameTable::with_default_names(5);
  CHECK(d.name(VarId{2}) == "z");
  CHECK(d.name(VarId{4}) == "v4");
}

TEST_CASE("parse_level") {
  NameTable names;
  Level t = parse_level("max(imax(x, s(y)), 0)", names);
  CHECK(t == Level::max(Level::imax(Level::var(VarId{0}), Level::succ(Level::var(VarId{1}))), Level::zero()));
  CHECK(parse_level("3", names) == Level::succ(Level::succ(Level::succ(Level::zero()))));
  CHECK(parse_level("  max ( x ,y )", names) == Level::max(Level::var(VarId{0}), Level::var(VarId{1})));
  // keywords are not variables
  CHECK(parse_level("s_1", names).kind() == Level::Kind::Var);
}

TEST_CASE("syntax errors") {
  NameTable names;
  try {
    parse_level("imax(x", names);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_level("", names), SyntaxError);
  CHECK_THROWS_AS(parse_level("max(x)", names), SyntaxError);
  CHECK_THROWS_AS(parse_level("s(x) y", names), SyntaxError);
  CHECK_THROWS_AS(parse_level("max", names), SyntaxError);
  CHECK_THROWS_AS(parse_level("99999999999999999999", names), SyntaxError);
  try {
    parse_level("max(x,\n  ?)", names);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("print_level") {
  NameTable names = NameTable::with_default_names(3);
  CHECK(print_level(Level::zero(), names) == "0");
  CHECK(print_level(Level::succ(Level::var(X)), names) == "s(x)");
  CHECK(print_level(lv("max(s(s(0)), imax(x,y))"), names) == "max(2, imax(x, y))");
}

TEST_CASE("print_level round trip") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Level t = random_level(121, i, 30);
    NameTable names = NameTable::with_default_names(3);
    CHECK(parse_level(print_level(t, names), names) == t);
  }
}

TEST_CASE("print_repr") {
  NameTable names = NameTable::with_default_names(3);
  CHECK(print_repr({}, names) == "max{}");
  CHECK(print_repr(repr_var(X), names) == "max{A{x}(x)+0}");
  CHECK(print_repr(nf("imax(y, s(x))"), names) == "max{A{x}(x)+1, A{y}(y)+0, B{}+1}");
}

TEST_CASE("print_repr is injective") {
  std::map<std::string, Repr> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Repr r = normalize(random_level(131, i, 15));
    auto [it, fresh] = seen.emplace(show(r), r);
    if (!fresh) CHECK(it->second == r);
  }
}

TEST_CASE("print_repr_json") {
  NameTable names = NameTable::with_default_names(3);
  CHECK(print_repr_json({}, names) == R"({"atoms":[]})");
  CHECK(print_repr_json(repr_of({SubLevel::b({}, 1)}), names) == R"({"atoms":[{"kind":"B","set":[],"shift":1}]})");
  CHECK(print_repr_json(repr_var(X), names) == R"({"atoms":[{"kind":"A","set":["x"],"var":"x","shift":0}]})");
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Repr r = normalize(random_level(141, i, 20));
    auto doc = nlohmann::json::parse(print_repr_json(r, names));
    CHECK(doc["atoms"].size() == r.size());
  }
}

TEST_CASE("export_framework") {
  std::string plain = export_framework(std::nullopt);
  CHECK(plain.find("\nzeroL --> maxS nil\n") != std::string::npos);
  CHECK(plain.find("# query") == std::string::npos);
  CHECK(plain == export_framework(std::nullopt));
  CHECK(plain.find("maxS : Set LS -> L\n") != std::string::npos);

  NameTable names;
  std::string q = export_framework(parse_level("x", names));
  CHECK(q.ends_with("\nvarL zeroN\n"));
  std::string q2 = export_framework(parse_level("max(x, s(y))", names));
  CHECK(q2.ends_with("\nmaxL (varL zeroN) (succL (varL (succN zeroN)))\n"));
}

TEST_CASE("exported rules parse back") {
  std::istringstream in(export_framework(std::nullopt));
  std::string line;
  bool in_rules = false;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line == "# rules") {
      in_rules = true;
      continue;
    }
    if (!in_rules || line.empty() || line[0] == '#') continue;
    CHECK_NOTHROW(rewrite::RewriteRule::parse(line));
    ++n;
  }
  CHECK(n == rewrite::builtin_ruleset().size());
}
