#include "doctest.h"
#include "support.hpp"

#include <set>

#include "levelrep/rewrite.hpp"

using namespace levelrep;
using namespace levelrep::rewrite;
using namespace test_support;

namespace {

bool has_rule(const RuleSet& rules, std::string_view text) {
  for (const auto& r : rules.rules())
    if (r.to_string() == text) return true;
  return false;
}

Term subst_query(const Repr& r, VarId y, Nat n) {
  return Term::app(Sym::EvalL, {encode_repr(r), numeral(y.id), numeral(n)});
}

}  // namespace

TEST_CASE("signature") {
  const auto& sig = builtin_signature();
  CHECK(sig.size() == 43);
  for (const char* name : {"true", "false", "and", "or", "not", "zeroN", "succN", "plus", "maxN", "leqN", "eqN", "ltN",
                           "ite", "nil", "cons", "add", "union", "mem", "subset", "eqSet", "ordSet", "ltSet", "del",
                           "zeroL", "succL", "maxL", "ruleL", "varL", "As", "Bs", "ordSL", "leqSL", "succSL",
                           "maxHelper", "ruleHelper", "ruleSL", "evalS", "evalL", "maxS"})
    CHECK_MESSAGE(find_symbol(name).has_value(), name);
  CHECK_FALSE(find_symbol("frobnicate"));
}

TEST_CASE("terms parse and print") {
  Term t = parse_term("maxS (cons (As (cons zeroN nil) zeroN zeroN) nil)");
  CHECK(print_term(t) == "maxS (cons (As (cons zeroN nil) zeroN zeroN) nil)");
  CHECK(sort_of(t) == Sort::Level);
  CHECK_THROWS_AS(parse_term("succN"), ParseError);
  CHECK_THROWS_AS(parse_term("succN zeroN zeroN"), ParseError);
  CHECK_THROWS_AS(parse_term("bogus"), ParseError);
  CHECK_FALSE(sort_of(parse_term("succN true")));
  CHECK(sort_of(parse_term("ite true zeroN (succN zeroN)")) == Sort::Nat);
  CHECK_FALSE(sort_of(parse_term("ite true zeroN true")));
}

TEST_CASE("rule parsing") {
  auto r = RewriteRule::parse("maxN $X zeroN --> $X");
  CHECK(r.num_vars() == 1);
  CHECK(r.to_string() == "maxN $X zeroN --> $X");
  CHECK_THROWS_AS(RewriteRule::parse("maxN $X zeroN --> $Y"), ParseError);
  CHECK_THROWS_AS(RewriteRule::parse("$X --> zeroN"), ParseError);
  CHECK_THROWS_AS(RewriteRule::parse("maxN $X zeroN"), ParseError);
}

TEST_CASE("builtin rules are well formed") {
  const auto& rules = builtin_ruleset();
  CHECK(rules.size() > 40);
  CHECK(rules.size() == 78);
  CHECK(builtin_ruleset(RuleVariant::PaperLiteral).size() == 78);
  CHECK(has_rule(rules, "zeroL --> maxS nil"));
  CHECK(has_rule(rules, "ite true $U $V --> $U"));
  for (const auto& r : rules.rules()) {
    CHECK_FALSE(r.lhs().is_var());
    for (const auto& arg : r.lhs().args()) CHECK(arg.size() >= 1);
  }
}

TEST_CASE("dump round trip") {
  for (auto variant : {RuleVariant::Corrected, RuleVariant::PaperLiteral}) {
    const auto& rules = builtin_ruleset(variant);
    std::string text = dump_rules(rules);
    std::vector<RewriteRule> parsed;
    std::size_t start = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      parsed.push_back(RewriteRule::parse(text.substr(start, end - start)));
      start = end + 1;
    }
    REQUIRE(parsed.size() == rules.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i].to_string() == rules.rules()[i].to_string());
  }
}

TEST_CASE("match") {
  auto m = match(parse_pattern("add nil $X"), parse_term("add nil zeroN"));
  REQUIRE(m);
  CHECK((*m)[0] == parse_term("zeroN"));
  CHECK_FALSE(match(parse_pattern("succN $X"), parse_term("zeroN")));
  CHECK_FALSE(match(parse_pattern("maxN $X $X"), parse_term("maxN zeroN (succN zeroN)")));
  CHECK(match(parse_pattern("maxN $X $X"), parse_term("maxN (succN zeroN) (succN zeroN)")));
}

TEST_CASE("instantiate inverts match") {
  Pattern p = parse_pattern("cons $U (cons $U $Q)");
  Term t = parse_term("cons zeroN (cons zeroN nil)");
  auto m = match(p, t);
  REQUIRE(m);
  CHECK(instantiate(p.term, *m) == t);
}

TEST_CASE("reduce basics") {
  const auto& rules = builtin_ruleset();
  auto r = reduce(parse_term("zeroL"), rules, Strategy::innermost(), 100);
  CHECK(r.result == parse_term("maxS nil"));
  CHECK(r.steps == 1);
  CHECK_FALSE(r.budget_exhausted);

  Term nf_x = encode_repr(repr_var(X));
  CHECK(reduce(encode_level(lv("x")), rules, Strategy::innermost(), 1000).result == nf_x);
  auto again = reduce(nf_x, rules, Strategy::outermost(), 1000);
  CHECK(again.steps == 0);
  CHECK(again.result == nf_x);

  auto cut = reduce(encode_level(lv("max(imax(x, y), s(z))")), rules, Strategy::innermost(), 5);
  CHECK(cut.budget_exhausted);
  CHECK(cut.steps == 5);
}

TEST_CASE("arithmetic and set rules") {
  const auto& rules = builtin_ruleset();
  auto run = [&](std::string_view s) { return reduce(parse_term(s), rules, Strategy::innermost(), 10000).result; };
  CHECK(run("plus (succN zeroN) (succN zeroN)") == numeral(2));
  CHECK(run("maxN (succN zeroN) (succN (succN zeroN))") == numeral(2));
  CHECK(run("leqN (succN zeroN) zeroN") == parse_term("false"));
  CHECK(run("add (add (add nil (succN zeroN)) zeroN) (succN zeroN)") ==
        parse_term("cons zeroN (cons (succN zeroN) nil)"));
  CHECK(run("subset (add nil zeroN) (add (add nil (succN zeroN)) zeroN)") == parse_term("true"));
  CHECK(run("del (add (add nil (succN zeroN)) zeroN) zeroN") == parse_term("cons (succN zeroN) nil"));
}

TEST_CASE("encodings") {
  CHECK(encode_level(lv("0")) == parse_term("zeroL"));
  CHECK(encode_level(lv("max(x, y)")) == parse_term("maxL (varL zeroN) (varL (succN zeroN))"));
  CHECK(encode_level(lv("s(0)")) == parse_term("succL zeroL"));
  CHECK(encode_repr({}) == parse_term("maxS nil"));
  CHECK(encode_repr(repr_var(X)) == parse_term("maxS (cons (As (cons zeroN nil) zeroN zeroN) nil)"));
  CHECK(decode_repr(parse_term("maxS nil")).empty());
  CHECK_THROWS_AS(decode_repr(parse_term("succL zeroL")), DecodeError);
  // not sorted
  CHECK_THROWS_AS(decode_repr(parse_term("maxS (cons (Bs nil (succN zeroN)) (cons (As (cons zeroN nil) zeroN zeroN) "
                                         "nil))")),
                  DecodeError);
}

TEST_CASE("encode_repr is injective and decodes back") {
  std::set<std::string> seen_terms, seen_reprs;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Repr r = normalize(random_level(71, i, 20));
    Term t = encode_repr(r);
    CHECK(decode_repr(t) == r);
    CHECK(sort_of(t) == Sort::Level);
    bool new_repr = seen_reprs.insert(show(r)).second;
    bool new_term = seen_terms.insert(print_term(t)).second;
    CHECK(new_repr == new_term);
  }
}

TEST_CASE("check_soundness") {
  CHECK(check_soundness(lv("imax(x, x)"), 100000));
  CHECK(check_soundness(lv("max(imax(x, y), imax(y, x))"), 100000));
  CHECK(check_soundness(lv("0"), 100000));
  for (std::uint64_t i = 0; i < 200; ++i) CHECK(check_soundness(random_level(81, i, 25), 1'000'000));
}

TEST_CASE("fast innermost path matches the generic stepper") {
  const auto& rules = builtin_ruleset();
  for (std::uint64_t i = 0; i < 60; ++i) {
    Term t = encode_level(random_level(91, i, 15));
    auto fast = reduce(t, rules, Strategy::innermost(), 1'000'000);
    auto slow = reduce(t, rules, Strategy::innermost(), 1'000'000, [](std::uint64_t, const RewriteRule&, const Term&) {});
    CHECK(fast.result == slow.result);
    CHECK(fast.steps == slow.steps);
  }
}

TEST_CASE("every intermediate term is well sorted") {
  const auto& rules = builtin_ruleset();
  for (std::uint64_t i = 0; i < 20; ++i) {
    Term t = encode_level(random_level(101, i, 12));
    std::uint64_t bad = 0, last = 0;
    reduce(t, rules, Strategy::random(i), 1'000'000, [&](std::uint64_t step, const RewriteRule&, const Term& whole) {
      last = step;
      if (sort_of(whole) != Sort::Level) ++bad;
    });
    CHECK(bad == 0);
    CHECK(last > 0);
  }
}

TEST_CASE("confluence sampling") {
  CHECK(sample_confluence(lv("0"), 2, 1, 1000).agree);
  CHECK_THROWS(sample_confluence(lv("0"), 1, 1, 1000));
  auto rep = sample_confluence(lv("max(imax(x, s(y)), imax(y, z))"), 5, 3, 1'000'000);
  CHECK(rep.agree);
  REQUIRE(rep.runs.size() == 5);
  CHECK(rep.strategies[0].kind == Strategy::Kind::LeftmostInnermost);
  CHECK(rep.strategies[1].kind == Strategy::Kind::LeftmostOutermost);
  for (const auto& run : rep.runs) CHECK(run.steps > 0);
}

TEST_CASE("substitution through the rules") {
  const auto& rules = builtin_ruleset();
  for (std::uint64_t i = 0; i < 100; ++i) {
    Repr r = normalize(random_level(111, i, 15));
    VarId y{static_cast<std::uint32_t>(i % 3)};
    Nat n = i % 3;
    auto out = reduce(subst_query(r, y, n), rules, Strategy::innermost(), 1'000'000);
    CHECK(out.result == encode_repr(subst_repr(r, y, n)));
  }
}

TEST_CASE("literal rules disagree with the semantics") {
  const auto& literal = builtin_ruleset(RuleVariant::PaperLiteral);
  // variable rule argument order
  auto v = reduce(encode_level(lv("y")), literal, Strategy::innermost(), 1000);
  CHECK_FALSE(v.result == encode_repr(repr_var(Y)));
  // evalS drops the rest of the set
  Repr r = repr_of({SubLevel::a({X, Y}, X, 2)});
  auto s = reduce(subst_query(r, X, 3), literal, Strategy::innermost(), 100000);
  CHECK(s.result == encode_repr(repr_of({SubLevel::b({}, 5)})));
  CHECK_FALSE(s.result == encode_repr(subst_repr(r, X, 3)));
  // maxHelper stops early
  Term q = Term::app(Sym::MaxL, {encode_repr(Repr::from_sorted_atoms({SubLevel::a({X}, X, 0), SubLevel::a({Y}, Y, 0),
                                                                       SubLevel::b({X}, 2), SubLevel::b({Y}, 2)})),
                                 encode_repr(repr_of({SubLevel::b({}, 2)}))});
  auto m = reduce(q, literal, Strategy::innermost(), 100000);
  auto fixed = reduce(q, builtin_ruleset(), Strategy::innermost(), 100000);
  CHECK_FALSE(m.result == fixed.result);
  CHECK_THROWS_AS(decode_repr(m.result), DecodeError);
  // pointwise successor
  auto succ = reduce(encode_level(lv("s(x)")), literal, Strategy::innermost(), 1000);
  CHECK_FALSE(succ.result == encode_repr(nf("s(x)")));
}
