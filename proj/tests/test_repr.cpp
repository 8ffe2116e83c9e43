#include "doctest.h"
#include "support.hpp"

using namespace levelrep;
using namespace test_support;

namespace {
const SubLevel Ax0 = SubLevel::a({X}, X, 0);
const SubLevel Ax1 = SubLevel::a({X}, X, 1);
const SubLevel B1 = SubLevel::b({}, 1);
}  // namespace

TEST_CASE("repr_zero and repr_var") {
  CHECK(repr_zero().empty());
  CHECK(eval_repr(repr_zero(), {{X, 4}}) == 0);
  CHECK(leq_repr(repr_zero(), nf("max(x, 3)")));
  CHECK(repr_var(X) == repr_of({Ax0}));
  CHECK(eval_repr(repr_var(X), {{X, 9}}) == 9);
  CHECK_FALSE(repr_var(X) == repr_var(Y));
}

TEST_CASE("succ_repr") {
  CHECK(succ_repr({}) == repr_of({B1}));
  // a shifted atom is 0 when its set has a 0, so B{}+1 stays
  CHECK(succ_repr(repr_var(X)) == repr_of({Ax1, B1}));
  CHECK(succ_repr(repr_of({Ax0, SubLevel::b({Y}, 1)})) == repr_of({Ax1, SubLevel::b({Y}, 2), B1}));
  CHECK(succ_repr(repr_of({SubLevel::b({}, 3)})) == repr_of({SubLevel::b({}, 4)}));
  CHECK(eval_repr(succ_repr(repr_var(X)), {{X, 0}}) == 1);
}

TEST_CASE("insert_sub") {
  CHECK(insert_sub({}, Ax0) == repr_of({Ax0}));
  CHECK(insert_sub(repr_of({Ax1}), Ax0) == repr_of({Ax1}));
  Repr r = insert_sub(repr_of({Ax0}), B1);
  CHECK(r.size() == 2);
  CHECK(r.is_valid());
  CHECK(show(r) == "max{A{x}(x)+0, B{}+1}");
}

TEST_CASE("insert_sub drops every dominated atom") {
  Repr r = Repr::from_sorted_atoms({SubLevel::a({X}, X, 0), SubLevel::a({Y}, Y, 0), SubLevel::b({X}, 2),
                                    SubLevel::b({Y}, 2)});
  Repr out = insert_sub(r, SubLevel::b({}, 2));
  CHECK(show(out) == "max{A{x}(x)+0, A{y}(y)+0, B{}+2}");
}

TEST_CASE("from_sorted_atoms validates") {
  CHECK_THROWS_AS(Repr::from_sorted_atoms({Ax1, Ax0}), InvariantViolation);
  CHECK_THROWS_AS(Repr::from_sorted_atoms({Ax0, Ax1}), InvariantViolation);
}

TEST_CASE("max_repr") {
  Repr r = nf("imax(x, max(y, 2))");
  CHECK(max_repr({}, r) == r);
  CHECK(max_repr(r, r) == r);
  CHECK(max_repr(repr_var(X), succ_repr(repr_var(X))) == succ_repr(repr_var(X)));
}

TEST_CASE("imax_repr") {
  Repr r = nf("max(x, s(y))");
  CHECK(imax_repr({}, r) == r);
  CHECK(imax_repr(r, {}).empty());
  CHECK(imax_repr(repr_var(X), repr_var(Y)) == repr_of({SubLevel::a({Y}, Y, 0), SubLevel::a({X, Y}, X, 0)}));
  Level t = lv("imax(x, y)");
  CHECK_FALSE(find_counterexample_leq(t, Level::max(Level::imax(t, t), t), 3));
}

TEST_CASE("normalize") {
  CHECK(nf("imax(x, x)") == nf("x"));
  CHECK(nf("max(imax(x, y), imax(y, x))") == nf("max(x, y)"));
  CHECK(nf("imax(x, s(y))") == nf("max(x, s(y))"));
  CHECK(nf("s(0)") == repr_of({B1}));
  CHECK(nf("max(imax(x, y), x)") == nf("max(x, y)"));
  CHECK(nf("max(s(x), x)") == nf("s(x)"));
  CHECK(nf("max(x, x)") == nf("x"));
}

TEST_CASE("leq_repr and eq_repr") {
  CHECK(leq_repr(nf("x"), nf("max(x, y)")));
  CHECK(leq_repr(nf("max(imax(x, y), x)"), nf("max(x, y)")));
  CHECK(leq_repr(nf("max(x, y)"), nf("max(imax(x, y), x)")));
  Repr a = nf("s(imax(y, x))"), b = nf("imax(s(y), s(x))");
  CHECK_FALSE((leq_repr(a, b) && leq_repr(b, a)));
  CHECK_FALSE(eq_repr(a, b));
  CHECK(eq_repr(nf("imax(x, x)"), nf("x")));
  CHECK_FALSE(eq_repr(repr_var(X), repr_var(Y)));
}

TEST_CASE("eq_repr matches leq_repr both ways") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Repr a = normalize(random_level(21, 2 * i, 12)), b = normalize(random_level(21, 2 * i + 1, 12));
    CHECK(eq_repr(a, b) == (leq_repr(a, b) && leq_repr(b, a)));
    CHECK(eq_repr(a, a));
  }
}

TEST_CASE("subst_repr") {
  CHECK(subst_repr(repr_of({SubLevel::b({X}, 1)}), X, 0).empty());
  CHECK(subst_repr(repr_of({SubLevel::a({X, Y}, X, 2)}), X, 3) == repr_of({SubLevel::b({Y}, 5)}));
  CHECK(subst_repr(repr_of({Ax0}), Y, 5) == repr_of({Ax0}));
}

TEST_CASE("subst_repr commutes with evaluation") {
  std::mt19937_64 rng(5);
  for (std::uint64_t i = 0; i < 300; ++i) {
    Level t = random_level(31, i, 20);
    VarId y{static_cast<std::uint32_t>(i % 3)};
    Nat n = i % 4;
    Repr r = subst_repr(normalize(t), y, n);
    CHECK(r.is_valid());
    VarSet rest = set_delete(vars(t), y);
    for (int k = 0; k < 10; ++k) {
      Valuation s = harness::random_valuation(rest, 4, rng);
      Valuation full = s;
      full.bind(y, n);
      CHECK(eval_repr(r, s) == eval(t, full));
    }
  }
}

TEST_CASE("normalize is sound and minimal") {
  std::mt19937_64 rng(9);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Level t = random_level(41, i, 30);
    Repr r = normalize(t);
    CHECK(r.is_valid());
    for (int k = 0; k < 10; ++k) {
      Valuation s = harness::random_valuation(vars(t), 5, rng);
      CHECK(eval_repr(r, s) == eval(t, s));
    }
  }
}

TEST_CASE("operations on normal inputs agree with normalize") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Level a = random_level(51, 2 * i, 15), b = random_level(51, 2 * i + 1, 15);
    Repr ra = normalize(a), rb = normalize(b);
    CHECK(normalize(Level::max(a, b)) == max_repr(ra, rb));
    CHECK(normalize(Level::imax(a, b)) == imax_repr(ra, rb));
    CHECK(normalize(Level::succ(a)) == succ_repr(ra));
  }
}

TEST_CASE("distinct representations are separated by the oracle") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Level a = random_level(61, 2 * i, 12), b = random_level(61, 2 * i + 1, 12);
    Repr ra = normalize(a), rb = normalize(b);
    if (eq_repr(ra, rb)) continue;
    Nat bound = std::max(ra.max_shift(), rb.max_shift()) + 3;
    CHECK((find_counterexample_leq(a, b, bound) || find_counterexample_leq(b, a, bound)));
  }
}
