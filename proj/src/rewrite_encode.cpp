#include "levelrep/rewrite.hpp"

namespace levelrep::rewrite {

Term encode_level(const Level& t) {
  switch (t.kind()) {
    case Level::Kind::Zero:
      return Term::app(Sym::ZeroL);
    case Level::Kind::Succ:
      return Term::app(Sym::SuccL, {encode_level(t.child())});
    case Level::Kind::Var:
      return Term::app(Sym::VarL, {numeral(t.var().id)});
    case Level::Kind::Max:
      return Term::app(Sym::MaxL, {encode_level(t.left()), encode_level(t.right())});
    case Level::Kind::IMax:
      return Term::app(Sym::RuleL, {encode_level(t.left()), encode_level(t.right())});
  }
  return Term::app(Sym::ZeroL);
}

namespace {

template <class It, class F>
Term encode_list(It first, It last, F&& encode_elem) {
  Term list = Term::app(Sym::Nil);
  for (auto it = last; it != first;) {
    --it;
    list = Term::app(Sym::Cons, {encode_elem(*it), list});
  }
  return list;
}

Nat decode_numeral(const Term& t) {
  Nat n = 0;
  const Term* cur = &t;
  while (!cur->is_var() && cur->head() == Sym::SuccN) {
    ++n;
    cur = &cur->arg(0);
  }
  if (cur->is_var() || cur->head() != Sym::ZeroN) throw DecodeError("expected a numeral");
  return n;
}

template <class F>
void decode_list(const Term& t, F&& on_elem) {
  const Term* cur = &t;
  while (!cur->is_var() && cur->head() == Sym::Cons) {
    on_elem(cur->arg(0));
    cur = &cur->arg(1);
  }
  if (cur->is_var() || cur->head() != Sym::Nil) throw DecodeError("expected a cons list");
}

VarId decode_var(const Term& t) {
  Nat n = decode_numeral(t);
  if (n > UINT32_MAX) throw DecodeError("variable index out of range");
  return VarId{static_cast<std::uint32_t>(n)};
}

VarSet decode_varset(const Term& t) {
  std::vector<VarId> ids;
  decode_list(t, [&](const Term& e) { ids.push_back(decode_var(e)); });
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (!(ids[i - 1] < ids[i])) throw DecodeError("variable set is not strictly increasing");
  return VarSet(std::move(ids));
}

SubLevel decode_sub(const Term& t) {
  if (t.is_var()) throw DecodeError("expected a sublevel");
  try {
    if (t.head() == Sym::As) return SubLevel::a(decode_varset(t.arg(0)), decode_var(t.arg(1)), decode_numeral(t.arg(2)));
    if (t.head() == Sym::Bs) return SubLevel::b(decode_varset(t.arg(0)), decode_numeral(t.arg(1)));
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
  throw DecodeError("expected As or Bs");
}

}  // namespace

Term encode_varset(const VarSet& e) {
  return encode_list(e.begin(), e.end(), [](VarId x) { return numeral(x.id); });
}

Term encode_sub(const SubLevel& u) {
  if (u.is_a()) return Term::app(Sym::As, {encode_varset(u.set()), numeral(u.var().id), numeral(u.shift())});
  return Term::app(Sym::Bs, {encode_varset(u.set()), numeral(u.shift())});
}

Term encode_repr(const Repr& r) {
  return Term::app(Sym::MaxS, {encode_list(r.begin(), r.end(), [](const SubLevel& u) { return encode_sub(u); })});
}

Repr decode_repr(const Term& term) {
  if (term.is_var() || term.head() != Sym::MaxS) throw DecodeError("expected maxS applied to a sublevel list");
  std::vector<SubLevel> atoms;
  decode_list(term.arg(0), [&](const Term& e) { atoms.push_back(decode_sub(e)); });
  try {
    return Repr::from_sorted_atoms(std::move(atoms));
  } catch (const InvariantViolation& e) {
    throw DecodeError(e.what());
  }
}

bool check_soundness(const Level& t, std::uint64_t budget) {
  auto report = reduce(encode_level(t), builtin_ruleset(), Strategy::innermost(), budget);
  return !report.budget_exhausted && report.result == encode_repr(normalize(t));
}

ConfluenceReport sample_confluence(const Level& t, std::size_t count, std::uint64_t seed, std::uint64_t budget) {
  if (count < 2) throw std::invalid_argument("sample_confluence needs at least two strategies");
  ConfluenceReport out;
  out.strategies.push_back(Strategy::innermost());
  out.strategies.push_back(Strategy::outermost());
  for (std::size_t i = 2; i < count; ++i) out.strategies.push_back(Strategy::random(seed + i - 2));
  const Term start = encode_level(t);
  for (const auto& s : out.strategies) {
    out.runs.push_back(reduce(start, builtin_ruleset(), s, budget));
    const auto& run = out.runs.back();
    if (run.budget_exhausted || !(run.result == out.runs.front().result)) out.agree = false;
  }
  return out;
}

}  // namespace levelrep::rewrite
