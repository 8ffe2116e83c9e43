#include "levelrep/harness.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"
#include "levelrep/rewrite.hpp"

namespace levelrep::harness {

namespace {

class Generator {
 public:
  Generator(const GenConfig& cfg, std::mt19937_64& rng) : cfg_(cfg), rng_(rng) {}

  Level tree(std::size_t n, Nat succ_run) {
    if (n <= 1) return leaf();
    bool succ_allowed = succ_run < cfg_.const_bound;
    if (n == 2) return succ_allowed ? Level::succ(leaf()) : leaf();
    if (succ_allowed && chance(0.2)) return Level::succ(tree(n - 1, succ_run + 1));
    std::size_t k = uniform(1, n - 2);
    Level a = tree(k, 0);
    Level b = tree(n - 1 - k, 0);
    return chance(0.5) ? Level::max(std::move(a), std::move(b)) : Level::imax(std::move(a), std::move(b));
  }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

 private:
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Level leaf() {
    if (cfg_.num_vars == 0 || chance(0.25)) return Level::zero();
    return Level::var(VarId{static_cast<std::uint32_t>(uniform(0, cfg_.num_vars - 1))});
  }

  const GenConfig& cfg_;
  std::mt19937_64& rng_;
};

}  // namespace

Level gen_level(const GenConfig& cfg, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  Generator gen(cfg, rng);
  std::size_t n = gen.uniform(1, std::max<std::size_t>(cfg.max_size, 1));
  return gen.tree(n, 0);
}

Valuation random_valuation(const VarSet& vs, Nat bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<Nat> value(0, bound);
  Valuation sigma;
  for (VarId v : vs) sigma.bind(v, value(rng));
  return sigma;
}

// ---------------------------------------------------------------------------
// Equivalence-preserving transformations

namespace {

using Kind = Level::Kind;

std::optional<Level> apply_law(const Level& t, std::size_t law) {
  auto is = [](const Level& l, Kind k) { return l.kind() == k; };
  switch (law) {
    case 0:  // imax(u, max(v, w)) = max(imax(u, v), imax(u, w))
      if (is(t, Kind::IMax) && is(t.right(), Kind::Max))
        return Level::max(Level::imax(t.left(), t.right().left()), Level::imax(t.left(), t.right().right()));
      break;
    case 1:  // imax(max(u, v), w) = max(imax(u, w), imax(v, w))
      if (is(t, Kind::IMax) && is(t.left(), Kind::Max))
        return Level::max(Level::imax(t.left().left(), t.right()), Level::imax(t.left().right(), t.right()));
      break;
    case 2:  // imax(u, imax(v, w)) = max(imax(u, w), imax(v, w))
      if (is(t, Kind::IMax) && is(t.right(), Kind::IMax))
        return Level::max(Level::imax(t.left(), t.right().right()), Level::imax(t.right().left(), t.right().right()));
      break;
    case 3:  // imax(u, 0) = 0
      if (is(t, Kind::IMax) && t.right().is_zero()) return Level::zero();
      break;
    case 4:  // imax(u, s(v)) = max(u, s(v))
      if (is(t, Kind::IMax) && is(t.right(), Kind::Succ)) return Level::max(t.left(), t.right());
      break;
    case 5:  // s(imax(v, w)) = max(s(w), imax(s(v), w))
      if (is(t, Kind::Succ) && is(t.child(), Kind::IMax))
        return Level::max(Level::succ(t.child().right()), Level::imax(Level::succ(t.child().left()), t.child().right()));
      break;
    case 6:  // max(u, v) = max(v, u)
      if (is(t, Kind::Max)) return Level::max(t.right(), t.left());
      break;
    case 7:  // s(max(u, v)) = max(s(u), s(v))
      if (is(t, Kind::Succ) && is(t.child(), Kind::Max))
        return Level::max(Level::succ(t.child().left()), Level::succ(t.child().right()));
      break;
    case 8:  // t = max(t, t)
      return Level::max(t, t);
    case 9:  // t = imax(t, t)
      return Level::imax(t, t);
    case 10:  // t = imax(0, t)
      return Level::imax(Level::zero(), t);
    case 11:  // t = max(t, 0)
      return Level::max(t, Level::zero());
  }
  return std::nullopt;
}

constexpr std::size_t kLawCount = 12;
constexpr std::size_t kSpecificLaws = 8;

// Rewrites the node at preorder position `target`; `law` < kLawCount.
Level rewrite_at(const Level& t, std::size_t& counter, std::size_t target, std::size_t law, bool& done) {
  if (done) return t;
  if (counter++ == target) {
    if (auto r = apply_law(t, law)) {
      done = true;
      return *r;
    }
    return t;
  }
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::Var:
      return t;
    case Kind::Succ:
      return Level::succ(rewrite_at(t.child(), counter, target, law, done));
    case Kind::Max:
    case Kind::IMax: {
      Level a = rewrite_at(t.left(), counter, target, law, done);
      Level b = rewrite_at(t.right(), counter, target, law, done);
      return t.kind() == Kind::Max ? Level::max(std::move(a), std::move(b)) : Level::imax(std::move(a), std::move(b));
    }
  }
  return t;
}

}  // namespace

Level equivalent_variant(const Level& t, std::size_t count, std::mt19937_64& rng) {
  Level cur = t;
  for (std::size_t i = 0; i < count; ++i) {
    bool done = false;
    // Prefer the structural laws; fall back to the always-applicable ones.
    for (int attempt = 0; attempt < 16 && !done; ++attempt) {
      std::size_t pos = std::uniform_int_distribution<std::size_t>(0, cur.size() - 1)(rng);
      std::size_t law = std::uniform_int_distribution<std::size_t>(0, kSpecificLaws - 1)(rng);
      std::size_t counter = 0;
      cur = rewrite_at(cur, counter, pos, law, done);
    }
    if (!done) {
      std::size_t pos = std::uniform_int_distribution<std::size_t>(0, cur.size() - 1)(rng);
      std::size_t law = std::uniform_int_distribution<std::size_t>(kSpecificLaws, kLawCount - 1)(rng);
      std::size_t counter = 0;
      cur = rewrite_at(cur, counter, pos, law, done);
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::Evaluation: return "evaluation";
    case Phase::RewritePath: return "rewrite";
    case Phase::Comparison: return "comparison";
    case Phase::SublevelOrder: return "sublevel-order";
  }
  return "?";
}

void StepStats::add(std::uint64_t steps, bool exhausted) {
  min = cases == 0 ? steps : std::min(min, steps);
  max = std::max(max, steps);
  total += steps;
  ++cases;
  if (exhausted) ++exhaustions;
}

CaseOutcome differential_case(const Level& t, const Level& paired, const DiffOptions& opts) {
  CaseOutcome out;
  auto fail = [&](Phase phase, std::optional<Valuation> witness, std::string detail) {
    out.failure = Failure{t, paired, phase, std::move(witness), std::move(detail)};
    return out;
  };

  const Repr r = normalize(t);
  const Repr r_paired = normalize(paired);

  // (a) evaluation of the representation against the level itself
  std::mt19937_64 rng(opts.seed);
  const VarSet vs = vars(t);
  const Nat sample_bound = default_oracle_bound(t, t);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    Valuation sigma = random_valuation(vs, sample_bound, rng);
    Nat expected = eval(t, sigma);
    Nat got = eval_repr(r, sigma);
    if (expected != got)
      return fail(Phase::Evaluation, sigma,
                  "level evaluates to " + std::to_string(expected) + ", representation to " + std::to_string(got));
  }

  // (b) rewrite path
  auto report = rewrite::reduce(rewrite::encode_level(t), rewrite::builtin_ruleset(), rewrite::Strategy::innermost(),
                                opts.budget);
  out.rewrite_steps = report.steps;
  out.budget_exhausted = report.budget_exhausted;
  if (report.budget_exhausted)
    return fail(Phase::RewritePath, std::nullopt, "step budget exhausted after " + std::to_string(report.steps));
  if (!(report.result == rewrite::encode_repr(r)))
    return fail(Phase::RewritePath, std::nullopt, "normal form differs: " + rewrite::print_term(report.result));

  // (c) comparison verdicts against the oracle
  const Nat bound = opts.bound ? opts.bound : default_oracle_bound(t, paired);
  struct Direction {
    const Level& lhs;
    const Level& rhs;
    const Repr& rl;
    const Repr& rr;
    const char* name;
  };
  const Direction dirs[] = {{t, paired, r, r_paired, "level <= paired"}, {paired, t, r_paired, r, "paired <= level"}};
  bool leq_both = true;
  for (const auto& d : dirs) {
    bool leq = leq_repr(d.rl, d.rr);
    leq_both = leq_both && leq;
    auto cex = find_counterexample_leq(d.lhs, d.rhs, bound);
    if (leq && cex) return fail(Phase::Comparison, cex, std::string(d.name) + " decided true but a witness exists");
    if (!leq && !cex)
      return fail(Phase::Comparison, std::nullopt,
                  std::string(d.name) + " decided false but no witness up to " + std::to_string(bound));
  }
  if (eq_repr(r, r_paired) != leq_both)
    return fail(Phase::Comparison, std::nullopt, "eq_repr disagrees with leq_repr in both directions");
  return out;
}

DiffReport run_fuzz(const FuzzConfig& cfg) {
  DiffReport report;
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    Level t = gen_level(cfg.gen, 2 * i);
    Level other = gen_level(cfg.gen, 2 * i + 1);
    std::mt19937_64 rng(cfg.gen.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    // Mix unrelated pairs with pairs known to be comparable or equivalent.
    Level paired = other;
    if (i % 3 == 1) paired = equivalent_variant(t, 3, rng);
    if (i % 3 == 2) paired = Level::max(t, other);
    DiffOptions opts = cfg.diff;
    opts.seed = cfg.diff.seed + i;
    CaseOutcome outcome = differential_case(t, paired, opts);
    ++report.cases_run;
    report.step_stats.add(outcome.rewrite_steps, outcome.budget_exhausted);
    if (outcome.failure) report.failures.push_back(std::move(*outcome.failure));
  }
  return report;
}

std::vector<SubLevel> enumerate_sublevels(std::uint32_t max_vars, Nat max_shift) {
  std::vector<SubLevel> out;
  const std::uint32_t subsets = 1u << max_vars;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::vector<VarId> ids;
    for (std::uint32_t i = 0; i < max_vars; ++i)
      if (mask & (1u << i)) ids.push_back(VarId{i});
    VarSet e(ids);
    for (VarId x : ids)
      for (Nat s = 0; s <= max_shift; ++s) out.push_back(SubLevel::a(e, x, s));
    for (Nat s = 1; s <= max_shift; ++s) out.push_back(SubLevel::b(e, s));
  }
  return out;
}

DiffReport exhaustive_sublevel_suite(std::uint32_t max_vars, Nat max_shift, Nat bound) {
  DiffReport report;
  const auto atoms = enumerate_sublevels(max_vars, max_shift);
  std::vector<VarId> ids;
  for (std::uint32_t i = 0; i < max_vars; ++i) ids.push_back(VarId{i});

  std::vector<Valuation> grid;
  for_each_grid_valuation(ids, bound, [&](const Valuation& s) {
    grid.push_back(s);
    return false;
  });
  std::vector<std::vector<Nat>> values(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (const auto& s : grid) values[i].push_back(eval_sub(atoms[i], s));

  const NameTable names = NameTable::with_default_names(max_vars);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      ++report.pairs_checked;
      std::optional<std::size_t> witness;
      for (std::size_t g = 0; g < grid.size() && !witness; ++g)
        if (values[i][g] > values[j][g]) witness = g;
      bool decided = leq_sub(atoms[i], atoms[j]);
      if (decided == !witness) continue;
      Failure f;
      f.phase = Phase::SublevelOrder;
      if (witness) f.witness = grid[*witness];
      f.detail = print_repr(insert_sub({}, atoms[i]), names) + " <= " + print_repr(insert_sub({}, atoms[j]), names) +
                 (decided ? " decided true, grid disagrees" : " decided false, grid finds no witness");
      report.failures.push_back(std::move(f));
    }
  }
  report.cases_run = atoms.size();
  return report;
}

std::string report_json(const DiffReport& report, const NameTable& names) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["casesRun"] = report.cases_run;
  doc["pairsChecked"] = report.pairs_checked;
  json failures = json::array();
  for (const auto& f : report.failures) {
    json jf;
    if (f.level) jf["level"] = print_level(*f.level, names);
    if (f.paired) jf["paired"] = print_level(*f.paired, names);
    jf["phase"] = phase_name(f.phase);
    if (f.witness) {
      json w = json::object();
      for (const auto& [v, n] : f.witness->bindings()) w[names.name(v)] = n;
      jf["witness"] = std::move(w);
    }
    jf["detail"] = f.detail;
    failures.push_back(std::move(jf));
  }
  doc["failures"] = std::move(failures);
  const auto& st = report.step_stats;
  doc["stepStats"] = json{{"cases", st.cases},         {"total", st.total}, {"min", st.min},
                          {"max", st.max},             {"mean", st.mean()}, {"exhaustions", st.exhaustions}};
  return doc.dump();
}

}  // namespace levelrep::harness
