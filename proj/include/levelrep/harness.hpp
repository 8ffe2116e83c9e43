#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "levelrep/level.hpp"
#include "levelrep/repr.hpp"
#include "levelrep/surface.hpp"

namespace levelrep::harness {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_size = 50;  ///< node count, at least 1
  std::uint32_t num_vars = 3;
  Nat const_bound = 3;  ///< largest successor run generated in one place
};

/// Deterministic in (cfg, index). Variables are drawn from ids 0..num_vars-1.
Level gen_level(const GenConfig& cfg, std::uint64_t index);

/// Random valuation of `vs` with values in {0..bound}.
Valuation random_valuation(const VarSet& vs, Nat bound, std::mt19937_64& rng);

/// Applies `count` random semantics-preserving rewrites (distribution laws,
/// imax on 0 and successors, max idempotence and commutativity) at random
/// positions of t.
Level equivalent_variant(const Level& t, std::size_t count, std::mt19937_64& rng);

enum class Phase : std::uint8_t {
  Evaluation,     ///< eval_repr(normalize t) != eval t
  RewritePath,    ///< rewrite normal form differs or budget ran out
  Comparison,     ///< leq/eq verdict contradicted by the grid oracle
  SublevelOrder,  ///< leq_sub contradicted by exhaustive evaluation
};

std::string phase_name(Phase p);

struct Failure {
  std::optional<Level> level;
  std::optional<Level> paired;
  Phase phase = Phase::Evaluation;
  std::optional<Valuation> witness;
  std::string detail;
};

struct DiffOptions {
  /// Grid bound for the comparison phase; 0 selects default_oracle_bound.
  Nat bound = 0;
  std::uint64_t budget = 1'000'000;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
};

struct CaseOutcome {
  std::optional<Failure> failure;
  std::uint64_t rewrite_steps = 0;
  bool budget_exhausted = false;
};

/// Cross-checks normalize/eval, the rewrite path, and (against `paired`) the
/// leq/eq verdicts with the grid oracle. Reports the first disagreement.
CaseOutcome differential_case(const Level& t, const Level& paired, const DiffOptions& opts);

struct StepStats {
  std::uint64_t cases = 0;
  std::uint64_t total = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t exhaustions = 0;

  void add(std::uint64_t steps, bool exhausted);
  double mean() const { return cases ? static_cast<double>(total) / static_cast<double>(cases) : 0.0; }
};

struct DiffReport {
  std::uint64_t cases_run = 0;
  std::vector<Failure> failures;
  StepStats step_stats;
  /// Extra counters, e.g. pair counts of the exhaustive suite.
  std::uint64_t pairs_checked = 0;

  bool ok() const { return failures.empty(); }
};

struct FuzzConfig {
  std::size_t cases = 1000;
  GenConfig gen;
  DiffOptions diff;
};

/// Runs differential_case on consecutive generated pairs.
DiffReport run_fuzz(const FuzzConfig& cfg);

/// Every valid sublevel over `max_vars` variables with shifts <= max_shift.
std::vector<SubLevel> enumerate_sublevels(std::uint32_t max_vars, Nat max_shift);

/// Checks leq_sub on every ordered pair against exhaustive evaluation on the
/// grid {0..bound}^max_vars.
DiffReport exhaustive_sublevel_suite(std::uint32_t max_vars, Nat max_shift, Nat bound);

/// JSON in the style of print_repr_json.
std::string report_json(const DiffReport& report, const NameTable& names);

}  // namespace levelrep::harness
