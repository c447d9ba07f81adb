#pragma once

#include <cstddef>
#include <vector>

#include "posguess/eval.hpp"
#include "posguess/rule.hpp"

namespace posguess {

struct LevelMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double coverage = 0.0;

  friend bool operator==(const LevelMetrics&, const LevelMetrics&) = default;
};

struct SweepRow {
  double theta_s = 0.0;
  LevelMetrics lexicon;
  LevelMetrics corpus;
  std::size_t rule_count = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::size_t selected = 0;  // index into rows
};

/// 0.50, 0.55, ..., 0.95.
std::vector<double> default_sweep_grid();

/// F1(P, R) · coverage on the lexicon plus the same on the corpus.
double sweep_aggregate(const SweepRow& row);

/// Filters rs at each threshold of the grid and evaluates the result as a
/// single-stage cascade. The selected row maximises sweep_aggregate; ties go
/// to the lower threshold. Throws std::invalid_argument if the grid is empty
/// or not ascending.
SweepResult sweep_thresholds(const RuleSet& rs, const Lexicon& lexicon,
                             const FrequencyTable& freqs, const std::vector<double>& grid,
                             int min_len = kDefaultMinEvalLength, unsigned jobs = 1);

}  // namespace posguess
