#include "posguess/sweep.hpp"

#include <stdexcept>

#include "posguess/scoring.hpp"

namespace posguess {

std::vector<double> default_sweep_grid() {
  std::vector<double> grid;
  for (int i = 50; i <= 95; i += 5) grid.push_back(i / 100.0);
  return grid;
}

namespace {

double f1_times_coverage(const LevelMetrics& m) {
  const double pr = m.precision + m.recall;
  const double f1 = pr > 0.0 ? 2.0 * m.precision * m.recall / pr : 0.0;
  return f1 * m.coverage;
}

LevelMetrics metrics_of(const EvalReport& r) { return {r.precision, r.recall, r.coverage}; }

}  // namespace

double sweep_aggregate(const SweepRow& row) {
  return f1_times_coverage(row.lexicon) + f1_times_coverage(row.corpus);
}

SweepResult sweep_thresholds(const RuleSet& rs, const Lexicon& lexicon,
                             const FrequencyTable& freqs, const std::vector<double>& grid,
                             int min_len, unsigned jobs) {
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i - 1] < grid[i])) throw std::invalid_argument("sweep grid must be ascending");

  SweepResult result;
  for (double theta : grid) {
    CascadeConfig cfg;
    cfg.stages.push_back(threshold_filter(rs, theta));
    const Cascade cascade(std::move(cfg));
    const auto [lex, cor] = evaluate_both(cascade, lexicon, freqs, min_len, jobs);
    SweepRow row;
    row.theta_s = theta;
    row.lexicon = metrics_of(lex);
    row.corpus = metrics_of(cor);
    row.rule_count = cascade.config().stages.front().rules.size();
    if (!result.rows.empty() && sweep_aggregate(row) > sweep_aggregate(result.rows[result.selected]))
      result.selected = result.rows.size();
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace posguess
