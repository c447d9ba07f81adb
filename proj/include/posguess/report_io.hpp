#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "posguess/eval.hpp"
#include "posguess/sweep.hpp"

namespace posguess {

// Sweep TSV:
//   theta<TAB>lexP<TAB>lexR<TAB>lexC<TAB>corP<TAB>corR<TAB>corC<TAB>rules
void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_tsv(std::istream& in);

// Eval TSV, one row per report:
//   weighting<TAB>precision<TAB>recall<TAB>coverage<TAB>words_total<TAB>words_covered
void write_eval_tsv(std::ostream& out, const std::vector<EvalReport>& reports);
std::vector<EvalReport> read_eval_tsv(std::istream& in);

// total_words<TAB>unknown_words<TAB>total_mistagged<TAB>unknown_mistagged<TAB>total_score<TAB>unknown_score
void write_tagging_tsv(std::ostream& out, const TaggingScore& score);
TaggingScore read_tagging_tsv(std::istream& in);

/// Fixed six-decimal table for people.
void write_eval_table(std::ostream& out, const std::vector<EvalReport>& reports);

std::string eval_json(const std::vector<EvalReport>& reports, const TaggingScore* tagging);

}  // namespace posguess
