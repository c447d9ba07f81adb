#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "posguess/guesser.hpp"
#include "posguess/lexicon.hpp"

namespace posguess {

enum class Weighting { Type, Token };

std::string_view weighting_name(Weighting w);
Weighting weighting_from_name(std::string_view name);

/// Guessing quality over eval-target words. Precision and recall are means
/// over covered words only. For token weighting the word counts are in
/// corpus tokens, so coverage = words_covered / words_total either way.
/// Every metric is 0 when its denominator is 0.
struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double coverage = 0.0;
  std::int64_t words_total = 0;
  std::int64_t words_covered = 0;
  Weighting weighting = Weighting::Type;

  bool degenerate() const noexcept { return words_covered == 0; }

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct PrecisionRecall {
  double precision;
  double recall;
};

/// |guessed ∩ truth| over |guessed| and over |truth|. Throws
/// std::invalid_argument if either set is empty.
PrecisionRecall pr_of_guess(const TagSet& guessed, const TagSet& truth);

/// Guesses every eval-target lexicon word with its own entry hidden.
EvalReport evaluate_lexicon(const Cascade& cascade, const Lexicon& lexicon,
                            int min_len = kDefaultMinEvalLength, unsigned jobs = 1);

/// As evaluate_lexicon, with each word weighted by its corpus frequency;
/// words absent from the table do not count.
EvalReport evaluate_corpus(const Cascade& cascade, const Lexicon& lexicon,
                           const FrequencyTable& freqs, int min_len = kDefaultMinEvalLength,
                           unsigned jobs = 1);

/// Both reports from one pass over the lexicon.
std::pair<EvalReport, EvalReport> evaluate_both(const Cascade& cascade, const Lexicon& lexicon,
                                                const FrequencyTable& freqs,
                                                int min_len = kDefaultMinEvalLength,
                                                unsigned jobs = 1);

struct TaggingScore {
  double total_score = 0.0;
  double unknown_score = 0.0;
  std::int64_t total_words = 0;
  std::int64_t unknown_words = 0;
  std::int64_t total_mistagged = 0;
  std::int64_t unknown_mistagged = 0;

  static TaggingScore from_counts(std::int64_t total_words, std::int64_t unknown_words,
                                  std::int64_t total_mistagged,
                                  std::int64_t unknown_mistagged);

  friend bool operator==(const TaggingScore&, const TaggingScore&) = default;
};

/// Tagging accuracy overall and on unknown tokens. Throws
/// std::invalid_argument when the three sequences differ in length or are
/// empty.
TaggingScore tagging_scores(const std::vector<std::pair<std::string, Tag>>& gold,
                            const std::vector<Tag>& predicted,
                            const std::vector<bool>& unknown_mask);

}  // namespace posguess
