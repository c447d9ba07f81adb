#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posguess/lexicon.hpp"
#include "posguess/rule.hpp"

namespace posguess {

inline constexpr double kScoreZ = 1.65;

/// The lexicon form a morphological rule looks up for `word` (word minus S
/// plus M), or nothing when the affix does not match or the result is empty.
/// Ending rules never look anything up and always yield nothing.
std::optional<std::string> rule_stem(const GuessingRule& rule, std::string_view word);

/// The guessed class, or nullptr when the rule does not fire. A lookup that
/// lands on masked_word is treated as a miss.
const TagSet* fires(const GuessingRule& rule, std::string_view word, const Lexicon& lexicon,
                    std::string_view masked_word = {});

struct RuleOutcome {
  double x = 0.0;
  double n = 0.0;
  double p_hat = 0.0;
  double score = 0.0;
};

/// (x + 0.5) / (n + 1).
double smoothed_p(double x, double n);

/// p̂ − 1.65·sqrt(p̂(1−p̂)/n) / (1 + ln affix_len). Throws std::invalid_argument
/// unless n > 0, 0 <= x <= n and affix_len >= 1.
double score(double x, double n, int affix_len);

/// Indexes the frequency-bearing lexicon words so that each rule is replayed
/// only over words carrying its affix.
class ScoringContext {
 public:
  ScoringContext(const Lexicon& lexicon, const FrequencyTable& freqs);

  /// nullopt when the rule fires on no frequency-bearing lexicon word.
  std::optional<RuleOutcome> outcome(const GuessingRule& rule) const;

 private:
  struct Word {
    std::string key;  // the word, reversed for the suffix index
    const std::string* word;
    const TagSet* pos;
    std::int64_t count;
  };

  const Lexicon* lexicon_;
  std::vector<Word> by_prefix_;
  std::vector<Word> by_suffix_;
};

/// Replays the rule over every lexicon word w with c(w) >= 1: n sums c(w)
/// where the rule fires, x sums c(w) where the guess equals w's class.
std::optional<RuleOutcome> rule_outcomes(const GuessingRule& rule, const Lexicon& lexicon,
                                         const FrequencyTable& freqs);

/// Annotates every rule with its statistics, drops never-firing rules and
/// re-sorts canonically.
RuleSet score_ruleset(const RuleSet& rs, const Lexicon& lexicon, const FrequencyTable& freqs,
                      unsigned jobs = 1);

/// Keeps rules with score > theta_s. Throws std::invalid_argument if any rule
/// is unscored.
RuleSet threshold_filter(const RuleSet& rs, double theta_s);

}  // namespace posguess
