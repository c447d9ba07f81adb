#pragma once

#include <cstdint>
#include <optional>

#include "posguess/lexicon.hpp"
#include "posguess/rule.hpp"

namespace posguess {

inline constexpr std::int64_t kDefaultThetaF = 3;
inline constexpr int kDefaultMaxEndingLength = 5;

/// The suffix extraction operator with mutation length n. The last n
/// characters of `shorter` become M; if `longer` starts with the remaining
/// stem, the leftover tail of `longer` is the affix. Returns nothing when the
/// words are equal, the stem would be empty or the affix is empty.
std::optional<GuessingRule> nabla_suffix(const LexiconEntry& longer,
                                         const LexiconEntry& shorter, int n);

/// Prefix variant: `longer` must end with the whole of `shorter`.
std::optional<GuessingRule> nabla_prefix(const LexiconEntry& longer,
                                         const LexiconEntry& shorter);

/// Applies the matching operator to every ordered pair of distinct lexicon
/// entries, merges identical rules by summing f and keeps rules with
/// f >= theta_f. kind must be Prefix (n = 0) or Suffix.
///
/// jobs > 1 partitions the main words across threads; the result is the
/// same as for jobs = 1.
RuleSet extract_morph_rules(const Lexicon& lexicon, RuleKind kind, int n,
                            std::int64_t theta_f = kDefaultThetaF, unsigned jobs = 1);

/// Ending rules from every eval-target word: each ending of 1..max_len
/// characters (shorter than the word) paired with the word's class.
RuleSet extract_ending_rules(const Lexicon& lexicon, int max_len = kDefaultMaxEndingLength,
                             std::int64_t theta_f = kDefaultThetaF,
                             int min_len = kDefaultMinEvalLength, unsigned jobs = 1);

}  // namespace posguess
