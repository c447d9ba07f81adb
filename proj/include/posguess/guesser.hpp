#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posguess/lexicon.hpp"
#include "posguess/rule.hpp"

namespace posguess {

struct CascadeConfig {
  std::vector<RuleSet> stages;
  Tag fallback_common = "NN";
  Tag fallback_proper = "NP";
  bool lowercase_input = true;
};

struct RuleMatch {
  const TagSet* pos;
  std::size_t rule;  // index into the rule-set
};

/// First rule of rs, in list order, that fires on the word. Linear scan.
std::optional<RuleMatch> guess_with_ruleset(std::string_view word, const RuleSet& rs,
                                            const Lexicon& lexicon,
                                            std::string_view masked_word = {});

/// Affix-bucketed view over a canonically sorted rule-set. first_match gives
/// the same answer as guess_with_ruleset but only visits rules whose affix
/// occurs at the relevant end of the word.
class RuleIndex {
 public:
  /// Throws std::invalid_argument if rs is not in canonical order.
  explicit RuleIndex(const RuleSet& rs);

  std::optional<RuleMatch> first_match(std::string_view word, const Lexicon& lexicon,
                                       std::string_view masked_word = {}) const;

 private:
  const RuleSet* rs_;
  std::unordered_map<std::string, std::vector<std::size_t>, StringHash, std::equal_to<>>
      buckets_;
  std::size_t max_affix_ = 0;
};

enum class ProvenanceKind { Rule, FallbackCommon, FallbackProper };

struct GuessResult {
  TagSet pos;
  ProvenanceKind provenance = ProvenanceKind::FallbackCommon;
  std::size_t stage = 0;
  // Points into the owning Cascade; valid while it lives. Null for fallbacks.
  const GuessingRule* rule = nullptr;

  bool covered() const noexcept { return provenance == ProvenanceKind::Rule; }
};

std::string_view provenance_name(ProvenanceKind kind);

/// Owns the stages of a cascade and their indexes. Stages are applied in
/// order and the first stage whose rules fire decides the guess; words no
/// stage covers get the NN/NP capitalisation fallback.
class Cascade {
 public:
  /// Stages are re-sorted canonically.
  explicit Cascade(CascadeConfig cfg);

  Cascade(const Cascade&) = delete;
  Cascade& operator=(const Cascade&) = delete;

  const CascadeConfig& config() const noexcept { return cfg_; }

  GuessResult guess(std::string_view word, bool is_capitalized, const Lexicon& lexicon,
                    std::string_view masked_word = {}) const;

 private:
  CascadeConfig cfg_;
  std::vector<RuleIndex> indexes_;
};

GuessResult cascade_guess(std::string_view word, bool is_capitalized, const Cascade& cascade,
                          const Lexicon& lexicon);

struct WordQuery {
  std::string word;
  bool is_capitalized = false;
};

/// Elementwise cascade_guess; output order follows input order for any jobs.
std::vector<GuessResult> batch_guess(const std::vector<WordQuery>& words,
                                     const Cascade& cascade, const Lexicon& lexicon,
                                     unsigned jobs = 1);

}  // namespace posguess
