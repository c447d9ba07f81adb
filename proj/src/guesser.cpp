#include "posguess/guesser.hpp"

#include <algorithm>
#include <stdexcept>

#include "posguess/parallel.hpp"
#include "posguess/scoring.hpp"
#include "posguess/text.hpp"

namespace posguess {

std::optional<RuleMatch> guess_with_ruleset(std::string_view word, const RuleSet& rs,
                                            const Lexicon& lexicon,
                                            std::string_view masked_word) {
  for (std::size_t i = 0; i < rs.rules.size(); ++i)
    if (const TagSet* pos = fires(rs.rules[i], word, lexicon, masked_word))
      return RuleMatch{pos, i};
  return std::nullopt;
}

RuleIndex::RuleIndex(const RuleSet& rs) : rs_(&rs) {
  if (!rs.is_canonical()) throw std::invalid_argument("rule-set is not in canonical order");
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const auto& affix = rs.rules[i].affix;
    buckets_[affix].push_back(i);
    max_affix_ = std::max(max_affix_, affix.size());
  }
}

std::optional<RuleMatch> RuleIndex::first_match(std::string_view word, const Lexicon& lexicon,
                                                std::string_view masked_word) const {
  const bool prefix = rs_->kind == RuleKind::Prefix;
  // Canonical order puts longer affixes first; within one length only the
  // affix found at the word's edge can match.
  for (std::size_t len = std::min(max_affix_, word.size()); len >= 1; --len) {
    const auto affix = prefix ? word.substr(0, len) : word.substr(word.size() - len);
    auto it = buckets_.find(affix);
    if (it == buckets_.end()) continue;
    for (std::size_t i : it->second)
      if (const TagSet* pos = fires(rs_->rules[i], word, lexicon, masked_word))
        return RuleMatch{pos, i};
  }
  return std::nullopt;
}

std::string_view provenance_name(ProvenanceKind kind) {
  switch (kind) {
    case ProvenanceKind::Rule: return "rule";
    case ProvenanceKind::FallbackCommon: return "fallback-common";
    case ProvenanceKind::FallbackProper: return "fallback-proper";
  }
  return "?";
}

Cascade::Cascade(CascadeConfig cfg) : cfg_(std::move(cfg)) {
  validate_tag(cfg_.fallback_common);
  validate_tag(cfg_.fallback_proper);
  indexes_.reserve(cfg_.stages.size());
  for (auto& stage : cfg_.stages) {
    stage.sort_canonical();
    indexes_.emplace_back(stage);
  }
}

GuessResult Cascade::guess(std::string_view word, bool is_capitalized, const Lexicon& lexicon,
                           std::string_view masked_word) const {
  std::string lowered;
  if (cfg_.lowercase_input) {
    lowered = ascii_lower(word);
    word = lowered;
  }
  for (std::size_t s = 0; s < indexes_.size(); ++s) {
    if (auto match = indexes_[s].first_match(word, lexicon, masked_word)) {
      GuessResult r;
      r.pos = *match->pos;
      r.provenance = ProvenanceKind::Rule;
      r.stage = s;
      r.rule = &cfg_.stages[s].rules[match->rule];
      return r;
    }
  }
  GuessResult r;
  r.provenance = is_capitalized ? ProvenanceKind::FallbackProper : ProvenanceKind::FallbackCommon;
  r.pos = TagSet{is_capitalized ? cfg_.fallback_proper : cfg_.fallback_common};
  return r;
}

GuessResult cascade_guess(std::string_view word, bool is_capitalized, const Cascade& cascade,
                          const Lexicon& lexicon) {
  return cascade.guess(word, is_capitalized, lexicon);
}

std::vector<GuessResult> batch_guess(const std::vector<WordQuery>& words,
                                     const Cascade& cascade, const Lexicon& lexicon,
                                     unsigned jobs) {
  std::vector<GuessResult> out(words.size());
  parallel_chunks(words.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      out[i] = cascade.guess(words[i].word, words[i].is_capitalized, lexicon);
  });
  return out;
}

}  // namespace posguess
