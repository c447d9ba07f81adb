#include "posguess/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "posguess/parallel.hpp"

namespace posguess {

std::optional<std::string> rule_stem(const GuessingRule& rule, std::string_view word) {
  const std::string_view affix(rule.affix);
  switch (rule.kind) {
    case RuleKind::Suffix: {
      if (!word.ends_with(affix)) return std::nullopt;
      std::string stem(word.substr(0, word.size() - affix.size()));
      stem += rule.mutation;
      if (stem.empty()) return std::nullopt;
      return stem;
    }
    case RuleKind::Prefix:
      if (word.size() <= affix.size() || !word.starts_with(affix)) return std::nullopt;
      return std::string(word.substr(affix.size()));
    case RuleKind::Ending:
      return std::nullopt;
  }
  return std::nullopt;
}

const TagSet* fires(const GuessingRule& rule, std::string_view word, const Lexicon& lexicon,
                    std::string_view masked_word) {
  if (rule.kind == RuleKind::Ending)
    return word.size() > rule.affix.size() && word.ends_with(rule.affix) ? &rule.r_class
                                                                         : nullptr;
  const auto stem = rule_stem(rule, word);
  if (!stem || (!masked_word.empty() && *stem == masked_word)) return nullptr;
  const TagSet* found = lexicon.find(*stem);
  if (found == nullptr || !rule.i_class || *found != *rule.i_class) return nullptr;
  return &rule.r_class;
}

double smoothed_p(double x, double n) { return (x + 0.5) / (n + 1.0); }

double score(double x, double n, int affix_len) {
  if (!(n > 0.0) || !(x >= 0.0) || !(x <= n) || !std::isfinite(n) || affix_len < 1)
    throw std::invalid_argument("score needs n > 0, 0 <= x <= n and affix length >= 1");
  const double p = smoothed_p(x, n);
  return p - kScoreZ * std::sqrt(p * (1.0 - p) / n) / (1.0 + std::log(affix_len));
}

ScoringContext::ScoringContext(const Lexicon& lexicon, const FrequencyTable& freqs)
    : lexicon_(&lexicon) {
  for (const auto& [word, pos] : lexicon.entries()) {
    const auto c = freqs.count(word);
    if (c < 1) continue;
    by_prefix_.push_back({word, &word, &pos, c});
    by_suffix_.push_back({std::string(word.rbegin(), word.rend()), &word, &pos, c});
  }
  auto by_key = [](const Word& a, const Word& b) { return a.key < b.key; };
  std::sort(by_prefix_.begin(), by_prefix_.end(), by_key);
  std::sort(by_suffix_.begin(), by_suffix_.end(), by_key);
}

std::optional<RuleOutcome> ScoringContext::outcome(const GuessingRule& rule) const {
  const bool prefix = rule.kind == RuleKind::Prefix;
  const auto& index = prefix ? by_prefix_ : by_suffix_;
  const std::string key = prefix ? rule.affix : std::string(rule.affix.rbegin(), rule.affix.rend());
  auto it = std::lower_bound(index.begin(), index.end(), key,
                             [](const Word& w, const std::string& k) { return w.key < k; });
  // Integer sums keep the totals independent of visiting order.
  std::int64_t x = 0;
  std::int64_t n = 0;
  for (; it != index.end() && it->key.starts_with(key); ++it) {
    const TagSet* guess = fires(rule, *it->word, *lexicon_);
    if (guess == nullptr) continue;
    n += it->count;
    if (*guess == *it->pos) x += it->count;
  }
  if (n == 0) return std::nullopt;
  RuleOutcome out;
  out.x = static_cast<double>(x);
  out.n = static_cast<double>(n);
  out.p_hat = smoothed_p(out.x, out.n);
  out.score = score(out.x, out.n, static_cast<int>(rule.affix.size()));
  return out;
}

std::optional<RuleOutcome> rule_outcomes(const GuessingRule& rule, const Lexicon& lexicon,
                                         const FrequencyTable& freqs) {
  return ScoringContext(lexicon, freqs).outcome(rule);
}

RuleSet score_ruleset(const RuleSet& rs, const Lexicon& lexicon, const FrequencyTable& freqs,
                      unsigned jobs) {
  const ScoringContext ctx(lexicon, freqs);
  std::vector<std::optional<RuleOutcome>> outcomes(rs.rules.size());
  parallel_chunks(rs.rules.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) outcomes[i] = ctx.outcome(rs.rules[i]);
  });
  RuleSet out;
  out.kind = rs.kind;
  out.mutation_len = rs.mutation_len;
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    if (!outcomes[i]) continue;
    GuessingRule rule = rs.rules[i];
    rule.stats = RuleStats{outcomes[i]->x, outcomes[i]->n, outcomes[i]->score};
    out.rules.push_back(std::move(rule));
  }
  out.sort_canonical();
  return out;
}

RuleSet threshold_filter(const RuleSet& rs, double theta_s) {
  RuleSet out;
  out.kind = rs.kind;
  out.mutation_len = rs.mutation_len;
  for (const auto& rule : rs.rules) {
    if (!rule.stats) throw std::invalid_argument("threshold_filter needs scored rules: " + describe(rule));
    if (rule.stats->score > theta_s) out.rules.push_back(rule);
  }
  return out;
}

}  // namespace posguess
