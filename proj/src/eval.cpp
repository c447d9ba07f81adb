#include "posguess/eval.hpp"

#include <algorithm>
#include <stdexcept>

#include "posguess/parallel.hpp"
#include "posguess/text.hpp"

namespace posguess {

std::string_view weighting_name(Weighting w) { return w == Weighting::Type ? "type" : "token"; }

Weighting weighting_from_name(std::string_view name) {
  if (name == "type") return Weighting::Type;
  if (name == "token") return Weighting::Token;
  throw std::invalid_argument("unknown weighting '" + std::string(name) + "'");
}

PrecisionRecall pr_of_guess(const TagSet& guessed, const TagSet& truth) {
  if (guessed.empty() || truth.empty())
    throw std::invalid_argument("pr_of_guess needs non-empty tag sets");
  const auto hit = static_cast<double>(guessed.intersection_size(truth));
  return {hit / static_cast<double>(guessed.size()), hit / static_cast<double>(truth.size())};
}

namespace {

struct WordOutcome {
  std::int64_t count = 0;  // corpus frequency, 0 if absent
  bool covered = false;
  PrecisionRecall pr{0.0, 0.0};
};

// Per-word outcomes for every eval target, in byte order of the words.
std::vector<WordOutcome> replay(const Cascade& cascade, const Lexicon& lexicon,
                                const FrequencyTable* freqs, int min_len, unsigned jobs) {
  std::vector<const std::pair<const std::string, TagSet>*> targets;
  for (const auto& entry : lexicon.entries())
    if (is_eval_target(entry.first, entry.second, lexicon, min_len)) targets.push_back(&entry);
  std::sort(targets.begin(), targets.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });

  std::vector<WordOutcome> out(targets.size());
  parallel_chunks(targets.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [word, truth] = *targets[i];
      WordOutcome& o = out[i];
      o.count = freqs ? freqs->count(word) : 0;
      const bool capitalized = is_ascii_upper(word.front());
      const GuessResult g = cascade.guess(word, capitalized, lexicon, word);
      if (!g.covered()) continue;
      o.covered = true;
      o.pr = pr_of_guess(g.pos, truth);
    }
  });
  return out;
}

EvalReport summarise(const std::vector<WordOutcome>& outcomes, Weighting weighting) {
  EvalReport r;
  r.weighting = weighting;
  double p_sum = 0.0;
  double r_sum = 0.0;
  for (const auto& o : outcomes) {
    const std::int64_t w = weighting == Weighting::Type ? 1 : o.count;
    if (w == 0) continue;
    r.words_total += w;
    if (!o.covered) continue;
    r.words_covered += w;
    p_sum += static_cast<double>(w) * o.pr.precision;
    r_sum += static_cast<double>(w) * o.pr.recall;
  }
  if (r.words_total > 0)
    r.coverage = static_cast<double>(r.words_covered) / static_cast<double>(r.words_total);
  if (r.words_covered > 0) {
    r.precision = p_sum / static_cast<double>(r.words_covered);
    r.recall = r_sum / static_cast<double>(r.words_covered);
  }
  return r;
}

}  // namespace

EvalReport evaluate_lexicon(const Cascade& cascade, const Lexicon& lexicon, int min_len,
                            unsigned jobs) {
  return summarise(replay(cascade, lexicon, nullptr, min_len, jobs), Weighting::Type);
}

EvalReport evaluate_corpus(const Cascade& cascade, const Lexicon& lexicon,
                           const FrequencyTable& freqs, int min_len, unsigned jobs) {
  return summarise(replay(cascade, lexicon, &freqs, min_len, jobs), Weighting::Token);
}

std::pair<EvalReport, EvalReport> evaluate_both(const Cascade& cascade, const Lexicon& lexicon,
                                                const FrequencyTable& freqs, int min_len,
                                                unsigned jobs) {
  const auto outcomes = replay(cascade, lexicon, &freqs, min_len, jobs);
  return {summarise(outcomes, Weighting::Type), summarise(outcomes, Weighting::Token)};
}

TaggingScore TaggingScore::from_counts(std::int64_t total_words, std::int64_t unknown_words,
                                       std::int64_t total_mistagged,
                                       std::int64_t unknown_mistagged) {
  if (total_words < 0 || unknown_words < 0 || unknown_words > total_words ||
      total_mistagged < 0 || total_mistagged > total_words || unknown_mistagged < 0 ||
      unknown_mistagged > unknown_words || unknown_mistagged > total_mistagged)
    throw std::invalid_argument("inconsistent tagging counts");
  TaggingScore s;
  s.total_words = total_words;
  s.unknown_words = unknown_words;
  s.total_mistagged = total_mistagged;
  s.unknown_mistagged = unknown_mistagged;
  if (total_words > 0)
    s.total_score = 1.0 - static_cast<double>(total_mistagged) / static_cast<double>(total_words);
  if (unknown_words > 0)
    s.unknown_score =
        1.0 - static_cast<double>(unknown_mistagged) / static_cast<double>(unknown_words);
  return s;
}

TaggingScore tagging_scores(const std::vector<std::pair<std::string, Tag>>& gold,
                            const std::vector<Tag>& predicted,
                            const std::vector<bool>& unknown_mask) {
  if (gold.size() != predicted.size() || gold.size() != unknown_mask.size())
    throw std::invalid_argument("gold, predicted and unknown mask differ in length");
  if (gold.empty()) throw std::invalid_argument("no tokens to score");
  std::int64_t unknown = 0;
  std::int64_t wrong = 0;
  std::int64_t unknown_wrong = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool miss = gold[i].second != predicted[i];
    wrong += miss;
    if (unknown_mask[i]) {
      ++unknown;
      unknown_wrong += miss;
    }
  }
  return TaggingScore::from_counts(static_cast<std::int64_t>(gold.size()), unknown, wrong,
                                   unknown_wrong);
}

}  // namespace posguess
