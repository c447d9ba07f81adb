#include "posguess/induction.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "posguess/parallel.hpp"

namespace posguess {

std::optional<GuessingRule> nabla_suffix(const LexiconEntry& longer,
                                         const LexiconEntry& shorter, int n) {
  if (n < 0 || longer.word == shorter.word) return std::nullopt;
  const auto len = static_cast<std::size_t>(n);
  if (shorter.word.size() <= len) return std::nullopt;
  const std::string_view stem(shorter.word.data(), shorter.word.size() - len);
  if (longer.word.size() <= stem.size() || !std::string_view(longer.word).starts_with(stem))
    return std::nullopt;
  GuessingRule rule;
  rule.kind = RuleKind::Suffix;
  rule.affix = longer.word.substr(stem.size());
  rule.mutation = shorter.word.substr(stem.size());
  rule.i_class = shorter.pos;
  rule.r_class = longer.pos;
  return rule;
}

std::optional<GuessingRule> nabla_prefix(const LexiconEntry& longer,
                                         const LexiconEntry& shorter) {
  if (shorter.word.empty() || longer.word.size() <= shorter.word.size() ||
      !std::string_view(longer.word).ends_with(shorter.word))
    return std::nullopt;
  GuessingRule rule;
  rule.kind = RuleKind::Prefix;
  rule.affix = longer.word.substr(0, longer.word.size() - shorter.word.size());
  rule.i_class = shorter.pos;
  rule.r_class = longer.pos;
  return rule;
}

namespace {

constexpr std::uint32_t kNoClass = UINT32_MAX;

// Views point into the Vocabulary that produced them.
struct Key {
  std::string_view affix;
  std::string_view mutation;
  std::uint32_t i_class;
  std::uint32_t r_class;

  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = std::hash<std::string_view>{}(k.affix);
    h = h * 31 + std::hash<std::string_view>{}(k.mutation);
    h = h * 1000003u + k.i_class;
    return h * 1000003u + k.r_class;
  }
};

using Counts = std::unordered_map<Key, std::int64_t, KeyHash>;

struct Word {
  std::string text;
  std::string key;  // text, or text reversed for suffix-of lookups
  std::uint32_t cls;
};

// Lexicon words with their classes interned, sorted by key.
struct Vocabulary {
  std::vector<TagSet> classes;
  std::vector<Word> words;

  Vocabulary(const Lexicon& lexicon, bool reversed_keys) {
    std::unordered_map<TagSet, std::uint32_t, TagSetHash> ids;
    for (auto& e : lexicon.sorted_entries()) {
      auto [it, fresh] = ids.try_emplace(e.pos, static_cast<std::uint32_t>(classes.size()));
      if (fresh) classes.push_back(e.pos);
      std::string key = e.word;
      if (reversed_keys) std::reverse(key.begin(), key.end());
      words.push_back({std::move(e.word), std::move(key), it->second});
    }
    std::sort(words.begin(), words.end(),
              [](const Word& a, const Word& b) { return a.key < b.key; });
  }

  // Indices of words whose key starts with prefix.
  std::pair<std::size_t, std::size_t> key_range(std::string_view prefix) const {
    auto lo = std::lower_bound(words.begin(), words.end(), prefix,
                               [](const Word& w, std::string_view p) { return w.key < p; });
    auto hi = lo;
    while (hi != words.end() && std::string_view(hi->key).starts_with(prefix)) ++hi;
    return {static_cast<std::size_t>(lo - words.begin()),
            static_cast<std::size_t>(hi - words.begin())};
  }
};

// Runs count_main(main_index, counts) for every word, spread over jobs, and
// merges the per-chunk tables by summation.
template <class Fn>
Counts count_candidates(std::size_t words, unsigned jobs, Fn&& count_main) {
  std::vector<Counts> partial(chunk_count(words, jobs));
  parallel_chunks(words, jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) count_main(j, partial[chunk]);
  });
  Counts total = std::move(partial.front());
  for (std::size_t c = 1; c < partial.size(); ++c)
    for (const auto& [key, f] : partial[c]) total[key] += f;
  return total;
}

RuleSet to_ruleset(const Counts& counts, const Vocabulary& vocab, RuleKind kind, int n,
                   std::int64_t theta_f) {
  RuleSet rs;
  rs.kind = kind;
  rs.mutation_len = n;
  for (const auto& [key, f] : counts) {
    if (f < theta_f) continue;
    GuessingRule rule;
    rule.kind = kind;
    rule.affix = key.affix;
    rule.mutation = key.mutation;
    if (key.i_class != kNoClass) rule.i_class = vocab.classes[key.i_class];
    rule.r_class = vocab.classes[key.r_class];
    rule.freq = f;
    rs.rules.push_back(std::move(rule));
  }
  rs.sort_canonical();
  return rs;
}

}  // namespace

RuleSet extract_morph_rules(const Lexicon& lexicon, RuleKind kind, int n,
                            std::int64_t theta_f, unsigned jobs) {
  if (kind == RuleKind::Ending)
    throw std::invalid_argument("extract_morph_rules handles prefix and suffix rules only");
  if (n < 0 || (kind == RuleKind::Prefix && n != 0))
    throw std::invalid_argument("mutation length must be 0 for prefixes and >= 0 for suffixes");
  if (theta_f < 1) throw std::invalid_argument("theta_f must be >= 1");

  const bool prefix = kind == RuleKind::Prefix;
  const Vocabulary vocab(lexicon, prefix);
  const auto& words = vocab.words;
  const auto mut = static_cast<std::size_t>(n);

  const Counts counts = count_candidates(words.size(), jobs, [&](std::size_t j, Counts& out) {
    const Word& main = words[j];
    if (prefix) {
      // Words ending with the whole main word: reversed keys share its prefix.
      const auto [lo, hi] = vocab.key_range(main.key);
      for (std::size_t i = lo; i < hi; ++i) {
        const Word& other = words[i];
        if (i == j || other.text.size() == main.text.size()) continue;
        const std::string_view affix(other.text.data(), other.text.size() - main.text.size());
        ++out[Key{affix, {}, main.cls, other.cls}];
      }
      return;
    }
    if (main.text.size() <= mut) return;
    const std::string_view stem(main.text.data(), main.text.size() - mut);
    const std::string_view mutation(main.text.data() + stem.size(), mut);
    const auto [lo, hi] = vocab.key_range(stem);
    for (std::size_t i = lo; i < hi; ++i) {
      const Word& other = words[i];
      if (i == j || other.text.size() == stem.size()) continue;
      const std::string_view affix(other.text.data() + stem.size(),
                                   other.text.size() - stem.size());
      ++out[Key{affix, mutation, main.cls, other.cls}];
    }
  });
  return to_ruleset(counts, vocab, kind, n, theta_f);
}

RuleSet extract_ending_rules(const Lexicon& lexicon, int max_len, std::int64_t theta_f,
                             int min_len, unsigned jobs) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  if (theta_f < 1) throw std::invalid_argument("theta_f must be >= 1");

  const Vocabulary vocab(lexicon, false);
  const auto& words = vocab.words;
  const Counts counts = count_candidates(words.size(), jobs, [&](std::size_t j, Counts& out) {
    const Word& w = words[j];
    if (!is_eval_target(w.text, vocab.classes[w.cls], lexicon, min_len)) return;
    const std::string_view text(w.text);
    const std::size_t longest = std::min(static_cast<std::size_t>(max_len), text.size() - 1);
    for (std::size_t len = 1; len <= longest; ++len)
      ++out[Key{text.substr(text.size() - len), {}, kNoClass, w.cls}];
  });
  return to_ruleset(counts, vocab, RuleKind::Ending, 0, theta_f);
}

}  // namespace posguess
