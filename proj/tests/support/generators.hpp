#pragma once

#include <random>
#include <string>
#include <vector>

#include "posguess/lexicon.hpp"

namespace posguess::testgen {

/// Random lexicon over a tiny alphabet so that affix relations are common.
inline Lexicon random_lexicon(std::mt19937& rng, std::size_t max_entries,
                              std::string_view alphabet = "abcd") {
  static const std::vector<std::string> kTags = {"NN", "VB", "JJ", "VBD", "NNS", "VBZ"};
  std::uniform_int_distribution<std::size_t> count(1, max_entries);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  std::uniform_int_distribution<std::size_t> tag(0, kTags.size() - 1);
  std::uniform_int_distribution<int> ntags(1, 2);

  Lexicon lexicon;
  const std::size_t target = count(rng);
  while (lexicon.size() < target) {
    std::string word;
    for (int i = len(rng); i > 0; --i) word.push_back(alphabet[letter(rng)]);
    std::vector<Tag> tags;
    for (int i = ntags(rng); i > 0; --i) tags.push_back(kTags[tag(rng)]);
    if (!lexicon.contains(word)) lexicon.add(word, TagSet(tags));
  }
  return lexicon;
}

inline FrequencyTable random_freqs(std::mt19937& rng, const Lexicon& lexicon) {
  std::uniform_int_distribution<int> c(0, 9);
  FrequencyTable freqs;
  for (const auto& e : lexicon.sorted_entries())
    if (int k = c(rng); k > 0) freqs.add(e.word, k);
  return freqs;
}


// Pronounceable stem ending in a consonant other than y.
inline std::string random_stem(std::mt19937& rng, int syllables) {
  static constexpr std::string_view kC = "bcdfgklmnprstvz";
  static constexpr std::string_view kV = "aeiou";
  std::uniform_int_distribution<std::size_t> c(0, kC.size() - 1), v(0, kV.size() - 1);
  std::string s;
  for (int i = 0; i < syllables; ++i) {
    s.push_back(kC[c(rng)]);
    s.push_back(kV[v(rng)]);
  }
  s.push_back(kC[c(rng)]);
  return s;
}

// Verb paradigms: `regular` stems with -ed/-ing/-s forms and `y_verbs` stems
// in -y with -ied/-ies/-ying forms, plus `noise` unrelated nouns and
// adjectives of length 5 to 9.
inline Lexicon paradigm_lexicon(std::mt19937& rng, int regular, int y_verbs, int noise) {
  const TagSet base{"NN", "VB"}, past{"JJ", "VBD", "VBN"}, gerund{"JJ", "NN", "VBG"},
      third{"NNS", "VBZ"};
  Lexicon lex;
  auto fresh = [&](int syllables, const std::string& end) {
    for (;;) {
      std::string s = random_stem(rng, syllables);
      if (!lex.contains(s) && !lex.contains(s + end)) return s;
    }
  };
  for (int i = 0; i < regular; ++i) {
    const std::string s = fresh(2, "");
    lex.add(s, base);
    lex.add(s + "ed", past);
    lex.add(s + "ing", gerund);
    lex.add(s + "s", third);
  }
  for (int i = 0; i < y_verbs; ++i) {
    const std::string s = fresh(2, "y");
    lex.add(s + "y", base);
    lex.add(s + "ied", past);
    lex.add(s + "ies", third);
    lex.add(s + "ying", gerund);
  }
  static const std::vector<TagSet> kNoiseTags = {{"NN"}, {"JJ"}, {"NN", "JJ"}, {"NNS"}};
  std::uniform_int_distribution<std::size_t> t(0, kNoiseTags.size() - 1);
  std::uniform_int_distribution<int> syl(2, 4);
  for (int i = 0; i < noise; ++i) lex.add(fresh(syl(rng), ""), kNoiseTags[t(rng)]);
  return lex;
}

}  // namespace posguess::testgen
