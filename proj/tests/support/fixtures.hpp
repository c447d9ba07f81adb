#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "posguess/induction.hpp"
#include "posguess/lexicon.hpp"
#include "posguess/rule.hpp"

namespace testdata {

inline std::string path(const std::string& rel) { return std::string(POSGUESS_TEST_DATA) + "/" + rel; }

inline std::string slurp(const std::string& rel) {
  std::ifstream in(path(rel), std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + rel);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline posguess::Lexicon tutorial_lexicon() {
  return posguess::parse_lexicon_string(slurp("tutorial/lexicon.tsv"));
}

inline posguess::FrequencyTable tutorial_freqs() {
  return posguess::parse_frequencies_string(slurp("tutorial/freqs.tsv"));
}

// Unscored P, A, S and E sets at the default frequency cut-off.
struct TutorialStages {
  posguess::RuleSet prefix, mutative, suffix, ending;
};

inline TutorialStages tutorial_stages(const posguess::Lexicon& lex) {
  using posguess::RuleKind;
  return {posguess::extract_morph_rules(lex, RuleKind::Prefix, 0),
          posguess::extract_morph_rules(lex, RuleKind::Suffix, 1),
          posguess::extract_morph_rules(lex, RuleKind::Suffix, 0),
          posguess::extract_ending_rules(lex)};
}

}  // namespace testdata
