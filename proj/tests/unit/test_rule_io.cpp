#include <doctest.h>

#include <random>
#include <sstream>

#include "posguess/error.hpp"
#include "posguess/induction.hpp"
#include "posguess/rule_io.hpp"
#include "posguess/scoring.hpp"
#include "generators.hpp"

using namespace posguess;

namespace {

GuessingRule ied_rule() {
  GuessingRule r;
  r.kind = RuleKind::Suffix;
  r.affix = "ied";
  r.mutation = "y";
  r.i_class = TagSet{"NN", "VB"};
  r.r_class = TagSet{"JJ", "VBD", "VBN"};
  r.freq = 4;
  return r;
}

RuleSet reread(const RuleSet& rs) {
  std::stringstream s;
  write_rules(s, rs);
  return read_rules(s);
}

}  // namespace

TEST_CASE("rule lines use the nine-column layout") {
  auto r = ied_rule();
  CHECK(format_rule_line(r) == "S\tied\ty\tNN,VB\tJJ,VBD,VBN\t4\t-\t-\t-");
  r.stats = RuleStats{9, 10, 0.75};
  CHECK(format_rule_line(r) == "S\tied\ty\tNN,VB\tJJ,VBD,VBN\t4\t9\t10\t0.75");

  GuessingRule e;
  e.kind = RuleKind::Ending;
  e.affix = "ing";
  e.r_class = TagSet{"JJ", "NN", "VBG"};
  CHECK(format_rule_line(e) == "E\ting\t-\t-\tJJ,NN,VBG\t1\t-\t-\t-");
  CHECK(parse_rule_line(format_rule_line(e)) == e);
}

TEST_CASE("hyphens and backslashes in affixes survive") {
  auto r = ied_rule();
  r.affix = "-like";
  r.mutation = "-";
  const auto line = format_rule_line(r);
  CHECK(line.starts_with("S\t\\-like\t\\-\t"));
  CHECK(parse_rule_line(line) == r);
  r.affix = "a\\b";
  CHECK(parse_rule_line(format_rule_line(r)) == r);
}

TEST_CASE("malformed rule lines") {
  CHECK_THROWS_AS(parse_rule_line("S\tied\ty"), ParseError);
  CHECK_THROWS_AS(parse_rule_line("X\tied\ty\tNN\tJJ\t1\t-\t-\t-"), ParseError);
  // prefix rules cannot carry a mutation
  CHECK_THROWS_AS(parse_rule_line("P\tun\tx\tVBD\tJJ\t1\t-\t-\t-"), ParseError);
  // ending rules have no I-class
  CHECK_THROWS_AS(parse_rule_line("E\ting\t-\tNN\tJJ\t1\t-\t-\t-"), ParseError);
  // statistics are all-or-nothing
  CHECK_THROWS_AS(parse_rule_line("S\ted\t-\tNN\tJJ\t1\t3\t-\t-"), ParseError);
  CHECK_THROWS_AS(parse_rule_line("S\ted\t-\tNN\tJJ\t0\t-\t-\t-"), ParseError);
}

TEST_CASE("rule files keep kind and mutation length") {
  RuleSet rs;
  rs.kind = RuleKind::Suffix;
  rs.mutation_len = 1;
  rs.rules.push_back(ied_rule());
  CHECK(reread(rs) == rs);

  RuleSet empty;
  empty.kind = RuleKind::Ending;
  CHECK(reread(empty) == empty);

  std::istringstream mixed("S\ted\t-\tNN\tJJ\t1\t-\t-\t-\nP\tun\t-\tVBD\tJJ\t1\t-\t-\t-\n");
  CHECK_THROWS_AS(read_rules(mixed), ParseError);
}

TEST_CASE("property: induced and scored rule files round-trip exactly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto lex = testgen::random_lexicon(rng, 80);
    const auto freqs = testgen::random_freqs(rng, lex);
    for (int n : {0, 1}) {
      const auto rs = extract_morph_rules(lex, RuleKind::Suffix, n, 1);
      CHECK(reread(rs) == rs);
      const auto scored = score_ruleset(rs, lex, freqs);
      CHECK(reread(scored) == scored);
    }
  }
}
