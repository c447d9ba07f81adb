#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "posguess/guesser.hpp"
#include "posguess/induction.hpp"

using namespace posguess;

namespace {

GuessingRule rule(RuleKind kind, std::string affix, std::string mutation, TagSet i_class,
                  TagSet r_class) {
  GuessingRule r;
  r.kind = kind;
  r.affix = std::move(affix);
  r.mutation = std::move(mutation);
  r.i_class = std::move(i_class);
  r.r_class = std::move(r_class);
  return r;
}

RuleSet set_of(std::vector<GuessingRule> rules) {
  RuleSet rs;
  rs.kind = rules.empty() ? RuleKind::Suffix : rules.front().kind;
  rs.rules = std::move(rules);
  for (const auto& r : rs.rules) rs.mutation_len = std::max(rs.mutation_len, static_cast<int>(r.mutation.size()));
  rs.sort_canonical();
  return rs;
}

const TagSet kNV{"NN", "VB"};
const TagSet kPast{"JJ", "VBD", "VBN"};

}  // namespace

TEST_CASE("guess_with_ruleset") {
  const auto lex = parse_lexicon_string("developed\tVBD VBN\ndeny\tNN VB\n");
  const auto un = set_of({rule(RuleKind::Prefix, "un", "", {"VBD", "VBN"}, {"JJ"})});
  auto m = guess_with_ruleset("undeveloped", un, lex);
  REQUIRE(m);
  CHECK(*m->pos == TagSet{"JJ"});
  CHECK(m->rule == 0);

  const auto ied = set_of({rule(RuleKind::Suffix, "ied", "y", kNV, kPast)});
  m = guess_with_ruleset("denied", ied, lex);
  REQUIRE(m);
  CHECK(*m->pos == kPast);

  CHECK_FALSE(guess_with_ruleset("denied", RuleSet{}, lex));
  CHECK_FALSE(guess_with_ruleset("denied", ied, lex, "deny"));
}

TEST_CASE("the first rule in canonical order wins") {
  const auto lex = parse_lexicon_string("walk\tNN VB\nwalke\tNN\n");
  auto longer = rule(RuleKind::Suffix, "ed", "", kNV, kPast);
  auto shorter = rule(RuleKind::Suffix, "d", "", {"NN"}, {"VBD"});
  const auto rs = set_of({shorter, longer});
  auto m = guess_with_ruleset("walked", rs, lex);
  REQUIRE(m);
  CHECK(*m->pos == kPast);

  // equal affixes: the higher score goes first
  auto a = rule(RuleKind::Suffix, "ed", "", kNV, {"VBD"});
  a.stats = RuleStats{1, 2, 0.3};
  auto b = rule(RuleKind::Suffix, "ed", "", kNV, {"VBN"});
  b.stats = RuleStats{2, 2, 0.7};
  const auto tied = set_of({a, b});
  m = guess_with_ruleset("walked", tied, lex);
  REQUIRE(m);
  CHECK(*m->pos == TagSet{"VBN"});
}

TEST_CASE("cascade fallbacks") {
  const Cascade empty(CascadeConfig{});
  const Lexicon lex;
  auto g = cascade_guess("zzqx", false, empty, lex);
  CHECK(g.pos == TagSet{"NN"});
  CHECK(g.provenance == ProvenanceKind::FallbackCommon);
  CHECK(g.rule == nullptr);
  CHECK_FALSE(g.covered());
  g = cascade_guess("Zzqx", true, empty, lex);
  CHECK(g.pos == TagSet{"NP"});
  CHECK(g.provenance == ProvenanceKind::FallbackProper);
  CHECK(provenance_name(ProvenanceKind::Rule) == "rule");
  CHECK(provenance_name(ProvenanceKind::FallbackCommon) == "fallback-common");
  CHECK(provenance_name(ProvenanceKind::FallbackProper) == "fallback-proper");

  CascadeConfig custom;
  custom.fallback_common = "UNK";
  custom.fallback_proper = "NNP";
  const Cascade c(custom);
  CHECK(cascade_guess("qq", false, c, lex).pos == TagSet{"UNK"});
  CHECK(cascade_guess("Qq", true, c, lex).pos == TagSet{"NNP"});
}

TEST_CASE("classified is fixed by the mutative stage") {
  const auto lex = testdata::tutorial_lexicon();
  const auto st = testdata::tutorial_stages(lex);
  CascadeConfig cfg;
  cfg.stages = {st.mutative, st.suffix, st.ending};
  const Cascade cascade(std::move(cfg));
  for (const char* w : {"classified", "applied"}) {
    const auto g = cascade_guess(w, false, cascade, lex);
    CHECK(g.pos == kPast);
    REQUIRE(g.covered());
    CHECK(g.stage == 0);
    CHECK(describe(*g.rule) == "[ied (NN VB) (JJ VBD VBN) y]");
  }
  const auto tries = cascade_guess("tries", false, cascade, lex);
  CHECK(tries.pos == TagSet{"NNS", "VBZ"});
  CHECK(tries.stage == 0);
}

TEST_CASE("input is lowercased unless disabled") {
  const auto lex = parse_lexicon_string("deny\tNN VB\n");
  CascadeConfig cfg;
  cfg.stages = {set_of({rule(RuleKind::Suffix, "ied", "y", kNV, kPast)})};
  const Cascade lower(cfg);
  CHECK(cascade_guess("Denied", true, lower, lex).pos == kPast);
  cfg.lowercase_input = false;
  const Cascade exact(cfg);
  CHECK(cascade_guess("Denied", true, exact, lex).pos == TagSet{"NP"});
  CHECK(cascade_guess("denied", false, exact, lex).pos == kPast);
}

TEST_CASE("batch_guess") {
  const auto lex = testdata::tutorial_lexicon();
  const auto st = testdata::tutorial_stages(lex);
  CascadeConfig cfg;
  cfg.stages = {st.prefix, st.mutative, st.suffix, st.ending};
  const Cascade cascade(std::move(cfg));

  CHECK(batch_guess({}, cascade, lex).empty());

  const std::vector<WordQuery> words = {{"undeveloped", false}, {"specified", false},
                                        {"tagging", false},     {"running", false},
                                        {"zzqx", false},        {"Zzqx", true},
                                        {"specified", false},   {"books", false}};
  const auto out = batch_guess(words, cascade, lex, 3);
  REQUIRE(out.size() == words.size());
  std::set<std::pair<ProvenanceKind, std::size_t>> seen;
  for (const auto& g : out) seen.insert({g.provenance, g.covered() ? g.stage : 99});
  CHECK(seen.size() == 6);  // every stage plus both fallbacks
  CHECK(out[0].stage == 0);
  CHECK(out[1].stage == 1);
  CHECK(out[2].stage == 1);  // gging with g restored
  CHECK(out[3].stage == 3);
  CHECK(out[7].stage == 2);
  CHECK(out[1].pos == out[6].pos);
  CHECK(out[1].rule == out[6].rule);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto single = cascade_guess(words[i].word, words[i].is_capitalized, cascade, lex);
    CHECK(single.pos == out[i].pos);
    CHECK(single.rule == out[i].rule);
  }
}

TEST_CASE("RuleIndex requires canonical order") {
  RuleSet rs;
  rs.rules = {rule(RuleKind::Suffix, "d", "", kNV, kPast), rule(RuleKind::Suffix, "ed", "", kNV, kPast)};
  CHECK_THROWS_AS(RuleIndex{rs}, std::invalid_argument);
}

TEST_CASE("property: indexed lookup equals a linear scan") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const auto lex = testgen::random_lexicon(rng, 120);
    for (RuleSet rs : {extract_morph_rules(lex, RuleKind::Suffix, 0, 1),
                       extract_morph_rules(lex, RuleKind::Suffix, 2, 1),
                       extract_morph_rules(lex, RuleKind::Prefix, 0, 1),
                       extract_ending_rules(lex, 4, 1, 3)}) {
      const RuleIndex index(rs);
      for (const auto& e : lex.sorted_entries()) {
        for (const std::string& w : {e.word, e.word + "a", "b" + e.word}) {
          const auto a = index.first_match(w, lex, e.word);
          const auto b = guess_with_ruleset(w, rs, lex, e.word);
          REQUIRE(a.has_value() == b.has_value());
          if (a) CHECK(a->rule == b->rule);
          const auto naive = oracle::naive_cascade({rs}, w, lex, e.word);
          REQUIRE(naive.has_value() == a.has_value());
          if (a) CHECK(*naive == *a->pos);
        }
      }
    }
  }
}

TEST_CASE("property: cascade coverage is the union of stage coverage") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto lex = testgen::random_lexicon(rng, 120);
    const std::vector<RuleSet> stages = {extract_morph_rules(lex, RuleKind::Prefix, 0, 1),
                                         extract_morph_rules(lex, RuleKind::Suffix, 1, 1),
                                         extract_ending_rules(lex, 3, 2, 3)};
    CascadeConfig cfg;
    cfg.stages = stages;
    const Cascade full(cfg);
    cfg.stages.pop_back();
    const Cascade shorter(cfg);
    for (const auto& e : lex.sorted_entries()) {
      for (const std::string& w : {e.word, e.word + "c", "d" + e.word}) {
        const auto g = full.guess(w, false, lex, e.word);
        const bool any = std::any_of(stages.begin(), stages.end(), [&](const RuleSet& rs) {
          return guess_with_ruleset(w, rs, lex, e.word).has_value();
        });
        CHECK(g.covered() == any);
        CHECK_FALSE(g.pos.empty());
        if (shorter.guess(w, false, lex, e.word).covered()) CHECK(g.covered());
      }
    }
  }
}

TEST_CASE("property: stage order matters only where several stages fire") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto lex = testgen::random_lexicon(rng, 100);
    std::vector<RuleSet> stages = {extract_morph_rules(lex, RuleKind::Suffix, 0, 1),
                                   extract_morph_rules(lex, RuleKind::Suffix, 1, 1),
                                   extract_morph_rules(lex, RuleKind::Prefix, 0, 1)};
    std::vector<std::size_t> perm = {0, 1, 2};
    std::vector<std::unique_ptr<Cascade>> cascades;
    do {
      CascadeConfig cfg;
      for (auto i : perm) cfg.stages.push_back(stages[i]);
      cascades.push_back(std::make_unique<Cascade>(std::move(cfg)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& e : lex.sorted_entries()) {
      int firing = 0;
      for (const auto& rs : stages) firing += guess_with_ruleset(e.word, rs, lex, e.word).has_value();
      if (firing > 1) continue;
      const auto ref = cascades.front()->guess(e.word, false, lex, e.word);
      for (const auto& c : cascades) CHECK(c->guess(e.word, false, lex, e.word).pos == ref.pos);
    }
  }
}
