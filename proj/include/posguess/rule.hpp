#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posguess/tagset.hpp"

namespace posguess {

enum class RuleKind { Prefix, Suffix, Ending };

/// 'P', 'S' or 'E' as used in rule files.
char kind_code(RuleKind kind);
RuleKind kind_from_code(std::string_view code);
std::string_view kind_name(RuleKind kind);
RuleKind kind_from_name(std::string_view name);

/// Token-weighted outcome of replaying a rule over the lexicon.
struct RuleStats {
  double x = 0.0;  // successes
  double n = 0.0;  // firings
  double score = 0.0;

  friend bool operator==(const RuleStats&, const RuleStats&) = default;
};

/// A guessing rule (S, I, R, M). Morphological rules strip the affix S from an
/// unknown word, append M, look the result up and require class I; ending
/// rules match the trailing characters only and carry no I.
struct GuessingRule {
  RuleKind kind = RuleKind::Suffix;
  std::string affix;
  std::string mutation;
  std::optional<TagSet> i_class;
  TagSet r_class;
  std::int64_t freq = 1;
  std::optional<RuleStats> stats;

  bool scored() const noexcept { return stats.has_value(); }
  /// −inf for unscored rules.
  double score_or_min() const noexcept;

  /// Throws std::invalid_argument when the kind/field invariants do not hold.
  void validate() const;

  friend bool operator==(const GuessingRule&, const GuessingRule&) = default;
};

/// Equality of (kind, S, M, I, R); frequency and statistics are ignored.
bool same_identity(const GuessingRule& a, const GuessingRule& b);

/// Bracket notation, e.g. `[ied (NN VB) (JJ VBD VBN) y]` or `[ing - (VBG)]`.
std::string describe(const GuessingRule& rule);

/// Affix length desc, score desc, affix asc, M asc, then kind, I, R and
/// frequency desc so that the order is total.
bool canonical_less(const GuessingRule& a, const GuessingRule& b);

struct RuleSet {
  RuleKind kind = RuleKind::Suffix;
  int mutation_len = 0;
  std::vector<GuessingRule> rules;

  void sort_canonical();
  bool is_canonical() const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// Drops rules whose frequency is below theta_f.
RuleSet filter_by_frequency(RuleSet rs, std::int64_t theta_f);

/// Short label used for operating points: P, S (plain suffix), A (suffix with
/// mutation) or E.
char ruleset_label(const RuleSet& rs);

}  // namespace posguess
