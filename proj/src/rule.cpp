#include "posguess/rule.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace posguess {

char kind_code(RuleKind kind) {
  switch (kind) {
    case RuleKind::Prefix: return 'P';
    case RuleKind::Suffix: return 'S';
    case RuleKind::Ending: return 'E';
  }
  throw std::logic_error("bad rule kind");
}

RuleKind kind_from_code(std::string_view code) {
  if (code == "P") return RuleKind::Prefix;
  if (code == "S") return RuleKind::Suffix;
  if (code == "E") return RuleKind::Ending;
  throw std::invalid_argument("unknown rule kind '" + std::string(code) + "'");
}

std::string_view kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::Prefix: return "prefix";
    case RuleKind::Suffix: return "suffix";
    case RuleKind::Ending: return "ending";
  }
  throw std::logic_error("bad rule kind");
}

RuleKind kind_from_name(std::string_view name) {
  if (name == "prefix") return RuleKind::Prefix;
  if (name == "suffix") return RuleKind::Suffix;
  if (name == "ending") return RuleKind::Ending;
  throw std::invalid_argument("unknown rule kind '" + std::string(name) + "'");
}

double GuessingRule::score_or_min() const noexcept {
  return stats ? stats->score : -std::numeric_limits<double>::infinity();
}

void GuessingRule::validate() const {
  if (affix.empty()) throw std::invalid_argument("rule affix is empty");
  if (kind != RuleKind::Suffix && !mutation.empty())
    throw std::invalid_argument("only suffix rules carry a mutation");
  if ((kind == RuleKind::Ending) == i_class.has_value())
    throw std::invalid_argument("I-class must be present exactly for morphological rules");
  if (i_class && i_class->empty()) throw std::invalid_argument("rule I-class is empty");
  if (r_class.empty()) throw std::invalid_argument("rule R-class is empty");
  if (freq < 1) throw std::invalid_argument("rule frequency must be >= 1");
  if (stats && !(stats->n > 0 && stats->x >= 0 && stats->x <= stats->n))
    throw std::invalid_argument("rule statistics need 0 <= x <= n and n > 0");
}

bool same_identity(const GuessingRule& a, const GuessingRule& b) {
  return a.kind == b.kind && a.affix == b.affix && a.mutation == b.mutation &&
         a.i_class == b.i_class && a.r_class == b.r_class;
}

std::string describe(const GuessingRule& rule) {
  std::string out = "[" + rule.affix + " ";
  out += rule.i_class ? "(" + rule.i_class->join(' ') + ")" : std::string("-");
  out += " (" + rule.r_class.join(' ') + ")";
  if (rule.kind == RuleKind::Suffix)
    out += rule.mutation.empty() ? std::string(" \"\"") : " " + rule.mutation;
  return out + "]";
}

bool canonical_less(const GuessingRule& a, const GuessingRule& b) {
  if (a.affix.size() != b.affix.size()) return a.affix.size() > b.affix.size();
  const double sa = a.score_or_min();
  const double sb = b.score_or_min();
  if (sa != sb) return sa > sb;
  // absent I sorts first, as std::optional does
  return std::tie(a.affix, a.mutation, a.kind, a.i_class, a.r_class, b.freq) <
         std::tie(b.affix, b.mutation, b.kind, b.i_class, b.r_class, a.freq);
}

void RuleSet::sort_canonical() { std::stable_sort(rules.begin(), rules.end(), canonical_less); }

bool RuleSet::is_canonical() const {
  return std::is_sorted(rules.begin(), rules.end(), canonical_less);
}

RuleSet filter_by_frequency(RuleSet rs, std::int64_t theta_f) {
  std::erase_if(rs.rules, [&](const GuessingRule& r) { return r.freq < theta_f; });
  return rs;
}

char ruleset_label(const RuleSet& rs) {
  switch (rs.kind) {
    case RuleKind::Prefix: return 'P';
    case RuleKind::Suffix: return rs.mutation_len > 0 ? 'A' : 'S';
    case RuleKind::Ending: return 'E';
  }
  throw std::logic_error("bad rule kind");
}

}  // namespace posguess
