#include "posguess/rule_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "posguess/error.hpp"
#include "posguess/text.hpp"

namespace posguess {

namespace {

std::string escape_field(std::string_view s) {
  if (s.empty()) return "-";
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '-') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string unescape_field(std::string_view s) {
  if (s == "-") return {};
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\') {
      if (i + 1 == s.size()) throw std::invalid_argument("dangling escape");
      out.push_back(s[++i]);
    } else if (s[i] == '-') {
      throw std::invalid_argument("unescaped '-' inside a field");
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string stat_field(const std::optional<RuleStats>& stats, double RuleStats::*member) {
  return stats ? format_double((*stats).*member) : std::string("-");
}

}  // namespace

std::string format_rule_line(const GuessingRule& rule) {
  std::string line;
  line += kind_code(rule.kind);
  line += '\t' + escape_field(rule.affix);
  line += '\t' + escape_field(rule.mutation);
  line += '\t' + (rule.i_class ? rule.i_class->to_list() : std::string("-"));
  line += '\t' + rule.r_class.to_list();
  line += '\t' + std::to_string(rule.freq);
  line += '\t' + stat_field(rule.stats, &RuleStats::x);
  line += '\t' + stat_field(rule.stats, &RuleStats::n);
  line += '\t' + stat_field(rule.stats, &RuleStats::score);
  return line;
}

GuessingRule parse_rule_line(std::string_view line, std::size_t line_no) {
  const auto f = split(line, '\t');
  if (f.size() != 9) throw ParseError(line_no, "expected 9 tab-separated rule fields");
  try {
    GuessingRule rule;
    rule.kind = kind_from_code(f[0]);
    rule.affix = unescape_field(f[1]);
    rule.mutation = unescape_field(f[2]);
    if (f[3] != "-") rule.i_class = TagSet::from_list(f[3]);
    rule.r_class = TagSet::from_list(f[4]);
    rule.freq = parse_int(f[5]);
    const int missing = (f[6] == "-") + (f[7] == "-") + (f[8] == "-");
    if (missing == 0)
      rule.stats = RuleStats{parse_double(f[6]), parse_double(f[7]), parse_double(f[8])};
    else if (missing != 3)
      throw std::invalid_argument("x, n and score must be all present or all '-'");
    rule.validate();
    return rule;
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

void write_rules(std::ostream& out, const RuleSet& rs) {
  out << "#kind=" << kind_code(rs.kind) << " mutation=" << rs.mutation_len << '\n';
  for (const auto& r : rs.rules) out << format_rule_line(r) << '\n';
}

RuleSet read_rules(std::istream& in) {
  RuleSet rs;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_cr(raw);
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      if (line.starts_with("#kind=")) {
        const auto fields = split(line.substr(1), ' ');
        try {
          if (fields.size() != 2 || !fields[1].starts_with("mutation="))
            throw std::invalid_argument("malformed header");
          rs.kind = kind_from_code(fields[0].substr(5));
          rs.mutation_len = static_cast<int>(parse_int(fields[1].substr(9)));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line_no, e.what());
        }
        have_header = true;
      }
      continue;
    }
    auto rule = parse_rule_line(line, line_no);
    if (!have_header && rs.rules.empty()) rs.kind = rule.kind;
    if (rule.kind != rs.kind) throw ParseError(line_no, "rule kind differs from the rule-set");
    if (!have_header)
      rs.mutation_len = std::max(rs.mutation_len, static_cast<int>(rule.mutation.size()));
    rs.rules.push_back(std::move(rule));
  }
  return rs;
}

}  // namespace posguess
