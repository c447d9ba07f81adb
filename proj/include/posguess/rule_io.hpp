#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "posguess/rule.hpp"

namespace posguess {

// Rule files hold one rule per line:
//
//   kind<TAB>S<TAB>M<TAB>I<TAB>R<TAB>f<TAB>x<TAB>n<TAB>score
//
// kind is P, S or E. An empty M, an absent I and missing statistics are
// written as "-". Tags inside I and R are comma-separated in sorted order
// (see TagSet::to_list for escaping).
// A literal "-" or "\" in S or M is escaped as "\-" or "\\". The file opens
// with a `#kind=<K> mutation=<n>` header; other '#' lines are comments.

void write_rules(std::ostream& out, const RuleSet& rs);
RuleSet read_rules(std::istream& in);

std::string format_rule_line(const GuessingRule& rule);
GuessingRule parse_rule_line(std::string_view line, std::size_t line_no = 0);

}  // namespace posguess
