#include "posguess/lexicon.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "posguess/error.hpp"
#include "posguess/text.hpp"

namespace posguess {

std::set<Tag, std::less<>> default_closed_class_tags() {
  return {
      // Brown: articles, determiners, quantifiers
      "AT", "ABN", "ABX", "AP", "DT", "DTI", "DTS", "DTX", "WDT",
      // prepositions, infinitival to
      "IN", "TO",
      // conjunctions
      "CC", "CS",
      // pronouns
      "PN", "PN$", "PP$", "PP$$", "PPL", "PPLS", "PPO", "PPS", "PPSS", "WPO", "WPS", "WP$",
      "EX",
      // modals
      "MD",
      // Penn Treebank equivalents
      "PDT", "PRP", "PRP$", "WP",
      // punctuation
      ".", ",", ":", ";", "(", ")", "--", "'", "''", "``", "$", "#", "-LRB-", "-RRB-"};
}

Lexicon::Lexicon() : closed_(default_closed_class_tags()) {}

void Lexicon::add(std::string_view word, const TagSet& pos) {
  auto it = entries_.find(word);
  if (it == entries_.end())
    entries_.emplace(std::string(word), pos);
  else
    it->second = it->second.union_with(pos);
}

const TagSet* Lexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<LexiconEntry> Lexicon::sorted_entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto& [word, pos] : entries_) out.push_back({word, pos});
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) { return a.word < b.word; });
  return out;
}

bool Lexicon::is_closed_class(const TagSet& pos) const {
  return std::any_of(pos.tags().begin(), pos.tags().end(),
                     [&](const Tag& t) { return closed_.contains(t); });
}

void FrequencyTable::add(std::string_view word, std::int64_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  auto it = counts_.find(word);
  if (it == counts_.end())
    counts_.emplace(std::string(word), count);
  else
    it->second += count;
  total_ += count;
}

std::int64_t FrequencyTable::count(std::string_view word) const {
  auto it = counts_.find(word);
  return it == counts_.end() ? 0 : it->second;
}

namespace {

// Calls fn(line_no, line) for every line that is neither blank nor a comment.
template <class Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_cr(raw);
    if (trim(line).empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

std::string_view checked_word(std::string_view word, std::size_t line_no) {
  if (word.empty()) throw ParseError(line_no, "empty word");
  if (has_whitespace(word)) throw ParseError(line_no, "word contains whitespace");
  return word;
}

}  // namespace

Lexicon parse_lexicon(std::istream& in) {
  Lexicon lexicon;
  for_each_data_line(in, [&](std::size_t line_no, std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(line_no, "expected word<TAB>tags");
    const auto word = checked_word(line.substr(0, tab), line_no);
    TagSet pos;
    try {
      pos = TagSet::parse(trim(line.substr(tab + 1)), ' ');
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (pos.empty()) throw ParseError(line_no, "empty tag list");
    lexicon.add(word, pos);
  });
  if (lexicon.empty()) throw ParseError(0, "empty lexicon");
  return lexicon;
}

Lexicon parse_lexicon_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_lexicon(in);
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& e : lexicon.sorted_entries()) out << e.word << '\t' << e.pos.join(' ') << '\n';
}

FrequencyTable parse_frequencies(std::istream& in) {
  FrequencyTable table;
  for_each_data_line(in, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split(line, '\t');
    if (fields.size() != 2) throw ParseError(line_no, "expected word<TAB>count");
    const auto word = checked_word(fields[0], line_no);
    long long count = 0;
    try {
      count = parse_int(trim(fields[1]));
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "count is not an integer");
    }
    if (count < 1) throw ParseError(line_no, "count must be >= 1");
    table.add(word, count);
  });
  return table;
}

FrequencyTable parse_frequencies_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_frequencies(in);
}

bool is_eval_target(std::string_view word, const TagSet& pos, const Lexicon& lexicon,
                    int min_len) {
  return word.size() >= static_cast<std::size_t>(std::max(min_len, 0)) &&
         !lexicon.is_closed_class(pos);
}

bool is_eval_target(std::string_view word, const Lexicon& lexicon, int min_len) {
  const TagSet* pos = lexicon.find(word);
  if (pos == nullptr) throw std::invalid_argument("not a lexicon word: " + std::string(word));
  return is_eval_target(word, *pos, lexicon, min_len);
}

}  // namespace posguess
