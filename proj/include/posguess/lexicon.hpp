#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "posguess/tagset.hpp"

namespace posguess {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

struct LexiconEntry {
  std::string word;
  TagSet pos;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// Determiners, prepositions, conjunctions, pronouns, modals and punctuation
/// for both the Brown and the Penn tag-sets.
std::set<Tag, std::less<>> default_closed_class_tags();

/// Word to POS-class map. Immutable once built; safe to share across threads.
class Lexicon {
 public:
  Lexicon();

  /// Adds a word or merges the tags into its existing class.
  void add(std::string_view word, const TagSet& pos);

  /// nullptr when the word is absent.
  const TagSet* find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word) != nullptr; }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const std::unordered_map<std::string, TagSet, StringHash, std::equal_to<>>& entries()
      const noexcept {
    return entries_;
  }

  /// Entries ordered by word (byte order).
  std::vector<LexiconEntry> sorted_entries() const;

  const std::set<Tag, std::less<>>& closed_class_tags() const noexcept { return closed_; }
  void set_closed_class_tags(std::set<Tag, std::less<>> tags) { closed_ = std::move(tags); }
  bool is_closed_class(const TagSet& pos) const;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::unordered_map<std::string, TagSet, StringHash, std::equal_to<>> entries_;
  std::set<Tag, std::less<>> closed_;
};

/// Corpus counts; every count is >= 1.
class FrequencyTable {
 public:
  void add(std::string_view word, std::int64_t count);

  /// 0 when the word never occurred.
  std::int64_t count(std::string_view word) const;
  std::int64_t total_tokens() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }

  const std::unordered_map<std::string, std::int64_t, StringHash, std::equal_to<>>& counts()
      const noexcept {
    return counts_;
  }

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::unordered_map<std::string, std::int64_t, StringHash, std::equal_to<>> counts_;
  std::int64_t total_ = 0;
};

/// Reads `word<TAB>tag1 tag2 ...` lines. Blank lines and lines starting with
/// '#' are skipped; duplicate words merge by tag union.
Lexicon parse_lexicon(std::istream& in);
Lexicon parse_lexicon_string(std::string_view text);

/// Writes one line per word in byte order; parse_lexicon reads it back equal.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

/// Reads `word<TAB>count` lines; duplicate words have their counts summed.
FrequencyTable parse_frequencies(std::istream& in);
FrequencyTable parse_frequencies_string(std::string_view text);

inline constexpr int kDefaultMinEvalLength = 5;

/// True iff the word is at least min_len bytes long and none of its tags is
/// closed-class. Throws std::invalid_argument for words not in the lexicon.
bool is_eval_target(std::string_view word, const Lexicon& lexicon,
                    int min_len = kDefaultMinEvalLength);

/// Same test for a word already looked up.
bool is_eval_target(std::string_view word, const TagSet& pos, const Lexicon& lexicon,
                    int min_len);

}  // namespace posguess
