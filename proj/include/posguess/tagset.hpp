#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace posguess {

using Tag = std::string;

/// Throws std::invalid_argument unless the tag is non-empty and free of
/// whitespace.
void validate_tag(std::string_view tag);

/// A POS-class such as (JJ VBD VBN). Tags are kept sorted and unique, so
/// equality and ordering are those of sets and independent of input order.
class TagSet {
 public:
  TagSet() = default;
  explicit TagSet(std::vector<Tag> tags);
  TagSet(std::initializer_list<std::string_view> tags);

  /// Parses tags separated by sep (runs of the separator are collapsed).
  static TagSet parse(std::string_view text, char sep = ' ');

  std::span<const Tag> tags() const noexcept { return tags_; }
  std::size_t size() const noexcept { return tags_.size(); }
  bool empty() const noexcept { return tags_.empty(); }
  bool contains(std::string_view tag) const;

  std::size_t intersection_size(const TagSet& other) const;
  bool is_subset_of(const TagSet& other) const;
  TagSet union_with(const TagSet& other) const;

  std::string join(char sep) const;

  /// Comma-separated list with '\\' and ',' inside tags backslash-escaped;
  /// a result that would read "-" is written "\\-".
  std::string to_list() const;
  /// Inverse of to_list. Throws std::invalid_argument on bad escapes.
  static TagSet from_list(std::string_view text);

  friend bool operator==(const TagSet&, const TagSet&) = default;
  friend std::strong_ordering operator<=>(const TagSet& a, const TagSet& b) {
    return a.tags_ <=> b.tags_;
  }

 private:
  std::vector<Tag> tags_;
};

struct TagSetHash {
  std::size_t operator()(const TagSet& set) const noexcept;
};

}  // namespace posguess
