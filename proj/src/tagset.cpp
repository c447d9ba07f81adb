#include "posguess/tagset.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "posguess/text.hpp"

namespace posguess {

void validate_tag(std::string_view tag) {
  if (tag.empty()) throw std::invalid_argument("empty tag");
  if (has_whitespace(tag))
    throw std::invalid_argument("tag contains whitespace: '" + std::string(tag) + "'");
}

TagSet::TagSet(std::vector<Tag> tags) : tags_(std::move(tags)) {
  for (const auto& t : tags_) validate_tag(t);
  std::sort(tags_.begin(), tags_.end());
  tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
}

TagSet::TagSet(std::initializer_list<std::string_view> tags)
    : TagSet(std::vector<Tag>(tags.begin(), tags.end())) {}

TagSet TagSet::parse(std::string_view text, char sep) {
  std::vector<Tag> tags;
  for (auto field : split(text, sep))
    if (!field.empty()) tags.emplace_back(field);
  return TagSet(std::move(tags));
}

bool TagSet::contains(std::string_view tag) const {
  return std::binary_search(tags_.begin(), tags_.end(), tag, std::less<>{});
}

std::size_t TagSet::intersection_size(const TagSet& other) const {
  std::size_t n = 0;
  auto a = tags_.begin();
  auto b = other.tags_.begin();
  while (a != tags_.end() && b != other.tags_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

bool TagSet::is_subset_of(const TagSet& other) const {
  return std::includes(other.tags_.begin(), other.tags_.end(), tags_.begin(), tags_.end());
}

TagSet TagSet::union_with(const TagSet& other) const {
  TagSet out;
  std::set_union(tags_.begin(), tags_.end(), other.tags_.begin(), other.tags_.end(),
                 std::back_inserter(out.tags_));
  return out;
}

std::string TagSet::join(char sep) const {
  std::string out;
  for (const auto& t : tags_) {
    if (!out.empty()) out.push_back(sep);
    out += t;
  }
  return out;
}

std::string TagSet::to_list() const {
  std::string out;
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (i > 0) out.push_back(',');
    for (char c : tags_[i]) {
      if (c == '\\' || c == ',') out.push_back('\\');
      out.push_back(c);
    }
  }
  return out == "-" ? "\\-" : out;
}

TagSet TagSet::from_list(std::string_view text) {
  std::vector<Tag> tags(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\') {
      if (++i == text.size()) throw std::invalid_argument("dangling escape in tag list");
      tags.back().push_back(text[i]);
    } else if (text[i] == ',') {
      tags.emplace_back();
    } else {
      tags.back().push_back(text[i]);
    }
  }
  return TagSet(std::move(tags));
}

std::size_t TagSetHash::operator()(const TagSet& set) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& t : set.tags()) h = (h ^ std::hash<std::string>{}(t)) * 0x100000001b3ULL;
  return h;
}

}  // namespace posguess
