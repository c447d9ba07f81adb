#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace posguess {

// Splits on every occurrence of sep; empty fields are kept.
std::vector<std::string_view> split(std::string_view text, char sep);

// Drops a trailing '\r' so CRLF files read like LF files.
std::string_view strip_cr(std::string_view line);

std::string_view trim(std::string_view text);

std::string ascii_lower(std::string_view text);

bool is_ascii_upper(char c);

bool has_whitespace(std::string_view text);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// Accepts the full strtod grammar; throws std::invalid_argument otherwise.
double parse_double(std::string_view text);

long long parse_int(std::string_view text);

}  // namespace posguess
