#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phantom::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view s);
// Converts "\r\n" and lone '\r' to '\n'.
std::string normalize_newlines(std::string_view s);

std::string base64url_encode(std::string_view bytes);
// Accepts unpadded or padded input; nullopt on characters outside the alphabet.
std::optional<std::string> base64url_decode(std::string_view encoded);

// Value portion of each credential line: text after the first '=' or ':' when
// present, otherwise the whole line. Blank lines, comment lines ('#', ';',
// "//") and PEM armor lines are skipped, surrounding quotes are stripped,
// empty values dropped.
std::vector<std::string> extract_values(std::string_view content);

}  // namespace phantom::text
