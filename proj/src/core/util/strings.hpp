#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rei::util {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
bool contains(std::string_view haystack, std::string_view needle);

// Case-insensitive substring search; npos when absent.
size_t ifind(std::string_view haystack, std::string_view needle, size_t from = 0);

// Whole-word case-insensitive search: the match may not be flanked by
// alphanumeric characters.
size_t find_word(std::string_view text, std::string_view word, size_t from = 0);

int count_words(std::string_view s);

// Words made of letters/digits/underscore, lowercased, in order.
std::vector<std::string> tokenize(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

}  // namespace rei::util
