#include "migmeta/identifier.hpp"

#include <cctype>
#include <vector>

namespace migmeta {
namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_upper(c) || is_lower(c) || is_digit(c); }

char to_upper(char c) { return is_lower(c) ? static_cast<char>(c - 'a' + 'A') : c; }
char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

bool is_upper_camel(std::string_view text) noexcept {
  if (text.empty() || !is_upper(text.front())) return false;
  for (char c : text) {
    if (!is_alnum(c)) return false;
  }
  return true;
}

std::string to_upper_camel(std::string_view name) {
  std::string out;
  bool word_start = true;
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '_') {
      word_start = true;
      continue;
    }
    // Slashes and hyphens join their neighbours without starting a word.
    if (!is_alnum(c)) continue;
    out.push_back(word_start ? to_upper(c) : c);
    word_start = false;
  }
  return out;
}

std::string display_name_from_id(std::string_view id) {
  std::vector<std::string> words;
  for (std::size_t i = 0; i < id.size(); ++i) {
    const char c = id[i];
    bool boundary = false;
    if (i > 0 && is_upper(c)) {
      const char prev = id[i - 1];
      const bool next_lower = i + 1 < id.size() && is_lower(id[i + 1]);
      boundary = is_lower(prev) || is_digit(prev) || (is_upper(prev) && next_lower);
    }
    if (words.empty() || boundary) words.emplace_back();
    words.back().push_back(c);
  }

  std::string out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::string word = words[w];
    const bool acronym = word.size() > 1 && is_upper(word[0]) && is_upper(word[1]);
    if (w > 0 && !acronym) word[0] = to_lower(word[0]);
    if (w > 0) out.push_back(' ');
    out += word;
  }
  return out;
}

}  // namespace migmeta
