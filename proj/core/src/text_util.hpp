#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace gtminer::detail {

constexpr bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
constexpr bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
constexpr bool is_alpha(char c) noexcept { return is_upper(c) || is_lower(c); }
constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Multi-byte punctuation recognized in UTF-8 text.
inline constexpr std::array<std::string_view, 9> kWidePunct = {
    "“", "”", "‘", "’", "—", "–", "…", "«", "»",
};

constexpr bool is_ascii_punct(char c) noexcept {
  return (c >= 33 && c <= 47) || (c >= 58 && c <= 64) || (c >= 91 && c <= 96) ||
         (c >= 123 && c <= 126);
}

/// Byte length of the punctuation character starting at `i`, or 0.
inline std::size_t punct_at(std::string_view s, std::size_t i) noexcept {
  if (i >= s.size()) return 0;
  if (is_ascii_punct(s[i])) return 1;
  for (auto p : kWidePunct)
    if (s.substr(i).starts_with(p)) return p.size();
  return 0;
}

/// True when `s` is non-empty and made only of punctuation characters.
inline bool is_punct_only(std::string_view s) noexcept {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size();) {
    const std::size_t n = punct_at(s, i);
    if (n == 0) return false;
    i += n;
  }
  return true;
}

/// "John", "Dr.", "A": initial capital followed by lowercase letters.
constexpr bool is_title_case(std::string_view s) noexcept {
  if (s.empty() || !is_upper(s.front())) return false;
  for (char c : s.substr(1))
    if (is_lower(c)) return true;
  return s.size() == 1 || s.back() == '.';
}

/// Title abbreviations that start a name ("dr.", "mrs.").
inline bool is_honorific(std::string_view lower) noexcept {
  for (std::string_view h : {"dr.", "mr.", "mrs.", "ms.", "prof.", "st.", "mt."})
    if (h == lower) return true;
  return false;
}

/// Splits into lines on '\n', dropping a trailing '\r' from each.
inline std::vector<std::string_view> split_lines(std::string_view s) {
  auto lines = split(s, '\n');
  for (auto& line : lines)
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return lines;
}

}  // namespace gtminer::detail
