#include <array>

#include "gtminer/nlp.hpp"
#include "text_util.hpp"

namespace gtminer {
namespace {

using detail::is_alpha;
using detail::is_digit;
using detail::is_space;
using detail::is_upper;

using detail::kWidePunct;
using detail::punct_at;

/// Byte length of the punctuation character ending at `end`, or 0.
std::size_t punct_before(std::string_view s, std::size_t begin, std::size_t end) noexcept {
  if (end <= begin) return 0;
  if (detail::is_ascii_punct(s[end - 1])) return 1;
  const auto piece = s.substr(begin, end - begin);
  for (auto p : kWidePunct)
    if (piece.ends_with(p)) return p.size();
  return 0;
}

/// Lowercases ASCII letters and folds the typographic apostrophe to '\''.
std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i).starts_with("’")) {
      out.push_back('\'');
      i += 2;
    } else {
      const char c = s[i];
      out.push_back(is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c);
    }
  }
  return out;
}

constexpr std::array<std::string_view, 6> kClitics = {"'s", "'m", "'re", "'ve", "'ll", "'d"};

bool is_clitic(std::string_view piece) {
  const auto f = fold(piece);
  if (f == "n't") return true;
  for (auto c : kClitics)
    if (f == c) return true;
  return false;
}

/// Byte length of a trailing clitic to split off `word`, or 0.
std::size_t clitic_suffix(std::string_view word) {
  const auto f = fold(word);
  // fold() shortens each typographic apostrophe by two bytes.
  const std::size_t extra = word.size() - f.size();
  if (f.size() > 3 && f.ends_with("n't")) return 3 + extra;
  for (auto c : kClitics) {
    if (f.size() > c.size() && f.ends_with(c) && is_alpha(f[f.size() - c.size() - 1]))
      return c.size() + extra;
  }
  return 0;
}

/// "U.S.", "a.m.": single letters each followed by a period.
bool is_initialism(std::string_view s) {
  if (s.size() < 4 || s.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < s.size(); i += 2)
    if (!is_alpha(s[i]) || s[i + 1] != '.') return false;
  return true;
}

void emit(std::vector<Token>& out, std::string_view text, std::size_t b, std::size_t e,
          std::size_t offset) {
  out.push_back(Token{std::string(text.substr(b, e - b)), {b + offset, e + offset}, Pos::Other, {}});
}

void tokenize_chunk(std::string_view text, std::size_t b, std::size_t e, std::size_t offset,
                    const Lexicons& lex, std::vector<Token>& out) {
  // Leading punctuation, identical characters grouped ("...", "((").
  while (b < e && !is_clitic(text.substr(b, e - b))) {
    const std::size_t n = punct_at(text, b);
    if (n == 0) break;
    std::size_t run = n;
    while (b + run + n <= e && text.substr(b + run, n) == text.substr(b, n)) run += n;
    emit(out, text, b, b + run, offset);
    b += run;
  }

  std::vector<std::pair<std::size_t, std::size_t>> trailing;
  while (e > b && !is_clitic(text.substr(b, e - b))) {
    const std::size_t n = punct_before(text, b, e);
    if (n == 0) break;
    if (text[e - 1] == '.') {
      const auto word = text.substr(b, e - b);
      if (lex.is_abbreviation(detail::to_lower(word)) || is_initialism(word)) break;
    }
    std::size_t run = n;
    while (e >= b + run + n && text.substr(e - run - n, n) == text.substr(e - n, n)) run += n;
    trailing.emplace_back(e - run, e);
    e -= run;
  }

  if (b < e) {
    const std::size_t clitic = clitic_suffix(text.substr(b, e - b));
    if (clitic > 0) {
      emit(out, text, b, e - clitic, offset);
      emit(out, text, e - clitic, e, offset);
    } else {
      emit(out, text, b, e, offset);
    }
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
    emit(out, text, it->first, it->second, offset);
}

bool is_closing(std::string_view s, std::size_t i, std::size_t& len) {
  const char c = s[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') {
    len = 1;
    return true;
  }
  for (auto p : {std::string_view("”"), std::string_view("’")})
    if (s.substr(i).starts_with(p)) {
      len = p.size();
      return true;
    }
  return false;
}

bool starts_sentence(std::string_view s, std::size_t k) {
  if (k >= s.size()) return true;
  if (is_upper(s[k]) || is_digit(s[k])) return true;
  // An opening quote or bracket before the capital.
  std::size_t len = 0;
  if (s[k] == '"' || s[k] == '\'' || s[k] == '(' || s[k] == '[') len = 1;
  else if (s.substr(k).starts_with("“") || s.substr(k).starts_with("‘")) len = 3;
  return len > 0 && k + len < s.size() && (is_upper(s[k + len]) || is_digit(s[k + len]));
}

/// The whitespace-delimited word ending at `end` (exclusive), without
/// leading punctuation.
std::string_view word_before(std::string_view s, std::size_t end) {
  std::size_t b = end;
  while (b > 0 && !is_space(s[b - 1])) --b;
  while (b < end && (s[b] == '(' || s[b] == '"' || s[b] == '[' || s[b] == '\'')) ++b;
  return s.substr(b, end - b);
}

void push_sentence(std::vector<Sentence>& out, std::string_view text, std::size_t b,
                   std::size_t e) {
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  if (b < e) out.push_back(Sentence{{}, {b, e}});
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, std::size_t offset, const Lexicons& lexicons) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) tokenize_chunk(text, i, j, offset, lexicons, out);
    i = j;
  }
  return out;
}

std::vector<Sentence> split_sentences(std::string_view text, const Lexicons& lexicons) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < n && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < n && text[j] == '\n') {
        push_sentence(out, text, start, i);
        start = j + 1;
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
    const bool single_period = c == '.' && j == i + 1;
    std::size_t len = 0;
    while (j < n && is_closing(text, j, len)) j += len;
    if (j < n && !is_space(text[j])) {
      i = j;
      continue;
    }
    std::size_t k = j;
    while (k < n && is_space(text[k])) ++k;
    bool boundary = starts_sentence(text, k);
    if (boundary && single_period) {
      const auto word = word_before(text, i + 1);
      if (lexicons.is_abbreviation(detail::to_lower(word)) ||
          (word.size() == 2 && is_upper(word[0])) || is_initialism(word))
        boundary = false;
    }
    if (boundary) {
      push_sentence(out, text, start, j);
      start = j;
    }
    i = j;
  }
  push_sentence(out, text, start, n);
  return out;
}

}  // namespace gtminer
