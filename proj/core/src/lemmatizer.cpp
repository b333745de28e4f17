#include <optional>
#include <vector>

#include "gtminer/nlp.hpp"
#include "text_util.hpp"

namespace gtminer {
namespace {

constexpr bool is_vowel(char c) noexcept {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_vowel(std::string_view s) noexcept {
  for (char c : s)
    if (is_vowel(c) || c == 'y') return true;
  return false;
}

/// Stem ending consonant-vowel-consonant, where a dropped final 'e' is likely
/// (hop-ing from hope, us-ed from use).
bool cvc_ending(std::string_view s) noexcept {
  const std::size_t n = s.size();
  if (n < 2) return false;
  const char last = s[n - 1];
  if (is_vowel(last) || last == 'w' || last == 'x' || last == 'y') return false;
  if (!is_vowel(s[n - 2])) return false;
  return n == 2 || !is_vowel(s[n - 3]);
}

bool doubled_consonant(std::string_view s) noexcept {
  const std::size_t n = s.size();
  return n >= 3 && s[n - 1] == s[n - 2] && !is_vowel(s[n - 1]) && s[n - 1] != 'l' &&
         s[n - 1] != 's' && s[n - 1] != 'z';
}

std::string drop(std::string_view s, std::size_t k) { return std::string(s.substr(0, s.size() - k)); }

/// Lemma of an -ing / -ed form with `stem` = word minus the suffix.
std::optional<std::string> participle_stem(std::string_view stem, const Lexicons& lex) {
  if (stem.size() < 2 || !has_vowel(stem)) return std::nullopt;
  const std::string with_e = std::string(stem) + "e";
  const std::string bare(stem);
  std::vector<std::string> order;
  if (cvc_ending(stem)) order = {with_e, bare};
  else order = {bare, with_e};
  if (doubled_consonant(stem)) order.push_back(drop(stem, 1));
  for (const auto& c : order)
    if (lex.is_known_word(c)) return c;
  return std::nullopt;
}

/// Heuristic for words and stems unknown to the lexicon.
std::string guess_stem(std::string_view stem) {
  if (doubled_consonant(stem)) return drop(stem, 1);
  return std::string(stem);
}

std::string verb_lemma(std::string_view w, const Lexicons& lex) {
  const bool known = lex.is_known_word(w);
  if (w.size() > 4 && (w.ends_with("ies") || w.ends_with("ied"))) {
    std::string c = drop(w, 3) + "y";
    if (lex.is_known_word(c) || !known) return c;
    return std::string(w);
  }
  if (w.size() > 4 && w.ends_with("ing")) {
    if (auto c = participle_stem(w.substr(0, w.size() - 3), lex)) return *c;
    if (known || !has_vowel(w.substr(0, w.size() - 3))) return std::string(w);
    return guess_stem(w.substr(0, w.size() - 3));
  }
  if (w.size() > 3 && w.ends_with("ed")) {
    // Stems like "agre" + "ed": the -d form of a verb ending in 'e'.
    if (auto c = participle_stem(w.substr(0, w.size() - 2), lex)) return *c;
    if (lex.is_known_word(drop(w, 1))) return drop(w, 1);
    if (known || !has_vowel(w.substr(0, w.size() - 2))) return std::string(w);
    return guess_stem(w.substr(0, w.size() - 2));
  }
  if (w.size() > 3 && w.ends_with("s") && !w.ends_with("ss") && !w.ends_with("us") &&
      !w.ends_with("is")) {
    const std::string one = drop(w, 1);
    if (lex.is_known_word(one)) return one;
    if (w.ends_with("es") && lex.is_known_word(drop(w, 2))) return drop(w, 2);
    if (known) return std::string(w);
    for (auto sib : {"ches", "shes", "sses", "xes", "zes"})
      if (w.ends_with(sib)) return drop(w, 2);
    return one;
  }
  return std::string(w);
}

std::string noun_lemma(std::string_view w, const Lexicons& lex) {
  const bool known = lex.is_known_word(w);
  if (w.size() > 4 && w.ends_with("ies")) {
    std::string c = drop(w, 3) + "y";
    if (lex.is_known_word(c) || !known) return c;
    return std::string(w);
  }
  if (w.size() > 3 && w.ends_with("s") && !w.ends_with("ss") && !w.ends_with("us") &&
      !w.ends_with("is")) {
    const std::string one = drop(w, 1);
    if (lex.is_known_word(one)) return one;
    if (w.ends_with("es") && lex.is_known_word(drop(w, 2))) return drop(w, 2);
    if (known) return std::string(w);
    for (auto sib : {"ches", "shes", "sses", "xes", "zes"})
      if (w.ends_with(sib)) return drop(w, 2);
    return one;
  }
  return std::string(w);
}

std::string base_lemma(const std::string& w, Pos pos, const Lexicons& lex) {
  if (auto e = lex.lemma_exception(w, pos)) return std::string(*e);
  switch (pos) {
    case Pos::Verb:
      return verb_lemma(w, lex);
    case Pos::Noun:
      return noun_lemma(w, lex);
    default:
      return w;
  }
}

}  // namespace

std::string lemmatize(std::string_view surface, Pos pos, const Lexicons& lexicons) {
  std::string w = detail::to_lower(surface);
  for (std::size_t p; (p = w.find("’")) != std::string::npos;) w.replace(p, 3, "'");
  const std::string once = base_lemma(w, pos, lexicons);
  // A rule chain that would change its own output again is not trusted;
  // this keeps the mapping idempotent whatever the data files contain.
  if (once.empty() || base_lemma(once, pos, lexicons) != once) return w;
  return once;
}

}  // namespace gtminer
