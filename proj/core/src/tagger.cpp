#include <array>
#include <vector>

#include "gtminer/nlp.hpp"
#include "text_util.hpp"

namespace gtminer {
namespace {

using detail::is_alpha;
using detail::is_digit;
using detail::is_title_case;
using detail::is_lower;
using detail::is_upper;

bool has_alnum(std::string_view s) noexcept { return !detail::is_punct_only(s); }

bool is_number(std::string_view s) noexcept {
  if (s.empty() || !is_digit(s.front())) return false;
  for (char c : s)
    if (!is_digit(c) && c != '.' && c != ',') return false;
  return is_digit(s.back());
}

bool is_all_caps(std::string_view s) noexcept {
  std::size_t letters = 0;
  for (char c : s) {
    if (is_lower(c)) return false;
    if (is_upper(c)) ++letters;
  }
  return letters >= 2;
}

bool ends_with(std::string_view s, std::string_view suffix) noexcept {
  return s.size() > suffix.size() + 1 && s.ends_with(suffix);
}

constexpr std::array<std::string_view, 7> kSubjects = {"i", "you", "he", "she", "we", "they", "it"};
constexpr std::array<std::string_view, 15> kModals = {
    "can", "could", "may", "might", "must", "shall", "should", "will",
    "would", "ca", "wo", "sha", "'ll", "'d", "ought"};
constexpr std::array<std::string_view, 3> kDoForms = {"do", "does", "did"};
constexpr std::array<std::string_view, 8> kPossessives = {"my",  "your", "his",  "her",
                                                          "its", "our",  "their", "whose"};
constexpr std::array<std::string_view, 4> kDemonstratives = {"this", "that", "these", "those"};
constexpr std::array<std::string_view, 4> kSubordinators = {"after", "before", "since", "until"};
constexpr std::array<std::string_view, 8> kLinkingVerbs = {"feel", "feels", "felt", "seem",
                                                           "seems", "seemed", "look", "looked"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& set, std::string_view w) noexcept {
  for (auto s : set)
    if (s == w) return true;
  return false;
}

/// Suffix rules for words missing from both lexicons.
std::optional<Pos> suffix_tag(std::string_view w, bool after_det) {
  if (ends_with(w, "ly")) return Pos::Adv;
  for (auto s : {"ous", "ful", "able", "ible", "ive", "al", "less", "ic"})
    if (ends_with(w, s)) return Pos::Adj;
  for (auto s : {"tion", "sion", "ness", "ment", "ity", "er", "or", "ism", "ist", "ance", "ence"})
    if (ends_with(w, s)) return Pos::Noun;
  for (auto s : {"ize", "ise", "ify"})
    if (ends_with(w, s)) return Pos::Verb;
  if (ends_with(w, "ing") || ends_with(w, "ed")) return after_det ? Pos::Adj : Pos::Verb;
  return std::nullopt;
}

struct Work {
  std::string lower;
  bool guessed = false;  // tagged by the fallback, no lexical evidence
};

}  // namespace

std::size_t first_word_index(std::span<const Token> tokens) noexcept {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (has_alnum(tokens[i].surface)) return i;
  return tokens.size();
}

void pos_tag(std::span<Token> tokens, const TaggingContext& context, const Lexicons& lex) {
  const std::size_t n = tokens.size();
  const std::size_t first = first_word_index(tokens);
  std::vector<Work> work(n);

  // Lexical cascade.
  for (std::size_t i = 0; i < n; ++i) {
    Token& t = tokens[i];
    const std::string_view s = t.surface;
    std::string& w = work[i].lower;
    w = detail::to_lower(s);
    for (std::size_t p; (p = w.find("’")) != std::string::npos;) w.replace(p, 3, "'");

    if (!has_alnum(s)) {
      t.pos = Pos::Punct;
      continue;
    }
    if (is_number(s)) {
      t.pos = Pos::Num;
      continue;
    }
    if (detail::is_honorific(w) && is_upper(s.front())) {
      t.pos = Pos::Propn;
      continue;
    }
    if (auto closed = lex.closed_class(w)) {
      t.pos = *closed;
      continue;
    }
    if (i != first && is_title_case(s)) {
      t.pos = Pos::Propn;
      continue;
    }
    if (is_all_caps(s)) {
      auto open = lex.open_class(w);
      t.pos = open ? *open : Pos::Propn;
      continue;
    }
    if (i == first && is_title_case(s) &&
        (lex.in_gazetteer(w) || context.capitalized_mid_sentence.contains(w))) {
      t.pos = Pos::Propn;
      continue;
    }
    if (auto open = lex.open_class(w)) {
      t.pos = *open;
      continue;
    }
    const bool after_det = i > 0 && tokens[i - 1].pos == Pos::Det;
    if (auto guess = suffix_tag(w, after_det)) {
      t.pos = *guess;
      continue;
    }
    t.pos = Pos::Noun;
    work[i].guessed = true;
  }

  // Repair words with no lexical evidence from their left neighbour.
  for (std::size_t i = 1; i < n; ++i) {
    if (!work[i].guessed) continue;
    const Pos prev = tokens[i - 1].pos;
    const auto& pw = work[i - 1].lower;
    if (prev == Pos::Det || prev == Pos::Adj)
      tokens[i].pos = Pos::Noun;
    else if ((prev == Pos::Pron && in(kSubjects, pw)) || (pw == "to" && prev == Pos::Part))
      tokens[i].pos = Pos::Verb;
  }

  auto word = [&](std::size_t i) -> std::string_view { return work[i].lower; };
  auto tag = [&](std::size_t i) { return tokens[i].pos; };
  auto next_tag = [&](std::size_t i) { return i + 1 < n ? tokens[i + 1].pos : Pos::Punct; };
  auto verbable = [&](std::size_t i) {
    return tag(i) == Pos::Noun && lex.has_verb_reading(word(i));
  };
  // Index of the nearest token left of i that is not an adverb or negation.
  auto left_skipping_adverbs = [&](std::size_t i) -> std::ptrdiff_t {
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) - 1;
    while (j >= 0 && (tag(j) == Pos::Adv || word(j) == "not" || word(j) == "n't")) --j;
    return j;
  };
  auto verb_licensor = [&](std::ptrdiff_t j) {
    if (j < 0) return false;
    const auto w = word(j);
    return (tag(j) == Pos::Pron && in(kSubjects, w)) || (tag(j) == Pos::Aux && in(kModals, w)) ||
           (tag(j) == Pos::Aux && in(kDoForms, w)) || (tag(j) == Pos::Part && w == "to");
  };

  // Contextual rules, left to right so each sees earlier corrections.
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = word(i);
    const Pos prev = i > 0 ? tag(i - 1) : Pos::Punct;
    const auto pw = i > 0 ? word(i - 1) : std::string_view();

    if (w == "to" && tag(i) == Pos::Part) {
      const Pos nt = next_tag(i);
      const bool verb_next =
          nt == Pos::Verb || nt == Pos::Aux || nt == Pos::Adv || (i + 1 < n && verbable(i + 1));
      if (!verb_next) tokens[i].pos = Pos::Adp;
      continue;
    }
    if (w == "like" && tag(i) == Pos::Adp && verb_licensor(left_skipping_adverbs(i))) {
      tokens[i].pos = Pos::Verb;
      continue;
    }
    if (w == "'s" && prev == Pos::Pron) {
      tokens[i].pos = Pos::Aux;
      continue;
    }
    if (in(kSubordinators, w) && tag(i) == Pos::Adp && i + 1 < n && tag(i + 1) == Pos::Pron &&
        in(kSubjects, word(i + 1))) {
      tokens[i].pos = Pos::Conj;
      continue;
    }
    if ((w == "so" || w == "much") && (next_tag(i) == Pos::Adj || next_tag(i) == Pos::Adv)) {
      tokens[i].pos = Pos::Adv;
      continue;
    }
    if (in(kDemonstratives, w) && tag(i) == Pos::Det) {
      const Pos nt = next_tag(i);
      if (w == "that" && (nt == Pos::Pron || nt == Pos::Det || nt == Pos::Propn))
        tokens[i].pos = Pos::Conj;
      else if (nt != Pos::Noun && nt != Pos::Adj && nt != Pos::Propn && nt != Pos::Num &&
               nt != Pos::Adv)
        tokens[i].pos = Pos::Pron;
      continue;
    }
    if (verbable(i) && verb_licensor(left_skipping_adverbs(i))) {
      tokens[i].pos = Pos::Verb;
      continue;
    }
    if (tag(i) == Pos::Verb && i > 0) {
      const bool np_left = prev == Pos::Det || (prev == Pos::Pron && in(kPossessives, pw));
      const bool participle = w.ends_with("ed") || w.ends_with("en");
      const Pos nt = next_tag(i);
      if (np_left) {
        tokens[i].pos =
            participle && (nt == Pos::Noun || nt == Pos::Adj) ? Pos::Adj : Pos::Noun;
        continue;
      }
      if (prev == Pos::Adj && w.ends_with("s") && !w.ends_with("ss")) {
        tokens[i].pos = Pos::Noun;
        continue;
      }
      if (w.ends_with("ed") && in(kLinkingVerbs, pw)) {
        tokens[i].pos = Pos::Adj;
        continue;
      }
      // "scared and confused": a participle coordinated with an adjective.
      if (w.ends_with("ed") && (pw == "and" || pw == "or") && i > 1 && tag(i - 2) == Pos::Adj) {
        tokens[i].pos = Pos::Adj;
        continue;
      }
    }
  }

  // A clause needs a verb: promote the first plausible noun.
  bool has_verb = false;
  for (std::size_t i = 0; i < n; ++i)
    if (tag(i) == Pos::Verb || tag(i) == Pos::Aux) has_verb = true;
  if (!has_verb) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!verbable(i)) continue;
      const bool at_start = i == first;
      const bool after_subject =
          i > 0 && (tag(i - 1) == Pos::Noun || tag(i - 1) == Pos::Propn ||
                    (tag(i - 1) == Pos::Pron && in(kSubjects, word(i - 1))));
      if (at_start || after_subject) {
        tokens[i].pos = Pos::Verb;
        break;
      }
    }
  }
}

}  // namespace gtminer
