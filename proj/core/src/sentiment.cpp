#include "gtminer/sentiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "gtminer/nlp.hpp"
#include "text_util.hpp"

namespace gtminer {
namespace {

namespace k = sentiment_constants;

constexpr std::array<std::string_view, 58> kNegations = {
    "aint",     "arent",    "cannot",   "cant",     "couldnt",  "darent",   "didnt",
    "doesnt",   "ain't",    "aren't",   "can't",    "couldn't", "daren't",  "didn't",
    "doesn't",  "dont",     "hadnt",    "hasnt",    "havent",   "isnt",     "mightnt",
    "mustnt",   "neither",  "don't",    "hadn't",   "hasn't",   "haven't",  "isn't",
    "mightn't", "mustn't",  "neednt",   "needn't",  "never",    "none",     "nope",
    "nor",      "not",      "nothing",  "nowhere",  "oughtnt",  "shant",    "shouldnt",
    "uhuh",     "wasnt",    "werent",   "oughtn't", "shan't",   "shouldn't", "uh-uh",
    "wasn't",   "weren't",  "without",  "wont",     "wouldnt",  "won't",    "wouldn't",
    "rarely",   "seldom",
};

constexpr std::array<std::string_view, 47> kIncrements = {
    "absolutely",   "amazingly",   "awfully",      "completely",    "considerable",
    "considerably", "decidedly",   "deeply",       "enormous",      "enormously",
    "entirely",     "especially",  "exceptional",  "exceptionally", "extreme",
    "extremely",    "fabulously",  "fully",        "greatly",       "hella",
    "highly",       "hugely",      "incredible",   "incredibly",    "intensely",
    "major",        "majorly",     "more",         "most",          "particularly",
    "purely",       "quite",       "really",       "remarkably",    "so",
    "substantially", "thoroughly", "total",        "totally",       "tremendous",
    "tremendously", "uber",        "unbelievably", "unusually",     "utter",
    "utterly",      "very",
};

constexpr std::array<std::string_view, 20> kDecrements = {
    "almost",   "barely",     "hardly", "kinda",   "kindof",     "kind-of",      "less",
    "little",   "marginal",   "marginally", "occasional", "occasionally", "partly", "scarce",
    "scarcely", "slight",     "slightly",   "somewhat",   "sorta",        "sortof",
};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& list, std::string_view w) noexcept {
  return std::find(list.begin(), list.end(), w) != list.end();
}

/// Any letters, all of them uppercase, and at least two of them ("I" is not
/// emphasis).
bool is_shouted(std::string_view w) noexcept {
  int letters = 0;
  for (char c : w) {
    if (detail::is_lower(c)) return false;
    if (detail::is_upper(c)) ++letters;
  }
  return letters >= 2;
}

/// Whitespace-separated words with surrounding punctuation removed.
std::vector<std::string_view> words_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !detail::is_space(text[j])) ++j;
    std::size_t b = i, e = j;
    while (b < e) {
      const std::size_t n = detail::punct_at(text, b);
      if (n == 0) break;
      b += n;
    }
    while (e > b) {
      std::size_t n = 0;
      if (detail::is_ascii_punct(text[e - 1])) n = 1;
      else
        for (auto p : detail::kWidePunct)
          if (text.substr(b, e - b).ends_with(p)) n = p.size();
      if (n == 0) break;
      e -= n;
    }
    if (b < e) out.push_back(text.substr(b, e - b));
    i = j;
  }
  return out;
}

double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

bool is_negation_word(std::string_view lower) noexcept {
  if (contains(kNegations, lower)) return true;
  return lower.find("n't") != std::string_view::npos;
}

bool is_booster_word(std::string_view lower) noexcept {
  return contains(kIncrements, lower) || contains(kDecrements, lower);
}

double normalize_compound(double sum) noexcept {
  const double c = sum / std::sqrt(sum * sum + k::kNormalizationAlpha);
  return std::clamp(c, -1.0, 1.0);
}

SentimentScore score_text(std::string_view text, const Lexicons& lexicons) {
  const auto words = words_of(text);
  if (words.empty()) return {};

  std::vector<std::string> lower;
  lower.reserve(words.size());
  bool any_shouted = false;
  bool any_quiet = false;
  for (auto w : words) {
    lower.push_back(detail::to_lower(w));
    for (std::size_t p; (p = lower.back().find("’")) != std::string::npos;)
      lower.back().replace(p, 3, "'");
    (is_shouted(w) ? any_shouted : any_quiet) = true;
  }
  const bool caps_differential = any_shouted && any_quiet;

  std::vector<double> valences(words.size(), 0.0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (is_booster_word(lower[i])) continue;
    const auto base = lexicons.valence(lower[i]);
    if (!base) continue;
    double v = *base;
    if (caps_differential && is_shouted(words[i])) v += sign(v) * k::kCapsIncrement;

    // Degree modifier: the word immediately before.
    if (i > 0 && contains(kIncrements, lower[i - 1]) != contains(kDecrements, lower[i - 1])) {
      double scalar =
          contains(kIncrements, lower[i - 1]) ? k::kBoosterIncrement : k::kBoosterDecrement;
      if (v < 0.0) scalar = -scalar;
      if (caps_differential && is_shouted(words[i - 1])) scalar += sign(v) * k::kCapsIncrement;
      v += scalar;
    }

    for (std::size_t back = 1; back <= k::kNegationWindow && back <= i; ++back) {
      if (is_negation_word(lower[i - back])) {
        v *= k::kNegationScalar;
        break;
      }
    }
    valences[i] = v;
  }

  // "but": soften what precedes, stress what follows.
  if (auto it = std::find(lower.begin(), lower.end(), "but"); it != lower.end()) {
    const auto at = static_cast<std::size_t>(it - lower.begin());
    for (std::size_t i = 0; i < valences.size(); ++i) {
      if (i < at) valences[i] *= 0.5;
      else if (i > at) valences[i] *= 1.5;
    }
  }

  double sum = 0.0;
  double pos_sum = 0.0;
  double neg_sum = 0.0;
  std::size_t neutral = 0;
  for (double v : valences) {
    sum += v;
    if (v > 0.0) pos_sum += v + 1.0;
    else if (v < 0.0) neg_sum += v - 1.0;
    else ++neutral;
  }

  const auto bangs = std::min<std::size_t>(std::count(text.begin(), text.end(), '!'),
                                           static_cast<std::size_t>(k::kMaxExclamations));
  const double emphasis = static_cast<double>(bangs) * k::kExclamationIncrement;
  if (sum > 0.0) sum += emphasis;
  else if (sum < 0.0) sum -= emphasis;

  if (pos_sum > -neg_sum) pos_sum += emphasis;
  else if (pos_sum < -neg_sum) neg_sum -= emphasis;

  SentimentScore score;
  const double total = pos_sum - neg_sum + static_cast<double>(neutral);
  score.pos = pos_sum / total;
  score.neg = -neg_sum / total;
  score.neu = static_cast<double>(neutral) / total;
  score.compound = sum == 0.0 ? 0.0 : normalize_compound(sum);
  return score;
}

SentimentScore score_document(const Document& document, const Lexicons& lexicons) {
  return score_text(document.text, lexicons);
}

std::vector<SentenceSentiment> score_sentences(const Document& document,
                                               const Lexicons& lexicons) {
  std::vector<SentenceSentiment> out;
  const std::string_view text = document.text;
  for (const auto& s : split_sentences(text, lexicons)) {
    auto piece = text.substr(s.span.begin, s.span.size());
    out.push_back({std::string(piece), score_text(piece, lexicons)});
  }
  return out;
}

SentimentLabel label(double compound) noexcept {
  if (compound >= k::kLabelThreshold) return SentimentLabel::Positive;
  if (compound <= -k::kLabelThreshold) return SentimentLabel::Negative;
  return SentimentLabel::Neutral;
}

}  // namespace gtminer
