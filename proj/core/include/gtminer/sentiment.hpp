#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gtminer/corpus.hpp"
#include "gtminer/lexicon.hpp"

namespace gtminer {

/// Rule constants of the lexicon scorer.
namespace sentiment_constants {
inline constexpr double kBoosterIncrement = 0.293;
inline constexpr double kBoosterDecrement = -0.293;
inline constexpr double kCapsIncrement = 0.733;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kExclamationIncrement = 0.292;
inline constexpr int kMaxExclamations = 3;
inline constexpr double kNormalizationAlpha = 15.0;
inline constexpr double kLabelThreshold = 0.05;
inline constexpr int kNegationWindow = 3;
}  // namespace sentiment_constants

struct SentimentScore {
  double pos = 0.0;
  double neg = 0.0;
  double neu = 1.0;
  double compound = 0.0;

  friend bool operator==(const SentimentScore&, const SentimentScore&) = default;
};

/// s / sqrt(s^2 + 15), clamped to [-1, 1].
double normalize_compound(double sum) noexcept;

SentimentScore score_text(std::string_view text, const Lexicons& lexicons = Lexicons::standard());

SentimentScore score_document(const Document& document,
                              const Lexicons& lexicons = Lexicons::standard());

struct SentenceSentiment {
  std::string text;
  SentimentScore score;
};

std::vector<SentenceSentiment> score_sentences(const Document& document,
                                               const Lexicons& lexicons = Lexicons::standard());

/// pos when compound >= 0.05, neg when <= -0.05, neu otherwise.
SentimentLabel label(double compound) noexcept;
inline SentimentLabel label(const SentimentScore& score) noexcept { return label(score.compound); }

bool is_negation_word(std::string_view lower) noexcept;
bool is_booster_word(std::string_view lower) noexcept;

}  // namespace gtminer
