#include <cmath>

#include "doctest.h"
#include "gtminer/random.hpp"
#include "gtminer/sentiment.hpp"
#include "support.hpp"

using namespace gtminer;

namespace {

double val(const char* w) {
  const auto v = Lexicons::standard().valence(w);
  REQUIRE_MESSAGE(v.has_value(), w);
  return *v;
}

double closed_form(double sum) { return sum == 0.0 ? 0.0 : sum / std::sqrt(sum * sum + 15.0); }

constexpr double kBoost = 0.293;
constexpr double kCaps = 0.733;
constexpr double kNeg = -0.74;
constexpr double kBang = 0.292;

}  // namespace

TEST_CASE("single lexemes follow the closed form") {
  const auto& lex = Lexicons::standard();
  std::size_t checked = 0;
  for (const auto& [word, v] : lex.valences()) {
    if (v == 0.0 || is_booster_word(word) || is_negation_word(word) || word == "but") continue;
    const auto s = score_text(word);
    CHECK(std::abs(s.compound - v / std::sqrt(v * v + 15.0)) <= 1e-9);
    CHECK(s.pos + s.neg == doctest::Approx(1.0));
    if (++checked == 20) break;
  }
  CHECK(checked == 20);
}

TEST_CASE("filler words used below carry no valence") {
  for (const char* w : {"the", "food", "was", "bread", "weather", "today", "it", "i", "and", "she",
                        "said", "he", "them", "think", "is", "do", "mornings"})
    CHECK_MESSAGE(!Lexicons::standard().valence(w).has_value(), w);
}

TEST_CASE("rule composition on 30 sentences") {
  const double g = val("good"), b = val("bad"), l = val("love"), h = val("hate");
  struct Case {
    const char* text;
    double sum;
  };
  const std::vector<Case> cases{
      {"good", g},
      {"The food was good.", g},
      {"not good", g * kNeg},
      {"The food was not good.", g * kNeg},
      {"I do not think it is good", g},
      {"very good", g + kBoost},
      {"very bad", b - kBoost},
      {"slightly good", g - kBoost},
      {"slightly bad", b + kBoost},
      {"not very good", (g + kBoost) * kNeg},
      {"good!", g + kBang},
      {"good!!!!!", g + 3 * kBang},
      {"bad!!", b - 2 * kBang},
      {"good but bad", 0.5 * g + 1.5 * b},
      {"bad but good", 0.5 * b + 1.5 * g},
      {"GOOD food", g + kCaps},
      {"BAD weather today", b - kCaps},
      {"VERY good food", g + kBoost + kCaps},
      {"GOOD", g},
      {"I love it and I hate it", l + h},
      {"I don't love it", l * kNeg},
      {"I never hate mornings", h * kNeg},
      {"Good and great.", g + val("great")},
      {"The bread", 0.0},
      {"", 0.0},
      {"I love it but I do not trust them", 0.5 * l + 1.5 * val("trust") * kNeg},
      {"happy happy happy", 3 * val("happy")},
      {"really really good", g + kBoost},
      {"\xE2\x80\x9CGood,\xE2\x80\x9D she said.", g},
      {"He was scared but calm!", 0.5 * val("scared") + 1.5 * val("calm") + kBang},
  };
  REQUIRE(cases.size() == 30);
  for (const auto& c : cases) {
    CAPTURE(c.text);
    CHECK(std::abs(score_text(c.text).compound - closed_form(c.sum)) <= 1e-9);
  }
}

TEST_CASE("direction of the modifiers") {
  auto c = [](const char* t) { return score_text(t).compound; };
  CHECK(c("not good") < 0.0);
  CHECK(c("not bad") > 0.0);
  CHECK(c("extremely good") > c("good"));
  CHECK(c("extremely bad") < c("bad"));
  CHECK(c("good!") > c("good"));
  CHECK(c("good!!!") == c("good!!!!!!"));
  CHECK(c("The staff were nice but the wait was terrible") < 0.0);
  CHECK(c("The wait was terrible but the staff were nice") > 0.0);
}

TEST_CASE("empty and lexicon-free text is neutral") {
  for (const char* t : {"", "   ", "The bread and the table.", "!!!", "1234"}) {
    const auto s = score_text(t);
    CHECK(s.compound == 0.0);
    CHECK(s.pos == 0.0);
    CHECK(s.neg == 0.0);
    CHECK(s.neu == 1.0);
    CHECK(label(s) == SentimentLabel::Neutral);
  }
}

TEST_CASE("proportions") {
  const double g = val("good");
  const auto s = score_text("The food was good.");
  CHECK(s.pos == doctest::Approx((g + 1) / (g + 1 + 3)));
  CHECK(s.neu == doctest::Approx(3 / (g + 1 + 3)));
  CHECK(s.neg == 0.0);
}

TEST_CASE("fuzzed texts stay in range") {
  const auto& lex = Lexicons::standard();
  std::vector<std::string> words;
  for (const auto& [w, _] : lex.valences()) words.push_back(w);
  for (const char* w : {"not", "very", "slightly", "but", "!", "GOOD", "BAD", "never", "the"}) words.push_back(w);
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    std::string text;
    const auto n = 1 + rng.below(40);
    for (std::uint64_t k = 0; k < n; ++k) text += words[rng.below(words.size())] + " ";
    const auto s = score_text(text);
    CHECK(s.compound >= -1.0);
    CHECK(s.compound <= 1.0);
    CHECK(s.pos + s.neg + s.neu == doctest::Approx(1.0));
    CHECK(s.pos >= 0.0);
    CHECK(s.neg >= 0.0);
  }
  CHECK(normalize_compound(1e300) <= 1.0);
  CHECK(normalize_compound(-1e300) >= -1.0);
}

TEST_CASE("labels use the 0.05 threshold") {
  CHECK(label(0.05) == SentimentLabel::Positive);
  CHECK(label(-0.05) == SentimentLabel::Negative);
  CHECK(label(0.0499) == SentimentLabel::Neutral);
  CHECK(label(-0.0499) == SentimentLabel::Neutral);
}

TEST_CASE("negation and booster word lists") {
  CHECK(is_negation_word("not"));
  CHECK(is_negation_word("wouldn't"));
  CHECK(is_negation_word("never"));
  CHECK_FALSE(is_negation_word("good"));
  CHECK(is_booster_word("very"));
  CHECK(is_booster_word("slightly"));
  CHECK_FALSE(is_booster_word("good"));
}

TEST_CASE("sentence and document scores") {
  const Document doc{"P1", "I love my garden. The traffic is terrible! We eat bread.", 0};
  const auto sentences = score_sentences(doc);
  REQUIRE(sentences.size() == 3);
  CHECK(sentences[0].text == "I love my garden.");
  CHECK(label(sentences[0].score) == SentimentLabel::Positive);
  CHECK(label(sentences[1].score) == SentimentLabel::Negative);
  CHECK(label(sentences[2].score) == SentimentLabel::Neutral);
  CHECK(score_document(doc) == score_text(doc.text));
}
