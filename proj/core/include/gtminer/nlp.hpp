#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtminer/corpus.hpp"
#include "gtminer/lexicon.hpp"

namespace gtminer {

/// Half-open byte range [begin, end) into a source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  Span span;
  Pos pos = Pos::Other;
  std::string lemma;  // empty until lemmatized

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  Span span;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// A maximal run of proper-noun tokens within one sentence.
struct Entity {
  std::string text;  // surfaces joined by single spaces
  Span span;
  std::size_t first_token = 0;  // index range [first_token, last_token)
  std::size_t last_token = 0;

  friend bool operator==(const Entity&, const Entity&) = default;
};

/// Corpus-level evidence used to resolve capitalized sentence-initial words.
struct TaggingContext {
  /// Lowercased surfaces seen capitalized somewhere other than at the start
  /// of a sentence.
  std::set<std::string, std::less<>> capitalized_mid_sentence;
};

/// Whitespace tokenization with punctuation and clitic splitting. Spans are
/// offsets into `text` plus `offset`.
std::vector<Token> tokenize(std::string_view text, std::size_t offset = 0,
                            const Lexicons& lexicons = Lexicons::standard());

/// Sentence boundaries (tokens left empty). Spans exclude surrounding
/// whitespace.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const Lexicons& lexicons = Lexicons::standard());

/// Assigns a tag to every token of one sentence.
void pos_tag(std::span<Token> tokens, const TaggingContext& context = {},
             const Lexicons& lexicons = Lexicons::standard());

/// Lowercase dictionary form. Idempotent for every (word, pos).
std::string lemmatize(std::string_view surface, Pos pos,
                      const Lexicons& lexicons = Lexicons::standard());

/// Maximal PROPN runs. A sentence-initial token only starts an entity when
/// it is in the gazetteer or appears capitalized mid-sentence elsewhere.
std::vector<Entity> extract_entities(const Sentence& sentence, const TaggingContext& context = {},
                                     const Lexicons& lexicons = Lexicons::standard());

bool is_stopword(std::string_view lemma, const Lexicons& lexicons = Lexicons::standard());

/// Adds the capitalized non-initial words of `text` to `context`.
void collect_capitalization(std::string_view text, TaggingContext& context,
                            const Lexicons& lexicons = Lexicons::standard());

/// Splits, tokenizes, tags and lemmatizes `text`.
std::vector<Sentence> annotate_text(std::string_view text, const TaggingContext& context = {},
                                    const Lexicons& lexicons = Lexicons::standard());

struct AnnotatedDocument {
  std::string title;
  std::string text;
  std::vector<Sentence> sentences;
};

struct AnnotatedCorpus {
  std::vector<AnnotatedDocument> documents;
  TaggingContext context;

  std::size_t sentence_count() const noexcept;
  std::size_t token_count() const noexcept;
};

/// Annotates every document, with capitalization evidence pooled over the
/// whole corpus.
AnnotatedCorpus annotate(const Corpus& corpus, const Lexicons& lexicons = Lexicons::standard());

/// Index of the first non-punctuation token, or tokens.size() if none.
std::size_t first_word_index(std::span<const Token> tokens) noexcept;

}  // namespace gtminer
