#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gtminer/nlp.hpp"

namespace gtminer {

/// A lemma with its occurrence count.
struct RankedTerm {
  std::string lemma;
  std::size_t count = 0;

  friend bool operator==(const RankedTerm&, const RankedTerm&) = default;
};

struct Property {
  std::string lemma;
  std::size_t cooccurrence = 0;
  std::vector<RankedTerm> dimensions;

  friend bool operator==(const Property&, const Property&) = default;
};

struct Category {
  std::string lemma;
  std::size_t count = 0;
  std::vector<Property> properties;

  friend bool operator==(const Category&, const Category&) = default;
};

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t tokens = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

struct CodingDictionary {
  std::vector<Category> categories;
  CorpusStats stats;

  friend bool operator==(const CodingDictionary&, const CodingDictionary&) = default;
};

struct CodingOptions {
  std::size_t categories = 10;
  std::size_t properties = 5;
  std::size_t dimensions = 5;
};

/// Content-verb lemmas ranked by (count desc, lemma asc), at most `n`.
/// Throws ParameterError when n == 0.
std::vector<RankedTerm> top_categories(const AnnotatedCorpus& corpus, std::size_t n,
                                       const Lexicons& lexicons = Lexicons::standard());

/// Categories with their co-occurring nouns (same sentence) and the
/// adjectives/adverbs within two tokens of them (adjectives around the
/// noun, adverbs around the verb).
CodingDictionary build_coding_dictionary(const AnnotatedCorpus& corpus,
                                         const CodingOptions& options = {},
                                         const Lexicons& lexicons = Lexicons::standard());

/// Lemmas tagged VERB anywhere in the document.
std::set<std::string> verb_lemmas(const AnnotatedDocument& document);

struct Triad {
  std::string subject;
  std::string verb;
  std::optional<std::string> object;
  Span sentence_span;
  std::size_t subject_token = 0;
  std::size_t verb_token = 0;
  std::optional<std::size_t> object_token;

  friend bool operator==(const Triad&, const Triad&) = default;
};

/// Nearest-neighbour subject-verb-object triads of one tagged sentence.
std::vector<Triad> extract_svo_triads(const Sentence& sentence);

struct SummarySentence {
  std::size_t document = 0;  // index into corpus.documents
  std::size_t sentence = 0;  // index into that document's sentences
  std::string text;
  double score = 0.0;

  friend bool operator==(const SummarySentence&, const SummarySentence&) = default;
};

/// Sentence score: summed corpus frequency of its content lemmas divided by
/// its number of word tokens.
double sentence_score(const Sentence& sentence, const std::map<std::string, std::size_t>& freq,
                      const Lexicons& lexicons = Lexicons::standard());

/// Corpus-wide frequencies of non-stopword, non-punctuation lemmas.
std::map<std::string, std::size_t> content_frequencies(
    const AnnotatedCorpus& corpus, const Lexicons& lexicons = Lexicons::standard());

/// The `n` best-scoring sentences of the whole corpus, in corpus order.
/// Ties go to the earlier sentence. Throws ParameterError when n == 0.
std::vector<SummarySentence> summarize(const AnnotatedCorpus& corpus, std::size_t n,
                                       const Lexicons& lexicons = Lexicons::standard());

/// As summarize(), restricted to one document (frequencies stay corpus-wide).
std::vector<SummarySentence> summarize_document(const AnnotatedCorpus& corpus,
                                                std::size_t document, std::size_t n,
                                                const Lexicons& lexicons = Lexicons::standard());

/// Named entities keyed by lowercased text, ranked by (count desc, text asc).
std::vector<RankedTerm> corpus_concepts(const AnnotatedCorpus& corpus, std::size_t n,
                                        const Lexicons& lexicons = Lexicons::standard());

}  // namespace gtminer
