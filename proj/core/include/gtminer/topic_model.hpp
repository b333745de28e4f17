#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gtminer/matrix.hpp"
#include "gtminer/nlp.hpp"

namespace gtminer {

struct DocTermMatrix {
  std::vector<std::string> vocabulary;  // sorted
  std::vector<std::string> titles;
  std::vector<std::vector<std::size_t>> counts;  // documents x vocabulary

  std::size_t documents() const noexcept { return counts.size(); }
  std::size_t terms() const noexcept { return vocabulary.size(); }
  std::size_t total() const noexcept;

  friend bool operator==(const DocTermMatrix&, const DocTermMatrix&) = default;
};

struct DtmOptions {
  std::size_t min_doc_freq = 2;
  bool filter_stopwords = true;
};

/// Counts lemmas that are not punctuation, numbers or (optionally) stopwords
/// and occur in at least `min_doc_freq` documents. Falls back to a minimum
/// of one document when that leaves no vocabulary.
DocTermMatrix build_doc_term_matrix(const AnnotatedCorpus& corpus, const DtmOptions& options = {},
                                    const Lexicons& lexicons = Lexicons::standard());

struct LdaOptions {
  std::size_t topics = 3;
  std::uint64_t seed = 42;
  std::size_t iterations = 500;
  std::optional<double> alpha;  // default 50 / topics
  double beta = 0.01;
};

/// Read-only view of the sampler's count tables, passed to observers.
struct LdaCounts {
  const std::vector<std::size_t>& doc_topic;    // documents x topics, row-major
  const std::vector<std::size_t>& topic_term;   // topics x terms, row-major
  const std::vector<std::size_t>& topic_total;  // per topic
  std::size_t documents;
  std::size_t topics;
  std::size_t terms;
};

/// Called after every sweep with the 1-based sweep number.
using SweepObserver = std::function<void(std::size_t sweep, const LdaCounts& counts)>;

struct TopicModel {
  std::size_t topics = 0;
  std::vector<std::string> vocabulary;
  Matrix phi;    // topics x terms
  Matrix theta;  // documents x topics
  /// Topic of every token, per document, tokens in vocabulary order.
  std::vector<std::vector<std::size_t>> assignments;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Collapsed Gibbs sampling. Throws ParameterError for an empty matrix,
/// topics == 0, topics > terms or non-positive priors.
TopicModel fit_lda(const DocTermMatrix& dtm, const LdaOptions& options,
                   const SweepObserver& observer = {});

struct TermWeight {
  std::string lemma;
  double probability = 0.0;
};

/// Top `m` terms of a topic by (probability desc, lemma asc).
std::vector<TermWeight> top_terms(const TopicModel& model, std::size_t topic, std::size_t m);

struct TopicAssignment {
  std::string title;
  std::size_t topic = 0;
  double weight = 0.0;
};

/// Most probable topic per document; ties go to the lower index.
std::vector<TopicAssignment> assign_documents(const TopicModel& model, const DocTermMatrix& dtm);

}  // namespace gtminer
