#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtminer/coding.hpp"
#include "gtminer/ml.hpp"
#include "gtminer/sentiment.hpp"
#include "gtminer/topic_model.hpp"

namespace gtminer::cli {

/// Fixed-point with `digits` decimals; never prints "-0.0000".
std::string fixed(double value, int digits = 4);

/// Collapses runs of whitespace to single spaces.
std::string one_line(std::string_view text);

std::string render_categories(std::span<const RankedTerm> categories);
std::string render_coding_dictionary(const CodingDictionary& dict);
std::string render_topics(const TopicModel& model, std::size_t terms);
std::string render_assignments(std::span<const TopicAssignment> assignments);
std::string render_sentiment(std::string_view heading, const SentimentScore& score);
std::string render_sentence_sentiment(std::string_view title,
                                      std::span<const SentenceSentiment> sentences);
std::string render_summary(const AnnotatedCorpus& corpus,
                           std::span<const SummarySentence> sentences);
std::string render_concepts(std::span<const RankedTerm> concepts);

std::string render_confusion(const ml::ConfusionMatrix& m);
std::string render_mlp(const ml::MlpModel& model, const ml::Split& split,
                       const ml::Evaluation& test, bool oversampled, std::size_t train_rows);
std::string render_svm(const ml::SvmModel& model, const NumericTable& table,
                       const ml::Split& split, const ml::Evaluation& test, bool oversampled,
                       std::size_t train_rows);
std::string render_kmeans(const ml::KMeansResult& result, const NumericTable& table);
std::string render_knn(const NumericTable& table, std::size_t record,
                       std::span<const ml::Neighbor> neighbors);
std::string render_pca(const ml::PcaResult& result, const NumericTable& table);

}  // namespace gtminer::cli
