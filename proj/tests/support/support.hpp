#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gtminer/coding.hpp"
#include "gtminer/corpus.hpp"
#include "gtminer/matrix.hpp"
#include "gtminer/ml.hpp"
#include "gtminer/nlp.hpp"
#include "gtminer/topic_model.hpp"

namespace gtminer::test {

std::filesystem::path source_dir();
std::filesystem::path fixture(const std::string& name);
std::filesystem::path golden(const std::string& name);
std::filesystem::path bundled(const std::string& name);  // files under data/
std::string slurp(const std::filesystem::path& path);

/// Annotates a single text as a one-document corpus.
AnnotatedCorpus annotate_text_corpus(const std::string& text, const std::string& title = "doc");

// ---- Synthetic data -------------------------------------------------------

/// A random corpus of simple clauses built from fixed word lists.
Corpus synthetic_corpus(std::uint64_t seed, std::size_t documents, std::size_t sentences);

/// `count` sentences joined into one text, with abbreviations, decimals,
/// initials, quotes and paragraph breaks inside.
struct SentenceFixture {
  std::string text;
  std::vector<std::string> sentences;
};
SentenceFixture synthetic_sentences(std::uint64_t seed, std::size_t count);

/// Two-topic corpus as a document-term matrix: documents draw tokens only
/// from the vocabulary of their generating topic.
struct TopicFixture {
  DocTermMatrix dtm;
  std::vector<std::size_t> labels;
};
TopicFixture two_topic_fixture(std::uint64_t seed, std::size_t documents = 40,
                               std::size_t words_per_topic = 20, std::size_t doc_length = 60);

/// rows x cols uniform values in [-scale, scale).
Matrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols, double scale = 10.0);

/// Table with ids "r0".."rN", features x0.. and dv y.
NumericTable make_table(const Matrix& features, const std::vector<double>& dv);

/// Points uniform in a disc of `radius` around each center, class 0 at c0
/// and class 1 at c1.
NumericTable blobs(std::uint64_t seed, std::size_t per_class, double c0x, double c0y, double c1x,
                   double c1y, double radius);

/// `minority` rows of class `minority_class`, the rest of the other class,
/// over three random features.
NumericTable imbalanced_table(std::uint64_t seed, std::size_t rows, std::size_t minority,
                              double minority_class);

/// Two classes on either side of the line x0 + x1 = 0, each point at least
/// `margin` away from it.
NumericTable margin_fixture(std::uint64_t seed, std::size_t rows, double margin);

/// The hand-computed coding dictionary of tests/fixtures.
std::vector<Category> expected_coding_dictionary();

// ---- Independent oracles --------------------------------------------------

/// Counts VERB tokens whose lemma is not a stopword with an unordered tally
/// and a full sort.
std::vector<std::pair<std::string, std::size_t>> brute_force_categories(
    const AnnotatedCorpus& corpus, std::size_t n);

/// Document-term counts by a direct scan.
DocTermMatrix brute_force_dtm(const AnnotatedCorpus& corpus, std::size_t min_doc_freq);

/// Summary selection by an independent implementation of the scoring rule.
std::vector<std::pair<std::size_t, std::size_t>> brute_force_summary(const AnnotatedCorpus& corpus,
                                                                     std::size_t n);

/// Column means and population standard deviations computed directly.
std::pair<std::vector<double>, std::vector<double>> column_moments(const Matrix& x);

/// Rows sorted by distance to row r over z-scored features (full sort).
std::vector<std::pair<std::size_t, double>> brute_force_knn(const NumericTable& table,
                                                            std::size_t r);

/// Minimum-inertia 2-partition by exhaustive enumeration. Returns the label
/// vector normalized so point 0 is in cluster 0, and its inertia.
std::pair<std::vector<std::size_t>, double> best_two_partition(const Matrix& points);

/// Eigenvalues (descending) and unit eigenvectors of a symmetric 2x2 matrix
/// from the characteristic polynomial.
struct Eigen2 {
  double values[2];
  double vectors[2][2];  // vectors[i] pairs with values[i]
};
Eigen2 eigen_2x2(double a, double b, double d);

/// Best-permutation purity of predicted labels against true labels (k = 2).
double purity_two(const std::vector<std::size_t>& predicted, const std::vector<std::size_t>& truth);

/// Confusion counts by a direct tally.
ml::ConfusionMatrix tally_confusion(const std::vector<int>& predicted, const std::vector<double>& actual);

/// Max relative error between the analytic MLP gradient and central
/// differences with step h.
double mlp_gradient_error(const ml::MlpParameters& p, const Matrix& x, const std::vector<double>& y,
                          double h);

/// Same for the SVM objective.
double svm_gradient_error(const std::vector<double>& w, double b, const Matrix& x,
                          const std::vector<double>& y, double lambda, double h);

/// Runs a shell command, capturing stdout; returns the exit status.
int run_command(const std::string& command, std::string& output);

}  // namespace gtminer::test
