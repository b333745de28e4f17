#include "render.hpp"

#include <cstdio>

namespace gtminer::cli {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string one_line(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

namespace {

std::string ranked_lines(std::span<const RankedTerm> terms, std::string_view empty) {
  if (terms.empty()) return std::string(empty) + "\n";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += std::to_string(i + 1) + ". " + terms[i].lemma + " (" + std::to_string(terms[i].count) +
           ")\n";
  return out;
}

std::string confusion_cell(std::size_t v) {
  std::string s = std::to_string(v);
  return std::string(s.size() < 11 ? 11 - s.size() : 0, ' ') + s;
}

}  // namespace

std::string render_categories(std::span<const RankedTerm> categories) {
  return "Categories\n" + ranked_lines(categories, "No categories found.");
}

std::string render_coding_dictionary(const CodingDictionary& dict) {
  std::string out = "Coding dictionary (documents: " + std::to_string(dict.stats.documents) +
                    ", sentences: " + std::to_string(dict.stats.sentences) +
                    ", tokens: " + std::to_string(dict.stats.tokens) + ")\n";
  if (dict.categories.empty()) return out + "No categories found.\n";
  for (std::size_t i = 0; i < dict.categories.size(); ++i) {
    const auto& c = dict.categories[i];
    out += std::to_string(i + 1) + ". " + c.lemma + " (" + std::to_string(c.count) + ")\n";
    if (c.properties.empty()) out += "   no properties\n";
    for (const auto& p : c.properties) {
      out += "   - " + p.lemma + " (" + std::to_string(p.cooccurrence) + ")";
      for (std::size_t d = 0; d < p.dimensions.size(); ++d)
        out += (d == 0 ? ": " : ", ") + p.dimensions[d].lemma + " (" +
               std::to_string(p.dimensions[d].count) + ")";
      out += "\n";
    }
  }
  return out;
}

std::string render_topics(const TopicModel& model, std::size_t terms) {
  std::string out = "Topics\n";
  for (std::size_t k = 0; k < model.topics; ++k) {
    out += "Topic " + std::to_string(k + 1) + ":";
    const auto top = top_terms(model, k, terms);
    for (std::size_t i = 0; i < top.size(); ++i)
      out += (i == 0 ? " " : ", ") + top[i].lemma + " (" + fixed(top[i].probability) + ")";
    out += "\n";
  }
  return out;
}

std::string render_assignments(std::span<const TopicAssignment> assignments) {
  std::string out = "Topic assignments\n";
  for (const auto& a : assignments)
    out += a.title + " → topic " + std::to_string(a.topic + 1) + " (" + fixed(a.weight) + ")\n";
  return out;
}

std::string render_sentiment(std::string_view heading, const SentimentScore& score) {
  return "Sentiment: " + std::string(heading) + "\n" +
         "  label: " + std::string(to_string(label(score))) + "\n" +
         "  compound: " + fixed(score.compound) + "\n" +
         "  pos: " + fixed(score.pos) + "  neg: " + fixed(score.neg) +
         "  neu: " + fixed(score.neu) + "\n";
}

std::string render_sentence_sentiment(std::string_view title,
                                      std::span<const SentenceSentiment> sentences) {
  std::string out = "Sentence sentiment: " + std::string(title) + "\n";
  if (sentences.empty()) out += "  no sentences\n";
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    out += "  " + std::to_string(i + 1) + ". [" + std::string(to_string(label(s.score))) + " " +
           fixed(s.score.compound) + "] " + one_line(s.text) + "\n";
  }
  return out;
}

std::string render_summary(const AnnotatedCorpus& corpus,
                           std::span<const SummarySentence> sentences) {
  std::string out = "Summary\n";
  if (sentences.empty()) return out + "No sentences found.\n";
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    out += std::to_string(i + 1) + ". [" + corpus.documents[s.document].title + "] " +
           one_line(s.text) + "\n";
  }
  return out;
}

std::string render_concepts(std::span<const RankedTerm> concepts) {
  return "Concepts\n" + ranked_lines(concepts, "No concepts found.");
}

std::string render_confusion(const ml::ConfusionMatrix& m) {
  return "Confusion matrix (positive class = 1)\n"
         "            predicted 1 predicted 0\n"
         "  actual 1" + confusion_cell(m.tp) + " " + confusion_cell(m.fn) + "\n" +
         "  actual 0" + confusion_cell(m.fp) + " " + confusion_cell(m.tn) + "\n";
}

std::string render_mlp(const ml::MlpModel& model, const ml::Split& split,
                       const ml::Evaluation& test, bool oversampled, std::size_t train_rows) {
  std::string out = "Neural network (features: " + std::to_string(model.inputs()) +
                    ", hidden units: " + std::to_string(model.hidden()) +
                    ", epochs: " + std::to_string(model.history.size()) + ")\n";
  out += "Train rows: " + std::to_string(train_rows) +
         (oversampled ? " (oversampled from " + std::to_string(split.train.rows()) + ")" : "") +
         ", test rows: " + std::to_string(split.test.rows()) + "\n";
  for (std::size_t e = 0; e < model.history.size(); ++e)
    out += "Epoch " + std::to_string(e + 1) + ": accuracy " + fixed(model.history[e].accuracy) +
           ", loss " + fixed(model.history[e].loss) + "\n";
  out += "Test accuracy: " + fixed(test.accuracy) + "\n";
  return out + render_confusion(test.confusion);
}

std::string render_svm(const ml::SvmModel& model, const NumericTable& table,
                       const ml::Split& split, const ml::Evaluation& test, bool oversampled,
                       std::size_t train_rows) {
  std::string out = "Linear SVM (features: " + std::to_string(model.inputs()) + ")\n";
  out += "Train rows: " + std::to_string(train_rows) +
         (oversampled ? " (oversampled from " + std::to_string(split.train.rows()) + ")" : "") +
         ", test rows: " + std::to_string(split.test.rows()) + "\n";
  out += "Weights (standardized features):";
  for (std::size_t i = 0; i < model.weights.size(); ++i)
    out += (i == 0 ? " " : ", ") + table.feature_names[i] + " " + fixed(model.weights[i]);
  out += "\nBias: " + fixed(model.bias) + "\n";
  out += "Test accuracy: " + fixed(test.accuracy) + "\n";
  return out + render_confusion(test.confusion);
}

std::string render_kmeans(const ml::KMeansResult& result, const NumericTable& table) {
  std::string out = "K-means (k: " + std::to_string(result.centroids.rows()) +
                    ", iterations: " + std::to_string(result.iterations) +
                    ", inertia: " + fixed(result.inertia) + ")\n";
  out += "Centroids (standardized features: ";
  for (std::size_t i = 0; i < table.feature_names.size(); ++i)
    out += (i == 0 ? "" : ", ") + table.feature_names[i];
  out += ")\n";
  for (std::size_t c = 0; c < result.centroids.rows(); ++c) {
    out += "  Cluster " + std::to_string(c + 1) + ":";
    for (std::size_t j = 0; j < result.centroids.cols(); ++j) out += " " + fixed(result.centroids(c, j));
    out += "\n";
  }
  out += "Assignments\n";
  for (std::size_t r = 0; r < table.rows(); ++r)
    out += table.ids[r] + " → cluster " + std::to_string(result.labels[r] + 1) + "\n";
  return out;
}

std::string render_knn(const NumericTable& table, std::size_t record,
                       std::span<const ml::Neighbor> neighbors) {
  std::string out = "Nearest neighbours of " + table.ids[record] + " (row " +
                    std::to_string(record) + ")\n";
  for (std::size_t i = 0; i < neighbors.size(); ++i)
    out += std::to_string(i + 1) + ". " + table.ids[neighbors[i].row] + " (" +
           fixed(neighbors[i].distance) + ")\n";
  return out;
}

std::string render_pca(const ml::PcaResult& result, const NumericTable& table) {
  const std::size_t factors = result.components.rows();
  std::string out = "PCA (factors: " + std::to_string(factors) + ")\n";
  out += "Loadings\n";
  for (std::size_t c = 0; c < factors; ++c) {
    out += "  Factor " + std::to_string(c + 1) + ":";
    for (std::size_t j = 0; j < result.components.cols(); ++j)
      out += (j == 0 ? " " : ", ") + table.feature_names[j] + " " + fixed(result.components(c, j));
    out += "\n";
  }
  out += "Explained variance\n";
  for (std::size_t c = 0; c < factors; ++c)
    out += "  Factor " + std::to_string(c + 1) + ": " + fixed(result.explained_variance[c]) +
           " (" + fixed(100.0 * result.explained_ratio(c), 2) + "%)\n";
  out += "Scores\n";
  for (std::size_t r = 0; r < result.scores.rows(); ++r) {
    out += "  " + table.ids[r] + ":";
    for (std::size_t c = 0; c < factors; ++c) out += " " + fixed(result.scores(r, c));
    out += "\n";
  }
  return out;
}

}  // namespace gtminer::cli
