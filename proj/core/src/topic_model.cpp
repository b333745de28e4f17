#include "gtminer/topic_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gtminer/error.hpp"
#include "gtminer/random.hpp"

namespace gtminer {

std::size_t DocTermMatrix::total() const noexcept {
  std::size_t n = 0;
  for (const auto& row : counts) n = std::accumulate(row.begin(), row.end(), n);
  return n;
}

DocTermMatrix build_doc_term_matrix(const AnnotatedCorpus& corpus, const DtmOptions& options,
                                    const Lexicons& lexicons) {
  std::vector<std::map<std::string, std::size_t>> per_doc;
  std::map<std::string, std::size_t> doc_freq;
  for (const auto& doc : corpus.documents) {
    auto& tf = per_doc.emplace_back();
    for (const auto& s : doc.sentences)
      for (const auto& t : s.tokens) {
        if (t.pos == Pos::Punct || t.pos == Pos::Num) continue;
        if (options.filter_stopwords && lexicons.is_stopword(t.lemma)) continue;
        ++tf[t.lemma];
      }
    for (const auto& [lemma, _] : tf) ++doc_freq[lemma];
  }

  auto vocabulary_at = [&](std::size_t min_df) {
    std::vector<std::string> vocab;
    for (const auto& [lemma, df] : doc_freq)
      if (df >= min_df) vocab.push_back(lemma);
    return vocab;
  };

  DocTermMatrix dtm;
  dtm.vocabulary = vocabulary_at(options.min_doc_freq);
  if (dtm.vocabulary.empty() && !corpus.documents.empty()) dtm.vocabulary = vocabulary_at(1);

  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    dtm.titles.push_back(corpus.documents[d].title);
    auto& row = dtm.counts.emplace_back(dtm.vocabulary.size(), 0);
    for (std::size_t v = 0; v < dtm.vocabulary.size(); ++v)
      if (auto it = per_doc[d].find(dtm.vocabulary[v]); it != per_doc[d].end()) row[v] = it->second;
  }
  return dtm;
}

TopicModel fit_lda(const DocTermMatrix& dtm, const LdaOptions& options,
                   const SweepObserver& observer) {
  const std::size_t D = dtm.documents();
  const std::size_t V = dtm.terms();
  const std::size_t K = options.topics;
  if (D == 0 || V == 0 || dtm.total() == 0)
    throw ParameterError("topic model needs at least one document with vocabulary terms");
  if (K == 0) throw ParameterError("number of topics must be at least 1");
  if (K > V)
    throw ParameterError("number of topics (" + std::to_string(K) + ") exceeds vocabulary size (" +
                         std::to_string(V) + ")");
  const double alpha = options.alpha.value_or(50.0 / static_cast<double>(K));
  const double beta = options.beta;
  if (!(alpha > 0.0) || !(beta > 0.0)) throw ParameterError("alpha and beta must be positive");

  // Tokens per document, expanded in vocabulary order.
  std::vector<std::vector<std::size_t>> words(D);
  for (std::size_t d = 0; d < D; ++d)
    for (std::size_t v = 0; v < V; ++v) words[d].insert(words[d].end(), dtm.counts[d][v], v);

  std::vector<std::size_t> n_dk(D * K, 0), n_kv(K * V, 0), n_k(K, 0);
  std::vector<std::vector<std::size_t>> z(D);
  Rng rng(options.seed);
  for (std::size_t d = 0; d < D; ++d) {
    z[d].resize(words[d].size());
    for (std::size_t i = 0; i < words[d].size(); ++i) {
      const auto k = static_cast<std::size_t>(rng.below(K));
      z[d][i] = k;
      ++n_dk[d * K + k];
      ++n_kv[k * V + words[d][i]];
      ++n_k[k];
    }
  }

  const double v_beta = static_cast<double>(V) * beta;
  std::vector<double> cumulative(K);
  const LdaCounts view{n_dk, n_kv, n_k, D, K, V};
  for (std::size_t sweep = 1; sweep <= options.iterations; ++sweep) {
    for (std::size_t d = 0; d < D; ++d) {
      for (std::size_t i = 0; i < words[d].size(); ++i) {
        const std::size_t v = words[d][i];
        std::size_t k = z[d][i];
        --n_dk[d * K + k];
        --n_kv[k * V + v];
        --n_k[k];

        double total = 0.0;
        for (std::size_t t = 0; t < K; ++t) {
          total += (static_cast<double>(n_dk[d * K + t]) + alpha) *
                   (static_cast<double>(n_kv[t * V + v]) + beta) /
                   (static_cast<double>(n_k[t]) + v_beta);
          cumulative[t] = total;
        }
        const double u = rng.uniform() * total;
        k = 0;
        while (k + 1 < K && cumulative[k] <= u) ++k;

        z[d][i] = k;
        ++n_dk[d * K + k];
        ++n_kv[k * V + v];
        ++n_k[k];
      }
    }
    if (observer) observer(sweep, view);
  }

  TopicModel model;
  model.topics = K;
  model.vocabulary = dtm.vocabulary;
  model.seed = options.seed;
  model.iterations = options.iterations;
  model.alpha = alpha;
  model.beta = beta;
  model.phi = Matrix(K, V);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t v = 0; v < V; ++v)
      model.phi(k, v) =
          (static_cast<double>(n_kv[k * V + v]) + beta) / (static_cast<double>(n_k[k]) + v_beta);
  model.theta = Matrix(D, K);
  const double k_alpha = static_cast<double>(K) * alpha;
  for (std::size_t d = 0; d < D; ++d) {
    const auto n_d = static_cast<double>(words[d].size());
    for (std::size_t k = 0; k < K; ++k)
      model.theta(d, k) = (static_cast<double>(n_dk[d * K + k]) + alpha) / (n_d + k_alpha);
  }
  model.assignments = std::move(z);
  return model;
}

std::vector<TermWeight> top_terms(const TopicModel& model, std::size_t topic, std::size_t m) {
  if (topic >= model.topics)
    throw ParameterError("topic index " + std::to_string(topic) + " out of range");
  if (m == 0) throw ParameterError("number of terms must be at least 1");
  std::vector<TermWeight> terms;
  terms.reserve(model.vocabulary.size());
  for (std::size_t v = 0; v < model.vocabulary.size(); ++v)
    terms.push_back({model.vocabulary[v], model.phi(topic, v)});
  // The vocabulary is sorted, so stability gives the lemma tie-break.
  std::stable_sort(terms.begin(), terms.end(), [](const TermWeight& a, const TermWeight& b) {
    return a.probability > b.probability;
  });
  if (terms.size() > m) terms.resize(m);
  return terms;
}

std::vector<TopicAssignment> assign_documents(const TopicModel& model, const DocTermMatrix& dtm) {
  if (dtm.documents() != model.theta.rows())
    throw ParameterError("document count does not match the fitted model");
  std::vector<TopicAssignment> out;
  for (std::size_t d = 0; d < dtm.documents(); ++d) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < model.topics; ++k)
      if (model.theta(d, k) > model.theta(d, best)) best = k;
    out.push_back({dtm.titles[d], best, model.theta(d, best)});
  }
  return out;
}

}  // namespace gtminer
