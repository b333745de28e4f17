#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gtminer/coding.hpp"
#include "gtminer/corpus.hpp"
#include "gtminer/ml.hpp"
#include "gtminer/nlp.hpp"
#include "gtminer/random.hpp"
#include "gtminer/sentiment.hpp"
#include "gtminer/topic_model.hpp"

using namespace gtminer;

namespace {

// The bundled transcript, repeated `copies` times as separate documents.
Corpus sample_corpus(std::size_t copies) {
  const std::string text = read_file(std::string(GTMINER_SOURCE_DIR) + "/data/sample_transcript.txt");
  Corpus base = parse_transcript(text);
  Corpus out;
  for (std::size_t c = 0; c < copies; ++c)
    for (const auto& d : base.documents)
      out.documents.push_back({d.title + "_" + std::to_string(c), d.text, out.documents.size()});
  return out;
}

Matrix random_points(std::uint64_t seed, std::size_t rows, std::size_t cols) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-3.0, 3.0) + (r % 3) * 2.0;
  return m;
}

NumericTable random_table(std::uint64_t seed, std::size_t rows, std::size_t cols) {
  NumericTable t;
  t.id_name = "id";
  t.dv_name = "y";
  t.features = random_points(seed, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) t.feature_names.push_back("x" + std::to_string(c));
  for (std::size_t r = 0; r < rows; ++r) {
    t.ids.push_back(std::to_string(r));
    t.dv.push_back(t.features(r, 0) + t.features(r, 1) > 2.0 ? 1.0 : 0.0);
  }
  return t;
}

void BM_Annotate(benchmark::State& state) {
  const Corpus corpus = sample_corpus(static_cast<std::size_t>(state.range(0)));
  std::size_t bytes = 0;
  for (const auto& d : corpus.documents) bytes += d.text.size();
  for (auto _ : state) benchmark::DoNotOptimize(annotate(corpus));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_Annotate)->Arg(1)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_CodingDictionary(benchmark::State& state) {
  const auto corpus = annotate(sample_corpus(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(build_coding_dictionary(corpus, {}));
}
BENCHMARK(BM_CodingDictionary)->Arg(1)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Sentiment(benchmark::State& state) {
  const Corpus corpus = sample_corpus(1);
  for (auto _ : state)
    for (const auto& d : corpus.documents) benchmark::DoNotOptimize(score_document(d));
}
BENCHMARK(BM_Sentiment)->Unit(benchmark::kMicrosecond);

void BM_LdaSweeps(benchmark::State& state) {
  const auto corpus = annotate(sample_corpus(20));
  const auto dtm = build_doc_term_matrix(corpus);
  const auto iterations = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_lda(dtm, {.topics = 3, .seed = 1, .iterations = iterations}));
}
BENCHMARK(BM_LdaSweeps)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_KMeans(benchmark::State& state) {
  const auto pts = random_points(1, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ml::kmeans(pts, {.k = 3, .seed = 1}));
}
BENCHMARK(BM_KMeans)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Pca(benchmark::State& state) {
  const auto cols = static_cast<std::size_t>(state.range(0));
  const auto pts = random_points(2, 1000, cols);
  for (auto _ : state) benchmark::DoNotOptimize(ml::pca(pts, 2));
}
BENCHMARK(BM_Pca)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Mlp(benchmark::State& state) {
  const auto table = random_table(3, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ml::fit_mlp(table, {.epochs = 50, .seed = 1}));
}
BENCHMARK(BM_Mlp)->Arg(60)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Knn(benchmark::State& state) {
  const auto table = random_table(4, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(ml::knn_neighbors(table, 0, 5));
}
BENCHMARK(BM_Knn)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
