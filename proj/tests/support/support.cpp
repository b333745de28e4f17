#include "support.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>
#include <unordered_map>

#include "gtminer/random.hpp"

namespace gtminer::test {

std::filesystem::path source_dir() { return GTMINER_SOURCE_DIR; }
std::filesystem::path fixture(const std::string& name) { return source_dir() / "tests/fixtures" / name; }
std::filesystem::path golden(const std::string& name) { return source_dir() / "tests/golden" / name; }
std::filesystem::path bundled(const std::string& name) { return source_dir() / "data" / name; }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnnotatedCorpus annotate_text_corpus(const std::string& text, const std::string& title) {
  Corpus c;
  c.documents.push_back({title, text, 0});
  return annotate(c);
}

namespace {

template <std::size_t N>
const char* pick(Rng& rng, const std::array<const char*, N>& items) {
  return items[rng.below(N)];
}

struct VerbForms {
  const char* base;
  const char* third;
  const char* past;
};

constexpr std::array<VerbForms, 14> kVerbs = {{
    {"walk", "walks", "walked"},
    {"cook", "cooks", "cooked"},
    {"eat", "eats", "ate"},
    {"check", "checks", "checked"},
    {"explain", "explains", "explained"},
    {"visit", "visits", "visited"},
    {"help", "helps", "helped"},
    {"plan", "plans", "planned"},
    {"watch", "watches", "watched"},
    {"call", "calls", "called"},
    {"carry", "carries", "carried"},
    {"buy", "buys", "bought"},
    {"love", "loves", "loved"},
    {"share", "shares", "shared"},
}};

constexpr std::array<const char*, 10> kNouns = {
    "nurse", "doctor", "patient", "meal", "garden", "bread", "clinic", "family", "neighbour", "recipe"};
constexpr std::array<const char*, 8> kAdjectives = {"healthy", "busy", "small", "new",
                                                    "simple",  "green", "old", "quiet"};
constexpr std::array<const char*, 6> kAdverbs = {"slowly", "often", "carefully",
                                                 "quickly", "really", "usually"};
constexpr std::array<const char*, 6> kNames = {"John", "Mary", "Priya", "Carlos", "Emma", "David"};

std::string clause(Rng& rng) {
  const auto& v = kVerbs[rng.below(kVerbs.size())];
  std::string subject;
  bool third = true;
  switch (rng.below(4)) {
    case 0: subject = rng.below(2) ? "I" : "We"; third = false; break;
    case 1: subject = pick(rng, kNames); break;
    case 2: subject = std::string("The ") + pick(rng, kNouns); break;
    default: subject = std::string("My ") + pick(rng, kAdjectives) + " " + pick(rng, kNouns); break;
  }
  std::string verb = rng.below(2) ? v.past : (third ? v.third : v.base);
  std::string out = subject;
  if (rng.below(3) == 0) out += std::string(" ") + pick(rng, kAdverbs);
  out += " " + verb + " the ";
  if (rng.below(2)) out += std::string(pick(rng, kAdjectives)) + " ";
  out += pick(rng, kNouns);
  return out;
}

}  // namespace

Corpus synthetic_corpus(std::uint64_t seed, std::size_t documents, std::size_t sentences) {
  Rng rng(seed);
  Corpus corpus;
  for (std::size_t d = 0; d < documents; ++d) {
    std::string text;
    for (std::size_t s = 0; s < sentences; ++s) {
      if (s > 0) text += rng.below(4) == 0 ? "\n" : " ";
      text += clause(rng);
      if (rng.below(3) == 0) {
        std::string more = clause(rng);
        if (more.rfind("The ", 0) == 0 || more.rfind("My ", 0) == 0 || more.rfind("We ", 0) == 0)
          more[0] = static_cast<char>(more[0] - 'A' + 'a');
        text += " and " + more;
      }
      text += rng.below(5) == 0 ? "!" : ".";
    }
    corpus.documents.push_back({"Doc_" + std::to_string(d), text, d});
  }
  return corpus;
}

SentenceFixture synthetic_sentences(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  SentenceFixture fx;
  auto capital = [](std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
  };
  for (std::size_t i = 0; i < count; ++i) {
    std::string s;
    switch (rng.below(9)) {
      case 0: s = "Dr. " + std::string(pick(rng, kNames)) + " saw the " + pick(rng, kNouns) + "."; break;
      case 1: s = "The U.S. " + std::string(pick(rng, kNouns)) + " costs " +
                  std::to_string(rng.below(90) + 10) + "." + std::to_string(rng.below(10)) + " dollars.";
        break;
      case 2: s = std::string(1, static_cast<char>('A' + rng.below(26))) + ". " + pick(rng, kNames) +
                  " wrote it down.";
        break;
      case 3: s = "She said \"" + capital(clause(rng)) + ".\""; break;
      case 4: s = "\"Why not?\" asked " + std::string(pick(rng, kNames)) + "."; break;
      case 5: s = capital(clause(rng)) + (rng.below(2) ? "!" : "?"); break;
      case 6: s = std::to_string(rng.below(50) + 2) + " people came, e.g. " + pick(rng, kNames) + " and Mr. " +
                  pick(rng, kNames) + ".";
        break;
      case 7: s = "Wait..."; break;
      default: s = capital(clause(rng)) + "."; break;
    }
    if (i > 0) {
      const auto gap = rng.below(6);
      fx.text += gap == 0 ? "\n\n" : gap == 1 ? "\n" : gap == 2 ? "  " : " ";
    }
    fx.text += s;
    fx.sentences.push_back(s);
  }
  return fx;
}

TopicFixture two_topic_fixture(std::uint64_t seed, std::size_t documents, std::size_t words_per_topic,
                               std::size_t doc_length) {
  Rng rng(seed);
  TopicFixture fx;
  for (char prefix : {'a', 'b'})
    for (std::size_t w = 0; w < words_per_topic; ++w) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%c%02zu", prefix, w);
      fx.dtm.vocabulary.push_back(buf);
    }
  std::vector<std::size_t> labels(documents);
  for (std::size_t d = 0; d < documents; ++d) labels[d] = d < documents / 2 ? 0 : 1;
  shuffle(std::span(labels), rng);
  for (std::size_t d = 0; d < documents; ++d) {
    std::vector<std::size_t> row(2 * words_per_topic, 0);
    for (std::size_t t = 0; t < doc_length; ++t)
      ++row[labels[d] * words_per_topic + rng.below(words_per_topic)];
    fx.dtm.titles.push_back("d" + std::to_string(d));
    fx.dtm.counts.push_back(std::move(row));
  }
  fx.labels = std::move(labels);
  return fx;
}

Matrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols, double scale) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-scale, scale);
  return m;
}

NumericTable make_table(const Matrix& features, const std::vector<double>& dv) {
  NumericTable t;
  t.id_name = "id";
  for (std::size_t r = 0; r < features.rows(); ++r) t.ids.push_back("r" + std::to_string(r));
  for (std::size_t c = 0; c < features.cols(); ++c) t.feature_names.push_back("x" + std::to_string(c));
  t.features = features;
  t.dv_name = "y";
  t.dv = dv;
  return t;
}

NumericTable blobs(std::uint64_t seed, std::size_t per_class, double c0x, double c0y, double c1x,
                   double c1y, double radius) {
  Rng rng(seed);
  Matrix x(2 * per_class, 2);
  std::vector<double> y(2 * per_class);
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    const bool one = i % 2 == 1;
    const double r = radius * std::sqrt(rng.uniform());
    const double a = 2.0 * std::numbers::pi * rng.uniform();
    x(i, 0) = (one ? c1x : c0x) + r * std::cos(a);
    x(i, 1) = (one ? c1y : c0y) + r * std::sin(a);
    y[i] = one ? 1.0 : 0.0;
  }
  return make_table(x, y);
}

NumericTable imbalanced_table(std::uint64_t seed, std::size_t rows, std::size_t minority,
                              double minority_class) {
  Rng rng(seed);
  std::vector<double> dv(rows, 1.0 - minority_class);
  std::vector<std::size_t> idx(rows);
  for (std::size_t i = 0; i < rows; ++i) idx[i] = i;
  shuffle(std::span(idx), rng);
  for (std::size_t i = 0; i < minority; ++i) dv[idx[i]] = minority_class;
  return make_table(random_matrix(seed + 1000, rows, 3), dv);
}

NumericTable margin_fixture(std::uint64_t seed, std::size_t rows, double margin) {
  Rng rng(seed);
  Matrix x(rows, 2);
  std::vector<double> y(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double side = i % 2 == 0 ? 1.0 : -1.0;
    const double along = rng.uniform(-5.0, 5.0);
    const double off = side * (margin + rng.uniform(0.0, 3.0));
    x(i, 0) = (along + off) / std::numbers::sqrt2;
    x(i, 1) = (-along + off) / std::numbers::sqrt2;
    y[i] = side > 0 ? 1.0 : 0.0;
  }
  return make_table(x, y);
}

std::vector<Category> expected_coding_dictionary() {
  // "cat\tcount" lines, then "\tproperty\tcount\tdim:count,..." lines.
  std::istringstream in(slurp(fixture("coding_dictionary_expected.txt")));
  std::vector<Category> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, '\t');) f.push_back(cell);
    if (line[0] != '\t') {
      out.push_back({f[0], std::stoul(f[1]), {}});
      continue;
    }
    Property p{f[1], std::stoul(f[2]), {}};
    if (f.size() > 3) {
      std::istringstream dims(f[3]);
      for (std::string d; std::getline(dims, d, ',');) {
        const auto colon = d.find(':');
        p.dimensions.push_back({d.substr(0, colon), std::stoul(d.substr(colon + 1))});
      }
    }
    out.back().properties.push_back(p);
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> brute_force_categories(const AnnotatedCorpus& corpus,
                                                                        std::size_t n) {
  const auto& lex = Lexicons::standard();
  std::unordered_map<std::string, std::size_t> tally;
  for (const auto& doc : corpus.documents)
    for (const auto& s : doc.sentences)
      for (const auto& t : s.tokens)
        if (t.pos == Pos::Verb && !lex.is_stopword(t.lemma)) ++tally[t.lemma];
  std::vector<std::pair<std::string, std::size_t>> out(tally.begin(), tally.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (out.size() > n) out.resize(n);
  return out;
}

DocTermMatrix brute_force_dtm(const AnnotatedCorpus& corpus, std::size_t min_doc_freq) {
  const auto& lex = Lexicons::standard();
  const std::size_t D = corpus.documents.size();
  std::unordered_map<std::string, std::vector<std::size_t>> counts;
  for (std::size_t d = 0; d < D; ++d)
    for (const auto& s : corpus.documents[d].sentences)
      for (const auto& t : s.tokens) {
        if (t.pos == Pos::Punct || t.pos == Pos::Num || lex.is_stopword(t.lemma)) continue;
        auto& row = counts[t.lemma];
        row.resize(D, 0);
        ++row[d];
      }
  auto vocab_at = [&](std::size_t min_df) {
    std::vector<std::string> v;
    for (const auto& [lemma, row] : counts)
      if (static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](auto c) { return c > 0; })) >=
          min_df)
        v.push_back(lemma);
    std::sort(v.begin(), v.end());
    return v;
  };
  DocTermMatrix dtm;
  dtm.vocabulary = vocab_at(min_doc_freq);
  if (dtm.vocabulary.empty()) dtm.vocabulary = vocab_at(1);
  for (std::size_t d = 0; d < D; ++d) {
    dtm.titles.push_back(corpus.documents[d].title);
    std::vector<std::size_t> row;
    for (const auto& w : dtm.vocabulary) row.push_back(counts[w][d]);
    dtm.counts.push_back(row);
  }
  return dtm;
}

std::vector<std::pair<std::size_t, std::size_t>> brute_force_summary(const AnnotatedCorpus& corpus,
                                                                     std::size_t n) {
  const auto& lex = Lexicons::standard();
  std::unordered_map<std::string, std::size_t> freq;
  for (const auto& doc : corpus.documents)
    for (const auto& s : doc.sentences)
      for (const auto& t : s.tokens)
        if (t.pos != Pos::Punct && !lex.is_stopword(t.lemma)) ++freq[t.lemma];

  struct Cand {
    std::size_t d, s;
    double score;
    bool taken = false;
  };
  std::vector<Cand> cands;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d)
    for (std::size_t s = 0; s < corpus.documents[d].sentences.size(); ++s) {
      double sum = 0.0, words = 0.0;
      for (const auto& t : corpus.documents[d].sentences[s].tokens) {
        if (t.pos == Pos::Punct) continue;
        words += 1.0;
        if (!lex.is_stopword(t.lemma)) sum += static_cast<double>(freq[t.lemma]);
      }
      cands.push_back({d, s, words > 0 ? sum / words : 0.0});
    }
  // Repeated selection of the best remaining candidate; the earliest wins ties.
  for (std::size_t k = 0; k < n && k < cands.size(); ++k) {
    Cand* best = nullptr;
    for (auto& c : cands)
      if (!c.taken && (best == nullptr || c.score > best->score)) best = &c;
    best->taken = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : cands)
    if (c.taken) out.emplace_back(c.d, c.s);
  return out;
}

std::pair<std::vector<double>, std::vector<double>> column_moments(const Matrix& x) {
  std::vector<double> mean(x.cols(), 0.0), sd(x.cols(), 0.0);
  for (std::size_t c = 0; c < x.cols(); ++c) {
    for (std::size_t r = 0; r < x.rows(); ++r) mean[c] += x(r, c);
    mean[c] /= static_cast<double>(x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) sd[c] += (x(r, c) - mean[c]) * (x(r, c) - mean[c]);
    sd[c] = std::sqrt(sd[c] / static_cast<double>(x.rows()));
  }
  return {mean, sd};
}

std::vector<std::pair<std::size_t, double>> brute_force_knn(const NumericTable& table, std::size_t r) {
  const auto [mean, sd] = column_moments(table.features);
  auto z = [&](std::size_t row, std::size_t c) {
    const double s = sd[c] > 0.0 ? sd[c] : 1.0;
    return (table.features(row, c) - mean[c]) / s;
  };
  std::vector<std::pair<std::size_t, double>> all;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    if (i == r) continue;
    double d2 = 0.0;
    for (std::size_t c = 0; c < table.features.cols(); ++c) d2 += std::pow(z(i, c) - z(r, c), 2);
    all.emplace_back(i, std::sqrt(d2));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return all;
}

std::pair<std::vector<std::size_t>, double> best_two_partition(const Matrix& points) {
  const std::size_t n = points.rows();
  const std::size_t dims = points.cols();
  std::vector<std::size_t> best;
  double best_inertia = std::numeric_limits<double>::infinity();
  // Point 0 is fixed to cluster 0; bit i-1 of mask puts point i in cluster 1.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> labels(n, 0);
    for (std::size_t i = 1; i < n; ++i) labels[i] = (mask >> (i - 1)) & 1u;
    double inertia = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      std::vector<double> centre(dims, 0.0);
      double size = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == k) {
          size += 1.0;
          for (std::size_t c = 0; c < dims; ++c) centre[c] += points(i, c);
        }
      for (auto& v : centre) v /= size;
      for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == k)
          for (std::size_t c = 0; c < dims; ++c) inertia += std::pow(points(i, c) - centre[c], 2);
    }
    if (inertia < best_inertia) {
      best_inertia = inertia;
      best = labels;
    }
  }
  return {best, best_inertia};
}

Eigen2 eigen_2x2(double a, double b, double d) {
  Eigen2 e{};
  const double half_trace = 0.5 * (a + d);
  const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
  e.values[0] = half_trace + disc;
  e.values[1] = half_trace - disc;
  for (int i = 0; i < 2; ++i) {
    double vx, vy;
    if (b != 0.0) {
      vx = e.values[i] - d;
      vy = b;
    } else if ((a >= d) == (i == 0)) {
      vx = 1.0;
      vy = 0.0;
    } else {
      vx = 0.0;
      vy = 1.0;
    }
    const double norm = std::hypot(vx, vy);
    e.vectors[i][0] = vx / norm;
    e.vectors[i][1] = vy / norm;
  }
  return e;
}

double purity_two(const std::vector<std::size_t>& predicted, const std::vector<std::size_t>& truth) {
  std::size_t same = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) same += predicted[i] == truth[i] ? 1 : 0;
  const std::size_t best = std::max(same, truth.size() - same);
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

ml::ConfusionMatrix tally_confusion(const std::vector<int>& predicted, const std::vector<double>& actual) {
  ml::ConfusionMatrix m;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const bool p = predicted[i] == 1;
    const bool a = actual[i] == 1.0;
    if (p && a) ++m.tp;
    if (p && !a) ++m.fp;
    if (!p && a) ++m.fn;
    if (!p && !a) ++m.tn;
  }
  return m;
}

namespace {

double relative_error(double analytic, double numeric) {
  const double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-6});
  return std::abs(analytic - numeric) / scale;
}

}  // namespace

double mlp_gradient_error(const ml::MlpParameters& p, const Matrix& x, const std::vector<double>& y,
                          double h) {
  const auto grad = ml::mlp_gradient(p, x, y);
  double worst = 0.0;
  auto probe = [&](auto&& get_param, double analytic) {
    ml::MlpParameters q = p;
    double& v = get_param(q);
    const double keep = v;
    v = keep + h;
    const double up = ml::mlp_loss(q, x, y);
    v = keep - h;
    const double down = ml::mlp_loss(q, x, y);
    worst = std::max(worst, relative_error(analytic, (up - down) / (2.0 * h)));
  };
  for (std::size_t i = 0; i < p.w1.rows(); ++i)
    for (std::size_t j = 0; j < p.w1.cols(); ++j)
      probe([&](ml::MlpParameters& q) -> double& { return q.w1(i, j); }, grad.w1(i, j));
  for (std::size_t i = 0; i < p.b1.size(); ++i)
    probe([&](ml::MlpParameters& q) -> double& { return q.b1[i]; }, grad.b1[i]);
  for (std::size_t i = 0; i < p.w2.size(); ++i)
    probe([&](ml::MlpParameters& q) -> double& { return q.w2[i]; }, grad.w2[i]);
  probe([&](ml::MlpParameters& q) -> double& { return q.b2; }, grad.b2);
  return worst;
}

double svm_gradient_error(const std::vector<double>& w, double b, const Matrix& x,
                          const std::vector<double>& y, double lambda, double h) {
  const auto grad = ml::svm_subgradient(w, b, x, y, lambda);
  double worst = 0.0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    auto wp = w, wm = w;
    double bp = b, bm = b;
    if (i < w.size()) {
      wp[i] += h;
      wm[i] -= h;
    } else {
      bp += h;
      bm -= h;
    }
    const double numeric =
        (ml::svm_objective(wp, bp, x, y, lambda) - ml::svm_objective(wm, bm, x, y, lambda)) / (2.0 * h);
    worst = std::max(worst, relative_error(i < w.size() ? grad.w[i] : grad.b, numeric));
  }
  return worst;
}

int run_command(const std::string& command, std::string& output) {
  output.clear();
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace gtminer::test
