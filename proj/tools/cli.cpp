#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "gtminer/coding.hpp"
#include "gtminer/error.hpp"
#include "gtminer/ml.hpp"
#include "gtminer/sentiment.hpp"
#include "gtminer/topic_model.hpp"
#include "render.hpp"

namespace gtminer::cli {
namespace {

/// A requested title or record that the input does not contain.
class InputMismatch : public Error {
 public:
  using Error::Error;
};

struct ActionInfo {
  Action action;
  const char* flag;
  const char* help;
  bool numeric;
  long long default_n;  // 0: -n unused, -1: -n required
};

constexpr ActionInfo kActions[] = {
    {Action::Cat, "--cat", "Top verb categories (open coding)", false, 10},
    {Action::Codedict, "--codedict", "Coding dictionary: categories, properties, dimensions",
     false, 10},
    {Action::Topics, "--topics", "LDA topics with their top terms", false, 3},
    {Action::Assign, "--assign", "Assign each document to its most probable topic", false, 3},
    {Action::Sentiment, "--sentiment", "Document sentiment", false, 0},
    {Action::Sentence, "--sentence", "Sentence-level sentiment", false, 0},
    {Action::Summary, "--summary", "Extractive summary sentences", false, 3},
    {Action::Concepts, "--concepts", "Most frequent named entities", false, 10},
    {Action::Nnet, "--nnet", "Neural network classifier (-n epochs)", true, -1},
    {Action::Svm, "--svm", "Linear SVM classifier", true, 0},
    {Action::Kmeans, "--kmeans", "K-means clustering (-n clusters)", true, -1},
    {Action::Knn, "--knn", "Nearest rows to record -r (-n neighbours)", true, -1},
    {Action::Pca, "--pca", "Principal components (-n factors)", true, -1},
};

const ActionInfo& info(Action a) { return kActions[static_cast<std::size_t>(a)]; }

std::string flag_name(Action a) { return info(a).flag; }

struct Flags {
  Config config;
  std::map<Action, bool> requested;
  std::optional<std::uint64_t> seed;
};

/// Builds the parser bound to `flags`.
std::unique_ptr<CLI::App> make_app(Flags& flags) {
  auto app = std::make_unique<CLI::App>(
      "Grounded-theory coding support for interview transcripts and numeric\n"
      "triangulation over CSV tables.",
      "gtminer");
  app->set_help_flag("-h,--help", "Print this help and exit");
  auto& c = flags.config;
  app->add_option("-i,--input", c.inputs, "Transcript file (repeatable)")
      ->allow_extra_args(false)
      ->group("Input/output");
  app->add_option("-o,--output", c.output, "Write the report to this file")->group("Input/output");
  app->add_option("--csv", c.csv, "Numeric CSV file: id, features..., outcome")
      ->group("Input/output");
  app->add_option("-n", c.n,
                  "Top-N for text actions (default 10 for --cat/--codedict/--concepts, 3 for "
                  "--topics/--assign/--summary); epochs for --nnet, clusters for --kmeans, "
                  "neighbours for --knn, factors for --pca")
      ->group("Selection");
  app->add_option("-r,--rec", c.rec, "Record (0-based row) for --knn")->group("Selection");
  app->add_option("-t,--titles", c.titles,
                  "Document title to analyse (text) or CSV column to use (numeric); repeatable")
      ->allow_extra_args(false)
      ->group("Selection");
  app->add_option("-f,--filters", c.filters,
                  "Document filter: pos, neg, neu or category:<verb>; repeatable")
      ->allow_extra_args(false)
      ->group("Selection");
  for (const auto& a : kActions)
    app->add_flag(a.flag, flags.requested[a.action], a.help)->group("Actions");

  app->add_option("--seed", flags.seed, "Random seed (default: GTMINER_SEED or 42)")
      ->group("Parameters");
  app->add_flag("--oversample", c.oversample, "Balance classes in the training split")
      ->group("Parameters");
  app->add_option("--iterations", c.lda_iterations, "Gibbs sweeps for topics")->capture_default_str()
      ->group("Parameters");
  app->add_option("--alpha", c.alpha, "Document-topic prior (default 50/topics)")
      ->group("Parameters");
  app->add_option("--beta", c.beta, "Topic-term prior")->capture_default_str()->group("Parameters");
  app->add_option("--terms", c.terms, "Terms listed per topic")->capture_default_str()->group("Parameters");
  app->add_option("--properties", c.properties, "Properties per category")->capture_default_str()
      ->group("Parameters");
  app->add_option("--dimensions", c.dimensions, "Dimensions per property")->capture_default_str()
      ->group("Parameters");
  app->add_option("--learning-rate", c.learning_rate, "Neural network learning rate")->capture_default_str()
      ->group("Parameters");
  app->add_option("--lambda", c.lambda, "SVM regularization strength")->capture_default_str()->group("Parameters");
  app->add_option("--svm-epochs", c.svm_epochs, "SVM passes over the training rows")->capture_default_str()
      ->group("Parameters");
  app->add_option("--test-fraction", c.test_fraction, "Held-out fraction for classifiers")->capture_default_str()
      ->group("Parameters");
  app->footer(
      "Exit codes: 0 success, 2 usage error, 3 input error, 4 parameter error.\n"
      "Environment: GTMINER_SEED (default seed), GTMINER_DATA_DIR (lexicon directory).");
  return app;
}

std::uint64_t parse_seed(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw UsageError("GTMINER_SEED must be a non-negative integer, got '" + std::string(text) +
                     "'");
  return v;
}

/// The paper-style spelling "-i --csv data.csv" leaves -i without a value.
std::vector<std::string> drop_dangling_input(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if ((args[i] == "-i" || args[i] == "--input") && i + 1 < args.size() && args[i + 1] == "--csv")
      continue;
    out.push_back(args[i]);
  }
  return out;
}

bool uses_n(Action a) { return info(a).default_n != 0; }

/// The -n value for `a`, applying per-action defaults.
std::size_t n_for(const Config& c, Action a) {
  if (c.n) return static_cast<std::size_t>(*c.n);
  return static_cast<std::size_t>(info(a).default_n);
}

void check_config(Config& c) {
  if (c.actions.empty()) throw UsageError("no action requested");
  bool text = false, numeric = false;
  for (Action a : c.actions) (info(a).numeric ? numeric : text) = true;
  if (text && numeric)
    throw UsageError("text and numeric actions cannot be combined in one invocation");
  if (text) {
    if (c.inputs.empty()) throw UsageError("text actions need at least one -i transcript");
    if (c.csv) throw UsageError("--csv is not used by text actions");
  } else {
    if (!c.csv) throw UsageError("numeric actions need --csv");
    if (!c.inputs.empty()) throw UsageError("-i transcripts are not used by numeric actions");
    if (!c.filters.empty()) throw UsageError("-f filters apply to transcripts only");
  }

  if (c.n && *c.n < 1) throw ParameterError("-n must be at least 1");
  if (!c.n) {
    std::optional<long long> shared;
    for (Action a : c.actions) {
      if (!uses_n(a)) continue;
      const long long d = info(a).default_n;
      if (d < 0) throw UsageError(flag_name(a) + " needs -n");
      if (shared && *shared != d)
        throw UsageError("the requested actions use different -n defaults; pass -n explicitly");
      shared = d;
    }
  }
  if (c.actions.contains(Action::Knn) && !c.rec) throw UsageError("--knn needs -r <record>");
  if (c.rec && *c.rec < 0) throw ParameterError("-r must be a row index >= 0");
}

FilterSpec build_filter(const Config& c) {
  FilterSpec spec;
  if (!c.titles.empty()) spec.titles = std::set<std::string>(c.titles.begin(), c.titles.end());
  for (const auto& f : c.filters) {
    if (f.starts_with("category:")) {
      const std::string lemma = f.substr(9);
      if (lemma.empty()) throw UsageError("empty category filter");
      if (spec.category && *spec.category != lemma)
        throw UsageError("conflicting category filters '" + *spec.category + "' and '" + lemma +
                         "'");
      spec.category = lemma;
    } else if (auto label = parse_sentiment_label(f)) {
      if (spec.sentiment_label && *spec.sentiment_label != *label)
        throw UsageError("conflicting sentiment filters");
      spec.sentiment_label = label;
    } else {
      throw UsageError("unknown filter '" + f + "' (expected pos, neg, neu or category:<verb>)");
    }
  }
  return spec;
}

std::string run_text(const Config& c) {
  std::vector<std::filesystem::path> paths(c.inputs.begin(), c.inputs.end());
  Corpus corpus = load_corpus(paths);

  for (const auto& t : c.titles) {
    if (corpus.find(t) == nullptr) {
      std::string available;
      for (const auto& d : corpus.documents) available += (available.empty() ? "" : ", ") + d.title;
      throw InputMismatch("unknown title '" + t + "'; available: " + available);
    }
  }

  const FilterSpec spec = build_filter(c);
  if (spec.any()) {
    const AnnotatedCorpus full = annotate(corpus);
    auto scorer = [](const Document& d) { return label(score_document(d)); };
    auto index = [&](const Document& d) {
      for (const auto& ad : full.documents)
        if (ad.title == d.title) return verb_lemmas(ad);
      return std::set<std::string>{};
    };
    corpus = filter_documents(corpus, spec, scorer, index);
  }
  const AnnotatedCorpus annotated = annotate(corpus);

  std::string out;
  auto section = [&](const std::string& text) {
    if (!out.empty()) out += "\n";
    out += text;
  };

  std::optional<TopicModel> model;
  std::optional<DocTermMatrix> dtm;
  auto fit_topics = [&](std::size_t k) {
    if (model) return;
    dtm = build_doc_term_matrix(annotated);
    LdaOptions o;
    o.topics = k;
    o.seed = c.seed;
    o.iterations = c.lda_iterations;
    o.alpha = c.alpha;
    o.beta = c.beta;
    model = fit_lda(*dtm, o);
  };

  for (Action a : c.actions) {
    switch (a) {
      case Action::Cat:
        section(render_categories(top_categories(annotated, n_for(c, a))));
        break;
      case Action::Codedict: {
        CodingOptions o{n_for(c, a), c.properties, c.dimensions};
        section(render_coding_dictionary(build_coding_dictionary(annotated, o)));
        break;
      }
      case Action::Topics:
        fit_topics(n_for(c, a));
        section(render_topics(*model, c.terms));
        break;
      case Action::Assign:
        fit_topics(n_for(c, a));
        section(render_assignments(assign_documents(*model, *dtm)));
        break;
      case Action::Sentiment:
        if (!c.titles.empty()) {
          for (const auto& d : corpus.documents) section(render_sentiment(d.title, score_document(d)));
        } else {
          std::string all;
          for (const auto& d : corpus.documents) all += (all.empty() ? "" : "\n") + d.text;
          section(render_sentiment("all documents", score_text(all)));
        }
        break;
      case Action::Sentence:
        if (corpus.documents.empty()) section("Sentence sentiment\n  no documents\n");
        for (const auto& d : corpus.documents)
          section(render_sentence_sentiment(d.title, score_sentences(d)));
        break;
      case Action::Summary:
        section(render_summary(annotated, summarize(annotated, n_for(c, a))));
        break;
      case Action::Concepts:
        section(render_concepts(corpus_concepts(annotated, n_for(c, a))));
        break;
      default:
        break;
    }
  }
  return out;
}

std::string run_numeric(const Config& c) {
  NumericTable table = parse_numeric_csv(read_file(*c.csv));
  if (!c.titles.empty()) table = select_columns(table, c.titles);

  std::string out;
  auto section = [&](const std::string& text) {
    if (!out.empty()) out += "\n";
    out += text;
  };
  const ml::SplitSpec split_spec{c.test_fraction, c.seed};

  for (Action a : c.actions) {
    switch (a) {
      case Action::Nnet: {
        ml::require_binary_dv(table, false);
        const auto split = ml::train_test_split(table, split_spec);
        const NumericTable train = c.oversample ? ml::oversample(split.train, c.seed) : split.train;
        ml::MlpOptions o;
        o.epochs = n_for(c, a);
        o.seed = c.seed;
        o.learning_rate = c.learning_rate;
        const auto model = ml::fit_mlp(train, o);
        section(render_mlp(model, split, ml::evaluate(model, split.test), c.oversample,
                           train.rows()));
        break;
      }
      case Action::Svm: {
        ml::require_binary_dv(table, true);
        const auto split = ml::train_test_split(table, split_spec);
        const NumericTable train = c.oversample ? ml::oversample(split.train, c.seed) : split.train;
        const auto model = ml::fit_linear_svm(train, {c.svm_epochs, c.lambda, c.seed});
        section(render_svm(model, table, split, ml::evaluate(model, split.test), c.oversample,
                           train.rows()));
        break;
      }
      case Action::Kmeans: {
        if (table.rows() == 0) throw ParameterError("the table has no rows");
        const auto [z, scaling] = ml::standardize(table.features);
        ml::KMeansOptions o;
        o.k = n_for(c, a);
        o.seed = c.seed;
        section(render_kmeans(ml::kmeans(z, o), table));
        break;
      }
      case Action::Knn: {
        const auto r = static_cast<std::size_t>(*c.rec);
        section(render_knn(table, r, ml::knn_neighbors(table, r, n_for(c, a))));
        break;
      }
      case Action::Pca:
        section(render_pca(ml::pca(table.features, n_for(c, a)), table));
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace

std::string help_text() {
  Flags flags;
  return make_app(flags)->help();
}

Config parse_args(const std::vector<std::string>& args, const char* env_seed) {
  Flags flags;
  auto app = make_app(flags);
  auto cleaned = drop_dangling_input(args);
  std::vector<std::string> reversed(cleaned.rbegin(), cleaned.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  Config c = std::move(flags.config);
  for (const auto& [action, on] : flags.requested)
    if (on) c.actions.insert(action);
  if (flags.seed) c.seed = *flags.seed;
  else if (env_seed != nullptr && *env_seed != '\0') c.seed = parse_seed(env_seed);
  check_config(c);
  return c;
}

std::string run(const Config& config) {
  bool numeric = false;
  for (Action a : config.actions) numeric = numeric || info(a).numeric;
  return numeric ? run_numeric(config) : run_text(config);
}

Outcome execute(const std::vector<std::string>& args, const char* env_seed) {
  Outcome o;
  try {
    if (args.empty()) throw UsageError("no arguments given");
    const Config config = parse_args(args, env_seed);
    std::string report = run(config);
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) throw IoError(*config.output, "cannot open for writing");
      file << report;
      if (!file.flush()) throw IoError(*config.output, "write failed");
    } else {
      o.out = std::move(report);
    }
  } catch (const HelpRequested& h) {
    o.out = h.text;
  } catch (const UsageError& e) {
    o.exit_code = kUsage;
    o.err = std::string("gtminer: ") + e.what() + "\n\n" + help_text();
  } catch (const ParameterError& e) {
    o.exit_code = kParameter;
    o.err = std::string("gtminer: ") + e.what() + "\n";
  } catch (const Error& e) {
    o.exit_code = kInput;
    o.err = std::string("gtminer: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    o.exit_code = kInput;
    o.err = std::string("gtminer: ") + e.what() + "\n";
  }
  return o;
}

}  // namespace gtminer::cli
