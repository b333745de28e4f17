#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "gtminer/coding.hpp"
#include "gtminer/error.hpp"
#include "gtminer/sentiment.hpp"
#include "golden_cases.hpp"
#include "support.hpp"

using namespace gtminer;
using namespace gtminer::cli;
namespace fs = std::filesystem;

namespace {

Outcome run_args(std::vector<std::string> args, const char* env_seed = nullptr) {
  return execute(test::expand_args(args), env_seed);
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.starts_with(prefix)) ++n;
  return n;
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("gtminer_cli_" + name); }

// Writes the given documents as a tagged transcript.
fs::path write_corpus(const std::string& name, const std::vector<Document>& docs) {
  const auto path = temp_path(name);
  std::ofstream out(path, std::ios::binary);
  for (const auto& d : docs) out << d.text << "\n<break>" << d.title << "</break>\n";
  return path;
}

Corpus participants() {
  const std::vector<fs::path> paths{test::bundled("sample_participants.txt")};
  return load_corpus(paths);
}

}  // namespace

TEST_CASE("documented argument examples") {
  const auto a = parse_args({"-i", "transcript.txt", "--cat", "--codedict", "-n", "10"}, nullptr);
  CHECK(a.inputs == std::vector<std::string>{"transcript.txt"});
  CHECK(a.actions == std::set<Action>{Action::Cat, Action::Codedict});
  CHECK(a.n == 10);

  const auto b = parse_args({"-i", "--csv", "data.csv", "--knn", "-n", "5", "-r", "733"}, nullptr);
  CHECK(b.inputs.empty());
  CHECK(b.csv == "data.csv");
  CHECK(b.actions == std::set<Action>{Action::Knn});
  CHECK(b.n == 5);
  CHECK(b.rec == 733);

  const auto c = parse_args({"-i", "a.txt", "-i", "b.txt", "-t", "P5", "-t", "P7", "--sentiment"}, nullptr);
  CHECK(c.inputs == std::vector<std::string>{"a.txt", "b.txt"});
  CHECK(c.titles == std::vector<std::string>{"P5", "P7"});
}

TEST_CASE("seed precedence") {
  CHECK(parse_args({"-i", "x", "--cat"}, nullptr).seed == 42);
  CHECK(parse_args({"-i", "x", "--cat"}, "7").seed == 7);
  CHECK(parse_args({"-i", "x", "--cat", "--seed", "9"}, "7").seed == 9);
  CHECK_THROWS_AS(parse_args({"-i", "x", "--cat"}, "seven"), UsageError);
}

TEST_CASE("usage errors exit 2") {
  const auto empty = execute({}, nullptr);
  CHECK(empty.exit_code == kUsage);
  CHECK(empty.err.find("Usage") != std::string::npos);
  CHECK(empty.out.empty());

  CHECK(run_args({"--bogus"}).exit_code == kUsage);
  CHECK(run_args({"-i", "@sample_transcript.txt"}).exit_code == kUsage);
  CHECK(run_args({"--cat"}).exit_code == kUsage);
  CHECK(run_args({"--kmeans"}).exit_code == kUsage);
  CHECK(run_args({"-i", "@sample_transcript.txt", "--csv", "@diabetes.csv", "--cat", "--svm"}).exit_code ==
        kUsage);
  CHECK(run_args({"-i", "@sample_transcript.txt", "--cat", "--topics"}).exit_code == kUsage);
  CHECK(run_args({"-i", "@sample_transcript.txt", "--cat", "--topics", "-n", "4"}).exit_code == kSuccess);
  CHECK(run_args({"--csv", "@diabetes.csv", "--knn", "-n", "3"}).exit_code == kUsage);
  CHECK(run_args({"-i", "@sample_transcript.txt", "-f", "happy", "--cat"}).exit_code == kUsage);

  const auto km = run_args({"--csv", "@diabetes.csv", "--kmeans"});
  CHECK(km.exit_code == kUsage);
  CHECK(km.err.find("-n") != std::string::npos);

  const auto help = execute({"--help"}, nullptr);
  CHECK(help.exit_code == kSuccess);
  CHECK(help.out.find("--codedict") != std::string::npos);
}

TEST_CASE("input errors exit 3") {
  CHECK(run_args({"-i", "/nonexistent.txt", "--cat"}).exit_code == kInput);
  CHECK(run_args({"--csv", "/nonexistent.csv", "--svm"}).exit_code == kInput);

  const auto bad_csv = temp_path("bad.csv");
  std::ofstream(bad_csv) << "id,x,y\n1,2,1\n2,oops,0\n";
  const auto r = run_args({"--csv", bad_csv.string(), "--kmeans", "-n", "2"});
  CHECK(r.exit_code == kInput);
  CHECK(r.err.find("row 3") != std::string::npos);

  const auto bad_tag = temp_path("bad.txt");
  std::ofstream(bad_tag) << "text\n<break>open\n";
  const auto t = run_args({"-i", bad_tag.string(), "--cat"});
  CHECK(t.exit_code == kInput);
  CHECK(t.err.find("line 2") != std::string::npos);

  CHECK(run_args({"-i", "@sample_participants.txt", "-t", "P9", "--cat"}).exit_code == kInput);
  CHECK(run_args({"--csv", "@diabetes.csv", "-t", "index", "-t", "nope", "-t", "has_diabetes", "--svm"})
            .exit_code == kInput);
}

TEST_CASE("parameter errors exit 4") {
  CHECK(run_args({"--csv", "@diabetes.csv", "--knn", "-n", "500", "-r", "1"}).exit_code == kParameter);
  CHECK(run_args({"--csv", "@diabetes.csv", "--knn", "-n", "3", "-r", "500"}).exit_code == kParameter);
  CHECK(run_args({"--csv", "@diabetes.csv", "--kmeans", "-n", "0"}).exit_code == kParameter);
  CHECK(run_args({"--csv", "@diabetes.csv", "--pca", "-n", "9"}).exit_code == kParameter);
  CHECK(run_args({"-i", "@sample_transcript.txt", "--cat", "-n", "0"}).exit_code == kParameter);
  CHECK(run_args({"-i", "@sample_transcript.txt", "--topics", "-n", "5000"}).exit_code == kParameter);
}

TEST_CASE("-o writes the report byte-identically") {
  const auto out = temp_path("report.txt");
  fs::remove(out);
  const std::vector<std::string> args{"-i", "@sample_transcript.txt", "--cat", "--sentiment", "-n", "4"};
  const auto to_stdout = run_args(args);
  auto with_file = args;
  with_file.insert(with_file.end(), {"-o", out.string()});
  const auto to_file = run_args(with_file);
  REQUIRE(to_file.exit_code == kSuccess);
  CHECK(to_file.out.empty());
  CHECK(test::slurp(out) == to_stdout.out);
  CHECK(run_args({"-i", "@sample_transcript.txt", "--cat", "-o", "/nonexistent/dir/x.txt"}).exit_code == kInput);
}

TEST_CASE("title selection and sentiment blocks") {
  const auto r = run_args({"-i", "@sample_participants.txt", "-t", "P5", "-t", "P7", "--sentiment"});
  REQUIRE(r.exit_code == kSuccess);
  CHECK(count_lines_starting(r.out, "Sentiment: ") == 2);
  CHECK(r.out.find("Sentiment: P5") != std::string::npos);
  CHECK(r.out.find("Sentiment: P7") != std::string::npos);
  CHECK(r.out.find("P6") == std::string::npos);
}

TEST_CASE("topics with assignments") {
  const auto r = run_args({"-i", "@sample_transcript.txt", "--topics", "--assign", "-n", "3"});
  REQUIRE(r.exit_code == kSuccess);
  std::size_t topic_lines = 0;
  for (int k = 1; k <= 4; ++k) topic_lines += count_lines_starting(r.out, "Topic " + std::to_string(k) + ":");
  CHECK(topic_lines == 3);
  CHECK(count_lines_starting(r.out, "Interview_") == 2);
}

TEST_CASE("neural network prints one line per epoch") {
  for (int n : {1, 5, 37}) {
    const auto r = run_args({"--csv", "@diabetes.csv", "--nnet", "-n", std::to_string(n)});
    REQUIRE(r.exit_code == kSuccess);
    CHECK(count_lines_starting(r.out, "Epoch ") == static_cast<std::size_t>(n));
  }
}

TEST_CASE("filters compose with analyses") {
  const Corpus c = participants();
  const auto ac = annotate(c);
  std::vector<Document> positive, walkers, both;
  for (std::size_t d = 0; d < c.size(); ++d) {
    const bool pos = label(score_document(c.documents[d])) == SentimentLabel::Positive;
    const bool walk = verb_lemmas(ac.documents[d]).contains("walk");
    if (pos) positive.push_back(c.documents[d]);
    if (walk) walkers.push_back(c.documents[d]);
    if (pos && walk) both.push_back(c.documents[d]);
  }
  REQUIRE(!positive.empty());
  REQUIRE(positive.size() < c.size());
  REQUIRE(!walkers.empty());

  auto same = [](std::vector<std::string> filtered, const fs::path& subset, std::vector<std::string> tail) {
    filtered.insert(filtered.end(), tail.begin(), tail.end());
    std::vector<std::string> direct{"-i", subset.string()};
    direct.insert(direct.end(), tail.begin(), tail.end());
    const auto a = run_args(filtered);
    const auto b = run_args(direct);
    REQUIRE(a.exit_code == kSuccess);
    REQUIRE(b.exit_code == kSuccess);
    CHECK(a.out == b.out);
  };
  const std::vector<std::string> base{"-i", "@sample_participants.txt"};
  auto with = [&](std::vector<std::string> extra) {
    auto v = base;
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  };
  same(with({"-f", "pos"}), write_corpus("pos.txt", positive), {"--codedict"});
  same(with({"-f", "pos"}), write_corpus("pos.txt", positive), {"--cat", "-n", "5"});
  same(with({"-f", "category:walk"}), write_corpus("walk.txt", walkers), {"--cat", "-n", "5"});
  same(with({"-f", "pos", "-f", "category:walk"}), write_corpus("both.txt", both), {"--sentence"});
  same(with({"-t", "P5", "-t", "P7"}), write_corpus("p57.txt", {c.documents[0], c.documents[2]}),
       {"--cat", "-n", "5"});
}

TEST_CASE("golden outputs") {
  const bool update = std::getenv("GTMINER_UPDATE_GOLDEN") != nullptr;
  for (const auto& gc : test::golden_cases()) {
    CAPTURE(gc.name);
    const auto r = run_args(gc.args);
    REQUIRE(r.exit_code == kSuccess);
    const auto path = test::golden(gc.name + ".txt");
    if (update) {
      std::ofstream(path, std::ios::binary) << r.out;
      continue;
    }
    REQUIRE(fs::exists(path));
    CHECK(r.out == test::slurp(path));
  }
}

TEST_CASE("repeat runs are byte-identical") {
  for (const auto& gc : test::golden_cases()) {
    CAPTURE(gc.name);
    CHECK(run_args(gc.args).out == run_args(gc.args).out);
  }
  const auto a = run_args({"--csv", "@diabetes.csv", "--kmeans", "-n", "3"}, "5");
  const auto b = run_args({"--csv", "@diabetes.csv", "--kmeans", "-n", "3", "--seed", "5"});
  CHECK(a.out == b.out);
}

TEST_CASE("the installed binary matches the in-process run") {
  const auto& gc = test::golden_cases().front();
  std::string out;
  CHECK(test::run_command(test::shell_command(GTMINER_EXE, gc.args), out) == 0);
  CHECK(out == run_args(gc.args).out);
  CHECK(test::run_command("'" + std::string(GTMINER_EXE) + "' --bogus 2>/dev/null", out) == 2);
}
