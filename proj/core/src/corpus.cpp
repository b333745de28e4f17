#include "gtminer/corpus.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gtminer/error.hpp"
#include "text_util.hpp"

namespace gtminer {
namespace {

constexpr std::string_view kOpenTag = "<break>";
constexpr std::string_view kCloseTag = "</break>";

struct Segment {
  std::string title;  // empty for trailing untagged text
  std::string text;
};

std::vector<Segment> parse_segments(std::string_view raw) {
  std::vector<Segment> segments;
  std::string pending;
  const auto lines = detail::split_lines(raw);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string_view line = lines[n];
    const std::size_t line_no = n + 1;
    std::size_t pos = 0;
    for (;;) {
      const auto open = line.find(kOpenTag, pos);
      const auto stray = line.find(kCloseTag, pos);
      if (stray != std::string_view::npos && (open == std::string_view::npos || stray < open))
        throw ParseError(line_no, "</break> without a matching <break>");
      if (open == std::string_view::npos) {
        pending.append(line.substr(pos));
        break;
      }
      pending.append(line.substr(pos, open - pos));
      const auto title_start = open + kOpenTag.size();
      const auto close = line.find(kCloseTag, title_start);
      if (close == std::string_view::npos) throw ParseError(line_no, "unclosed <break> tag");
      const auto title = detail::trim(line.substr(title_start, close - title_start));
      if (title.empty()) throw ParseError(line_no, "empty <break> title");
      if (title.find_first_of("<>") != std::string_view::npos)
        throw ParseError(line_no, "'<' or '>' inside a <break> title");
      segments.push_back({std::string(title), std::string(detail::trim(pending))});
      pending.clear();
      pos = close + kCloseTag.size();
    }
    if (n + 1 < lines.size()) pending.push_back('\n');
  }
  const auto trailing = detail::trim(pending);
  if (!trailing.empty()) segments.push_back({std::string(), std::string(trailing)});
  return segments;
}

class CorpusBuilder {
 public:
  void add(const std::string& title, const std::string& text) {
    auto [it, inserted] = index_.try_emplace(title, corpus_.documents.size());
    if (inserted) {
      corpus_.documents.push_back({title, text, corpus_.documents.size()});
      return;
    }
    auto& doc = corpus_.documents[it->second];
    if (text.empty()) return;
    if (!doc.text.empty()) doc.text.push_back('\n');
    doc.text.append(text);
  }

  Corpus take() && { return std::move(corpus_); }

 private:
  Corpus corpus_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

std::string untagged_title(int index) { return "UNTAGGED_" + std::to_string(index); }

}  // namespace

const Document* Corpus::find(std::string_view title) const noexcept {
  for (const auto& doc : documents)
    if (doc.title == title) return &doc;
  return nullptr;
}

Corpus parse_transcript(std::string_view raw, int untagged_index) {
  CorpusBuilder builder;
  for (const auto& seg : parse_segments(raw))
    builder.add(seg.title.empty() ? untagged_title(untagged_index) : seg.title, seg.text);
  return std::move(builder).take();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return std::move(buffer).str();
}

Corpus load_corpus(std::span<const std::filesystem::path> paths) {
  if (paths.empty()) throw UsageError("no transcript files given");
  CorpusBuilder builder;
  int untagged = 0;
  for (const auto& path : paths) {
    const std::string raw = read_file(path);
    std::vector<Segment> segments;
    try {
      segments = parse_segments(raw);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.detail(), path.string());
    }
    for (const auto& seg : segments)
      builder.add(seg.title.empty() ? untagged_title(++untagged) : seg.title, seg.text);
  }
  return std::move(builder).take();
}

std::string_view to_string(SentimentLabel label) noexcept {
  switch (label) {
    case SentimentLabel::Positive:
      return "pos";
    case SentimentLabel::Negative:
      return "neg";
    case SentimentLabel::Neutral:
      return "neu";
  }
  return "neu";
}

std::optional<SentimentLabel> parse_sentiment_label(std::string_view text) noexcept {
  if (text == "pos") return SentimentLabel::Positive;
  if (text == "neg") return SentimentLabel::Negative;
  if (text == "neu") return SentimentLabel::Neutral;
  return std::nullopt;
}

Corpus filter_documents(const Corpus& corpus, const FilterSpec& spec,
                        const SentimentScorer& sentiment_scorer,
                        const CategoryIndex& category_index) {
  if (!spec.any()) throw UsageError("filter has no criteria");
  Corpus out;
  for (const auto& doc : corpus.documents) {
    if (spec.titles && !spec.titles->contains(doc.title)) continue;
    if (spec.sentiment_label && sentiment_scorer(doc) != *spec.sentiment_label) continue;
    if (spec.category && !category_index(doc).contains(*spec.category)) continue;
    out.documents.push_back(doc);
  }
  return out;
}

}  // namespace gtminer
