#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtminer/matrix.hpp"

namespace gtminer {

/// One titled segment of a transcript. Segments that share a title are
/// merged into a single document.
struct Document {
  std::string title;
  std::string text;
  std::size_t source_order = 0;  // 0-based index of first appearance

  friend bool operator==(const Document&, const Document&) = default;
};

struct Corpus {
  std::vector<Document> documents;  // ordered by source_order

  std::size_t size() const noexcept { return documents.size(); }
  bool empty() const noexcept { return documents.empty(); }
  const Document* find(std::string_view title) const noexcept;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Parses break-tagged transcript text. The text preceding each
/// `<break>TITLE</break>` tag is a segment titled TITLE; text after the
/// last tag becomes `UNTAGGED_<untagged_index>`. Throws ParseError.
Corpus parse_transcript(std::string_view raw, int untagged_index = 1);

/// Parses each file and merges documents by title across files. Throws
/// UsageError for an empty path list and IoError for unreadable files.
Corpus load_corpus(std::span<const std::filesystem::path> paths);

/// Reads a whole file; throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Raw comma-separated cells with the header row split off. Cells are
/// trimmed of surrounding whitespace.
struct CsvGrid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based file line of each row
};

/// Identifier column, numeric features and a numeric dependent variable.
struct NumericTable {
  std::string id_name;
  std::vector<std::string> ids;
  std::vector<std::string> feature_names;
  Matrix features;
  std::string dv_name;
  std::vector<double> dv;

  /// Cells of the originating CSV, kept so columns can be reselected.
  std::shared_ptr<const CsvGrid> source;

  std::size_t rows() const noexcept { return ids.size(); }

  /// Keeps the given rows, in the given order. Column reselection on the
  /// result is not supported (its `source` is cleared).
  NumericTable select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const NumericTable& a, const NumericTable& b) {
    return a.id_name == b.id_name && a.ids == b.ids && a.feature_names == b.feature_names &&
           a.features == b.features && a.dv_name == b.dv_name && a.dv == b.dv;
  }
};

/// Splits CSV text into cells. Throws SchemaError for a missing or
/// duplicate header and ValidationError for ragged rows.
CsvGrid parse_csv_grid(std::string_view raw);

/// Column 0 is the identifier, the last column the dependent variable,
/// the rest are features. Throws SchemaError / ValidationError.
NumericTable parse_numeric_csv(std::string_view raw);

/// Reselects columns by header name: titles[0] becomes the identifier,
/// titles.back() the dependent variable, the rest features.
NumericTable select_columns(const NumericTable& table, std::span<const std::string> titles);

enum class SentimentLabel { Positive, Negative, Neutral };

std::string_view to_string(SentimentLabel label) noexcept;
std::optional<SentimentLabel> parse_sentiment_label(std::string_view text) noexcept;

/// Conjunctive document filter; at least one field must be set.
struct FilterSpec {
  std::optional<std::set<std::string>> titles;
  std::optional<SentimentLabel> sentiment_label;
  std::optional<std::string> category;  // verb lemma

  bool any() const noexcept { return titles || sentiment_label || category; }
};

using SentimentScorer = std::function<SentimentLabel(const Document&)>;
using CategoryIndex = std::function<std::set<std::string>(const Document&)>;

/// Keeps documents matching every set field of `spec`, preserving order.
/// The scorer and index are only called when the corresponding field is
/// set. Throws UsageError when no field is set.
Corpus filter_documents(const Corpus& corpus, const FilterSpec& spec,
                        const SentimentScorer& sentiment_scorer,
                        const CategoryIndex& category_index);

}  // namespace gtminer
