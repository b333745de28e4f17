#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace gtminer {

/// Coarse part-of-speech tag set.
enum class Pos : std::uint8_t {
  Noun,
  Propn,
  Verb,
  Aux,
  Adj,
  Adv,
  Pron,
  Det,
  Adp,
  Conj,
  Num,
  Punct,
  Part,
  Other,
};

inline constexpr std::size_t kPosCount = 14;

std::string_view to_string(Pos pos) noexcept;
std::optional<Pos> parse_pos(std::string_view name) noexcept;

/// The bundled linguistic data: closed- and open-class tag lexicons, lemma
/// exceptions, stopwords, gazetteer, abbreviations and sentiment valences.
/// Immutable once built; safe to share between threads.
class Lexicons {
 public:
  using FileReader = std::function<std::string(std::string_view file_name)>;

  /// Builds from file contents supplied by `read` (called once per file
  /// name; an empty string means an empty file). Throws ParseError.
  static Lexicons from_files(const FileReader& read);

  /// Loads every data file from `dir`. Throws IoError / ParseError.
  static Lexicons load(const std::filesystem::path& dir);

  /// The data compiled into the library.
  static Lexicons embedded();

  /// Process-wide instance, built on first use: from the directory named
  /// by GTMINER_DATA_DIR when set, otherwise the embedded data.
  static const Lexicons& standard();

  // All keys are lowercase.
  std::optional<Pos> closed_class(std::string_view word) const;
  std::optional<Pos> open_class(std::string_view word) const;
  std::optional<std::string_view> lemma_exception(std::string_view word, Pos pos) const;
  bool is_stopword(std::string_view lemma) const;
  bool in_gazetteer(std::string_view word) const;
  /// `word` includes its trailing period, e.g. "dr.".
  bool is_abbreviation(std::string_view word) const;
  std::optional<double> valence(std::string_view word) const;

  /// True when `word` has a verb reading: it is tagged VERB itself or one of
  /// its regular inflections (-s, -ed, -ing) is.
  bool has_verb_reading(std::string_view word) const;

  /// True when `word` is an open-class entry or the lemma of an exception.
  bool is_known_word(std::string_view word) const;

  const std::map<std::string, Pos, std::less<>>& closed_class_entries() const { return closed_; }
  const std::map<std::string, Pos, std::less<>>& open_class_entries() const { return open_; }
  const std::set<std::string, std::less<>>& stopwords() const { return stopwords_; }
  const std::map<std::string, double, std::less<>>& valences() const { return valence_; }

  const std::map<std::pair<std::string, Pos>, std::string>& lemma_exceptions() const {
    return exceptions_;
  }

 private:
  std::map<std::string, Pos, std::less<>> closed_;
  std::map<std::string, Pos, std::less<>> open_;
  std::map<std::pair<std::string, Pos>, std::string> exceptions_;
  std::set<std::string, std::less<>> stopwords_;
  std::set<std::string, std::less<>> gazetteer_;
  std::set<std::string, std::less<>> abbreviations_;
  std::map<std::string, double, std::less<>> valence_;
  std::set<std::string, std::less<>> irregular_verb_lemmas_;
  std::set<std::string, std::less<>> exception_lemmas_;
};

}  // namespace gtminer
