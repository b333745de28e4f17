#include "gtminer/lexicon.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "gtminer/corpus.hpp"
#include "gtminer/error.hpp"
#include "text_util.hpp"

namespace gtminer {

namespace detail {
std::string_view embedded_data_file(std::string_view name);
}  // namespace detail

namespace {

constexpr std::array<std::string_view, kPosCount> kPosNames = {
    "NOUN", "PROPN", "VERB", "AUX", "ADJ", "ADV", "PRON",
    "DET",  "ADP",   "CONJ", "NUM", "PUNCT", "PART", "OTHER",
};


/// Calls `fn(line_no, fields)` for each non-comment, non-blank line.
template <typename Fn>
void for_each_record(std::string_view file_name, std::string_view contents, std::size_t arity,
                     Fn&& fn) {
  const auto lines = detail::split_lines(contents);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto fields = detail::split(line, '\t');
    for (auto& f : fields) f = detail::trim(f);
    if (fields.size() != arity)
      throw ParseError(i + 1,
                       "expected " + std::to_string(arity) + " tab-separated fields, found " +
                           std::to_string(fields.size()),
                       std::string(file_name));
    if (fields[0].empty()) throw ParseError(i + 1, "empty key", std::string(file_name));
    fn(i + 1, fields);
  }
}

Pos require_pos(std::string_view file_name, std::size_t line, std::string_view name) {
  if (auto pos = parse_pos(name)) return *pos;
  throw ParseError(line, "unknown tag '" + std::string(name) + "'", std::string(file_name));
}

}  // namespace

std::string_view to_string(Pos pos) noexcept { return kPosNames[static_cast<std::size_t>(pos)]; }

std::optional<Pos> parse_pos(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kPosNames.size(); ++i)
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  return std::nullopt;
}

Lexicons Lexicons::from_files(const FileReader& read) {
  Lexicons lex;

  auto tag_table = [&](std::string_view file, std::map<std::string, Pos, std::less<>>& table) {
    const std::string contents = read(file);
    for_each_record(file, contents, 2, [&](std::size_t line, const auto& f) {
      table[std::string(f[0])] = require_pos(file, line, f[1]);
    });
  };
  tag_table("closed_class.tsv", lex.closed_);
  tag_table("open_class.tsv", lex.open_);

  {
    constexpr std::string_view file = "lemma_exceptions.tsv";
    const std::string contents = read(file);
    for_each_record(file, contents, 3, [&](std::size_t line, const auto& f) {
      const Pos pos = require_pos(file, line, f[2]);
      lex.exceptions_[{std::string(f[0]), pos}] = std::string(f[1]);
      if (pos == Pos::Verb) lex.irregular_verb_lemmas_.insert(std::string(f[1]));
      lex.exception_lemmas_.insert(std::string(f[1]));
    });
  }

  auto word_set = [&](std::string_view file, std::set<std::string, std::less<>>& set) {
    const std::string contents = read(file);
    for_each_record(file, contents, 1,
                    [&](std::size_t, const auto& f) { set.insert(detail::to_lower(f[0])); });
  };
  word_set("stopwords.txt", lex.stopwords_);
  word_set("gazetteer.txt", lex.gazetteer_);
  word_set("abbreviations.txt", lex.abbreviations_);

  {
    constexpr std::string_view file = "sentiment_lexicon.tsv";
    const std::string contents = read(file);
    for_each_record(file, contents, 2, [&](std::size_t line, const auto& f) {
      double v = 0.0;
      const auto text = f[1];
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v) || v < -4.0 ||
          v > 4.0)
        throw ParseError(line, "valence must be a number in [-4, 4]", std::string(file));
      lex.valence_[std::string(f[0])] = v;
    });
  }
  return lex;
}

Lexicons Lexicons::load(const std::filesystem::path& dir) {
  return from_files([&](std::string_view name) { return read_file(dir / std::string(name)); });
}

Lexicons Lexicons::embedded() {
  return from_files(
      [](std::string_view name) { return std::string(detail::embedded_data_file(name)); });
}

const Lexicons& Lexicons::standard() {
  static const Lexicons instance = [] {
    if (const char* dir = std::getenv("GTMINER_DATA_DIR"); dir != nullptr && *dir != '\0')
      return load(dir);
    return embedded();
  }();
  return instance;
}

std::optional<Pos> Lexicons::closed_class(std::string_view word) const {
  if (auto it = closed_.find(word); it != closed_.end()) return it->second;
  return std::nullopt;
}

std::optional<Pos> Lexicons::open_class(std::string_view word) const {
  if (auto it = open_.find(word); it != open_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string_view> Lexicons::lemma_exception(std::string_view word, Pos pos) const {
  if (auto it = exceptions_.find({std::string(word), pos}); it != exceptions_.end())
    return std::string_view(it->second);
  return std::nullopt;
}

bool Lexicons::is_stopword(std::string_view lemma) const { return stopwords_.contains(lemma); }

bool Lexicons::in_gazetteer(std::string_view word) const { return gazetteer_.contains(word); }

bool Lexicons::is_abbreviation(std::string_view word) const {
  return abbreviations_.contains(word);
}

std::optional<double> Lexicons::valence(std::string_view word) const {
  if (auto it = valence_.find(word); it != valence_.end()) return it->second;
  return std::nullopt;
}

bool Lexicons::is_known_word(std::string_view word) const {
  return open_.contains(word) || exception_lemmas_.contains(word);
}

bool Lexicons::has_verb_reading(std::string_view word) const {
  if (word.empty()) return false;
  if (irregular_verb_lemmas_.contains(word)) return true;
  const std::string w(word);
  auto is_verb = [&](const std::string& form) { return open_class(form) == Pos::Verb; };
  if (is_verb(w) || is_verb(w + "s") || is_verb(w + "es") || is_verb(w + "ed") ||
      is_verb(w + "ing"))
    return true;
  if (w.back() == 'e' && (is_verb(w + "d") || is_verb(w.substr(0, w.size() - 1) + "ing")))
    return true;
  if (w.back() == 'y' && is_verb(w.substr(0, w.size() - 1) + "ied")) return true;
  if (w.size() > 2 && w.back() == 's' && w[w.size() - 2] != 's') {
    const std::string stem = w.substr(0, w.size() - 1);
    if (is_verb(stem) || is_verb(stem + "ed") || is_verb(stem + "ing")) return true;
  }
  const std::string doubled = w + w.back();
  return is_verb(doubled + "ed") || is_verb(doubled + "ing");
}

}  // namespace gtminer
