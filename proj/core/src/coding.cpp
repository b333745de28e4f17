#include "gtminer/coding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gtminer/error.hpp"
#include "text_util.hpp"

namespace gtminer {
namespace {

constexpr std::size_t kWindow = 2;

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw ParameterError(std::string(what) + " must be at least 1");
}

bool is_category_token(const Token& t, const Lexicons& lex) {
  return t.pos == Pos::Verb && !lex.is_stopword(t.lemma);
}

bool is_property_token(const Token& t, const Lexicons& lex) {
  return (t.pos == Pos::Noun || t.pos == Pos::Propn) && !lex.is_stopword(t.lemma);
}

std::vector<RankedTerm> rank(const std::map<std::string, std::size_t>& counts, std::size_t n) {
  std::vector<RankedTerm> out;
  out.reserve(counts.size());
  for (const auto& [lemma, count] : counts) out.push_back({lemma, count});
  // counts is ordered by lemma, so a stable sort on count keeps lemma order.
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedTerm& a, const RankedTerm& b) { return a.count > b.count; });
  if (out.size() > n) out.resize(n);
  return out;
}

/// Dimension tally for one property: count plus first-seen position.
struct DimensionTally {
  std::size_t count = 0;
  std::size_t first_seen = 0;
};

struct PropertyTally {
  std::size_t cooccurrence = 0;
  std::map<std::string, DimensionTally> dimensions;
};

}  // namespace

std::vector<RankedTerm> top_categories(const AnnotatedCorpus& corpus, std::size_t n,
                                       const Lexicons& lexicons) {
  require_positive(n, "number of categories");
  std::map<std::string, std::size_t> counts;
  for (const auto& doc : corpus.documents)
    for (const auto& s : doc.sentences)
      for (const auto& t : s.tokens)
        if (is_category_token(t, lexicons)) ++counts[t.lemma];
  return rank(counts, n);
}

CodingDictionary build_coding_dictionary(const AnnotatedCorpus& corpus,
                                         const CodingOptions& options, const Lexicons& lexicons) {
  require_positive(options.properties, "number of properties");
  require_positive(options.dimensions, "number of dimensions");
  CodingDictionary dict;
  dict.stats = {corpus.documents.size(), corpus.sentence_count(), corpus.token_count()};

  for (const auto& cat : top_categories(corpus, options.categories, lexicons)) {
    std::map<std::string, PropertyTally> props;
    std::size_t position = 0;  // running token position, orders first sightings

    for (const auto& doc : corpus.documents) {
      for (const auto& s : doc.sentences) {
        const auto& toks = s.tokens;
        const std::size_t base = position;
        position += toks.size();

        std::vector<std::size_t> verbs;
        for (std::size_t i = 0; i < toks.size(); ++i)
          if (is_category_token(toks[i], lexicons) && toks[i].lemma == cat.lemma)
            verbs.push_back(i);
        if (verbs.empty()) continue;

        // Adverbs near any instance of the verb in this sentence.
        std::set<std::size_t> adverbs;
        for (std::size_t v : verbs) {
          const std::size_t lo = v >= kWindow ? v - kWindow : 0;
          const std::size_t hi = std::min(toks.size() - 1, v + kWindow);
          for (std::size_t j = lo; j <= hi; ++j)
            if (toks[j].pos == Pos::Adv && !lexicons.is_stopword(toks[j].lemma))
              adverbs.insert(j);
        }

        // Dimension tokens per property lemma, each counted once per sentence.
        std::map<std::string, std::set<std::size_t>> dims_here;
        for (std::size_t i = 0; i < toks.size(); ++i) {
          if (!is_property_token(toks[i], lexicons)) continue;
          auto& tally = props[toks[i].lemma];
          ++tally.cooccurrence;
          auto& dims = dims_here[toks[i].lemma];
          const std::size_t lo = i >= kWindow ? i - kWindow : 0;
          const std::size_t hi = std::min(toks.size() - 1, i + kWindow);
          for (std::size_t j = lo; j <= hi; ++j)
            if (toks[j].pos == Pos::Adj && !lexicons.is_stopword(toks[j].lemma)) dims.insert(j);
          dims.insert(adverbs.begin(), adverbs.end());
        }
        for (const auto& [lemma, indices] : dims_here) {
          auto& dims = props[lemma].dimensions;
          for (std::size_t j : indices) {
            auto [it, inserted] = dims.try_emplace(toks[j].lemma, DimensionTally{0, base + j});
            ++it->second.count;
          }
        }
      }
    }

    Category category{cat.lemma, cat.count, {}};
    std::map<std::string, std::size_t> co;
    for (const auto& [lemma, tally] : props) co[lemma] = tally.cooccurrence;
    for (const auto& ranked : rank(co, options.properties)) {
      const auto& tally = props.at(ranked.lemma);
      std::vector<std::pair<std::string, DimensionTally>> dims(tally.dimensions.begin(),
                                                               tally.dimensions.end());
      std::sort(dims.begin(), dims.end(), [](const auto& a, const auto& b) {
        if (a.second.count != b.second.count) return a.second.count > b.second.count;
        return a.second.first_seen < b.second.first_seen;
      });
      Property p{ranked.lemma, ranked.count, {}};
      for (std::size_t k = 0; k < dims.size() && k < options.dimensions; ++k)
        p.dimensions.push_back({dims[k].first, dims[k].second.count});
      category.properties.push_back(std::move(p));
    }
    dict.categories.push_back(std::move(category));
  }
  return dict;
}

std::set<std::string> verb_lemmas(const AnnotatedDocument& document) {
  std::set<std::string> out;
  for (const auto& s : document.sentences)
    for (const auto& t : s.tokens)
      if (t.pos == Pos::Verb) out.insert(t.lemma);
  return out;
}

std::vector<Triad> extract_svo_triads(const Sentence& sentence) {
  const auto& toks = sentence.tokens;
  auto nominal = [&](std::size_t i) {
    return toks[i].pos == Pos::Noun || toks[i].pos == Pos::Propn;
  };
  std::vector<Triad> out;
  for (std::size_t v = 0; v < toks.size(); ++v) {
    if (toks[v].pos != Pos::Verb) continue;
    std::optional<std::size_t> subject;
    for (std::size_t j = v; j-- > 0;) {
      if (toks[j].pos == Pos::Verb) break;
      if (nominal(j) || toks[j].pos == Pos::Pron) {
        subject = j;
        break;
      }
    }
    if (!subject) continue;
    std::optional<std::size_t> object;
    for (std::size_t j = v + 1; j < toks.size(); ++j) {
      if (toks[j].pos == Pos::Verb) break;
      if (nominal(j)) {
        object = j;
        break;
      }
    }
    Triad t;
    t.subject = toks[*subject].lemma;
    t.verb = toks[v].lemma;
    if (object) t.object = toks[*object].lemma;
    t.sentence_span = sentence.span;
    t.subject_token = *subject;
    t.verb_token = v;
    t.object_token = object;
    out.push_back(std::move(t));
  }
  return out;
}

std::map<std::string, std::size_t> content_frequencies(const AnnotatedCorpus& corpus,
                                                       const Lexicons& lexicons) {
  std::map<std::string, std::size_t> freq;
  for (const auto& doc : corpus.documents)
    for (const auto& s : doc.sentences)
      for (const auto& t : s.tokens)
        if (t.pos != Pos::Punct && !lexicons.is_stopword(t.lemma)) ++freq[t.lemma];
  return freq;
}

double sentence_score(const Sentence& sentence, const std::map<std::string, std::size_t>& freq,
                      const Lexicons& lexicons) {
  std::size_t words = 0;
  std::size_t total = 0;
  for (const auto& t : sentence.tokens) {
    if (t.pos == Pos::Punct) continue;
    ++words;
    if (lexicons.is_stopword(t.lemma)) continue;
    if (auto it = freq.find(t.lemma); it != freq.end()) total += it->second;
  }
  return words == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(words);
}

namespace {

std::vector<SummarySentence> pick(std::vector<SummarySentence> candidates, std::size_t n) {
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].score > candidates[b].score;
  });
  if (order.size() > n) order.resize(n);
  std::sort(order.begin(), order.end());
  std::vector<SummarySentence> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(std::move(candidates[i]));
  return out;
}

void add_candidates(const AnnotatedCorpus& corpus, std::size_t d,
                    const std::map<std::string, std::size_t>& freq, const Lexicons& lexicons,
                    std::vector<SummarySentence>& out) {
  const auto& doc = corpus.documents[d];
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const auto& s = doc.sentences[i];
    out.push_back({d, i, doc.text.substr(s.span.begin, s.span.size()),
                   sentence_score(s, freq, lexicons)});
  }
}

}  // namespace

std::vector<SummarySentence> summarize(const AnnotatedCorpus& corpus, std::size_t n,
                                       const Lexicons& lexicons) {
  require_positive(n, "number of summary sentences");
  const auto freq = content_frequencies(corpus, lexicons);
  std::vector<SummarySentence> candidates;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d)
    add_candidates(corpus, d, freq, lexicons, candidates);
  return pick(std::move(candidates), n);
}

std::vector<SummarySentence> summarize_document(const AnnotatedCorpus& corpus,
                                                std::size_t document, std::size_t n,
                                                const Lexicons& lexicons) {
  require_positive(n, "number of summary sentences");
  if (document >= corpus.documents.size()) throw ParameterError("document index out of range");
  const auto freq = content_frequencies(corpus, lexicons);
  std::vector<SummarySentence> candidates;
  add_candidates(corpus, document, freq, lexicons, candidates);
  return pick(std::move(candidates), n);
}

std::vector<RankedTerm> corpus_concepts(const AnnotatedCorpus& corpus, std::size_t n,
                                        const Lexicons& lexicons) {
  require_positive(n, "number of concepts");
  std::map<std::string, std::size_t> counts;
  for (const auto& doc : corpus.documents)
    for (const auto& s : doc.sentences)
      for (const auto& e : extract_entities(s, corpus.context, lexicons))
        ++counts[detail::to_lower(e.text)];
  return rank(counts, n);
}

}  // namespace gtminer
