#include "gtminer/nlp.hpp"
#include "text_util.hpp"

namespace gtminer {

bool is_stopword(std::string_view lemma, const Lexicons& lexicons) {
  return lexicons.is_stopword(lemma);
}

void collect_capitalization(std::string_view text, TaggingContext& context,
                            const Lexicons& lexicons) {
  for (const auto& sentence : split_sentences(text, lexicons)) {
    const auto tokens = tokenize(text.substr(sentence.span.begin, sentence.span.size()),
                                 sentence.span.begin, lexicons);
    const std::size_t first = first_word_index(tokens);
    for (std::size_t i = first + 1; i < tokens.size(); ++i) {
      const auto& s = tokens[i].surface;
      if (!detail::is_title_case(s)) continue;
      auto lower = detail::to_lower(s);
      if (!lexicons.closed_class(lower)) context.capitalized_mid_sentence.insert(std::move(lower));
    }
  }
}

std::vector<Entity> extract_entities(const Sentence& sentence, const TaggingContext& context,
                                     const Lexicons& lexicons) {
  const auto& tokens = sentence.tokens;
  const std::size_t first = first_word_index(tokens);
  std::vector<Entity> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].pos != Pos::Propn) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    std::size_t end = i;
    while (end < tokens.size() && tokens[end].pos == Pos::Propn) ++end;
    if (begin == first) {
      const auto lower = detail::to_lower(tokens[begin].surface);
      const bool named = detail::is_honorific(lower) || lexicons.in_gazetteer(lower) ||
                         context.capitalized_mid_sentence.contains(lower);
      if (!named) ++begin;
    }
    if (begin < end) {
      Entity e;
      for (std::size_t k = begin; k < end; ++k) {
        if (k > begin) e.text += ' ';
        e.text += tokens[k].surface;
      }
      e.span = {tokens[begin].span.begin, tokens[end - 1].span.end};
      e.first_token = begin;
      e.last_token = end;
      out.push_back(std::move(e));
    }
    i = end;
  }
  return out;
}

std::vector<Sentence> annotate_text(std::string_view text, const TaggingContext& context,
                                    const Lexicons& lexicons) {
  auto sentences = split_sentences(text, lexicons);
  for (auto& s : sentences) {
    s.tokens = tokenize(text.substr(s.span.begin, s.span.size()), s.span.begin, lexicons);
    pos_tag(s.tokens, context, lexicons);
    for (auto& t : s.tokens) t.lemma = lemmatize(t.surface, t.pos, lexicons);
  }
  return sentences;
}

std::size_t AnnotatedCorpus::sentence_count() const noexcept {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.sentences.size();
  return n;
}

std::size_t AnnotatedCorpus::token_count() const noexcept {
  std::size_t n = 0;
  for (const auto& d : documents)
    for (const auto& s : d.sentences) n += s.tokens.size();
  return n;
}

AnnotatedCorpus annotate(const Corpus& corpus, const Lexicons& lexicons) {
  AnnotatedCorpus out;
  for (const auto& doc : corpus.documents)
    collect_capitalization(doc.text, out.context, lexicons);
  out.documents.reserve(corpus.documents.size());
  for (const auto& doc : corpus.documents)
    out.documents.push_back({doc.title, doc.text, annotate_text(doc.text, out.context, lexicons)});
  return out;
}

}  // namespace gtminer
