#!/usr/bin/env python3
"""Regenerate the derived lexicon files under core/data/.

open_class.tsv        frequent lowercase words from the Brill tagger lexicon
                      (as redistributed with TextBlob, MIT) mapped to coarse tags
sentiment_lexicon.tsv the most frequent single-word entries of the VADER
                      lexicon (MIT)
stopwords.txt         a standard English stopword list closed over the
                      determiners, prepositions and pronouns of closed_class.tsv

Usage:
  pip download --no-deps textblob vaderSentiment && pip install wordfreq
  python3 scripts/build_lexicons.py BRILL_LEXICON VADER_LEXICON
"""
import pathlib
import re
import sys

import wordfreq

DATA = pathlib.Path(__file__).resolve().parent.parent / "core" / "data"

OPEN_CLASS_VOCAB = 20000
SENTIMENT_ENTRIES = 2000

PENN_TO_COARSE = {
    "NN": "NOUN", "NNS": "NOUN",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB", "VBN": "VERB", "VBP": "VERB", "VBZ": "VERB",
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV",
}

BASE_STOPWORDS = """
i me my myself we our ours ourselves you your yours yourself yourselves he him
his himself she her hers herself it its itself they them their theirs
themselves what which who whom this that these those am is are was were be
been being have has had having do does did doing a an the and but if or
because as until while of at by for with about against between into through
during before after above below to from up down in out on off over under
again further then once here there when where why how all any both each few
more most other some such no nor not only own same so than too very s t can
will just don should now d ll m o re ve y ain aren couldn didn doesn hadn
hasn haven isn ma mightn mustn needn shan shouldn wasn weren won wouldn
n't 's 'm 're 've 'll 'd
""".split()

WORD = re.compile(r"^[a-z][a-z'-]*$")


def read_closed_class():
    entries = {}
    for line in (DATA / "closed_class.tsv").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        entries[word] = tag
    return entries


def build_open_class(brill_path, closed):
    brill = {}
    for line in pathlib.Path(brill_path).read_text(encoding="utf-8").splitlines():
        if line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) != 2:
            continue
        word, tag = parts
        if word != word.lower() or not WORD.match(word):
            continue
        if tag in PENN_TO_COARSE:
            brill[word] = PENN_TO_COARSE[tag]
    frequent = wordfreq.top_n_list("en", OPEN_CLASS_VOCAB)
    rows = sorted(w for w in set(frequent) if w in brill and w not in closed)
    with open(DATA / "open_class.tsv", "w") as out:
        out.write("# Frequent English open-class words and their most frequent coarse tag.\n")
        out.write("# Derived from the Brill tagger lexicon; see scripts/build_lexicons.py.\n")
        for w in rows:
            out.write(f"{w}\t{brill[w]}\n")
    return len(rows)


def build_sentiment(vader_path):
    entries = {}
    for line in pathlib.Path(vader_path).read_text(encoding="utf-8").splitlines():
        parts = line.split("\t")
        if len(parts) < 2:
            continue
        token = parts[0]
        if not re.match(r"^[a-z][a-z-]*$", token):
            continue
        entries[token] = float(parts[1])
    ranked = sorted(entries, key=lambda w: (-wordfreq.word_frequency(w, "en"), w))
    chosen = sorted(ranked[:SENTIMENT_ENTRIES])
    with open(DATA / "sentiment_lexicon.tsv", "w") as out:
        out.write("# Sentiment valences in [-4, 4] for frequent English words.\n")
        out.write("# Subset of the VADER lexicon (MIT); see scripts/build_lexicons.py.\n")
        for w in chosen:
            out.write(f"{w}\t{entries[w]:g}\n")
    return len(chosen)


def build_stopwords(closed):
    words = set(BASE_STOPWORDS)
    words.update(w for w, t in closed.items() if t in ("DET", "ADP", "PRON", "AUX", "CONJ", "PART"))
    with open(DATA / "stopwords.txt", "w") as out:
        out.write("# English stopwords, one per line.\n")
        for w in sorted(words):
            out.write(w + "\n")
    return len(words)


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    closed = read_closed_class()
    print("open_class", build_open_class(sys.argv[1], closed))
    print("sentiment", build_sentiment(sys.argv[2]))
    print("stopwords", build_stopwords(closed))


if __name__ == "__main__":
    main()
