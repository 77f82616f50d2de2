"""Walk through tweet ingestion: loading, language filtering, tokenizing,
stemming, and the dual token streams that feed the downstream analytics.

Run:  python demos/01_preprocess_tweets.py
"""

import json
import tempfile
from pathlib import Path

from tweetscope.ingest import (
    LanguagePolicy, ingest_corpus, load_stopwords, tokenize, tweet_from_obj,
    filter_language,
)
from tweetscope.stemming import stem

stopwords = load_stopwords()

print("=== Tokenization ===")
samples = [
    "Stay SAFE everyone! https://t.co/abc123 @WHO #StayHome",
    "COVID-19 won't stop us. #ChinaMustExplain",
    "Numbers are up 20% this week... terrible news",
]
for text in samples:
    print(f"  {text!r}")
    print(f"    -> {tokenize(text)}")

print("\n=== Stemming (topics see stemmed, stopword-free tokens) ===")
for word in ["spreading", "quarantine", "masks", "cities", "covid-19", "dying"]:
    print(f"  {word} -> {stem(word)}")

print("\n=== Language filtering ===")
policy = LanguagePolicy(stopwords)
cases = [
    {"id": "1", "created_at": "2020-03-12T08:00:00Z", "text": "ok", "lang": "en"},
    {"id": "2", "created_at": "2020-03-12T08:00:00Z", "text": "salut", "lang": "fr"},
    {"id": "3", "created_at": "2020-03-12T08:00:00Z",
     "text": "the virus is spreading in the city"},
    {"id": "4", "created_at": "2020-03-12T08:00:00Z",
     "text": "covid covid covid covid"},
]
for obj in cases:
    tweet = tweet_from_obj(obj)
    verdict = "keep" if filter_language(tweet, policy) else "drop"
    print(f"  lang={tweet.lang!r:<6} {tweet.text!r:<42} -> {verdict}")

print("\n=== Full ingestion run with counts ===")
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "mini.jsonl"
    rows = [
        {"id": "a", "created_at": "2020-03-12T10:00:00Z",
         "text": "The spreading virus is scary", "lang": "en", "country": "US"},
        {"id": "b", "created_at": "2020-03-09T09:30:00Z",
         "text": "Bonjour tout le monde", "lang": "fr"},
        {"id": "c", "created_at": "2020-03-14T23:59:59Z",
         "text": "We are staying at home this week", "country": "GB"},
    ]
    path.write_text("\n".join(json.dumps(r) for r in rows) +
                    '\n{"broken json\n')
    corpus = ingest_corpus(path)
    c = corpus.counts
    print(f"  loaded={c.loaded} kept={c.kept} skipped={c.skipped} "
          f"filtered={c.filtered}")
    for t in corpus.tweets:
        print(f"  {t.id}: day={t.day} week={t.week} country={t.country}")
        print(f"     surface: {t.surface_tokens}")
        print(f"     stemmed: {t.stemmed_tokens}")
