"""Track controversial phrases: contiguous and hashtag-style matching,
country breakdowns, and ranked co-occurring terms.

Run:  python demos/04_controversial_terms.py
"""

import tempfile
from pathlib import Path

from tweetscope.controversy import (
    cooccurrence, country_breakdown, load_terms, match_terms, scan_corpus,
)
from tweetscope.ingest import ingest_corpus, load_stopwords, tokenize
from tweetscope.synth import generate_fixture

terms = load_terms()
print(f"tracked phrases: {terms.phrases}")
print(f"hashtag variants: {sorted(terms.concatenated)}")

print("\n=== Matching ===")
for text in [
    "they keep calling it the chinese virus",
    "seriously? #WuhanVirus trending again",
    "virus chinese",                      # order matters: no match
    "kung flu and kung flu again",        # reported once
]:
    tokens = tokenize(text)
    print(f"  {text!r:<48} -> {match_terms(tokens, terms)}")

print("\n=== Corpus scan, breakdown, co-occurrence ===")
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "tweets.jsonl"
    generate_fixture(path, seed=42)
    corpus = ingest_corpus(path)
    hits = scan_corpus(corpus, terms)
    print(f"  {len(hits)} hits across {len(corpus.tweets)} tweets")

    breakdown = country_breakdown(hits)
    print("  country breakdown (fraction over attributable hits):")
    for country, entry in breakdown.items():
        frac = "" if entry.fraction is None else f" ({entry.fraction:.0%})"
        print(f"    {country:<8} {entry.count:>4}{frac}")

    stopwords = load_stopwords()
    for term in terms.phrases:
        table = cooccurrence(corpus, hits, term, stopwords, top_n=5,
                             terms=terms)
        pairs = ", ".join(f"{tok}:{n}" for tok, n in table.counts.items())
        print(f"  top words with {term!r} ({table.total_hits} tweets): {pairs}")
