"""Score tweets with the bundled lexicons: integer-valence sentiment with
greedy bigram matching, and counts over the eight primary emotions.

Run:  python demos/02_sentiment_and_emotions.py
"""

import tempfile
from pathlib import Path

from tweetscope.affect import score_emotions, score_sentiment
from tweetscope.aggregate import build_snapshot, query, score_corpus
from tweetscope.ingest import ingest_corpus, tokenize
from tweetscope.lexicon import load_afinn, load_nrc
from tweetscope.synth import generate_fixture

afinn = load_afinn()
nrc = load_nrc()

print("=== Sentiment scoring (sum, mean, positivity, negativity) ===")
texts = [
    "What a great day, feeling happy and safe",
    "This is a terrible crisis, everything is awful",
    "It was no fun at all",          # bigram "no fun" beats unigram "fun"
    "the and of with",               # nothing matches
]
for text in texts:
    tokens = tokenize(text)
    s = score_sentiment(tokens, afinn)
    print(f"  {text!r}")
    print(f"    sum={s.sum:+d} mean={s.mean:+.2f} pos={s.positivity} "
          f"neg={s.negativity} matched={s.matched}")

print("\n=== Emotion scoring (eight primary emotions) ===")
for text in ["I feel abandoned and alone", "What a lovely surprise, love it"]:
    v = score_emotions(tokenize(text), nrc)
    nonzero = {e: c for e, c in v.counts.items() if c}
    print(f"  {text!r}\n    counts: {nonzero}")

print("\n=== Weekly aggregation over a synthetic corpus ===")
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "tweets.jsonl"
    truth = generate_fixture(path, seed=42)
    corpus = ingest_corpus(path)
    snapshot = build_snapshot(corpus, score_corpus(corpus, afinn, nrc))
    series = query(snapshot, "sentiment", "week",
                   truth.weeks[0], truth.weeks[-1])
    print(f"  {'week':<10} {'tweets':>6} {'mean':>7}  bar")
    for point in series:
        bar = "#" * int(abs(point["mean"]) * 10)
        sign = "-" if point["mean"] < 0 else "+"
        print(f"  {point['period']:<10} {point['count']:>6} "
              f"{point['mean']:>+7.2f}  {sign}{bar}")
    print(f"  (the generator plants a negative spike in {truth.negative_week})")
