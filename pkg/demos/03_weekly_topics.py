"""Fit weekly topic models with collapsed Gibbs sampling and inspect the
per-topic top words, including recovery of planted weekly themes.

Run:  python demos/03_weekly_topics.py
"""

import tempfile
from pathlib import Path

import numpy as np

from tweetscope.ingest import ingest_corpus
from tweetscope.stemming import stem
from tweetscope.synth import generate_fixture
from tweetscope.topics import LdaConfig, fit_lda, top_words, weekly_topics

print("=== Two planted topics, recovered from scratch ===")
rng = np.random.default_rng(0)
health = ["vaccine", "doctor", "hospital", "symptoms", "testing",
          "recovery", "nurses", "patients"]
economy = ["market", "jobs", "stocks", "economy", "unemployment",
           "relief", "stimulus", "businesses"]
docs = []
for i in range(120):
    src = health if i % 2 == 0 else economy
    docs.append([src[j] for j in rng.integers(0, len(src), size=12)])

model = fit_lda(docs, LdaConfig(k=2, alpha=0.5, beta=0.01, iterations=300,
                                burn_in=0, seed=42))
for k in range(2):
    words = ", ".join(f"{w} ({p:.2f})" for w, p in top_words(model, k, 5))
    print(f"  topic {k}: {words}")

print("\n=== Weekly models over the synthetic corpus ===")
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "tweets.jsonl"
    truth = generate_fixture(path, seed=42)
    corpus = ingest_corpus(path)
    cfg = LdaConfig(k=6, iterations=400, burn_in=50, seed=42)
    weekly = weekly_topics(corpus, cfg, n_words=6)
    theme_weeks = {t["week"]: stem(t["signature"]) for t in
                   (truth.to_dict()["themes"])}
    for week in truth.weeks:
        print(f"  {week}" + ("  <- planted theme week" if week in theme_weeks
                             else ""))
        for k, topic in enumerate(weekly[week][:3]):
            words = [w for w, _ in topic]
            marker = " *" if week in theme_weeks and theme_weeks[week] in words \
                else ""
            print(f"    topic {k}: {' '.join(words)}{marker}")
    print("  (* = topic containing the planted signature word)")
