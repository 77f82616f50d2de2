"""Per-tweet sentiment and emotion scoring over surface tokens."""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import EMOTIONS, EmotionLexicon, SentimentLexicon


@dataclass
class SentimentScore:
    sum: int = 0
    mean: float = 0.0
    positivity: int = 0
    negativity: int = 0
    matched: int = 0


@dataclass
class EmotionVector:
    counts: dict[str, int]
    normalized: dict[str, float]

    @classmethod
    def zero(cls) -> "EmotionVector":
        return cls(counts={e: 0 for e in EMOTIONS},
                   normalized={e: 0.0 for e in EMOTIONS})


def score_sentiment(tokens: list[str], lex: SentimentLexicon) -> SentimentScore:
    """Greedy left-to-right longest match: a two-word entry beats a one-word
    entry at the same position, and matched tokens are consumed."""
    entries = lex.entries
    total = 0
    pos = 0
    neg = 0
    matched = 0
    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]
        if i + 1 < n and tok in lex.bigram_heads:
            bigram = tok + " " + tokens[i + 1]
            score = entries.get(bigram)
            if score is not None:
                total += score
                if score > 0:
                    pos += score
                else:
                    neg -= score
                matched += 1
                i += 2
                continue
        score = entries.get(tok)
        if score is not None:
            total += score
            if score > 0:
                pos += score
            else:
                neg -= score
            matched += 1
        i += 1
    mean = total / matched if matched else 0.0
    return SentimentScore(sum=total, mean=mean, positivity=pos,
                          negativity=neg, matched=matched)


def score_emotions(tokens: list[str], lex: EmotionLexicon) -> EmotionVector:
    """Occurrence counts per emotion; one word may feed several emotions."""
    counts = {e: 0 for e in EMOTIONS}
    for tok in tokens:
        emotions = lex.entries.get(tok)
        if emotions:
            for e in emotions:
                counts[e] += 1
    total = sum(counts.values())
    if total:
        normalized = {e: counts[e] / total for e in EMOTIONS}
    else:
        normalized = {e: 0.0 for e in EMOTIONS}
    return EmotionVector(counts=counts, normalized=normalized)
