"""Controversial-term tracking: phrase matching, country breakdowns, and
co-occurrence tables over the matching tweets."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date
from pathlib import Path

from .errors import UnknownTerm
from .ingest import Corpus, ProcessedTweet
from .resources import default_terms_path


@dataclass
class TermList:
    phrases: list[str]
    # joined single-token form of each multiword phrase -> canonical phrase
    concatenated: dict[str, str] = field(init=False)

    def __post_init__(self):
        if not self.phrases:
            raise ValueError("term list is empty")
        for p in self.phrases:
            if p != p.lower().strip() or not p:
                raise ValueError(f"phrases must be lowercase and trimmed: {p!r}")
            if not 1 <= len(p.split()) <= 3:
                raise ValueError(f"phrases must be 1-3 words: {p!r}")
        self.concatenated = {
            "".join(p.split()): p for p in self.phrases if " " in p
        }


@dataclass
class ControversyHit:
    tweet_id: str
    term: str
    day: date
    week: str
    country: str | None


@dataclass
class CooccurrenceTable:
    term: str
    counts: dict[str, int]  # rank-ordered: count desc, token asc
    total_hits: int


@dataclass
class BreakdownEntry:
    count: int
    fraction: float | None  # None for the unknown-country bucket


def load_terms(path: str | Path | None = None) -> TermList:
    """One lowercase phrase per line; '#' lines are comments."""
    p = Path(path) if path is not None else default_terms_path()
    phrases = []
    with open(p, encoding="utf-8") as f:
        for line in f:
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            phrases.append(s)
    return TermList(phrases=phrases)


def match_terms(tokens: list[str], terms: TermList) -> list[str]:
    """Canonical phrases present in the token list, each reported once.

    A phrase matches as a contiguous token subsequence, or as its joined
    single-token variant (hashtag form). Result order follows the term list.
    """
    found = set()
    token_set = set(tokens)
    for joined, canonical in terms.concatenated.items():
        if joined in token_set:
            found.add(canonical)
    for phrase in terms.phrases:
        if phrase in found:
            continue
        words = phrase.split()
        if len(words) == 1:
            if words[0] in token_set:
                found.add(phrase)
            continue
        n = len(words)
        for i in range(len(tokens) - n + 1):
            if tokens[i:i + n] == words:
                found.add(phrase)
                break
    return [p for p in terms.phrases if p in found]


def scan_corpus(corpus: Corpus, terms: TermList) -> list[ControversyHit]:
    hits = []
    for tweet in corpus.tweets:
        for phrase in match_terms(tweet.surface_tokens, terms):
            hits.append(ControversyHit(
                tweet_id=tweet.id,
                term=phrase,
                day=tweet.day,
                week=tweet.week,
                country=tweet.country,
            ))
    return hits


def country_breakdown(hits: list[ControversyHit]) -> dict[str, BreakdownEntry]:
    """Counts and fractions per country; fractions are over hits whose
    country is known, with unknown-country hits under an "unknown" key."""
    counts: dict[str, int] = {}
    unknown = 0
    for h in hits:
        if h.country is None:
            unknown += 1
        else:
            counts[h.country] = counts.get(h.country, 0) + 1
    known_total = sum(counts.values())
    out = {
        c: BreakdownEntry(count=n, fraction=n / known_total)
        for c, n in sorted(counts.items())
    }
    if unknown:
        out["unknown"] = BreakdownEntry(count=unknown, fraction=None)
    return out


def cooccurrence(
    corpus: Corpus,
    hits: list[ControversyHit],
    term: str,
    stopwords: frozenset[str],
    top_n: int | None = None,
    terms: TermList | None = None,
) -> CooccurrenceTable:
    """Tokens co-occurring with ``term`` across its hit tweets.

    counts[w] = number of hit tweets containing w, excluding stopwords and
    the phrase's own words (joined variant included). top_n=None keeps all.
    """
    if terms is not None and term not in terms.phrases:
        raise UnknownTerm(f"term not in list: {term!r}")
    phrase_words = set(term.split())
    phrase_words.add("".join(term.split()))
    by_id = {t.id: t for t in corpus.tweets}
    hit_ids = {h.tweet_id for h in hits if h.term == term}
    counts: dict[str, int] = {}
    for tweet_id in hit_ids:
        tweet = by_id.get(tweet_id)
        if tweet is None:
            continue
        for tok in set(tweet.surface_tokens):
            if tok in stopwords or tok in phrase_words:
                continue
            counts[tok] = counts.get(tok, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if top_n is not None:
        ranked = ranked[:top_n]
    return CooccurrenceTable(
        term=term,
        counts=dict(ranked),
        total_hits=len(hit_ids),
    )
