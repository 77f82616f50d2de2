"""Tweet ingestion: JSONL loading, language filtering, tokenization, stemming.

Produces two token streams per tweet: surface tokens (lowercased, URLs and
mentions stripped) for lexicon matching, and stemmed stopword-free tokens
for topic modelling.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from pathlib import Path
from typing import Iterable, Iterator

from .errors import MalformedRecord
from .periods import week_key
from .resources import default_stopwords_path
from .stemming import stem

STRICTNESS_MODES = ("skip-malformed", "fail-fast")

_COUNTRY_RE = re.compile(r"^[A-Z]{2}$")

# word runs of letters/digits, glued by single intra-word hyphens/apostrophes
_TOKEN_RE = re.compile(r"[^\W_]+(?:['-][^\W_]+)*")

_URL_PREFIXES = ("http://", "https://", "www.")


@dataclass
class RawTweet:
    id: str
    created_at: datetime  # tz-aware UTC
    text: str
    lang: str | None = None
    country: str | None = None
    user_id: str = ""
    is_retweet: bool = False


@dataclass
class ProcessedTweet:
    id: str
    day: date
    week: str
    country: str | None
    surface_tokens: list[str]
    stemmed_tokens: list[str]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "day": self.day.isoformat(),
            "week": self.week,
            "country": self.country,
            "surface_tokens": self.surface_tokens,
            "stemmed_tokens": self.stemmed_tokens,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "ProcessedTweet":
        return cls(
            id=obj["id"],
            day=date.fromisoformat(obj["day"]),
            week=obj["week"],
            country=obj.get("country"),
            surface_tokens=list(obj["surface_tokens"]),
            stemmed_tokens=list(obj["stemmed_tokens"]),
        )


@dataclass
class IngestCounts:
    loaded: int = 0
    skipped: int = 0
    filtered: int = 0

    @property
    def kept(self) -> int:
        return self.loaded - self.skipped - self.filtered


@dataclass
class Corpus:
    tweets: list[ProcessedTweet] = field(default_factory=list)
    counts: IngestCounts = field(default_factory=IngestCounts)

    def weeks(self) -> list[str]:
        return sorted({t.week for t in self.tweets})

    def by_week(self) -> dict[str, list[ProcessedTweet]]:
        out: dict[str, list[ProcessedTweet]] = {}
        for t in self.tweets:
            out.setdefault(t.week, []).append(t)
        return out


@dataclass(frozen=True)
class LanguagePolicy:
    """Keep English tweets; fall back to a stopword-ratio heuristic."""

    stopwords: frozenset[str]
    min_stopword_ratio: float = 0.10


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """One lowercase word per line; blank lines ignored."""
    p = Path(path) if path is not None else default_stopwords_path()
    words = set()
    with open(p, encoding="utf-8") as f:
        for line in f:
            w = line.strip()
            if w:
                words.add(w)
    return frozenset(words)


def _parse_timestamp(value) -> datetime:
    if not isinstance(value, str) or not value:
        raise ValueError("created_at must be a timestamp string")
    s = value[:-1] + "+00:00" if value.endswith(("Z", "z")) else value
    dt = datetime.fromisoformat(s)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def tweet_from_obj(obj) -> RawTweet:
    """Build a RawTweet from a decoded JSON object; raise ValueError if invalid."""
    if not isinstance(obj, dict):
        raise ValueError("record is not a JSON object")
    tweet_id = obj.get("id")
    if isinstance(tweet_id, int):
        tweet_id = str(tweet_id)
    if not isinstance(tweet_id, str) or not tweet_id:
        raise ValueError("id missing or empty")
    text = obj.get("text")
    if not isinstance(text, str):
        raise ValueError("text missing")
    created_at = _parse_timestamp(obj.get("created_at"))
    lang = obj.get("lang")
    if lang is not None:
        if not isinstance(lang, str) or not lang:
            raise ValueError("lang must be a non-empty string when present")
        lang = lang.lower()
    country = obj.get("country")
    if country is not None:
        if not isinstance(country, str) or not _COUNTRY_RE.match(country):
            raise ValueError(f"country must be two uppercase letters, got {country!r}")
    user_id = obj.get("user_id", "")
    if isinstance(user_id, int):
        user_id = str(user_id)
    if not isinstance(user_id, str):
        raise ValueError("user_id must be a string")
    is_retweet = obj.get("is_retweet", False)
    if not isinstance(is_retweet, bool):
        raise ValueError("is_retweet must be a boolean")
    return RawTweet(
        id=tweet_id,
        created_at=created_at,
        text=text,
        lang=lang,
        country=country,
        user_id=user_id,
        is_retweet=is_retweet,
    )


def load_jsonl(
    path: str | Path,
    strictness: str = "skip-malformed",
    counts: IngestCounts | None = None,
) -> Iterator[RawTweet]:
    """Yield one RawTweet per well-formed JSONL line.

    Malformed lines are counted in ``counts.skipped`` and dropped, or abort
    with MalformedRecord under fail-fast. Blank lines are ignored entirely.
    """
    if strictness not in STRICTNESS_MODES:
        raise ValueError(f"strictness must be one of {STRICTNESS_MODES}")
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            if counts is not None:
                counts.loaded += 1
            try:
                obj = json.loads(line)
                tweet = tweet_from_obj(obj)
            except (json.JSONDecodeError, ValueError) as exc:
                if strictness == "fail-fast":
                    raise MalformedRecord(str(exc), line_no=line_no) from exc
                if counts is not None:
                    counts.skipped += 1
                continue
            yield tweet


def filter_language(tweet: RawTweet, policy: LanguagePolicy) -> bool:
    """True = keep. Tagged tweets must be "en"; untagged ones pass when the
    stopword ratio over whitespace-split lowercase words clears the policy bar."""
    if tweet.lang is not None:
        return tweet.lang == "en"
    words = tweet.text.lower().split()
    if not words:
        return False
    hits = sum(1 for w in words if w in policy.stopwords)
    return hits / len(words) >= policy.min_stopword_ratio


def tokenize(text: str) -> list[str]:
    """Lowercase and split into tokens.

    URL tokens (http://, https://, www. prefixes) and @mentions are removed
    whole; a leading '#' is stripped; everything else is split on characters
    that are not letters, digits, or intra-word hyphens/apostrophes.
    """
    tokens: list[str] = []
    for chunk in text.lower().replace("’", "'").split():
        if chunk.startswith(_URL_PREFIXES):
            continue
        if chunk.startswith("@"):
            continue
        if chunk.startswith("#"):
            chunk = chunk.lstrip("#")
        tokens.extend(_TOKEN_RE.findall(chunk))
    return tokens


def preprocess(raw: RawTweet, stopwords: frozenset[str]) -> ProcessedTweet:
    surface = tokenize(raw.text)
    stemmed = [stem(t) for t in surface if t not in stopwords]
    day = raw.created_at.astimezone(timezone.utc).date()
    return ProcessedTweet(
        id=raw.id,
        day=day,
        week=week_key(day),
        country=raw.country,
        surface_tokens=surface,
        stemmed_tokens=stemmed,
    )


def ingest_corpus(
    path: str | Path,
    stopwords: frozenset[str] | None = None,
    strictness: str = "skip-malformed",
) -> Corpus:
    """Full ingestion run: load, language-filter, preprocess, count.

    Tweet ids must be unique within the corpus; a repeated id is treated
    like a malformed record (skipped, or fatal under fail-fast)."""
    if stopwords is None:
        stopwords = load_stopwords()
    policy = LanguagePolicy(stopwords=stopwords)
    counts = IngestCounts()
    tweets: list[ProcessedTweet] = []
    seen_ids: set[str] = set()
    for raw in load_jsonl(path, strictness=strictness, counts=counts):
        if raw.id in seen_ids:
            if strictness == "fail-fast":
                raise MalformedRecord(f"duplicate tweet id: {raw.id!r}")
            counts.skipped += 1
            continue
        seen_ids.add(raw.id)
        if not filter_language(raw, policy):
            counts.filtered += 1
            continue
        tweets.append(preprocess(raw, stopwords))
    return Corpus(tweets=tweets, counts=counts)
