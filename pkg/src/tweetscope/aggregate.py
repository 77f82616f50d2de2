"""Time-and-country aggregation of per-tweet measurements, plus snapshot
persistence with an integrity checksum.

Buckets exist at day and week granularity, for every observed country and
for the all-countries rollup (country=None). Bucket sentiment is the
unweighted mean of per-tweet mean scores, so long tweets do not dominate.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .affect import EmotionVector, SentimentScore
from .errors import CorruptSnapshot, InvalidRange, ScoreCorpusMismatch
from .ingest import Corpus
from .lexicon import EMOTIONS
from .periods import GRANULARITIES, parse_period, period_range

SCHEMA_VERSION = 1

_ALL = "_all"  # JSON stand-in for the all-countries rollup


@dataclass(frozen=True)
class BucketKey:
    granularity: str
    period: str
    country: str | None = None


@dataclass
class SentimentBucket:
    mean: float
    positivity: float
    negativity: float
    count: int


@dataclass
class TweetAffect:
    sentiment: SentimentScore
    emotions: EmotionVector


@dataclass
class AggregateSnapshot:
    volume: dict[BucketKey, int] = field(default_factory=dict)
    sentiment: dict[BucketKey, SentimentBucket] = field(default_factory=dict)
    emotions: dict[BucketKey, dict[str, float]] = field(default_factory=dict)
    built_at: str = ""
    corpus_id: str = ""

    def periods(self, granularity: str) -> list[str]:
        return sorted({
            k.period for k in self.volume
            if k.granularity == granularity and k.country is None
        })

    def countries(self) -> list[str]:
        return sorted({k.country for k in self.volume if k.country is not None})


def corpus_content_hash(corpus: Corpus) -> str:
    """Deterministic content hash over the processed tweets."""
    h = hashlib.sha256()
    for t in sorted(corpus.tweets, key=lambda t: t.id):
        h.update(json.dumps(t.to_dict(), sort_keys=True,
                            separators=(",", ":")).encode("utf-8"))
        h.update(b"\n")
    return h.hexdigest()


def build_snapshot(corpus: Corpus, scores: dict[str, TweetAffect]) -> AggregateSnapshot:
    corpus_ids = {t.id for t in corpus.tweets}
    if set(scores) != corpus_ids:
        missing = corpus_ids - set(scores)
        extra = set(scores) - corpus_ids
        raise ScoreCorpusMismatch(
            f"scores do not cover the corpus: {len(missing)} missing, {len(extra)} extra"
        )

    volume: dict[BucketKey, int] = {}
    sent_sum: dict[BucketKey, list[float]] = {}
    emo_sum: dict[BucketKey, dict[str, float]] = {}

    for tweet in corpus.tweets:
        affect = scores[tweet.id]
        countries = [None] if tweet.country is None else [None, tweet.country]
        for granularity, period in (("day", tweet.day.isoformat()),
                                    ("week", tweet.week)):
            for country in countries:
                key = BucketKey(granularity, period, country)
                volume[key] = volume.get(key, 0) + 1
                acc = sent_sum.setdefault(key, [0.0, 0.0, 0.0])
                acc[0] += affect.sentiment.mean
                acc[1] += affect.sentiment.positivity
                acc[2] += affect.sentiment.negativity
                eacc = emo_sum.setdefault(key, {e: 0.0 for e in EMOTIONS})
                for e in EMOTIONS:
                    eacc[e] += affect.emotions.normalized[e]

    sentiment = {
        key: SentimentBucket(
            mean=acc[0] / volume[key],
            positivity=acc[1] / volume[key],
            negativity=acc[2] / volume[key],
            count=volume[key],
        )
        for key, acc in sent_sum.items()
    }
    emotions = {
        key: {e: eacc[e] / volume[key] for e in EMOTIONS}
        for key, eacc in emo_sum.items()
    }
    return AggregateSnapshot(
        volume=volume,
        sentiment=sentiment,
        emotions=emotions,
        built_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        corpus_id=corpus_content_hash(corpus),
    )


def query(
    snapshot: AggregateSnapshot,
    metric: str,
    granularity: str,
    from_key: str,
    to_key: str,
    country: str | None = None,
) -> list[dict]:
    """Gap-filled ascending series over [from_key, to_key].

    Missing buckets get count 0 and null measurement values. Raises
    ValueError for malformed parameters and InvalidRange for from > to.
    """
    if metric not in ("volume", "sentiment", "emotions"):
        raise ValueError(f"unknown metric: {metric!r}")
    if granularity not in GRANULARITIES:
        raise ValueError(f"unknown granularity: {granularity!r}")
    if parse_period(from_key, granularity) > parse_period(to_key, granularity):
        raise InvalidRange(f"{from_key} > {to_key}")

    out = []
    for period in period_range(from_key, to_key, granularity):
        key = BucketKey(granularity, period, country)
        if metric == "volume":
            out.append({"period": period, "count": snapshot.volume.get(key, 0)})
        elif metric == "sentiment":
            bucket = snapshot.sentiment.get(key)
            if bucket is None:
                out.append({"period": period, "count": 0, "mean": None,
                            "positivity": None, "negativity": None})
            else:
                out.append({"period": period, "count": bucket.count,
                            "mean": bucket.mean, "positivity": bucket.positivity,
                            "negativity": bucket.negativity})
        else:
            emo = snapshot.emotions.get(key)
            count = snapshot.volume.get(key, 0)
            if emo is None:
                out.append({"period": period, "count": 0,
                            **{e: None for e in EMOTIONS}})
            else:
                out.append({"period": period, "count": count,
                            **{e: emo[e] for e in EMOTIONS}})
    return out


def _encode_buckets(buckets: dict, encode_value) -> dict:
    out: dict = {g: {} for g in GRANULARITIES}
    for key, value in buckets.items():
        country = _ALL if key.country is None else key.country
        out[key.granularity].setdefault(key.period, {})[country] = encode_value(value)
    return out


def _decode_buckets(obj: dict, decode_value) -> dict:
    out = {}
    for granularity, periods in obj.items():
        for period, countries in periods.items():
            for country, value in countries.items():
                key = BucketKey(granularity, period,
                                None if country == _ALL else country)
                out[key] = decode_value(value)
    return out


def _content_dict(snapshot: AggregateSnapshot) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "corpus_id": snapshot.corpus_id,
        "volume": _encode_buckets(snapshot.volume, lambda v: v),
        "sentiment": _encode_buckets(
            snapshot.sentiment,
            lambda b: {"mean": b.mean, "positivity": b.positivity,
                       "negativity": b.negativity, "count": b.count},
        ),
        "emotions": _encode_buckets(
            snapshot.emotions,
            lambda emo: {e: emo[e] for e in EMOTIONS},
        ),
    }


def _checksum(content: dict) -> str:
    canonical = json.dumps(content, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def persist(snapshot: AggregateSnapshot, path: str | Path) -> Path:
    """Write the snapshot as one JSON document with a content checksum.

    The checksum covers everything except built_at, so rebuilds from
    identical inputs are recognizably identical."""
    content = _content_dict(snapshot)
    doc = dict(content)
    doc["built_at"] = snapshot.built_at
    doc["checksum"] = _checksum(content)
    p = Path(path)
    p.write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n", encoding="utf-8")
    return p


def load_snapshot(path: str | Path) -> AggregateSnapshot:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        if isinstance(exc, FileNotFoundError):
            raise
        raise CorruptSnapshot(f"unreadable snapshot: {exc}") from exc
    try:
        stored_checksum = doc["checksum"]
        built_at = doc["built_at"]
        content = {k: v for k, v in doc.items() if k not in ("checksum", "built_at")}
        if content["schema_version"] != SCHEMA_VERSION:
            raise CorruptSnapshot(
                f"unsupported schema_version: {content['schema_version']}")
        if _checksum(content) != stored_checksum:
            raise CorruptSnapshot("checksum mismatch")
        volume = _decode_buckets(content["volume"], lambda v: int(v))
        sentiment = _decode_buckets(
            content["sentiment"],
            lambda b: SentimentBucket(mean=b["mean"], positivity=b["positivity"],
                                      negativity=b["negativity"], count=b["count"]),
        )
        emotions = _decode_buckets(
            content["emotions"],
            lambda emo: {e: emo[e] for e in EMOTIONS},
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise CorruptSnapshot(f"malformed snapshot: {exc!r}") from exc
    return AggregateSnapshot(
        volume=volume,
        sentiment=sentiment,
        emotions=emotions,
        built_at=built_at,
        corpus_id=content["corpus_id"],
    )


def score_corpus(corpus: Corpus, sentiment_lexicon, emotion_lexicon) -> dict[str, TweetAffect]:
    """Convenience: affect-score every tweet of a corpus."""
    from .affect import score_emotions, score_sentiment

    return {
        t.id: TweetAffect(
            sentiment=score_sentiment(t.surface_tokens, sentiment_lexicon),
            emotions=score_emotions(t.surface_tokens, emotion_lexicon),
        )
        for t in corpus.tweets
    }
