"""On-disk artifact formats shared by the pipeline stages and the server.

A data directory holds fixed-name artifacts so later stages and the server
need no registry:

    corpus/<week>.jsonl   processed tweets, one JSON object per line
    corpus_meta.json      ingestion counts, week list, corpus content hash
    snapshot.json         aggregate snapshot (see aggregate.persist)
    topics.json           weekly topic export
    controversy.json      term hits, breakdowns, co-occurrence counts
    manifest.json         per-stage run records (timestamps live here only)

Every artifact except the manifest is byte-identical across reruns with
identical inputs and seeds.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from datetime import datetime, timezone
from pathlib import Path

from .aggregate import corpus_content_hash
from .controversy import BreakdownEntry, CooccurrenceTable, TermList
from .errors import TweetscopeError
from .ingest import Corpus, IngestCounts, ProcessedTweet
from .topics import LdaConfig

SCHEMA_VERSION = 1

CORPUS_DIR = "corpus"
CORPUS_META_FILE = "corpus_meta.json"
SNAPSHOT_FILE = "snapshot.json"
TOPICS_FILE = "topics.json"
CONTROVERSY_FILE = "controversy.json"
MANIFEST_FILE = "manifest.json"


def _dump(obj, path: Path) -> Path:
    path.write_text(json.dumps(obj, sort_keys=True, indent=1) + "\n",
                    encoding="utf-8")
    return path


def _load(path: Path) -> dict:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise TweetscopeError(f"malformed artifact {path}: {exc}") from exc


def write_corpus(corpus: Corpus, data_dir: str | Path) -> dict[str, Path]:
    """Write the processed corpus partitioned by ISO week, plus its meta file."""
    root = Path(data_dir)
    corpus_dir = root / CORPUS_DIR
    corpus_dir.mkdir(parents=True, exist_ok=True)
    for stale in corpus_dir.glob("*.jsonl"):
        stale.unlink()

    by_week = corpus.by_week()
    for week, tweets in sorted(by_week.items()):
        with open(corpus_dir / f"{week}.jsonl", "w", encoding="utf-8") as f:
            for t in sorted(tweets, key=lambda t: (t.day, t.id)):
                f.write(json.dumps(t.to_dict(), sort_keys=True,
                                   separators=(",", ":")) + "\n")

    meta = {
        "schema_version": SCHEMA_VERSION,
        "corpus_id": corpus_content_hash(corpus),
        "counts": asdict(corpus.counts),
        "n_tweets": len(corpus.tweets),
        "weeks": sorted(by_week),
    }
    meta_path = _dump(meta, root / CORPUS_META_FILE)
    return {"corpus_dir": corpus_dir, "corpus_meta": meta_path}


def read_corpus(data_dir: str | Path) -> Corpus:
    root = Path(data_dir)
    meta_path = root / CORPUS_META_FILE
    if not meta_path.exists():
        raise FileNotFoundError(
            f"no processed corpus found in {root} (run ingest first)")
    meta = _load(meta_path)
    tweets: list[ProcessedTweet] = []
    for week in meta["weeks"]:
        week_file = root / CORPUS_DIR / f"{week}.jsonl"
        if not week_file.exists():
            raise TweetscopeError(f"corpus partition missing: {week_file}")
        with open(week_file, encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    tweets.append(ProcessedTweet.from_dict(json.loads(line)))
    counts = IngestCounts(**meta["counts"])
    corpus = Corpus(tweets=tweets, counts=counts)
    if corpus_content_hash(corpus) != meta["corpus_id"]:
        raise TweetscopeError("corpus content does not match corpus_meta.json")
    return corpus


def read_corpus_meta(data_dir: str | Path) -> dict:
    return _load(Path(data_dir) / CORPUS_META_FILE)


def lda_config_dict(cfg: LdaConfig) -> dict:
    return {"k": cfg.k, "alpha": cfg.alpha, "beta": cfg.beta,
            "iterations": cfg.iterations, "burn_in": cfg.burn_in,
            "seed": cfg.seed}


def write_topics_export(
    models: dict,
    cfg: LdaConfig,
    corpus_id: str,
    all_weeks: list[str],
    data_dir: str | Path,
    n_words_stored: int,
    min_df: int,
    max_df_ratio: float,
    include_matrices: bool = False,
) -> Path:
    """Per-week vocabulary and top-word lists; theta/phi only on request."""
    from .topics import top_words

    weeks = {}
    for week, model in models.items():
        entry = {
            "vocabulary": list(model.vocab.terms),
            "topics": [
                {"topic": k,
                 "words": [[term, prob]
                           for term, prob in top_words(model, k, n_words_stored)]}
                for k in range(cfg.k)
            ],
        }
        if include_matrices:
            entry["theta"] = model.theta.tolist()
            entry["phi"] = model.phi.tolist()
        weeks[week] = entry
    doc = {
        "schema_version": SCHEMA_VERSION,
        "corpus_id": corpus_id,
        "config": lda_config_dict(cfg),
        "vocab_filter": {"min_df": min_df, "max_df_ratio": max_df_ratio},
        "n_words_stored": n_words_stored,
        "includes_matrices": include_matrices,
        "weeks": weeks,
        "skipped_weeks": sorted(set(all_weeks) - set(weeks)),
    }
    return _dump(doc, Path(data_dir) / TOPICS_FILE)


def read_topics_export(data_dir: str | Path) -> dict:
    path = Path(data_dir) / TOPICS_FILE
    if not path.exists():
        raise FileNotFoundError(f"no topic export found at {path} (run topics first)")
    return _load(path)


def write_controversy_export(
    terms: TermList,
    totals: dict[str, int],
    breakdowns: dict[str, dict[str, BreakdownEntry]],
    tables: dict[str, CooccurrenceTable],
    corpus_id: str,
    data_dir: str | Path,
) -> Path:
    results = {}
    for term in terms.phrases:
        breakdown = breakdowns[term]
        unknown = breakdown.get("unknown")
        results[term] = {
            "total_hits": totals[term],
            "breakdown": {
                "countries": {
                    c: {"count": e.count, "fraction": e.fraction}
                    for c, e in breakdown.items() if c != "unknown"
                },
                "unknown": unknown.count if unknown else 0,
            },
            # full co-occurrence map, rank-ordered (count desc, token asc)
            "cooccurrence": [[tok, n] for tok, n in tables[term].counts.items()],
        }
    doc = {
        "schema_version": SCHEMA_VERSION,
        "corpus_id": corpus_id,
        "terms": list(terms.phrases),
        "results": results,
    }
    return _dump(doc, Path(data_dir) / CONTROVERSY_FILE)


def read_controversy_export(data_dir: str | Path) -> dict:
    path = Path(data_dir) / CONTROVERSY_FILE
    if not path.exists():
        raise FileNotFoundError(
            f"no controversy export found at {path} (run controversy first)")
    return _load(path)


def update_manifest(data_dir: str | Path, stage: str, record: dict) -> Path:
    """Merge one stage record into manifest.json (timestamps allowed here)."""
    path = Path(data_dir) / MANIFEST_FILE
    manifest = _load(path) if path.exists() else {
        "schema_version": SCHEMA_VERSION, "stages": {}}
    record = dict(record)
    record["finished_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    manifest["stages"][stage] = record
    return _dump(manifest, path)
