"""Operator command line: ingest -> analyze/topics/controversy -> serve/export.

Stages communicate through fixed-name artifacts in a single data directory
(see artifacts module). Exit codes: 0 success, 1 usage error, 2 data error,
3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import signal
import sys
import time
import traceback
from pathlib import Path

from . import artifacts
from .aggregate import build_snapshot, load_snapshot, persist, query, score_corpus
from .api import ArtifactStore, create_app, load_server_config
from .controversy import cooccurrence, country_breakdown, load_terms, scan_corpus
from .errors import TweetscopeError
from .ingest import STRICTNESS_MODES, ingest_corpus, load_stopwords
from .lexicon import EMOTIONS, load_afinn, load_nrc
from .periods import GRANULARITIES
from .synth import generate_fixture
from .topics import DEFAULT_MAX_DF_RATIO, DEFAULT_MIN_DF, LdaConfig, weekly_models

logger = logging.getLogger("tweetscope")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3

TOPICS_STORED_WORDS = 50


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cmd_ingest(args) -> int:
    t0 = time.perf_counter()
    stopwords_path = args.stopwords
    stopwords = load_stopwords(stopwords_path)
    corpus = ingest_corpus(args.input, stopwords, strictness=args.strictness)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = artifacts.write_corpus(corpus, out_dir)
    duration = time.perf_counter() - t0
    c = corpus.counts
    artifacts.update_manifest(out_dir, "ingest", {
        "input": str(args.input),
        "stopwords": str(stopwords_path) if stopwords_path else "bundled",
        "strictness": args.strictness,
        "counts": {"loaded": c.loaded, "skipped": c.skipped,
                   "filtered": c.filtered, "kept": c.kept},
        "outputs": [str(p) for p in paths.values()],
        "duration_s": round(duration, 3),
    })
    logger.info("ingest: loaded=%d kept=%d skipped=%d filtered=%d -> %s (%.1fs)",
                c.loaded, c.kept, c.skipped, c.filtered, out_dir, duration)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    corpus = artifacts.read_corpus(args.dir)
    lex = load_afinn(args.afinn)
    emo = load_nrc(args.nrc)
    scores = score_corpus(corpus, lex, emo)
    snapshot = build_snapshot(corpus, scores)
    path = persist(snapshot, Path(args.dir) / artifacts.SNAPSHOT_FILE)
    duration = time.perf_counter() - t0
    artifacts.update_manifest(args.dir, "analyze", {
        "afinn": str(args.afinn) if args.afinn else "bundled",
        "nrc": str(args.nrc) if args.nrc else "bundled",
        "tweets": len(corpus.tweets),
        "outputs": [str(path)],
        "duration_s": round(duration, 3),
    })
    logger.info("analyze: %d tweets scored -> %s (%.1fs)",
                len(corpus.tweets), path, duration)
    return EXIT_OK


def _cmd_topics(args) -> int:
    t0 = time.perf_counter()
    corpus = artifacts.read_corpus(args.dir)
    meta = artifacts.read_corpus_meta(args.dir)
    cfg = LdaConfig(k=args.k, alpha=args.alpha, beta=args.beta,
                    iterations=args.iters, seed=args.seed, burn_in=args.burn_in)
    models = weekly_models(corpus, cfg, min_df=args.min_df,
                           max_df_ratio=args.max_df_ratio)
    path = artifacts.write_topics_export(
        models, cfg, meta["corpus_id"], corpus.weeks(), args.dir,
        n_words_stored=TOPICS_STORED_WORDS,
        min_df=args.min_df, max_df_ratio=args.max_df_ratio,
        include_matrices=args.include_matrices)
    duration = time.perf_counter() - t0
    artifacts.update_manifest(args.dir, "topics", {
        "config": artifacts.lda_config_dict(cfg),
        "vocab_filter": {"min_df": args.min_df, "max_df_ratio": args.max_df_ratio},
        "weeks_modelled": sorted(models),
        "weeks_skipped": sorted(set(corpus.weeks()) - set(models)),
        "outputs": [str(path)],
        "duration_s": round(duration, 3),
    })
    logger.info("topics: %d/%d weeks modelled -> %s (%.1fs)",
                len(models), len(corpus.weeks()), path, duration)
    return EXIT_OK


def _cmd_controversy(args) -> int:
    t0 = time.perf_counter()
    corpus = artifacts.read_corpus(args.dir)
    meta = artifacts.read_corpus_meta(args.dir)
    terms = load_terms(args.terms)
    stopwords = load_stopwords(args.stopwords)
    hits = scan_corpus(corpus, terms)
    totals = {t: 0 for t in terms.phrases}
    for h in hits:
        totals[h.term] += 1
    breakdowns = {
        t: country_breakdown([h for h in hits if h.term == t])
        for t in terms.phrases
    }
    tables = {
        t: cooccurrence(corpus, hits, t, stopwords, top_n=None, terms=terms)
        for t in terms.phrases
    }
    path = artifacts.write_controversy_export(
        terms, totals, breakdowns, tables, meta["corpus_id"], args.dir)
    duration = time.perf_counter() - t0
    artifacts.update_manifest(args.dir, "controversy", {
        "terms_file": str(args.terms) if args.terms else "bundled",
        "stopwords": str(args.stopwords) if args.stopwords else "bundled",
        "total_hits": len(hits),
        "outputs": [str(path)],
        "duration_s": round(duration, 3),
    })
    logger.info("controversy: %d hits over %d terms -> %s (%.1fs)",
                len(hits), len(terms.phrases), path, duration)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    cfg = load_server_config(
        args.config,
        port=args.port,
        data_dir=args.dir,
        cors_origin=args.cors_origin,
        host=args.host,
    )
    store = ArtifactStore(cfg.data_dir)
    if not store.reload():
        logger.warning("artifacts not ready in %s: %s (serving 503s until reload)",
                       cfg.data_dir, store.last_error)

    def _reload(_signum, _frame):
        ok = store.reload()
        logger.info("artifact reload %s", "succeeded" if ok else
                    f"failed: {store.last_error}")

    signal.signal(signal.SIGHUP, _reload)
    app = create_app(cfg.data_dir, cors_origin=cfg.cors_origin, store=store)
    logger.info("serving %s on %s:%d (SIGHUP reloads artifacts)",
                cfg.data_dir, cfg.host, cfg.port)
    uvicorn.run(app, host=cfg.host, port=cfg.port, log_level="warning")
    return EXIT_OK


_EXPORT_COLUMNS = {
    "volume": ["period", "count"],
    "sentiment": ["period", "count", "mean", "positivity", "negativity"],
    "emotions": ["period", "count", *EMOTIONS],
}


def _cmd_export(args) -> int:
    t0 = time.perf_counter()
    snapshot = load_snapshot(Path(args.dir) / artifacts.SNAPSHOT_FILE)
    granularity = args.granularity
    periods = snapshot.periods(granularity)
    from_key = args.from_ or (periods[0] if periods else None)
    to_key = args.to or (periods[-1] if periods else None)
    rows = []
    if from_key is not None:
        try:
            rows = query(snapshot, args.metric, granularity, from_key, to_key,
                         args.country)
        except ValueError as exc:
            raise TweetscopeError(str(exc)) from exc
    columns = _EXPORT_COLUMNS[args.metric]
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if row[c] is None else row[c] for c in columns])
    finally:
        if args.out:
            out.close()
    artifacts.update_manifest(args.dir, "export", {
        "metric": args.metric,
        "granularity": granularity,
        "from": from_key,
        "to": to_key,
        "country": args.country,
        "rows": len(rows),
        "outputs": [str(args.out) if args.out else "-"],
        "duration_s": round(time.perf_counter() - t0, 3),
    })
    return EXIT_OK


def _cmd_synth(args) -> int:
    truth_path = args.truth or (str(args.out) + ".truth.json")
    truth = generate_fixture(args.out, seed=args.seed, n_tweets=args.n,
                             truth_path=truth_path)
    logger.info("synth: wrote %d tweets over %d weeks -> %s (truth: %s)",
                truth.n_tweets, len(truth.weeks), args.out, truth_path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tweetscope",
                     description="Tweet corpus analytics pipeline and server")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="preprocess a JSONL tweet dump into a data dir")
    p.add_argument("input", help="input JSONL file")
    p.add_argument("--out", required=True, help="data directory for artifacts")
    p.add_argument("--strictness", choices=STRICTNESS_MODES,
                   default="skip-malformed")
    p.add_argument("--stopwords", default=None, help="stopword list override")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("analyze", help="affect scoring + aggregate snapshot")
    p.add_argument("dir", help="data directory (after ingest)")
    p.add_argument("--afinn", default=None, help="sentiment lexicon override")
    p.add_argument("--nrc", default=None, help="emotion lexicon override")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("topics", help="weekly LDA topic models")
    p.add_argument("dir")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--alpha", type=float, default=None,
                   help="document-topic prior (default 50/k)")
    p.add_argument("--beta", type=float, default=0.01)
    p.add_argument("--iters", type=int, default=1000)
    p.add_argument("--burn-in", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--min-df", type=int, default=DEFAULT_MIN_DF)
    p.add_argument("--max-df-ratio", type=float, default=DEFAULT_MAX_DF_RATIO)
    p.add_argument("--include-matrices", action="store_true",
                   help="embed full theta/phi matrices in the export")
    p.set_defaults(func=_cmd_topics)

    p = sub.add_parser("controversy", help="controversial-term scan and tables")
    p.add_argument("dir")
    p.add_argument("--terms", default=None, help="term list file override")
    p.add_argument("--stopwords", default=None)
    p.set_defaults(func=_cmd_controversy)

    p = sub.add_parser("serve", help="read-only HTTP API over the artifacts")
    p.add_argument("dir")
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--host", default=None)
    p.add_argument("--config", default=None, help="key=value config file")
    p.add_argument("--cors-origin", default=None)
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("export", help="CSV export of an aggregate series")
    p.add_argument("dir")
    p.add_argument("--metric", required=True, choices=sorted(_EXPORT_COLUMNS))
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("--granularity", choices=GRANULARITIES, default="day")
    p.add_argument("--from", dest="from_", default=None)
    p.add_argument("--to", default=None)
    p.add_argument("--country", default=None)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("synth", help="generate the synthetic demo corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n", type=int, default=2000)
    p.add_argument("--truth", default=None, help="truth sidecar path")
    p.set_defaults(func=_cmd_synth)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TweetscopeError, FileNotFoundError, ValueError) as exc:
        logger.error("%s", exc)
        return EXIT_DATA
    except KeyboardInterrupt:
        return EXIT_INTERNAL
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
