"""Weekly topic modelling: LDA fitted by collapsed Gibbs sampling.

Each position's topic is resampled from the full conditional
(n_dk + alpha) * (n_kw + beta) / (n_k + V*beta) with the position's own
assignment removed. theta/phi are point estimates from the final sweep's
counts. All randomness flows from the config seed, so identical inputs
give identical models.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np
from numba import njit

from .errors import EmptyCorpus, EmptyVocabulary, TopicOutOfRange
from .ingest import Corpus

logger = logging.getLogger(__name__)

_SEED_MASK = 0xFFFFFFFFFFFFFFFF

DEFAULT_MIN_DF = 5
DEFAULT_MAX_DF_RATIO = 0.5


@dataclass(frozen=True)
class LdaConfig:
    k: int = 10
    alpha: float | None = None  # None -> 50/k
    beta: float = 0.01
    iterations: int = 1000
    seed: int = 42
    burn_in: int = 100

    def __post_init__(self):
        if self.alpha is None:
            object.__setattr__(self, "alpha", 50.0 / self.k)
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be > 0")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if not 0 <= self.burn_in < self.iterations:
            raise ValueError("burn_in must be in [0, iterations)")


@dataclass
class Vocabulary:
    terms: list[str]
    index: dict[str, int]
    doc_freq: dict[str, int]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class LdaModel:
    config: LdaConfig
    vocab: Vocabulary
    docs: list[np.ndarray]  # per-doc word ids (vocab-filtered)
    z: list[np.ndarray]  # per-doc per-position topic assignments
    n_dk: np.ndarray  # docs x topics
    n_kw: np.ndarray  # topics x words
    n_k: np.ndarray  # per-topic totals
    theta: np.ndarray  # docs x topics
    phi: np.ndarray  # topics x words


def build_vocab(
    docs: Sequence[Sequence[str]],
    min_df: int = 1,
    max_df_ratio: float = 1.0,
) -> Vocabulary:
    if min_df < 1:
        raise ValueError("min_df must be >= 1")
    if not 0 < max_df_ratio <= 1:
        raise ValueError("max_df_ratio must be in (0, 1]")
    df: dict[str, int] = {}
    for doc in docs:
        for term in set(doc):
            df[term] = df.get(term, 0) + 1
    limit = max_df_ratio * len(docs)
    terms = sorted(t for t, n in df.items() if n >= min_df and n <= limit)
    if not terms:
        raise EmptyVocabulary(
            f"no term passed min_df={min_df}, max_df_ratio={max_df_ratio} "
            f"over {len(docs)} docs"
        )
    return Vocabulary(
        terms=terms,
        index={t: i for i, t in enumerate(terms)},
        doc_freq={t: df[t] for t in terms},
    )


@njit(cache=True)
def _gibbs_sweep(doc_ids, word_ids, z, n_dk, n_kw, n_k, alpha, beta, uniforms):
    k_count = n_kw.shape[0]
    v_beta = n_kw.shape[1] * beta
    cum = np.empty(k_count, dtype=np.float64)
    for t in range(doc_ids.shape[0]):
        d = doc_ids[t]
        w = word_ids[t]
        k_old = z[t]
        n_dk[d, k_old] -= 1
        n_kw[k_old, w] -= 1
        n_k[k_old] -= 1
        total = 0.0
        for k in range(k_count):
            total += (n_dk[d, k] + alpha) * (n_kw[k, w] + beta) / (n_k[k] + v_beta)
            cum[k] = total
        u = uniforms[t] * total
        k_new = 0
        while k_new < k_count - 1 and cum[k_new] < u:
            k_new += 1
        z[t] = k_new
        n_dk[d, k_new] += 1
        n_kw[k_new, w] += 1
        n_k[k_new] += 1


def fit_lda(
    docs: Sequence[Sequence[str]],
    cfg: LdaConfig,
    vocab: Vocabulary | None = None,
    sweep_hook: Callable[[int, np.ndarray, np.ndarray, np.ndarray], None] | None = None,
) -> LdaModel:
    """Fit one LDA model. ``sweep_hook(sweep, n_dk, n_kw, n_k)`` is called
    after every sweep, for invariant checks; it must not mutate the counts."""
    if not docs:
        raise EmptyCorpus("no documents")
    if vocab is None:
        vocab = build_vocab(docs, min_df=1, max_df_ratio=1.0)

    index = vocab.index
    doc_words = [
        np.array([index[t] for t in doc if t in index], dtype=np.int64)
        for doc in docs
    ]
    n_tokens = sum(len(dw) for dw in doc_words)
    if n_tokens == 0:
        raise EmptyCorpus("no document has tokens after vocabulary filtering")

    d_count = len(doc_words)
    v_count = len(vocab)
    doc_ids = np.repeat(
        np.arange(d_count, dtype=np.int64),
        [len(dw) for dw in doc_words],
    )
    word_ids = np.concatenate(doc_words)

    rng = np.random.default_rng(cfg.seed & _SEED_MASK)
    z = rng.integers(0, cfg.k, size=n_tokens).astype(np.int64)

    n_dk = np.zeros((d_count, cfg.k), dtype=np.int64)
    n_kw = np.zeros((cfg.k, v_count), dtype=np.int64)
    n_k = np.zeros(cfg.k, dtype=np.int64)
    np.add.at(n_dk, (doc_ids, z), 1)
    np.add.at(n_kw, (z, word_ids), 1)
    np.add.at(n_k, z, 1)

    for sweep in range(cfg.iterations):
        uniforms = rng.random(n_tokens)
        _gibbs_sweep(doc_ids, word_ids, z, n_dk, n_kw, n_k,
                     float(cfg.alpha), float(cfg.beta), uniforms)
        if sweep_hook is not None:
            sweep_hook(sweep, n_dk, n_kw, n_k)

    doc_len = n_dk.sum(axis=1)
    theta = (n_dk + cfg.alpha) / (doc_len[:, None] + cfg.k * cfg.alpha)
    phi = (n_kw + cfg.beta) / (n_k[:, None] + v_count * cfg.beta)

    bounds = np.cumsum([0] + [len(dw) for dw in doc_words])
    z_per_doc = [z[bounds[i]:bounds[i + 1]].copy() for i in range(d_count)]
    return LdaModel(
        config=cfg,
        vocab=vocab,
        docs=doc_words,
        z=z_per_doc,
        n_dk=n_dk,
        n_kw=n_kw,
        n_k=n_k,
        theta=theta,
        phi=phi,
    )


def top_words(model: LdaModel, k: int, n: int) -> list[tuple[str, float]]:
    """The n highest-probability terms of topic k, ties broken by term."""
    if not 0 <= k < model.config.k:
        raise TopicOutOfRange(f"topic {k} not in [0, {model.config.k})")
    row = model.phi[k]
    order = sorted(range(len(row)), key=lambda w: (-row[w], model.vocab.terms[w]))
    return [(model.vocab.terms[w], float(row[w])) for w in order[:n]]


def week_seed(base_seed: int, week: str) -> int:
    digest = hashlib.blake2b(week.encode("utf-8"), digest_size=8).digest()
    return (base_seed ^ int.from_bytes(digest, "big")) & _SEED_MASK


def weekly_models(
    corpus: Corpus,
    cfg: LdaConfig,
    min_df: int = DEFAULT_MIN_DF,
    max_df_ratio: float = DEFAULT_MAX_DF_RATIO,
) -> dict[str, LdaModel]:
    """One independent LDA per ISO week; weeks too small to model are skipped
    with a warning (fewer docs than K, or nothing left after vocab filtering)."""
    out: dict[str, LdaModel] = {}
    for week, tweets in sorted(corpus.by_week().items()):
        docs = [t.stemmed_tokens for t in tweets]
        if len(docs) < cfg.k:
            logger.warning("week %s skipped: %d docs < k=%d", week, len(docs), cfg.k)
            continue
        wcfg = replace(cfg, seed=week_seed(cfg.seed, week))
        try:
            vocab = build_vocab(docs, min_df=min_df, max_df_ratio=max_df_ratio)
            out[week] = fit_lda(docs, wcfg, vocab=vocab)
        except (EmptyVocabulary, EmptyCorpus) as exc:
            logger.warning("week %s skipped: %s", week, exc)
    return out


def weekly_topics(
    corpus: Corpus,
    cfg: LdaConfig,
    n_words: int = 10,
    min_df: int = DEFAULT_MIN_DF,
    max_df_ratio: float = DEFAULT_MAX_DF_RATIO,
) -> dict[str, list[list[tuple[str, float]]]]:
    """Per-week top-word lists from :func:`weekly_models`."""
    models = weekly_models(corpus, cfg, min_df=min_df, max_df_ratio=max_df_ratio)
    return {
        week: [top_words(model, k, n_words) for k in range(cfg.k)]
        for week, model in models.items()
    }
