import numpy as np
import pytest

from tweetscope.errors import EmptyCorpus, EmptyVocabulary, TopicOutOfRange
from tweetscope.ingest import Corpus, IngestCounts, ProcessedTweet
from tweetscope.topics import (
    LdaConfig, build_vocab, fit_lda, top_words, week_seed, weekly_topics,
)
from datetime import date


def _planted_docs(seed=7, n_docs=200, doc_len=20):
    vocab_a = [f"alpha{i}" for i in range(10)]
    vocab_b = [f"beta{i}" for i in range(10)]
    rng = np.random.default_rng(seed)
    docs = []
    for i in range(n_docs):
        src = vocab_a if i < n_docs // 2 else vocab_b
        docs.append([src[j] for j in rng.integers(0, len(src), size=doc_len)])
    return docs, set(vocab_a), set(vocab_b)


class TestBuildVocab:
    def test_min_df(self):
        v = build_vocab([["a", "b"], ["a", "c"]], min_df=2)
        assert v.terms == ["a"]
        assert v.doc_freq == {"a": 2}

    def test_max_df_excludes_everywhere_terms(self):
        with pytest.raises(EmptyVocabulary):
            build_vocab([["a"], ["a"]], min_df=1, max_df_ratio=0.5)

    def test_identity(self):
        v = build_vocab([["x", "y"]], min_df=1, max_df_ratio=1.0)
        assert v.terms == ["x", "y"]
        assert v.index == {"x": 0, "y": 1}

    def test_lexicographic_order(self):
        v = build_vocab([["zz", "aa", "mm"]])
        assert v.terms == sorted(v.terms)

    def test_bad_params(self):
        with pytest.raises(ValueError):
            build_vocab([["a"]], min_df=0)
        with pytest.raises(ValueError):
            build_vocab([["a"]], max_df_ratio=0.0)


class TestLdaConfig:
    def test_alpha_default_is_50_over_k(self):
        assert LdaConfig(k=10).alpha == 5.0
        assert LdaConfig(k=25).alpha == 2.0

    def test_burn_in_bound(self):
        with pytest.raises(ValueError):
            LdaConfig(k=2, iterations=50, burn_in=50)


class TestFitLda:
    def test_k1_degenerate(self):
        cfg = LdaConfig(k=1, beta=0.01, iterations=5, burn_in=0, seed=3)
        model = fit_lda([["a", "a", "b"]], cfg)
        assert all((z == 0).all() for z in model.z)
        assert model.theta.tolist() == [[1.0]]
        # phi[0][w] = (count(w) + beta) / (N + V*beta)
        assert model.phi[0][0] == pytest.approx((2 + 0.01) / (3 + 2 * 0.01), abs=1e-12)
        assert model.phi[0][1] == pytest.approx((1 + 0.01) / (3 + 2 * 0.01), abs=1e-12)

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            fit_lda([], LdaConfig(k=2, iterations=1, burn_in=0))

    def test_all_empty_docs(self):
        with pytest.raises((EmptyCorpus, EmptyVocabulary)):
            fit_lda([[], []], LdaConfig(k=2, iterations=1, burn_in=0))

    def test_count_conservation_every_sweep(self):
        rng = np.random.default_rng(11)
        words = [f"w{i}" for i in range(30)]
        docs = [[words[j] for j in rng.integers(0, 30, size=rng.integers(1, 15))]
                for _ in range(20)]
        doc_lens = None
        checked = []

        def hook(sweep, n_dk, n_kw, n_k):
            assert (n_dk.sum(axis=1) == doc_lens).all()
            assert (n_kw.sum(axis=1) == n_k).all()
            assert n_dk.sum() == n_k.sum()
            assert (n_dk >= 0).all() and (n_kw >= 0).all()
            checked.append(sweep)

        vocab = build_vocab(docs)
        doc_lens = np.array([len(d) for d in docs])
        fit_lda(docs, LdaConfig(k=5, iterations=20, burn_in=0, seed=2),
                vocab=vocab, sweep_hook=hook)
        assert checked == list(range(20))

    def test_rows_normalized(self):
        docs, _, _ = _planted_docs(n_docs=30, doc_len=10)
        model = fit_lda(docs, LdaConfig(k=3, iterations=20, burn_in=0, seed=5))
        assert np.allclose(model.theta.sum(axis=1), 1.0, atol=1e-9)
        assert np.allclose(model.phi.sum(axis=1), 1.0, atol=1e-9)

    def test_theta_phi_formulas(self):
        docs, _, _ = _planted_docs(n_docs=20, doc_len=8)
        cfg = LdaConfig(k=3, alpha=0.7, beta=0.05, iterations=10, burn_in=0, seed=9)
        model = fit_lda(docs, cfg)
        lens = model.n_dk.sum(axis=1)
        v = len(model.vocab)
        expect_theta = (model.n_dk + cfg.alpha) / (lens[:, None] + cfg.k * cfg.alpha)
        expect_phi = (model.n_kw + cfg.beta) / (model.n_k[:, None] + v * cfg.beta)
        assert np.array_equal(model.theta, expect_theta)
        assert np.array_equal(model.phi, expect_phi)

    def test_seeded_determinism(self):
        docs, _, _ = _planted_docs(n_docs=40, doc_len=10)
        cfg = LdaConfig(k=4, iterations=30, burn_in=0, seed=123)
        m1 = fit_lda(docs, cfg)
        m2 = fit_lda(docs, cfg)
        assert all(np.array_equal(a, b) for a, b in zip(m1.z, m2.z))
        assert np.array_equal(m1.phi, m2.phi)
        assert np.array_equal(m1.theta, m2.theta)
        m3 = fit_lda(docs, LdaConfig(k=4, iterations=30, burn_in=0, seed=124))
        assert not all(np.array_equal(a, b) for a, b in zip(m1.z, m3.z))

    def test_topic_recovery_single_seed(self):
        docs, vocab_a, vocab_b = _planted_docs()
        cfg = LdaConfig(k=2, alpha=0.5, beta=0.01, iterations=500, seed=42)
        model = fit_lda(docs, cfg)
        for k in range(2):
            tops = {w for w, _ in top_words(model, k, 5)}
            assert tops <= vocab_a or tops <= vocab_b


class TestTopWords:
    def test_count_dominance(self):
        model = fit_lda([["a", "a", "b"]],
                        LdaConfig(k=1, beta=0.01, iterations=3, burn_in=0, seed=1))
        pairs = top_words(model, 0, 2)
        assert [t for t, _ in pairs] == ["a", "b"]
        assert pairs[0][1] > pairs[1][1]

    def test_truncation_at_vocab_size(self):
        model = fit_lda([["a", "b"]],
                        LdaConfig(k=1, iterations=3, burn_in=0, seed=1))
        assert len(top_words(model, 0, 99)) == 2

    def test_out_of_range(self):
        model = fit_lda([["a"]], LdaConfig(k=1, iterations=3, burn_in=0, seed=1))
        with pytest.raises(TopicOutOfRange):
            top_words(model, 1, 5)

    def test_tie_break_lexicographic(self):
        model = fit_lda([["b", "a"]],
                        LdaConfig(k=1, iterations=3, burn_in=0, seed=1))
        assert [t for t, _ in top_words(model, 0, 2)] == ["a", "b"]


def _corpus_tweet(i, day, tokens):
    return ProcessedTweet(
        id=f"t{i}", day=day, week=f"{day.isocalendar()[0]}-W{day.isocalendar()[1]:02d}",
        country=None, surface_tokens=tokens, stemmed_tokens=tokens,
    )


class TestWeeklyTopics:
    def _corpus(self):
        tweets = []
        rng = np.random.default_rng(21)
        words = [f"w{i}" for i in range(12)]
        for i in range(30):
            day = date(2020, 3, 2 + (i % 5))          # 2020-W10
            tweets.append(_corpus_tweet(i, day, [words[j] for j in rng.integers(0, 12, 6)]))
        for i in range(30, 55):
            day = date(2020, 3, 9 + (i % 5))          # 2020-W11
            tweets.append(_corpus_tweet(i, day, [words[j] for j in rng.integers(0, 12, 6)]))
        return Corpus(tweets=tweets, counts=IngestCounts(loaded=55))

    def test_partition_bound(self):
        corpus = self._corpus()
        cfg = LdaConfig(k=3, iterations=10, burn_in=0, seed=1)
        out = weekly_topics(corpus, cfg, n_words=4, min_df=1, max_df_ratio=1.0)
        assert set(out) <= {"2020-W10", "2020-W11"}
        assert len(out) == 2
        for topics in out.values():
            assert len(topics) == 3
            assert all(len(t) <= 4 for t in topics)

    def test_small_week_skipped(self):
        tweets = [_corpus_tweet(0, date(2020, 3, 2), ["x", "y", "z"])]
        corpus = Corpus(tweets=tweets, counts=IngestCounts(loaded=1))
        cfg = LdaConfig(k=10, iterations=5, burn_in=0, seed=1)
        assert weekly_topics(corpus, cfg, min_df=1, max_df_ratio=1.0) == {}

    def test_double_run_identical(self):
        corpus = self._corpus()
        cfg = LdaConfig(k=3, iterations=15, burn_in=0, seed=77)
        a = weekly_topics(corpus, cfg, n_words=5, min_df=1, max_df_ratio=1.0)
        b = weekly_topics(corpus, cfg, n_words=5, min_df=1, max_df_ratio=1.0)
        assert a == b

    def test_week_seed_stable(self):
        assert week_seed(42, "2020-W11") == week_seed(42, "2020-W11")
        assert week_seed(42, "2020-W11") != week_seed(42, "2020-W12")
