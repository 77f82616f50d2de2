import json
from datetime import date, datetime, timezone

import pytest
from hypothesis import given, strategies as st

from tweetscope.errors import MalformedRecord
from tweetscope.ingest import (
    IngestCounts, LanguagePolicy, RawTweet, filter_language, ingest_corpus,
    load_jsonl, preprocess, tokenize,
)


def _raw(text="hello world", lang="en", country=None, tweet_id="t1",
         created="2020-03-12T10:00:00Z"):
    return RawTweet(
        id=tweet_id,
        created_at=datetime.fromisoformat(created.replace("Z", "+00:00")),
        text=text,
        lang=lang,
        country=country,
    )


def _write_jsonl(path, objs):
    with open(path, "w", encoding="utf-8") as f:
        for obj in objs:
            f.write(obj if isinstance(obj, str) else json.dumps(obj))
            f.write("\n")


GOOD = {"id": "1", "created_at": "2020-03-12T10:00:00Z", "text": "hi there",
        "lang": "en"}


class TestLoadJsonl:
    def test_three_wellformed_lines(self, tmp_path):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [dict(GOOD, id=str(i)) for i in range(3)])
        counts = IngestCounts()
        tweets = list(load_jsonl(p, counts=counts))
        assert len(tweets) == 3
        assert counts.loaded == 3 and counts.skipped == 0

    def test_truncated_line_skip_mode(self, tmp_path):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [GOOD, '{"id": "2", "created_at":', dict(GOOD, id="3")])
        counts = IngestCounts()
        tweets = list(load_jsonl(p, counts=counts))
        assert len(tweets) == 2
        assert counts.loaded == 3 and counts.skipped == 1

    def test_fail_fast_reports_line(self, tmp_path):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [GOOD, "not json"])
        with pytest.raises(MalformedRecord) as exc:
            list(load_jsonl(p, strictness="fail-fast"))
        assert exc.value.line_no == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            list(load_jsonl(tmp_path / "absent.jsonl"))

    def test_invalid_records_skipped(self, tmp_path):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [
            dict(GOOD, id=""),                       # empty id
            dict(GOOD, created_at="yesterday"),      # bad timestamp
            dict(GOOD, country="usa"),               # bad country format
            dict(GOOD, country="US"),                # fine
        ])
        counts = IngestCounts()
        tweets = list(load_jsonl(p, counts=counts))
        assert [t.country for t in tweets] == ["US"]
        assert counts.skipped == 3

    def test_unknown_fields_ignored(self, tmp_path):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [dict(GOOD, retweet_count=5, entities={"a": 1})])
        assert len(list(load_jsonl(p))) == 1


class TestFilterLanguage:
    def test_en_kept(self, stopwords):
        policy = LanguagePolicy(stopwords)
        assert filter_language(_raw(lang="en"), policy) is True

    def test_fr_dropped(self, stopwords):
        policy = LanguagePolicy(stopwords)
        assert filter_language(_raw(lang="fr"), policy) is False

    def test_lang_absent_stopword_ratio(self, stopwords):
        # "the", "is", "in", "the" are stopwords: 4/7 >= 0.10
        policy = LanguagePolicy(stopwords)
        t = _raw(text="the virus is spreading in the city", lang=None)
        assert filter_language(t, policy) is True

    def test_lang_absent_no_english_words(self, stopwords):
        policy = LanguagePolicy(stopwords)
        t = _raw(text="covid covid covid covid", lang=None)
        assert filter_language(t, policy) is False

    def test_empty_text_dropped(self, stopwords):
        policy = LanguagePolicy(stopwords)
        assert filter_language(_raw(text="", lang=None), policy) is False

    def test_pure_function(self, stopwords):
        policy = LanguagePolicy(stopwords)
        t = _raw(text="some random words here", lang=None)
        first = filter_language(t, policy)
        assert all(filter_language(t, policy) == first for _ in range(5))


class TestTokenize:
    def test_url_mention_hashtag(self):
        assert tokenize("Stay SAFE! https://t.co/xyz @who #StayHome") == \
            ["stay", "safe", "stayhome"]

    def test_hyphen_apostrophe_kept(self):
        assert tokenize("COVID-19 won't stop") == ["covid-19", "won't", "stop"]

    def test_empty(self):
        assert tokenize("") == []

    def test_www_prefix_removed(self):
        assert tokenize("see www.example.com now") == ["see", "now"]

    def test_punctuation_split(self):
        assert tokenize("wow!!!so,good...right?") == ["wow", "so", "good", "right"]

    def test_edge_hyphens_stripped(self):
        assert tokenize("-abc- a--b") == ["abc", "a", "b"]

    def test_curly_apostrophe_normalized(self):
        assert tokenize("don’t panic") == ["don't", "panic"]

    @given(st.text(max_size=200))
    def test_idempotent(self, text):
        once = tokenize(text)
        assert tokenize(" ".join(once)) == once

    @given(st.text(max_size=200))
    def test_tokens_nonempty_no_whitespace(self, text):
        for tok in tokenize(text):
            assert tok
            assert not any(c.isspace() for c in tok)


class TestPreprocess:
    def test_day_week_derivation(self, stopwords):
        t = preprocess(_raw(created="2020-03-12T10:00:00Z"), stopwords)
        assert t.day == date(2020, 3, 12)
        assert t.week == "2020-W11"

    def test_midnight_utc_boundary(self, stopwords):
        t = preprocess(_raw(created="2019-12-30T00:00:00Z"), stopwords)
        # ISO week-year rolls forward at the end of December
        assert t.day == date(2019, 12, 30)
        assert t.week == "2020-W01"

    def test_stopword_removal_and_stemming(self, stopwords):
        t = preprocess(_raw(text="The spreading virus"), stopwords)
        assert t.surface_tokens == ["the", "spreading", "virus"]
        # Porter: spreading -> spread; virus -> viru (terminal s stripped)
        assert t.stemmed_tokens == ["spread", "viru"]

    def test_empty_text(self, stopwords):
        t = preprocess(_raw(text=""), stopwords)
        assert t.surface_tokens == [] and t.stemmed_tokens == []

    def test_stemmed_not_longer_than_surface(self, stopwords):
        t = preprocess(_raw(text="the quick brown fox jumps"), stopwords)
        assert len(t.stemmed_tokens) <= len(t.surface_tokens)

    def test_roundtrip_dict(self, stopwords):
        t = preprocess(_raw(text="hello covid-19 world", country="US"), stopwords)
        from tweetscope.ingest import ProcessedTweet
        assert ProcessedTweet.from_dict(t.to_dict()) == t


class TestIngestCorpus:
    def test_count_conservation(self, tmp_path, stopwords):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [
            dict(GOOD, id="1"),
            dict(GOOD, id="2", lang="fr"),
            "broken json",
            dict(GOOD, id="3", lang=None, text="the cat is on the mat"),
            dict(GOOD, id="4", lang=None, text="xyzzy plugh zork"),
        ])
        corpus = ingest_corpus(p, stopwords)
        c = corpus.counts
        assert c.loaded == 5
        assert c.loaded == len(corpus.tweets) + c.skipped + c.filtered
        assert c.skipped == 1 and c.filtered == 2
        assert [t.id for t in corpus.tweets] == ["1", "3"]


class TestDuplicateIds:
    def test_duplicate_skipped(self, tmp_path, stopwords):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [GOOD, dict(GOOD, text="other text"), dict(GOOD, id="2")])
        corpus = ingest_corpus(p, stopwords)
        assert [t.id for t in corpus.tweets] == ["1", "2"]
        assert corpus.counts.skipped == 1
        c = corpus.counts
        assert c.loaded == len(corpus.tweets) + c.skipped + c.filtered

    def test_duplicate_fail_fast(self, tmp_path, stopwords):
        p = tmp_path / "in.jsonl"
        _write_jsonl(p, [GOOD, GOOD])
        with pytest.raises(MalformedRecord, match="duplicate"):
            ingest_corpus(p, stopwords, strictness="fail-fast")


class TestTraceability:
    @given(st.text(max_size=160))
    def test_stemmed_stream_derives_from_surface(self, text):
        from tweetscope.stemming import stem as porter
        stopwords = frozenset({"the", "a", "is", "and"})
        t = preprocess(_raw(text=text), stopwords)
        assert t.stemmed_tokens == [
            porter(tok) for tok in t.surface_tokens if tok not in stopwords
        ]
