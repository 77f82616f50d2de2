import random

import pytest

from tweetscope.errors import MalformedLexicon
from tweetscope.lexicon import EMOTIONS, load_afinn, load_nrc


class TestAfinn:
    def test_bundled_entries(self, afinn):
        assert afinn.entries["good"] == 3
        assert afinn.entries["abandon"] == -2

    def test_bundled_properties(self, afinn):
        assert len(afinn) > 2000
        assert all(-5 <= s <= 5 for s in afinn.entries.values())
        assert all(t == t.lower() and len(t.split()) <= 2 for t in afinn.entries)

    def test_bigram_heads(self, afinn):
        assert "cool stuff" in afinn.entries
        assert "cool" in afinn.bigram_heads

    def test_out_of_range_score(self, tmp_path):
        p = tmp_path / "lex.txt"
        p.write_text("oops\t9\n")
        with pytest.raises(MalformedLexicon):
            load_afinn(p)

    def test_non_integer_score(self, tmp_path):
        p = tmp_path / "lex.txt"
        p.write_text("oops\tx\n")
        with pytest.raises(MalformedLexicon):
            load_afinn(p)

    def test_duplicate_term(self, tmp_path):
        p = tmp_path / "lex.txt"
        p.write_text("good\t3\ngood\t2\n")
        with pytest.raises(MalformedLexicon) as exc:
            load_afinn(p)
        assert exc.value.line_no == 2

    def test_three_word_term_rejected(self, tmp_path):
        p = tmp_path / "lex.txt"
        p.write_text("does not work\t-3\n")
        with pytest.raises(MalformedLexicon):
            load_afinn(p)

    def test_order_independent(self, tmp_path, afinn):
        lines = [f"{t}\t{s}" for t, s in afinn.entries.items()]
        random.Random(5).shuffle(lines)
        p = tmp_path / "shuffled.txt"
        p.write_text("\n".join(lines) + "\n")
        assert load_afinn(p).entries == afinn.entries


class TestNrc:
    def test_bundled_membership(self, nrc):
        assert "anger" in nrc.entries["abandoned"]
        assert "fear" in nrc.entries["abandoned"]
        assert "sadness" in nrc.entries["abandoned"]
        assert "joy" not in nrc.entries["abandoned"]

    def test_only_eight_emotions(self, nrc):
        valid = set(EMOTIONS)
        for word, emotions in nrc.entries.items():
            assert emotions <= valid, word

    def test_all_zero_word_absent(self, tmp_path):
        rows = [f"meh\t{c}\t0" for c in
                ("anger", "anticipation", "disgust", "fear", "joy",
                 "negative", "positive", "sadness", "surprise", "trust")]
        p = tmp_path / "nrc.txt"
        p.write_text("\n".join(rows) + "\n")
        assert "meh" not in load_nrc(p).entries

    def test_polarity_only_word_absent(self, tmp_path):
        p = tmp_path / "nrc.txt"
        p.write_text("fine\tpositive\t1\nfine\tjoy\t0\n")
        assert "fine" not in load_nrc(p).entries

    def test_unknown_category(self, tmp_path):
        p = tmp_path / "nrc.txt"
        p.write_text("word\tboredom\t1\n")
        with pytest.raises(MalformedLexicon):
            load_nrc(p)

    def test_non_binary_flag(self, tmp_path):
        p = tmp_path / "nrc.txt"
        p.write_text("word\tanger\t2\n")
        with pytest.raises(MalformedLexicon):
            load_nrc(p)

    def test_order_independent(self, tmp_path, nrc):
        lines = []
        for word, emotions in nrc.entries.items():
            for e in EMOTIONS:
                lines.append(f"{word}\t{e}\t{1 if e in emotions else 0}")
        random.Random(6).shuffle(lines)
        p = tmp_path / "shuffled.txt"
        p.write_text("\n".join(lines) + "\n")
        assert load_nrc(p).entries == nrc.entries
