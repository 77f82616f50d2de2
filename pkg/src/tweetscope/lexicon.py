"""Loaders for the bundled sentiment and emotion lexicons.

Both are TSV files. The sentiment lexicon maps a term (one or two words) to
an integer valence in [-5, +5]; the emotion lexicon maps a word to a subset
of the eight primary emotions. The emotion file also carries positive and
negative polarity rows, which are parsed and discarded: polarity comes from
the sentiment lexicon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import MalformedLexicon
from .resources import default_afinn_path, default_nrc_path

EMOTIONS = (
    "anger", "fear", "sadness", "disgust",
    "surprise", "anticipation", "trust", "joy",
)

_POLARITIES = ("positive", "negative")


@dataclass
class SentimentLexicon:
    entries: dict[str, int]
    # first words of two-word entries, for fast bigram candidate checks
    bigram_heads: frozenset[str] = field(init=False)

    def __post_init__(self):
        self.bigram_heads = frozenset(
            term.split()[0] for term in self.entries if " " in term
        )

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class EmotionLexicon:
    entries: dict[str, frozenset[str]]

    def __len__(self) -> int:
        return len(self.entries)


def load_afinn(path: str | Path | None = None) -> SentimentLexicon:
    """Load a ``term<TAB>score`` lexicon; duplicates and bad scores are errors."""
    p = Path(path) if path is not None else default_afinn_path()
    entries: dict[str, int] = {}
    with open(p, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 2:
                raise MalformedLexicon("expected term<TAB>score", line_no=line_no)
            term = parts[0].strip()
            if not term or term != term.lower():
                raise MalformedLexicon(f"term must be lowercase: {parts[0]!r}",
                                       line_no=line_no)
            if len(term.split()) > 2:
                raise MalformedLexicon(f"term has more than two words: {term!r}",
                                       line_no=line_no)
            try:
                score = int(parts[1])
            except ValueError:
                raise MalformedLexicon(f"score is not an integer: {parts[1]!r}",
                                       line_no=line_no) from None
            if not -5 <= score <= 5:
                raise MalformedLexicon(f"score out of range [-5, 5]: {score}",
                                       line_no=line_no)
            if term in entries:
                raise MalformedLexicon(f"duplicate term: {term!r}", line_no=line_no)
            entries[term] = score
    return SentimentLexicon(entries=entries)


def load_nrc(path: str | Path | None = None) -> EmotionLexicon:
    """Load a ``word<TAB>category<TAB>flag`` emotion lexicon.

    Only the eight emotion categories are retained; positive/negative rows
    are accepted but dropped. Unknown categories and non-binary flags raise.
    """
    p = Path(path) if path is not None else default_nrc_path()
    known = set(EMOTIONS) | set(_POLARITIES)
    acc: dict[str, set[str]] = {}
    with open(p, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3:
                raise MalformedLexicon("expected word<TAB>category<TAB>flag",
                                       line_no=line_no)
            word, category, flag = parts
            word = word.strip()
            if not word:
                raise MalformedLexicon("empty word", line_no=line_no)
            if category not in known:
                raise MalformedLexicon(f"unknown category: {category!r}",
                                       line_no=line_no)
            if flag not in ("0", "1"):
                raise MalformedLexicon(f"flag must be 0 or 1: {flag!r}",
                                       line_no=line_no)
            if flag == "1" and category in EMOTIONS:
                acc.setdefault(word, set()).add(category)
    return EmotionLexicon(entries={w: frozenset(s) for w, s in acc.items()})
