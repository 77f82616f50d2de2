"""Synthetic tweet corpus generator for end-to-end runs and demos.

Emits a seeded JSONL corpus spanning six ISO weeks with three planted
signals, plus a truth sidecar describing them:

  * a strong negative-sentiment excess in the third week,
  * two weekly vocabulary themes whose signature words should surface in
    that week's topics,
  * controversial-term tweets with exactly 60% tagged US.

Word pools are drawn from the bundled lexicons at generation time, so the
planted sentiment is guaranteed to be visible to the scorer.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from datetime import date, datetime, time, timedelta, timezone
from pathlib import Path

from .ingest import load_stopwords
from .lexicon import load_afinn
from .periods import week_key

WEEK_MONDAYS = [date(2020, 3, 2) + timedelta(weeks=i) for i in range(6)]
WEEKS = [week_key(d) for d in WEEK_MONDAYS]  # 2020-W10 .. 2020-W15

NEGATIVE_WEEK_INDEX = 2

THEMES = [
    {
        "week_index": 1,
        "signature": "lockdown",
        "vocab": ["lockdown", "curfew", "quarantine", "border", "travel",
                  "flights", "airport", "stayhome", "indoors", "groceries",
                  "permits", "patrol"],
    },
    {
        "week_index": 4,
        "signature": "vaccine",
        "vocab": ["vaccine", "trial", "antibody", "dose", "immunity",
                  "laboratory", "research", "scientists", "clinical",
                  "placebo", "enrollment", "findings"],
    },
]

CONTROVERSY_PHRASES = ["wuhan virus", "chinese virus", "kung flu"]
CONTROVERSY_COOC = ["racist", "chinaliedpeopledied", "chinamustexplain", "blame"]
CONTROVERSY_TOTAL = 100
CONTROVERSY_US = 60
CONTROVERSY_OTHER = ["GB", "CA", "AU", "IN"]

BACKGROUND = [
    "covid", "coronavirus", "pandemic", "outbreak", "cases", "update",
    "today", "city", "people", "home", "work", "school", "news", "report",
    "numbers", "testing", "symptoms", "doctors", "nurses", "grocery",
    "family", "neighbors", "weekend", "morning", "evening", "online",
    "video", "phone", "covid19", "situation", "government", "officials",
    "community", "streets", "weather", "coffee", "dinner",
]

GLUE = ["the", "a", "is", "are", "and", "of", "in", "on", "to", "for",
        "with", "this", "that", "about"]

COUNTRY_POOL = ["US", "US", "US", "GB", "GB", "CA", "AU", "IN", "DE",
                None, None, None]


@dataclass
class Truth:
    seed: int
    n_tweets: int
    weeks: list[str]
    negative_week: str
    themes: list[dict]
    controversy: dict

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n_tweets": self.n_tweets,
            "weeks": self.weeks,
            "negative_week": self.negative_week,
            "themes": self.themes,
            "controversy": self.controversy,
        }


@dataclass
class _Pools:
    positive: list[str]
    mild_negative: list[str]
    strong_negative: list[str]
    afinn_terms: frozenset[str] = field(default_factory=frozenset)


def _word_pools() -> _Pools:
    lex = load_afinn()
    single = {t: s for t, s in lex.entries.items()
              if " " not in t and t.isalpha()}
    return _Pools(
        positive=sorted(t for t, s in single.items() if 2 <= s <= 3),
        mild_negative=sorted(t for t, s in single.items() if -2 <= s <= -1),
        strong_negative=sorted(t for t, s in single.items() if s <= -3),
        afinn_terms=frozenset(lex.entries),
    )


def _sentence(rng: random.Random, tokens: list[str]) -> str:
    """Glue tokens into tweet-looking text with stopwords between phrases.

    Glue lands at least every third token, which keeps the stopword ratio
    above the language heuristic's bar for lang-less records."""
    words = []
    for i, tok in enumerate(tokens):
        if i % 3 == 1 or (i and rng.random() < 0.2):
            words.append(rng.choice(GLUE))
        words.append(tok)
    if rng.random() < 0.15:
        words.append("https://t.co/" + "".join(
            rng.choice("abcdefghij0123456789") for _ in range(8)))
    if rng.random() < 0.10:
        words.insert(0, "@" + rng.choice(["news", "who", "cdc", "update"]))
    text = " ".join(words)
    return text[0].upper() + text[1:] if text else text


def generate_fixture(
    out_path: str | Path,
    seed: int = 42,
    n_tweets: int = 2000,
    truth_path: str | Path | None = None,
) -> Truth:
    """Write the JSONL corpus and its truth sidecar; return the truth."""
    rng = random.Random(seed)
    pools = _word_pools()
    stopwords = load_stopwords()
    for theme in THEMES:
        for w in theme["vocab"]:
            if w in pools.afinn_terms or w in stopwords:
                raise AssertionError(f"theme word clashes with lexicons: {w}")

    n_weeks = len(WEEKS)
    base, rem = divmod(n_tweets, n_weeks)
    per_week = [base + (1 if i < rem else 0) for i in range(n_weeks)]

    # exact controversy placement: spread slots over weeks, assign countries
    contro_weeks = [i % n_weeks for i in range(CONTROVERSY_TOTAL)]
    countries = ["US"] * CONTROVERSY_US + [
        CONTROVERSY_OTHER[i % len(CONTROVERSY_OTHER)]
        for i in range(CONTROVERSY_TOTAL - CONTROVERSY_US)
    ]
    rng.shuffle(countries)
    contro_byweek: dict[int, list[str]] = {}
    for w, c in zip(contro_weeks, countries):
        contro_byweek.setdefault(w, []).append(c)

    theme_by_week = {t["week_index"]: t for t in THEMES}
    records = []
    tweet_no = 0
    contro_count_by_country: dict[str, int] = {}

    for wi, monday in enumerate(WEEK_MONDAYS):
        contro_slots = list(contro_byweek.get(wi, []))
        theme = theme_by_week.get(wi)
        for j in range(per_week[wi]):
            tokens: list[str] = []
            country = rng.choice(COUNTRY_POOL)
            is_contro = bool(contro_slots)
            if is_contro:
                country = contro_slots.pop()
                contro_count_by_country[country] = \
                    contro_count_by_country.get(country, 0) + 1
                phrase = rng.choice(CONTROVERSY_PHRASES)
                if rng.random() < 0.3:
                    tokens.append("#" + phrase.title().replace(" ", ""))
                else:
                    tokens.append(phrase)
                tokens.extend(rng.sample(CONTROVERSY_COOC,
                                         rng.randint(1, 3)))
                tokens.extend(rng.sample(BACKGROUND, rng.randint(2, 4)))
            elif theme is not None and rng.random() < 0.55:
                tokens.extend(rng.choice(theme["vocab"])
                              for _ in range(rng.randint(8, 12)))
                tokens.extend(rng.sample(BACKGROUND, rng.randint(1, 3)))
            else:
                tokens.extend(rng.sample(BACKGROUND, rng.randint(4, 8)))

            # planted sentiment profile
            if wi == NEGATIVE_WEEK_INDEX:
                if rng.random() < 0.85:
                    tokens.extend(rng.choice(pools.strong_negative)
                                  for _ in range(rng.randint(2, 3)))
                elif rng.random() < 0.5:
                    tokens.append(rng.choice(pools.positive))
            else:
                r = rng.random()
                if r < 0.50:
                    tokens.extend(rng.choice(pools.positive)
                                  for _ in range(rng.randint(1, 2)))
                elif r < 0.75:
                    tokens.append(rng.choice(pools.mild_negative))

            rng.shuffle(tokens)
            day = monday + timedelta(days=rng.randrange(7))
            at = datetime.combine(
                day,
                time(rng.randrange(24), rng.randrange(60), rng.randrange(60)),
                tzinfo=timezone.utc,
            )
            record = {
                "id": f"s{tweet_no:05d}",
                "created_at": at.isoformat().replace("+00:00", "Z"),
                "text": _sentence(rng, tokens),
                "lang": "en" if rng.random() < 0.9 else None,
                "country": country,
                "user_id": f"u{rng.randrange(400):03d}",
                "is_retweet": rng.random() < 0.15,
            }
            if record["lang"] is None:
                del record["lang"]
            if record["country"] is None:
                del record["country"]
            records.append(record)
            tweet_no += 1

    out = Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        for rec in records:
            f.write(json.dumps(rec, sort_keys=True) + "\n")

    truth = Truth(
        seed=seed,
        n_tweets=n_tweets,
        weeks=list(WEEKS),
        negative_week=WEEKS[NEGATIVE_WEEK_INDEX],
        themes=[{"week": WEEKS[t["week_index"]], "signature": t["signature"],
                 "vocab": list(t["vocab"])} for t in THEMES],
        controversy={
            "total": CONTROVERSY_TOTAL,
            "us": CONTROVERSY_US,
            "by_country": dict(sorted(contro_count_by_country.items())),
            "phrases": list(CONTROVERSY_PHRASES),
        },
    )
    if truth_path is not None:
        Path(truth_path).write_text(
            json.dumps(truth.to_dict(), indent=1, sort_keys=True) + "\n",
            encoding="utf-8")
    return truth
