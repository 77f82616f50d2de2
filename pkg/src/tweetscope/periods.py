"""Day and ISO-week period keys: formatting, parsing, ordering, iteration.

A day key is ``YYYY-MM-DD``; a week key is ``YYYY-Www`` using the ISO-8601
week-numbering year (so 2019-12-30 belongs to 2020-W01).
"""

from __future__ import annotations

import re
from datetime import date, timedelta

WEEK_RE = re.compile(r"^(\d{4})-W(\d{2})$")
DAY_RE = re.compile(r"^(\d{4})-(\d{2})-(\d{2})$")

GRANULARITIES = ("day", "week")


def day_key(d: date) -> str:
    return d.isoformat()


def week_key(d: date) -> str:
    iso = d.isocalendar()
    return f"{iso[0]}-W{iso[1]:02d}"


def parse_day(key: str) -> date:
    if not DAY_RE.match(key):
        raise ValueError(f"not a day key: {key!r}")
    return date.fromisoformat(key)


def parse_week(key: str) -> date:
    """Return the Monday of the ISO week named by ``key``."""
    m = WEEK_RE.match(key)
    if not m:
        raise ValueError(f"not a week key: {key!r}")
    year, week = int(m.group(1)), int(m.group(2))
    return date.fromisocalendar(year, week, 1)


def parse_period(key: str, granularity: str) -> date:
    if granularity == "day":
        return parse_day(key)
    if granularity == "week":
        return parse_week(key)
    raise ValueError(f"unknown granularity: {granularity!r}")


def format_period(d: date, granularity: str) -> str:
    if granularity == "day":
        return day_key(d)
    if granularity == "week":
        return week_key(d)
    raise ValueError(f"unknown granularity: {granularity!r}")


def period_range(from_key: str, to_key: str, granularity: str) -> list[str]:
    """All period keys from ``from_key`` to ``to_key`` inclusive, ascending.

    Raises ValueError on malformed keys; caller checks from <= to first via
    :func:`parse_period` if it wants a distinct error.
    """
    start = parse_period(from_key, granularity)
    stop = parse_period(to_key, granularity)
    step = timedelta(days=1 if granularity == "day" else 7)
    out = []
    cur = start
    while cur <= stop:
        out.append(format_period(cur, granularity))
        cur += step
    return out
