"""Paths to the data files bundled with the package."""

from importlib.resources import files
from pathlib import Path


def data_path(name: str) -> Path:
    return Path(str(files("tweetscope") / "data" / name))


def default_stopwords_path() -> Path:
    return data_path("stopwords.txt")


def default_afinn_path() -> Path:
    return data_path("afinn-111.txt")


def default_nrc_path() -> Path:
    return data_path("nrc-emolex.txt")


def default_terms_path() -> Path:
    return data_path("controversial_terms.txt")
