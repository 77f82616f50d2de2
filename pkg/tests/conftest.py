import sys
from pathlib import Path
from types import SimpleNamespace

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tweetscope.cli import main as cli_main
from tweetscope.ingest import load_stopwords
from tweetscope.lexicon import load_afinn, load_nrc
from tweetscope.synth import generate_fixture


@pytest.fixture(scope="session")
def afinn():
    return load_afinn()


@pytest.fixture(scope="session")
def nrc():
    return load_nrc()


@pytest.fixture(scope="session")
def stopwords():
    return load_stopwords()


@pytest.fixture(scope="session")
def pipeline(tmp_path_factory):
    """Synthetic corpus run through every batch stage, once per session."""
    root = tmp_path_factory.mktemp("pipeline")
    tweets = root / "tweets.jsonl"
    truth = generate_fixture(tweets, seed=42, truth_path=root / "truth.json")
    data = root / "data"
    for argv in (
        ["ingest", str(tweets), "--out", str(data)],
        ["analyze", str(data)],
        ["topics", str(data)],
        ["controversy", str(data)],
    ):
        assert cli_main(argv) == 0, f"stage failed: {argv[0]}"
    return SimpleNamespace(root=root, data=data, tweets=tweets, truth=truth)
