"""Exception types shared across the package."""


class TweetscopeError(Exception):
    """Base class for all tweetscope errors."""


class MalformedRecord(TweetscopeError):
    """A JSONL input line could not be parsed into a valid tweet record."""

    def __init__(self, message, line_no=None):
        super().__init__(message if line_no is None else f"line {line_no}: {message}")
        self.line_no = line_no


class MalformedLexicon(TweetscopeError):
    """A lexicon file violates its format contract."""

    def __init__(self, message, line_no=None):
        super().__init__(message if line_no is None else f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyCorpus(TweetscopeError):
    """No usable documents were supplied."""


class EmptyVocabulary(TweetscopeError):
    """No term survived vocabulary filtering."""


class TopicOutOfRange(TweetscopeError):
    """Requested topic index is outside [0, K)."""


class UnknownTerm(TweetscopeError):
    """Requested phrase is not in the configured term list."""


class InvalidRange(TweetscopeError):
    """Query range has from > to."""


class ScoreCorpusMismatch(TweetscopeError):
    """Per-tweet scores do not cover exactly the corpus tweets."""


class CorruptSnapshot(TweetscopeError):
    """Snapshot file failed checksum or structural validation."""
