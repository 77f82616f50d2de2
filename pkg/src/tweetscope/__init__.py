"""Tweet corpus analytics: preprocessing, lexicon affect scoring, weekly
LDA topics, controversial-term tracking, aggregates, and a read-only API."""

__version__ = "0.1.0"
