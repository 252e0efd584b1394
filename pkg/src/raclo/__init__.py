"""Recall-search-verify pipeline for finding full-length videos on the open
web from fuzzy, multi-dimensional memory cues, plus the evaluation harness
that scores retrieval recall and judged moment localization separately."""

__version__ = "0.1.0"
