"""Association-rule word sets with Naive Bayes text classification."""

from ._assocnb import (
    AssocNBError,
    Model,
    classify,
    frequent_words,
    mine,
    rules,
    synthetic_corpus,
    tokenize,
    train,
)

__all__ = [
    "AssocNBError",
    "Model",
    "classify",
    "frequent_words",
    "mine",
    "rules",
    "synthetic_corpus",
    "tokenize",
    "train",
]
