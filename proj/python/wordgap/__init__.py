"""Exact word-map probabilities and identity-gap surveys on finite groups."""

from wordgap._core import (  # noqa: F401
    Group,
    Word,
    ExactProbability,
    word_probability,
    coset_probability,
    reduction_check,
    decomposition_check,
    sample_probability,
    fixed_points_report,
    vsmb_check_word,
    vsmb_prune,
    badness,
    gamma_recursion,
    survey_corpus,
    __version__,
)

__all__ = [
    "Group",
    "Word",
    "ExactProbability",
    "word_probability",
    "coset_probability",
    "reduction_check",
    "decomposition_check",
    "sample_probability",
    "fixed_points_report",
    "vsmb_check_word",
    "vsmb_prune",
    "badness",
    "gamma_recursion",
    "survey_corpus",
    "__version__",
]
