"""Sliding-window phrase search: enumerate candidates, score them, pick the best.

A candidate is any historical window of length N whose P-step follower lies
fully inside observed history. The query phrase is always the last N values.
Search is an exhaustive linear scan; at desk scale that keeps correctness
trivially auditable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NoValidCandidate, SeriesTooShort, UndefinedCorrelation
from .series import TimeSeries, detrend, fit_linear_trend, pearson


class SimilarityCriterion(enum.Enum):
    """How candidate phrases are compared to the query phrase.

    DIFFERENCE: sum of absolute element-wise differences, minimized (0 means
    the phrases coincide). CORRELATION: sample Pearson correlation, maximized.
    """

    DIFFERENCE = "difference"
    CORRELATION = "correlation"


@dataclass(frozen=True)
class WindowMatch:
    start: int  # 1-based position of the candidate window's first element
    score: float
    criterion: SimilarityCriterion


def enumerate_candidates(series_length: int, window: int, horizon: int) -> range:
    """All admissible 1-based start indices, increasing.

    A start s is admissible when the window and its horizon-length follower
    both fit in history: 1 <= s <= K - N - P + 1. Requires K >= N + P + 1 so
    at least one candidate exists apart from the query itself.
    """
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    minimum = window + horizon + 1
    if series_length < minimum:
        raise SeriesTooShort(series_length, minimum)
    return range(1, series_length - window - horizon + 2)


def score_window(
    query,
    candidate,
    criterion: SimilarityCriterion,
    detrend_mode: bool = False,
) -> float:
    """Score one candidate against the query under the chosen criterion.

    With detrend_mode, both windows are independently detrended (own
    least-squares line over local positions) before scoring. Raises
    UndefinedCorrelation for zero-variance windows under CORRELATION.
    """
    q = np.asarray(query, dtype=np.float64)
    c = np.asarray(candidate, dtype=np.float64)
    if q.size != c.size:
        raise ValueError(f"length mismatch: {q.size} vs {c.size}")
    if detrend_mode:
        q = detrend(q, fit_linear_trend(q))
        c = detrend(c, fit_linear_trend(c))
    if criterion is SimilarityCriterion.DIFFERENCE:
        return float(np.abs(q - c).sum())
    return pearson(q, c)


def find_best_match(
    series: TimeSeries,
    window: int,
    horizon: int,
    criterion: SimilarityCriterion,
    detrend_mode: bool = False,
) -> WindowMatch:
    """Best-scoring candidate; ties go to the most recent (largest) start.

    Under CORRELATION, candidates whose score is undefined are skipped;
    NoValidCandidate is raised if none survive.
    """
    values = series.values
    k = values.size
    starts = enumerate_candidates(k, window, horizon)
    query = values[k - window :]

    best_start = None
    best_score = None
    for s in starts:
        candidate = values[s - 1 : s - 1 + window]
        try:
            score = score_window(query, candidate, criterion, detrend_mode)
        except UndefinedCorrelation:
            continue
        if best_score is None:
            best_start, best_score = s, score
        elif criterion is SimilarityCriterion.DIFFERENCE:
            if score <= best_score:
                best_start, best_score = s, score
        else:
            if score >= best_score:
                best_start, best_score = s, score
    if best_start is None:
        raise NoValidCandidate(
            "every candidate window was excluded under the correlation criterion"
        )
    return WindowMatch(best_start, best_score, criterion)
