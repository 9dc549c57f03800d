"""Closed-form curves for the pure GHZ and W states.

These are independent of the numeric measurement pipeline and exist to
cross-validate it: the conditional-entropy and dissension curves below
must agree with the projective computation at every angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .measures import shannon_pair

# Entropy of the spectrum {2/3, 1/3}, the two-qubit reduction of the W state.
W_PAIR_ENTROPY = math.log2(3.0) - 2.0 / 3.0


def ghz_conditional_analytic(t: float) -> float:
    """Single-qubit conditional entropy of the GHZ state at angle t."""
    c = math.cos(2.0 * t)
    return shannon_pair((1.0 - c) / 2.0, (1.0 + c) / 2.0)


def ghz_d1_analytic(t: float) -> float:
    """Dissension D1 of the GHZ state; ranges over [-3, 1]."""
    return 1.0 - 4.0 * ghz_conditional_analytic(t)


def w_conditional_analytic(t: float) -> float:
    """Single-qubit conditional entropy of the W state at angle t.

    Two measurement branches with probabilities p and 1-p leave the kept
    qubit with Bloch lengths x+ and x-.
    """
    c = math.cos(2.0 * t)
    p = (3.0 + c) / 6.0
    xp = math.sqrt(max((5.0 + 3.0 * c) * (1.0 - c), 0.0)) / (3.0 + c)
    xm = math.sqrt(max((5.0 - 3.0 * c) * (1.0 + c), 0.0)) / (3.0 - c)
    xp = min(xp, 1.0)
    xm = min(xm, 1.0)
    return 1.0 + 0.5 * (
        p * shannon_pair(1.0 + xp, 1.0 - xp) + (1.0 - p) * shannon_pair(1.0 + xm, 1.0 - xm)
    )


def w_d1_analytic(t: float) -> float:
    """Dissension D1 of the W state at angle t."""
    return W_PAIR_ENTROPY - 4.0 * w_conditional_analytic(t)


@dataclass(frozen=True)
class AnalyticCurve:
    state_family: str
    quantity: str
    evaluator: Callable[[float], float]


CURVES = {
    ("ghz", "conditional_entropy"): AnalyticCurve("ghz", "conditional_entropy", ghz_conditional_analytic),
    ("ghz", "d1"): AnalyticCurve("ghz", "d1", ghz_d1_analytic),
    ("w", "conditional_entropy"): AnalyticCurve("w", "conditional_entropy", w_conditional_analytic),
    ("w", "d1"): AnalyticCurve("w", "d1", w_d1_analytic),
}
