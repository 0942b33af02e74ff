"""Chernoff and Chung-Lu tail-bound calculators.

Pure one-sided calculators: the test suite uses them as oracles that
empirical tails must never exceed.  Upper bounds clamp at 1 instead of
erroring when vacuous; the lower-bound form errors when its denominator
is nonpositive, where the formula itself is undefined.
"""

import math
from dataclasses import dataclass, field
from typing import Dict

CHERNOFF_UPPER = "chernoff_upper"
CHUNG_LU_UPPER = "chung_lu_upper"
CHUNG_LU_LOWER = "chung_lu_lower"


@dataclass(frozen=True)
class TailBound:
    bound: float  # in [0, 1]
    kind: str
    parameters: Dict[str, float] = field(default_factory=dict)


def chernoff_upper(n, p, t):
    """P[Bin(n, p) >= np + t] <= exp(-t^2 / (2 (np + t/3)))."""
    if t <= 0:
        raise ValueError("t must be > 0, got %r" % (t,))
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1], got %r" % (p,))
    bound = min(1.0, math.exp(-t * t / (2.0 * (n * p + t / 3.0))))
    return TailBound(bound=bound, kind=CHERNOFF_UPPER,
                     parameters={"n": n, "p": p, "t": t})


def chung_lu_upper(norm_sq, M2, lam):
    """P[Y >= E[Y] + lam] <= exp(-lam^2 / (2 (||Y||^2 + M2 lam / 3)))."""
    if lam <= 0:
        raise ValueError("lambda must be > 0, got %r" % (lam,))
    if norm_sq < 0:
        raise ValueError("norm_sq must be >= 0, got %r" % (norm_sq,))
    bound = min(1.0, math.exp(-lam * lam / (2.0 * (norm_sq + M2 * lam / 3.0))))
    return TailBound(bound=bound, kind=CHUNG_LU_UPPER,
                     parameters={"norm_sq": norm_sq, "M2": M2, "lambda": lam})


def chung_lu_lower(norm_sq, M1, lam):
    """P[Y <= E[Y] - lam] <= exp(-lam^2 / (2 (||Y||^2 - M1 lam / 3)))."""
    if lam <= 0:
        raise ValueError("lambda must be > 0, got %r" % (lam,))
    if norm_sq < 0:
        raise ValueError("norm_sq must be >= 0, got %r" % (norm_sq,))
    denom = 2.0 * (norm_sq - M1 * lam / 3.0)
    if denom <= 0:
        raise ValueError(
            "lower bound undefined: 2(||Y||^2 - M1 lam/3) = %r <= 0" % (denom,)
        )
    bound = min(1.0, math.exp(-lam * lam / denom))
    return TailBound(bound=bound, kind=CHUNG_LU_LOWER,
                     parameters={"norm_sq": norm_sq, "M1": M1, "lambda": lam})
