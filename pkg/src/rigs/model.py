"""Weight vectors for random intersection graphs.

A model instance is (n, p) where p = (p_1, ..., p_m) assigns attribute i
its membership probability.  The criticality parameter n * sum(p_i^2)
locates the phase transition at 1.
"""

import json
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

UNIFORM = "uniform"
POWERLAW = "powerlaw"
EXPLICIT = "explicit"

DEFAULT_EPS_C = 0.01


class WeightConstructionError(ValueError):
    """A spec cannot be realized as a valid probability vector."""


@dataclass(frozen=True)
class WeightSpec:
    """Declarative description of a weight vector.

    kind "uniform":  p_i = sqrt(c / (m * n)) for all i.
    kind "powerlaw": p_i = s * i**(-tau), s scaled so n * sum(p_i^2) = c.
    kind "explicit": values used verbatim.
    """

    n: int
    kind: str
    c: Optional[float] = None
    m: Optional[int] = None
    tau: Optional[float] = None
    values: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if self.n < 1:
            raise WeightConstructionError("n must be >= 1, got %r" % (self.n,))
        if self.kind in (UNIFORM, POWERLAW):
            if self.c is None or self.c < 0:
                raise WeightConstructionError(
                    "%s spec needs c >= 0, got %r" % (self.kind, self.c)
                )
            if self.m is None or self.m < 1:
                raise WeightConstructionError(
                    "%s spec needs m >= 1, got %r" % (self.kind, self.m)
                )
            if self.kind == POWERLAW:
                if self.tau is None or self.tau <= 0:
                    raise WeightConstructionError(
                        "powerlaw spec needs tau > 0, got %r" % (self.tau,)
                    )
                if self.c <= 0:
                    raise WeightConstructionError("powerlaw spec needs c > 0")
        elif self.kind == EXPLICIT:
            if not self.values:
                raise WeightConstructionError("explicit spec needs values")
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))
            for i, v in enumerate(self.values):
                if not 0.0 <= v <= 1.0:
                    raise WeightConstructionError(
                        "explicit value %d is %r, outside [0, 1]" % (i, v)
                    )
        else:
            raise WeightConstructionError("unknown kind %r" % (self.kind,))

    def to_json(self):
        model = {"kind": self.kind}
        if self.kind in (UNIFORM, POWERLAW):
            model["c"] = self.c
            model["m"] = self.m
        if self.kind == POWERLAW:
            model["tau"] = self.tau
        if self.kind == EXPLICIT:
            model["values"] = list(self.values)
        return {"n": self.n, "model": model}

    @classmethod
    def from_json(cls, obj):
        model = obj["model"]
        return cls(
            n=int(obj["n"]),
            kind=model["kind"],
            c=model.get("c"),
            m=int(model["m"]) if model.get("m") is not None else None,
            tau=model.get("tau"),
            values=tuple(model["values"]) if model.get("values") is not None else None,
        )

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))

    def dumps(self):
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class AttributeWeights:
    """A concrete weight vector with its derived criticality."""

    p: np.ndarray
    n: int
    c: float
    p_max: float

    @property
    def m(self):
        return len(self.p)

    def __post_init__(self):
        self.p.setflags(write=False)


@dataclass(frozen=True)
class RegimeReport:
    c: float
    p_max: float
    gamma_witness: Optional[float]
    phase: str  # "subcritical" | "critical" | "supercritical"
    theorem2_hypotheses_met: bool

    def to_json(self):
        return {
            "c": self.c,
            "p_max": self.p_max,
            "gamma_witness": self.gamma_witness,
            "phase": self.phase,
            "theorem2_hypotheses_met": self.theorem2_hypotheses_met,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            c=float(obj["c"]),
            p_max=float(obj["p_max"]),
            gamma_witness=obj.get("gamma_witness"),
            phase=obj["phase"],
            theorem2_hypotheses_met=bool(obj["theorem2_hypotheses_met"]),
        )


def _finish(p, n):
    if len(p) and p.max() > 1.0:
        idx = int(np.argmax(p))
        raise WeightConstructionError(
            "computed p_%d = %r > 1; refuse to clamp" % (idx, float(p[idx]))
        )
    return AttributeWeights(
        p=p, n=n, c=n * math.fsum(float(v) * float(v) for v in p),
        p_max=float(p.max()) if len(p) else 0.0,
    )


def build_weights(spec):
    """Realize a WeightSpec as a concrete AttributeWeights vector."""
    n = spec.n
    if spec.kind == UNIFORM:
        pi = math.sqrt(spec.c / (spec.m * n))
        return _finish(np.full(spec.m, pi, dtype=np.float64), n)
    if spec.kind == POWERLAW:
        i = np.arange(1, spec.m + 1, dtype=np.float64)
        base = i ** (-spec.tau)
        s = math.sqrt(spec.c / (n * math.fsum(float(b) * float(b) for b in base)))
        return _finish(s * base, n)
    return _finish(np.asarray(spec.values, dtype=np.float64), n)


def criticality(w):
    """n * sum(p_i^2), exactly-rounded summation (fsum)."""
    return w.n * math.fsum(float(v) * float(v) for v in w.p)


def regime(w, epsilon_c=DEFAULT_EPS_C):
    """Classify (n, p) relative to the phase transition at c = 1."""
    if not 0.0 < epsilon_c < 0.5:
        raise ValueError("epsilon_c must be in (0, 0.5), got %r" % (epsilon_c,))
    c = w.c
    if c < 1.0 - epsilon_c:
        phase = "subcritical"
    elif c > 1.0 + epsilon_c:
        phase = "supercritical"
    else:
        phase = "critical"
    gamma = None
    if 0.0 < w.p_max < 1.0 and w.n > 1:
        gamma = -math.log(w.p_max) / math.log(w.n)
    met = phase == "supercritical" and gamma is not None and gamma > 0.5
    return RegimeReport(
        c=c, p_max=w.p_max, gamma_witness=gamma, phase=phase,
        theorem2_hypotheses_met=met,
    )
