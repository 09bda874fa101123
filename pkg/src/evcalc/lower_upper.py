"""Lower and upper frequency intervals.

A body of evidence with positive weight w+ out of total w is summarized by
the interval [w+/(w+k), (w+ + k)/(w+k)]: the range the observed frequency
can move over before the next k units of evidence arrive.  The default
horizon is k = 1, one unit of evidence; any positive horizon works and all
formulas here stay consistent under a fixed choice.  The width 1/(w+k) is
the degree of ignorance: 1 with no evidence, 0 in the infinite-evidence
limit, where the interval degenerates to a probability fixed by convention
that no finite amount of further evidence can move.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .binary_frame import BeliefInterval, _clamp_unit
from .errors import InfiniteEvidenceError, ValidationError, ZeroEvidenceError
from .evidence_scale import EvidenceWeights, belief_from_weights, delta_limit, weights_from_belief

#: Two points closer than this are the same convention.
POINT_TOLERANCE = 1e-12

#: Default horizon constant k in the interval bounds.
DEFAULT_HORIZON = 1.0

KIND_INTERVAL = "interval"
KIND_POINT = "point"


@dataclass(frozen=True)
class FrequencyInterval:
    """Lower and upper frequency pair; zero width means infinite evidence."""

    l: float
    u: float

    def __post_init__(self):
        l = _clamp_unit(self.l, "l")
        u = _clamp_unit(self.u, "u")
        if l > u:
            if l - u > POINT_TOLERANCE:
                raise ValidationError(f"l must not exceed u, got ({l!r}, {u!r})")
            l = u = 0.5 * (l + u)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "u", u)

    @property
    def is_point(self) -> bool:
        return self.l == self.u

    @property
    def kind(self) -> str:
        return KIND_POINT if self.is_point else KIND_INTERVAL

    @classmethod
    def point(cls, value: float) -> FrequencyInterval:
        return cls(value, value)

    @classmethod
    def total_ignorance(cls) -> FrequencyInterval:
        return cls(0.0, 1.0)

    def to_dict(self) -> dict:
        if self.is_point:
            return {"kind": KIND_POINT, "value": self.l}
        return {"kind": KIND_INTERVAL, "l": self.l, "u": self.u}

    @classmethod
    def from_dict(cls, data) -> FrequencyInterval:
        try:
            kind = data["kind"]
            if kind == KIND_POINT:
                return cls.point(float(data["value"]))
            if kind == KIND_INTERVAL:
                return cls(float(data["l"]), float(data["u"]))
            raise ValidationError(f"unknown frequency kind {kind!r}")
        except ValidationError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad frequency object: {data!r}") from exc


@dataclass(frozen=True)
class EvidenceCounts:
    """Accumulated positive and total evidence weight (reals, not integers)."""

    w_plus: float
    w_total: float

    def __post_init__(self):
        wp, wt = float(self.w_plus), float(self.w_total)
        if not (math.isfinite(wp) and math.isfinite(wt)) or wp < 0.0 or wt < 0.0:
            raise ValidationError(f"counts must be finite and nonnegative, got ({wp!r}, {wt!r})")
        if wp > wt:
            if wp - wt > 1e-9 * max(1.0, wt):
                raise ValidationError(f"w_plus must not exceed w_total, got ({wp!r}, {wt!r})")
            wp = wt
        object.__setattr__(self, "w_plus", wp)
        object.__setattr__(self, "w_total", wt)

    def __add__(self, other: EvidenceCounts) -> EvidenceCounts:
        return EvidenceCounts(self.w_plus + other.w_plus, self.w_total + other.w_total)

    def to_dict(self) -> dict:
        return {"w_plus": self.w_plus, "w_total": self.w_total}

    @classmethod
    def from_dict(cls, data) -> EvidenceCounts:
        try:
            return cls(float(data["w_plus"]), float(data["w_total"]))
        except ValidationError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad counts object: {data!r}") from exc


@dataclass(frozen=True)
class ConflictReport:
    """Two unequal infinite-evidence points: reported, never merged.

    This is a normal outcome handed back to whoever maintains the
    conventions, not a failure of the calculus.
    """

    first: float
    second: float

    def to_dict(self) -> dict:
        return {"conflict": [self.first, self.second]}


def _require_horizon(horizon: float) -> float:
    horizon = float(horizon)
    if not math.isfinite(horizon) or horizon <= 0.0:
        raise ValidationError(f"horizon must be a finite positive real, got {horizon!r}")
    return horizon


def interval_from_counts(c: EvidenceCounts, horizon: float = DEFAULT_HORIZON) -> FrequencyInterval:
    """l = w+/(w+k) and u = (w+ + k)/(w+k) for horizon k."""
    k = _require_horizon(horizon)
    scale = c.w_total + k
    return FrequencyInterval(c.w_plus / scale, (c.w_plus + k) / scale)


def counts_from_interval(fi: FrequencyInterval, horizon: float = DEFAULT_HORIZON) -> EvidenceCounts:
    """Invert interval_from_counts; points have no finite counts."""
    k = _require_horizon(horizon)
    if fi.is_point:
        raise InfiniteEvidenceError("a point carries infinite evidence, finite counts do not exist")
    width = fi.u - fi.l
    return EvidenceCounts(k * fi.l / width, k * (1.0 - width) / width)


def frequency(fi: FrequencyInterval) -> float:
    """Observed frequency w+/w recovered from the bounds: l / (l + 1 - u).

    Independent of the horizon; a point is its own frequency; undefined on
    the zero-evidence interval (0, 1).
    """
    if fi.is_point:
        return fi.l
    if fi.l == 0.0 and fi.u == 1.0:
        raise ZeroEvidenceError("no evidence yet; the frequency is 0/0")
    return fi.l / (fi.l + (1.0 - fi.u))


def ignorance(fi: FrequencyInterval) -> float:
    """Interval width, 1/(w+k); shrinks monotonically as evidence arrives."""
    return fi.u - fi.l


def combine_lu(f1: FrequencyInterval, f2: FrequencyInterval) -> FrequencyInterval:
    """Pool two finite bodies of evidence.

    With widths i1, i2 the result is
    l = (l1*i2 + l2*i1) / (i1 + i2 - i1*i2), u = l + i1*i2 / (same), which
    is exactly addition of the underlying counts.  Total ignorance (0, 1)
    is the identity.
    """
    if f1.is_point or f2.is_point:
        raise InfiniteEvidenceError(
            "points cannot be pooled by the interval rule; "
            "use combine_with_point or combine_points"
        )
    i1 = f1.u - f1.l
    i2 = f2.u - f2.l
    denom = i1 + i2 - i1 * i2
    shared = f1.l * i2 + f2.l * i1
    return FrequencyInterval(shared / denom, (shared + i1 * i2) / denom)


def combine_with_point(point: FrequencyInterval, fi: FrequencyInterval) -> FrequencyInterval:
    """Finite evidence cannot move a probability fixed by convention."""
    if not point.is_point or fi.is_point:
        raise ValidationError("expected one point and one genuine interval")
    return point


def combine_points(p1: FrequencyInterval, p2: FrequencyInterval) -> FrequencyInterval | ConflictReport:
    """Identical conventions are deduplicated; unequal ones are reported."""
    if not (p1.is_point and p2.is_point):
        raise ValidationError("both operands must be points")
    if abs(p1.l - p2.l) <= POINT_TOLERANCE:
        return p1
    return ConflictReport(p1.l, p2.l)


def lu_from_belpl(iv: BeliefInterval, horizon: float = DEFAULT_HORIZON) -> FrequencyInterval:
    """Carry a belief interval onto the frequency scale through its weights.

    Bayesian inputs map to points at 1/(1 + e^{delta}).
    """
    w = weights_from_belief(iv)
    if not w.is_finite:
        return FrequencyInterval.point(delta_limit(w.delta))
    return interval_from_counts(EvidenceCounts(w.w_plus, w.w_plus + w.w_minus), horizon)


def belpl_from_lu(fi: FrequencyInterval, horizon: float = DEFAULT_HORIZON) -> BeliefInterval:
    """Inverse of lu_from_belpl, defined only for genuine intervals."""
    if fi.is_point:
        raise InfiniteEvidenceError("a point has no unique finite-weight belief interval")
    c = counts_from_interval(fi, horizon)
    return belief_from_weights(EvidenceWeights.finite(c.w_plus, c.w_total - c.w_plus))
