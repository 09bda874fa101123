"""The weight-of-evidence scale.

Positive and negative evidence carry nonnegative weights that add when
distinct bodies of evidence are pooled.  A weight pair maps onto the belief
scale through s = 1 - e^{-w} and back through logarithms; iterating the
combination rule is therefore the same thing as adding weights.  Infinite
total weight collapses the interval to a Bayesian point whose position
depends only on the limiting difference of the two weights, so the infinite
case is an explicit tagged representation carrying that difference rather
than a capped large number (a cap would destroy the limit).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .binary_frame import SUM_TOLERANCE, BeliefInterval
from .errors import InfiniteEvidenceError, ValidationError, ZeroEvidenceError

#: Exact-tie tolerance for the limit classification.
TIE_TOLERANCE = 1e-12

FINITE = "finite"
INFINITE = "infinite"


@dataclass(frozen=True)
class EvidenceWeights:
    """Weights of positive and negative evidence for one hypothesis.

    kind "finite" carries (w_plus, w_minus); kind "infinite" carries only
    delta, the limit of w_minus - w_plus (with +/-inf encoding the certain
    endpoints 0 and 1 of the belief scale).
    """

    kind: str
    w_plus: float | None = None
    w_minus: float | None = None
    delta: float | None = None

    def __post_init__(self):
        if self.kind == FINITE:
            if self.w_plus is None or self.w_minus is None:
                raise ValidationError("finite weights need both w_plus and w_minus")
            wp, wm = float(self.w_plus), float(self.w_minus)
            if not (math.isfinite(wp) and math.isfinite(wm)) or wp < -SUM_TOLERANCE or wm < -SUM_TOLERANCE:
                raise ValidationError(
                    f"weights must be finite and nonnegative, got ({self.w_plus!r}, {self.w_minus!r})"
                )
            # rounding noise from log-based inversions may dip just below zero
            wp, wm = max(wp, 0.0), max(wm, 0.0)
            object.__setattr__(self, "w_plus", wp)
            object.__setattr__(self, "w_minus", wm)
            object.__setattr__(self, "delta", None)
        elif self.kind == INFINITE:
            if self.delta is None:
                raise ValidationError("infinite weights need delta, the w_minus - w_plus limit")
            d = float(self.delta)
            if math.isnan(d):
                raise ValidationError("delta must not be NaN")
            object.__setattr__(self, "delta", d)
            object.__setattr__(self, "w_plus", None)
            object.__setattr__(self, "w_minus", None)
        else:
            raise ValidationError(f"unknown weights kind {self.kind!r}")

    @classmethod
    def finite(cls, w_plus: float, w_minus: float) -> EvidenceWeights:
        return cls(FINITE, w_plus=w_plus, w_minus=w_minus)

    @classmethod
    def infinite(cls, delta: float) -> EvidenceWeights:
        return cls(INFINITE, delta=delta)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def to_dict(self) -> dict:
        if self.is_finite:
            return {"kind": FINITE, "w_plus": self.w_plus, "w_minus": self.w_minus}
        return {"kind": INFINITE, "delta": self.delta}

    @classmethod
    def from_dict(cls, data) -> EvidenceWeights:
        try:
            kind = data["kind"]
            if kind == FINITE:
                return cls.finite(float(data["w_plus"]), float(data["w_minus"]))
            if kind == INFINITE:
                return cls.infinite(float(data["delta"]))
            raise ValidationError(f"unknown weights kind {kind!r}")
        except ValidationError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad weights object: {data!r}") from exc


@dataclass(frozen=True)
class UnitWeights:
    """Weight carried by a single positive or negative outcome."""

    w0_plus: float = 1.0
    w0_minus: float = 1.0

    def __post_init__(self):
        for name, value in (("w0_plus", self.w0_plus), ("w0_minus", self.w0_minus)):
            value = float(value)
            if not math.isfinite(value) or value <= 0.0:
                raise ValidationError(f"{name} must be a finite positive real, got {value!r}")
            object.__setattr__(self, name, value)


def support_from_weight(w: float) -> float:
    """Degree of support earned by evidence of weight w: 1 - e^{-w}.

    Satisfies g(w1 + w2) = 1 - (1 - g(w1))(1 - g(w2)), which is what makes
    additive weights and Bernoulli's rule two views of the same operation.
    """
    if not math.isfinite(w) or w < 0.0:
        raise ValidationError(f"weight must be a finite nonnegative real, got {w!r}")
    return -math.expm1(-w)


def belief_from_weights(w: EvidenceWeights) -> BeliefInterval:
    """Map accumulated weights to the belief interval.

    Finite weights give bel = (e^{w+} - 1) / (e^{w+} + e^{w-} - 1) and
    pl = bel + 1 / (e^{w+} + e^{w-} - 1).  The largest exponential is
    factored out first so no intermediate leaves double range for any finite
    weights, and pl is built as bel plus the exactly computed width so the
    stored interval keeps its width to a single rounding.  Infinite weights
    give the Bayesian point 1 / (1 + e^{delta}).
    """
    if not w.is_finite:
        point = delta_limit(w.delta)
        return BeliefInterval(point, point)
    wp, wm = w.w_plus, w.w_minus
    biggest = max(wp, wm)
    scaled_p = math.exp(wp - biggest)
    denom = scaled_p + math.exp(wm - biggest) - math.exp(-biggest)
    bel = scaled_p * -math.expm1(-wp) / denom
    width = math.exp(-biggest) / denom
    return BeliefInterval(bel, bel + width)


def weights_from_belief(iv: BeliefInterval) -> EvidenceWeights:
    """Recover the weights behind a belief interval.

    A strictly inner interval has the finite preimage
    w+ = log(pl / (pl - bel)), w- = log((1 - bel) / (pl - bel)); a Bayesian
    point carries infinite total weight, of which only delta survives.
    """
    bel, pl = iv.bel, iv.pl
    if bel == pl:
        if bel <= 0.0:
            return EvidenceWeights.infinite(math.inf)
        if bel >= 1.0:
            return EvidenceWeights.infinite(-math.inf)
        return EvidenceWeights.infinite(math.log((1.0 - bel) / bel))
    log_width = math.log(pl - bel)
    return EvidenceWeights.finite(
        math.log(pl) - log_width, math.log1p(-bel) - log_width
    )


def add_weights(w1: EvidenceWeights, w2: EvidenceWeights) -> EvidenceWeights:
    """Pool distinct bodies of evidence by adding weights componentwise."""
    if not (w1.is_finite and w2.is_finite):
        raise InfiniteEvidenceError(
            "cannot add infinite weights; combine them as frequency points instead"
        )
    return EvidenceWeights.finite(w1.w_plus + w2.w_plus, w1.w_minus + w2.w_minus)


def multiply_combine(b1: float, b2: float) -> float:
    """Pool two Bayesian beliefs under multiplicative weights.

    b1*b2 / (b1*b2 + (1 - b1)(1 - b2)), defined strictly inside (0, 1); it
    coincides with the interval rule restricted to Bayesian inputs.  Note
    0.5 is its identity, so pooled evidence no longer accumulates.
    """
    for name, b in (("b1", b1), ("b2", b2)):
        if not 0.0 < b < 1.0:
            raise ValidationError(f"{name} must lie strictly inside (0, 1), got {b!r}")
    num = b1 * b2
    return num / (num + (1.0 - b1) * (1.0 - b2))


def positive_proportion(iv: BeliefInterval) -> float:
    """Share of the total evidence weight that is positive, w+ / w.

    Equals (log p - log(p - b)) / (log p + log(1 - b) - 2 log(p - b)) with
    b = bel and p = pl.
    """
    bel, pl = iv.bel, iv.pl
    if bel == pl:
        raise InfiniteEvidenceError(
            "a Bayesian point carries infinite weight; the proportion is undefined"
        )
    if bel == 0.0 and pl == 1.0:
        raise ZeroEvidenceError("the vacuous interval carries zero weight (0/0)")
    log_pl = math.log(pl)
    log_width = math.log(pl - bel)
    positive = log_pl - log_width
    total = log_pl + math.log1p(-bel) - 2.0 * log_width
    # positive <= total up to rounding; keep the ratio inside [0, 1]
    return min(1.0, max(0.0, positive / total))


def classify_limit(q: float, unit: UnitWeights) -> float:
    """Limit of iterated Dempster combination over outcomes with positive
    rate q: 0, 0.5 or 1 by the sign of w0+*q - w0-*(1 - q).

    The tie is only meaningful for exactly representable inputs; it is
    resolved with tolerance TIE_TOLERANCE.
    """
    if not 0.0 <= q <= 1.0:
        raise ValidationError(f"q must be in [0, 1], got {q!r}")
    diff = unit.w0_plus * q - unit.w0_minus * (1.0 - q)
    if abs(diff) <= TIE_TOLERANCE:
        return 0.5
    return 1.0 if diff > 0.0 else 0.0


def delta_limit(delta: float) -> float:
    """Bayesian point reached when w- - w+ stabilizes at delta: 1/(1 + e^delta).

    Evaluated on the side that never overflows, and written so that
    delta_limit(-d) == 1 - delta_limit(d) holds exactly in floating point.
    """
    if math.isnan(delta):
        raise ValidationError("delta must not be NaN")
    if delta >= 0.0:
        z = math.exp(-delta)
        return z / (1.0 + z)
    z = math.exp(delta)
    return 1.0 - z / (1.0 + z)
