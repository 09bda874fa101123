"""Value types for the two-hypothesis frame {H, not-H}.

A basic mass assignment spreads unit mass over {H}, {not-H} and the whole
frame (the empty set carries none).  At this frame size the induced belief
and plausibility functions collapse to the single pair (Bel({H}), Pl({H})),
so both forms are kept as first-class, losslessly convertible value types:
the combination rule is naturally stated on masses, while most reasoning and
all the weight-of-evidence machinery works on intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError

#: Tolerance for the sum-to-one invariant; inputs inside it are renormalized
#: (serialized values accumulate decimal rounding noise).
SUM_TOLERANCE = 1e-12


def _clamp_unit(value: float, name: str) -> float:
    """Coerce a real into [0, 1], allowing SUM_TOLERANCE of rounding slack."""
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be a finite real, got {value!r}")
    if value < 0.0:
        if value < -SUM_TOLERANCE:
            raise ValidationError(f"{name} must be in [0, 1], got {value!r}")
        return 0.0
    if value > 1.0:
        if value > 1.0 + SUM_TOLERANCE:
            raise ValidationError(f"{name} must be in [0, 1], got {value!r}")
        return 1.0
    return value


@dataclass(frozen=True)
class MassAssignment:
    """Mass on {H}, {not-H} and the frame; must sum to one."""

    m_h: float
    m_not_h: float
    m_theta: float

    def __post_init__(self):
        h = _clamp_unit(self.m_h, "m_h")
        nh = _clamp_unit(self.m_not_h, "m_not_h")
        th = _clamp_unit(self.m_theta, "m_theta")
        total = h + nh + th
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValidationError(f"masses must sum to 1, got {total!r}")
        if total != 1.0:
            h, nh, th = h / total, nh / total, th / total
        object.__setattr__(self, "m_h", h)
        object.__setattr__(self, "m_not_h", nh)
        object.__setattr__(self, "m_theta", th)

    @classmethod
    def vacuous(cls) -> MassAssignment:
        """The no-evidence assignment: all mass on the frame."""
        return cls(0.0, 0.0, 1.0)

    def to_dict(self) -> dict:
        return {"m_h": self.m_h, "m_not_h": self.m_not_h, "m_theta": self.m_theta}

    @classmethod
    def from_dict(cls, data) -> MassAssignment:
        try:
            return cls(float(data["m_h"]), float(data["m_not_h"]), float(data["m_theta"]))
        except ValidationError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad mass object: {data!r}") from exc


@dataclass(frozen=True)
class BeliefInterval:
    """The pair (Bel({H}), Pl({H})); bel == pl is the Bayesian special case."""

    bel: float
    pl: float

    def __post_init__(self):
        bel = _clamp_unit(self.bel, "bel")
        pl = _clamp_unit(self.pl, "pl")
        if bel > pl:
            if bel - pl > SUM_TOLERANCE:
                raise ValidationError(f"bel must not exceed pl, got ({bel!r}, {pl!r})")
            bel = pl = 0.5 * (bel + pl)
        object.__setattr__(self, "bel", bel)
        object.__setattr__(self, "pl", pl)

    @property
    def is_bayesian(self) -> bool:
        return self.bel == self.pl

    @classmethod
    def vacuous(cls) -> BeliefInterval:
        return cls(0.0, 1.0)

    def to_dict(self) -> dict:
        return {"bel": self.bel, "pl": self.pl}

    @classmethod
    def from_dict(cls, data) -> BeliefInterval:
        try:
            return cls(float(data["bel"]), float(data["pl"]))
        except ValidationError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad belief interval object: {data!r}") from exc


def mass_to_interval(m: MassAssignment) -> BeliefInterval:
    """Bel({H}) is the mass on {H}; Pl({H}) is everything not against it."""
    return BeliefInterval(m.m_h, 1.0 - m.m_not_h)


def interval_to_mass(iv: BeliefInterval) -> MassAssignment:
    """Inverse of mass_to_interval; the frame keeps the width pl - bel."""
    return MassAssignment(iv.bel, 1.0 - iv.pl, iv.pl - iv.bel)
