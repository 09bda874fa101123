"""Convergence laboratory: both calculi run in lockstep along a stream.

Each outcome is folded three ways from the same unit weights: a Dempster
track that combines one simple support per outcome into a running (bel, pl)
state, a weight track implied by the recorded counts, and a lower/upper
frequency track.  Recording them side by side makes the divergent limit
behaviour of the two calculi directly comparable: the Dempster track heads
for 0, 0.5 or 1 by the sign of w0+*q - w0-*(1-q), while the frequency track
closes in on the outcome rate q itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .binary_frame import BeliefInterval
from .dempster import combine_interval
from .errors import ValidationError
from .evidence_scale import UnitWeights, classify_limit, delta_limit, support_from_weight
from .lower_upper import EvidenceCounts, frequency, interval_from_counts
from .rng import SplitMix64

MODES = ("bernoulli", "frequency_faithful", "delta_profile", "explicit")

CSV_HEADER = "t,t_plus,bel,pl,l,u,f"


@dataclass(frozen=True)
class StreamSpec:
    """Description of an outcome stream; equal specs replay identically."""

    mode: str
    steps: int | None = None
    q: float | None = None
    delta: float | None = None
    seed: int = 0
    outcomes: tuple[bool, ...] | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "explicit":
            if self.outcomes is None:
                raise ValidationError("explicit mode needs an outcomes sequence")
            outcomes = tuple(bool(o) for o in self.outcomes)
            object.__setattr__(self, "outcomes", outcomes)
            if self.steps is None:
                object.__setattr__(self, "steps", len(outcomes))
            elif self.steps != len(outcomes):
                raise ValidationError(
                    f"steps={self.steps} does not match {len(outcomes)} explicit outcomes"
                )
            return
        if self.steps is None or int(self.steps) != self.steps or self.steps < 0:
            raise ValidationError(f"steps must be a nonnegative integer, got {self.steps!r}")
        object.__setattr__(self, "steps", int(self.steps))
        if self.mode in ("bernoulli", "frequency_faithful"):
            if self.q is None or not 0.0 <= self.q <= 1.0:
                raise ValidationError(f"q must be in [0, 1], got {self.q!r}")
            if int(self.seed) != self.seed or self.seed < 0:
                raise ValidationError(f"seed must be a nonnegative integer, got {self.seed!r}")
        else:  # delta_profile
            if self.delta is None:
                raise ValidationError("delta_profile mode needs delta")
            d = float(self.delta)
            if not d.is_integer() or d < 0.0:
                raise ValidationError(
                    f"delta_profile supports only integer delta >= 0 under unit weights, got {self.delta!r}"
                )
            object.__setattr__(self, "delta", d)


def generate_stream(spec: StreamSpec) -> list[bool]:
    """Materialize the outcome sequence (True = supports the hypothesis)."""
    if spec.mode == "explicit":
        return list(spec.outcomes)
    if spec.mode == "bernoulli":
        rng = SplitMix64(spec.seed)
        return [rng.uniform() < spec.q for _ in range(spec.steps)]
    if spec.mode == "frequency_faithful":
        # positive at step t iff floor(q*t) increments, keeping |t+ - q*t| < 1
        out: list[bool] = []
        prev = 0
        for t in range(1, spec.steps + 1):
            cur = math.floor(spec.q * t)
            out.append(cur > prev)
            prev = cur
        return out
    # delta_profile: delta leading negatives, then strict +/- alternation,
    # so the negative-positive count difference is exactly delta at even steps
    d = int(spec.delta)
    return [False if t < d else (t - d) % 2 == 0 for t in range(spec.steps)]


@dataclass(frozen=True)
class TrajectoryRow:
    t: int
    t_plus: int
    ds_bel: float
    ds_pl: float
    lu_l: float
    lu_u: float
    freq: float | None


def _fmt(value: float) -> str:
    return f"{value:.12g}"


@dataclass(frozen=True)
class Trajectory:
    """Time-indexed record of both calculi's states along one stream."""

    rows: tuple[TrajectoryRow, ...]

    @property
    def final(self) -> TrajectoryRow:
        return self.rows[-1]

    def to_csv(self) -> str:
        """CSV with header t,t_plus,bel,pl,l,u,f; undefined f is left empty."""
        lines = [CSV_HEADER]
        for r in self.rows:
            f = "" if r.freq is None else _fmt(r.freq)
            lines.append(
                f"{r.t},{r.t_plus},{_fmt(r.ds_bel)},{_fmt(r.ds_pl)},"
                f"{_fmt(r.lu_l)},{_fmt(r.lu_u)},{f}"
            )
        return "\n".join(lines) + "\n"


def run_dual_track(
    spec: StreamSpec,
    unit: UnitWeights = UnitWeights(),
    record_every: int = 1,
) -> Trajectory:
    """Fold the stream through both calculi.

    A positive outcome contributes a simple support of weight w0+ on the
    hypothesis, a negative one a simple support of weight w0- against it;
    the frequency track accumulates the same weights as counts.  The start
    row and the final row are always recorded.
    """
    if int(record_every) != record_every or record_every < 1:
        raise ValidationError(f"record_every must be a positive integer, got {record_every!r}")
    outcomes = generate_stream(spec)
    support_pos = BeliefInterval(support_from_weight(unit.w0_plus), 1.0)
    support_neg = BeliefInterval(0.0, 1.0 - support_from_weight(unit.w0_minus))
    state = BeliefInterval.vacuous()
    w_plus = w_minus = 0.0
    t_plus = 0
    rows = [TrajectoryRow(0, 0, 0.0, 1.0, 0.0, 1.0, None)]
    total_steps = len(outcomes)
    for t, positive in enumerate(outcomes, start=1):
        if positive:
            state = combine_interval(state, support_pos)
            w_plus += unit.w0_plus
            t_plus += 1
        else:
            state = combine_interval(state, support_neg)
            w_minus += unit.w0_minus
        if t % record_every == 0 or t == total_steps:
            w = w_plus + w_minus
            fi = interval_from_counts(EvidenceCounts(w_plus, w))
            f = None if w == 0.0 else frequency(fi)
            rows.append(TrajectoryRow(t, t_plus, state.bel, state.pl, fi.l, fi.u, f))
    return Trajectory(tuple(rows))


@dataclass(frozen=True)
class LimitReport:
    """Final trajectory row checked against the analytic limits."""

    mode: str
    final: TrajectoryRow
    predicted_limit: float | None = None
    bel_gap_to_prediction: float | None = None
    q: float | None = None
    freq_gap_to_q: float | None = None
    lower_gap_to_q: float | None = None
    delta: float | None = None
    analytic_point: float | None = None
    bel_gap_to_analytic: float | None = None

    def to_dict(self) -> dict:
        final = self.final
        out = {
            "mode": self.mode,
            "t": final.t,
            "t_plus": final.t_plus,
            "bel": final.ds_bel,
            "pl": final.ds_pl,
            "l": final.lu_l,
            "u": final.lu_u,
            "f": final.freq,
        }
        for key in (
            "predicted_limit",
            "bel_gap_to_prediction",
            "q",
            "freq_gap_to_q",
            "lower_gap_to_q",
            "delta",
            "analytic_point",
            "bel_gap_to_analytic",
        ):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


def check_limits(
    traj: Trajectory,
    spec: StreamSpec,
    unit: UnitWeights = UnitWeights(),
) -> LimitReport:
    """Compare the final row against the limits both calculi predict."""
    final = traj.final
    if spec.mode in ("bernoulli", "frequency_faithful"):
        predicted = classify_limit(spec.q, unit)
        return LimitReport(
            mode=spec.mode,
            final=final,
            predicted_limit=predicted,
            bel_gap_to_prediction=abs(final.ds_bel - predicted),
            q=spec.q,
            freq_gap_to_q=None if final.freq is None else abs(final.freq - spec.q),
            lower_gap_to_q=abs(final.lu_l - spec.q),
        )
    if spec.mode == "delta_profile":
        analytic = delta_limit(spec.delta)
        return LimitReport(
            mode=spec.mode,
            final=final,
            delta=spec.delta,
            analytic_point=analytic,
            bel_gap_to_analytic=abs(final.ds_bel - analytic),
        )
    return LimitReport(mode=spec.mode, final=final)
