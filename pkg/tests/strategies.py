"""Shared hypothesis strategies for evidence values."""

from hypothesis import strategies as st

from evcalc import (
    BeliefInterval,
    EvidenceCounts,
    EvidenceWeights,
    MassAssignment,
    belief_from_weights,
)


def unit_floats(min_value=0.0, max_value=1.0):
    return st.floats(min_value=min_value, max_value=max_value, allow_nan=False, allow_infinity=False)


@st.composite
def mass_assignments(draw, floor=0.0):
    """Three uniform parts, normalized; floor keeps combinations well conditioned."""
    parts = [draw(st.floats(min_value=floor, max_value=1.0, allow_nan=False)) for _ in range(3)]
    total = sum(parts)
    if total == 0.0:
        return MassAssignment.vacuous()
    return MassAssignment(parts[0] / total, parts[1] / total, parts[2] / total)


@st.composite
def belief_intervals(draw):
    bel = draw(unit_floats())
    pl = draw(st.floats(min_value=bel, max_value=1.0, allow_nan=False))
    return BeliefInterval(bel, pl)


@st.composite
def finite_weights(draw, max_weight=8.0):
    return EvidenceWeights.finite(
        draw(st.floats(min_value=0.0, max_value=max_weight, allow_nan=False)),
        draw(st.floats(min_value=0.0, max_value=max_weight, allow_nan=False)),
    )


@st.composite
def weighted_intervals(draw, max_weight=8.0):
    """Belief intervals with a finite-weight preimage (never Bayesian)."""
    return belief_from_weights(draw(finite_weights(max_weight=max_weight)))


@st.composite
def evidence_counts(draw, min_total=0.0, max_total=1000.0):
    total = draw(st.floats(min_value=min_total, max_value=max_total, allow_nan=False))
    return EvidenceCounts(draw(unit_floats()) * total, total)
