"""Command-line surface.

Subcommands:
  combine      fold two or more serialized values under Dempster's rule or
               the lower/upper frequency rule
  convert      translate a value between belpl, weights, lu and counts form
  simulate     run an outcome stream through both calculi, emitting CSV
  defect-demo  show iterated Dempster combination leaving the outcome rate
               while the frequency interval tracks it
  delta-demo   show the fold landing on the analytic point 1/(1 + e^delta)

combine and convert read JSON from arguments or stdin and write JSON to
stdout; simulate writes CSV to stdout or --out and its summary to stderr.
Exit codes: 0 success, 1 usage or malformed input, 2 mathematical error,
3 conflict of conventions (a report, not a failure).
"""

from __future__ import annotations

import argparse
import json
import sys

from .binary_frame import BeliefInterval
from .convergence import StreamSpec, check_limits, run_dual_track
from .dempster import combine_interval
from .errors import (
    InfiniteEvidenceError,
    TotalConflictError,
    ValidationError,
    ZeroEvidenceError,
)
from .evidence_scale import (
    EvidenceWeights,
    UnitWeights,
    belief_from_weights,
    delta_limit,
    weights_from_belief,
)
from .lower_upper import (
    ConflictReport,
    EvidenceCounts,
    FrequencyInterval,
    combine_lu,
    combine_points,
    combine_with_point,
    counts_from_interval,
    interval_from_counts,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_CONFLICT = 3

FORMATS = ("belpl", "weights", "lu", "counts")

_PARSERS = {
    "belpl": BeliefInterval.from_dict,
    "weights": EvidenceWeights.from_dict,
    "lu": FrequencyInterval.from_dict,
    "counts": EvidenceCounts.from_dict,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's default 2
        raise _UsageError(message)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed JSON: {exc}") from exc


def _read_values(args) -> list:
    if args.values:
        return [_load_json(v) for v in args.values]
    data = _load_json(sys.stdin.read())
    if not isinstance(data, list):
        raise _UsageError("stdin must hold a JSON array of values")
    return data


def _cmd_combine(args) -> int:
    values = _read_values(args)
    if len(values) < 2:
        raise _UsageError("combine needs at least two values")
    if args.rule == "dempster":
        acc = BeliefInterval.from_dict(values[0])
        for raw in values[1:]:
            acc = combine_interval(acc, BeliefInterval.from_dict(raw))
        print(json.dumps(acc.to_dict()))
        return EXIT_OK
    acc = FrequencyInterval.from_dict(values[0])
    for raw in values[1:]:
        nxt = FrequencyInterval.from_dict(raw)
        if acc.is_point and nxt.is_point:
            merged = combine_points(acc, nxt)
            if isinstance(merged, ConflictReport):
                print(json.dumps(merged.to_dict()))
                return EXIT_CONFLICT
            acc = merged
        elif acc.is_point:
            acc = combine_with_point(acc, nxt)
        elif nxt.is_point:
            acc = combine_with_point(nxt, acc)
        else:
            acc = combine_lu(acc, nxt)
    print(json.dumps(acc.to_dict()))
    return EXIT_OK


def _to_weights(fmt: str, value) -> EvidenceWeights:
    if fmt == "belpl":
        return weights_from_belief(value)
    if fmt == "weights":
        return value
    if fmt == "lu":
        c = counts_from_interval(value)
        return EvidenceWeights.finite(c.w_plus, c.w_total - c.w_plus)
    return EvidenceWeights.finite(value.w_plus, value.w_total - value.w_plus)


def _from_weights(fmt: str, w: EvidenceWeights):
    if fmt == "belpl":
        return belief_from_weights(w)
    if fmt == "weights":
        return w
    if fmt == "lu":
        if not w.is_finite:
            return FrequencyInterval.point(delta_limit(w.delta))
        return interval_from_counts(EvidenceCounts(w.w_plus, w.w_plus + w.w_minus))
    if not w.is_finite:
        raise InfiniteEvidenceError("infinite weight has no finite counts form")
    return EvidenceCounts(w.w_plus, w.w_plus + w.w_minus)


def _cmd_convert(args) -> int:
    raw = args.value if args.value is not None else sys.stdin.read()
    value = _PARSERS[args.source](_load_json(raw))
    if args.source == args.target:
        result = value
    else:
        result = _from_weights(args.target, _to_weights(args.source, value))
    print(json.dumps(result.to_dict()))
    return EXIT_OK


def _cmd_simulate(args) -> int:
    unit = UnitWeights(args.w0_pos, args.w0_neg)
    mode = "frequency_faithful" if args.mode == "faithful" else "bernoulli"
    spec = StreamSpec(mode=mode, steps=args.steps, q=args.q, seed=args.seed)
    traj = run_dual_track(spec, unit, record_every=args.record_every)
    csv_text = traj.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    report = check_limits(traj, spec, unit)
    final = traj.final
    f = "" if final.freq is None else f"{final.freq:.12g}"
    print(
        f"final row: t={final.t} t_plus={final.t_plus} bel={final.ds_bel:.12g} "
        f"pl={final.ds_pl:.12g} l={final.lu_l:.12g} u={final.lu_u:.12g} f={f}",
        file=sys.stderr,
    )
    print(f"predicted dempster limit: {report.predicted_limit:.12g}", file=sys.stderr)
    return EXIT_OK


def _cmd_defect_demo(args) -> int:
    unit = UnitWeights(args.w0_pos, args.w0_neg)
    spec = StreamSpec(mode="frequency_faithful", steps=args.steps, q=args.q)
    traj = run_dual_track(spec, unit)
    report = check_limits(traj, spec, unit)
    final = traj.final
    print(
        json.dumps(
            {
                "q": args.q,
                "steps": args.steps,
                "predicted_dempster_limit": report.predicted_limit,
                "final_bel": final.ds_bel,
                "final_pl": final.ds_pl,
                "final_l": final.lu_l,
                "final_u": final.lu_u,
                "final_f": final.freq,
                "dempster_gap_to_q": abs(final.ds_bel - args.q),
                "lower_frequency_gap_to_q": abs(final.lu_l - args.q),
            }
        )
    )
    return EXIT_OK


def _cmd_delta_demo(args) -> int:
    if args.delta < 0 or args.delta != int(args.delta):
        raise _UsageError(f"delta must be a nonnegative integer, got {args.delta!r}")
    if args.steps < args.delta:
        raise _UsageError("steps must be at least delta")
    delta = float(int(args.delta))
    spec = StreamSpec(mode="delta_profile", steps=args.steps, delta=delta)
    traj = run_dual_track(spec, UnitWeights())
    analytic = delta_limit(delta)
    print(
        json.dumps(
            {
                "delta": int(delta),
                "steps": args.steps,
                "final_bel": traj.final.ds_bel,
                "analytic_limit": analytic,
                "abs_difference": abs(traj.final.ds_bel - analytic),
            }
        )
    )
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="evcalc", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("combine", help="fold serialized values with one of the two rules")
    p.add_argument("--rule", required=True, choices=("dempster", "lu"))
    p.add_argument("values", nargs="*", help="JSON values; a JSON array on stdin if omitted")
    p.set_defaults(func=_cmd_combine)

    p = sub.add_parser("convert", help="translate a value between representations")
    p.add_argument("--from", dest="source", required=True, choices=FORMATS)
    p.add_argument("--to", dest="target", required=True, choices=FORMATS)
    p.add_argument("value", nargs="?", help="JSON value; read from stdin if omitted")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("simulate", help="run a stream through both calculi, emit CSV")
    p.add_argument("--q", type=float, required=True, help="chance of a positive outcome")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--w0-pos", type=float, default=1.0, dest="w0_pos")
    p.add_argument("--w0-neg", type=float, default=1.0, dest="w0_neg")
    p.add_argument("--mode", choices=("bernoulli", "faithful"), default="faithful")
    p.add_argument("--record-every", type=int, default=1, dest="record_every")
    p.add_argument("--out", help="CSV file path; stdout if omitted")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("defect-demo", help="Dempster track versus frequency track at chance q")
    p.add_argument("--q", type=float, default=0.7)
    p.add_argument("--steps", type=int, default=2000)
    p.add_argument("--w0-pos", type=float, default=1.0, dest="w0_pos")
    p.add_argument("--w0-neg", type=float, default=1.0, dest="w0_neg")
    p.set_defaults(func=_cmd_defect_demo)

    p = sub.add_parser("delta-demo", help="fold against the analytic point 1/(1+e^delta)")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--steps", type=int, default=10_000)
    p.set_defaults(func=_cmd_delta_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TotalConflictError, InfiniteEvidenceError, ZeroEvidenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
