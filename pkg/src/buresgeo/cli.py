"""Command-line front end: ``fidelity``, ``triangle`` and ``verify``.

Every successful command writes exactly one machine-readable envelope to
stdout (JSON, or CSV where the triangle command is asked for it) and all
diagnostics to stderr.  Exit codes: 0 success, 1 verification or
consistency failure, 2 usage error.
"""

import argparse
import json
import sys

import numpy as np

from . import verify as verify_mod
from .hyperbolic import geodesic_points, triangle
from .qubit import REGIMES, as_bloch_vector

__all__ = ["main"]

SCHEMA_VERSION = "1"
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# A spread among routes beyond this is reported as an internal
# inconsistency (it should never fire; the verified bound is 1e-10).
ROUTE_DISAGREEMENT = 1e-8

_EDGES = (("AB", "disk_a", "disk_b"), ("AC", "disk_a", "disk_c"), ("BC", "disk_b", "disk_c"))


class _UsageError(Exception):
    pass


def _fmt_float(x: float) -> str:
    # 17 significant digits round-trip any 64-bit float exactly.
    return format(float(x), ".17g")


def _emit(value) -> str:
    """Serialize the envelope deterministically (insertion-ordered keys)."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _fmt_float(value)
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ",".join(_emit(item) for item in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{json.dumps(k)}:{_emit(v)}" for k, v in value.items()) + "}"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _envelope(command: str, inputs: dict, result: dict) -> str:
    return _emit(
        {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "inputs": inputs,
            "result": result,
        }
    )


def _parse_triple(text: str, flag: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise _UsageError(f"{flag} expects three comma-separated reals, got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise _UsageError(f"{flag} expects three comma-separated reals, got {text!r}") from None
    try:
        return as_bloch_vector(values)
    except ValueError as exc:
        raise _UsageError(f"{flag}: {exc}") from None


def _cmd_fidelity(args) -> int:
    u = _parse_triple(args.u, "--u")
    v = _parse_triple(args.v, "--v")
    report = verify_mod.compare(u, v)
    result = {
        "u": report.u,
        "v": report.v,
        "f_matrix": report.f_matrix,
        "f_hyperbolic": report.f_hyperbolic,
        "f_closed": report.f_closed,
        "d_trace": report.d_trace,
        "max_pairwise_diff": report.max_pairwise_diff,
        "regime_flags": sorted(report.regime_flags),
    }
    print(_envelope("fidelity", {"u": report.u, "v": report.v, "format": args.format}, result))
    if report.max_pairwise_diff > ROUTE_DISAGREEMENT:
        print(
            f"theorem violation: routes disagree by {report.max_pairwise_diff:.3e} "
            f"(> {ROUTE_DISAGREEMENT:.0e})",
            file=sys.stderr,
        )
        return EXIT_FAILED
    return EXIT_OK


def _cmd_triangle(args) -> int:
    u = _parse_triple(args.u, "--u")
    v = _parse_triple(args.v, "--v")
    if args.samples_per_edge < 2:
        raise _UsageError("--samples-per-edge must be at least 2")
    try:
        tri = triangle(u, v)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None

    polylines = {
        name: geodesic_points(getattr(tri, start), getattr(tri, end), args.samples_per_edge)
        for name, start, end in _EDGES
    }

    if args.format == "csv":
        lines = ["edge,index,x,y"]
        for name, _, _ in _EDGES:
            for i, (x, y) in enumerate(polylines[name]):
                lines.append(f"{name},{i},{_fmt_float(x)},{_fmt_float(y)}")
        print("\n".join(lines))
        return EXIT_OK

    result = {
        "phi_u": tri.phi_u,
        "phi_v": tri.phi_v,
        "phi_w": tri.phi_w,
        "angle_a": tri.angle_a,
        "median_ad": tri.median_ad,
        "disk_a": tri.disk_a,
        "disk_b": tri.disk_b,
        "disk_c": tri.disk_c,
        "disk_d": tri.disk_d,
        "polylines": {name: [list(point) for point in polylines[name]] for name, _, _ in _EDGES},
    }
    inputs = {
        "u": [float(x) for x in u],
        "v": [float(x) for x in v],
        "samples_per_edge": args.samples_per_edge,
        "format": args.format,
    }
    print(_envelope("triangle", inputs, result))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if not 0 <= args.seed < 2**64:
        raise _UsageError(f"--seed must be an unsigned 64-bit integer, got {args.seed}")
    if args.trials < 1:
        raise _UsageError("--trials must be at least 1")
    if not args.tolerance > 0.0:
        raise _UsageError("--tolerance must be positive")
    summary = verify_mod.sweep(args.seed, args.trials, args.regime_u, args.regime_v)
    result = {
        "trials": summary.trials,
        "seed": summary.seed,
        "regime_u": summary.regime_u,
        "regime_v": summary.regime_v,
        "max_diff": summary.max_diff,
        "mean_diff": summary.mean_diff,
        "p99_diff": summary.p99_diff,
        "worst_u": summary.worst_u,
        "worst_v": summary.worst_v,
        "worst_index": summary.worst_index,
        "elapsed_seconds": summary.elapsed_seconds,
    }
    inputs = {
        "seed": args.seed,
        "trials": args.trials,
        "regime_u": args.regime_u,
        "regime_v": args.regime_v,
        "tolerance": args.tolerance,
    }
    print(_envelope("verify", inputs, result))
    if summary.max_diff > args.tolerance:
        print(
            f"verification failed: max_diff {summary.max_diff:.3e} > tolerance "
            f"{args.tolerance:.3e}",
            file=sys.stderr,
        )
        return EXIT_FAILED
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buresgeo",
        description="Bures fidelity between qubit states, three ways, cross-verified.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fid = sub.add_parser("fidelity", help="fidelity and trace distance for one pair of states")
    fid.add_argument("--u", required=True, help="Bloch vector as x,y,z")
    fid.add_argument("--v", required=True, help="Bloch vector as x,y,z")
    fid.add_argument("--format", choices=["json"], default="json")
    fid.set_defaults(handler=_cmd_fidelity)

    tri = sub.add_parser("triangle", help="rapidity triangle data for plotting")
    tri.add_argument("--u", required=True, help="Bloch vector as x,y,z")
    tri.add_argument("--v", required=True, help="Bloch vector as x,y,z")
    tri.add_argument("--samples-per-edge", type=int, default=32, dest="samples_per_edge")
    tri.add_argument("--format", choices=["json", "csv"], default="json")
    tri.set_defaults(handler=_cmd_triangle)

    ver = sub.add_parser("verify", help="seeded Monte Carlo route-agreement sweep")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--trials", type=int, default=10000)
    ver.add_argument("--regime-u", choices=list(REGIMES), default="uniform_ball", dest="regime_u")
    ver.add_argument("--regime-v", choices=list(REGIMES), default="uniform_ball", dest="regime_v")
    ver.add_argument("--tolerance", type=float, default=1e-10)
    ver.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already written its diagnostic; fold --help to 0.
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
