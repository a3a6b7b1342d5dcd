"""Command line front end.

Subcommands: gen, tau, det, entropy, verify, bench. Machine-readable output
goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 a
mathematical check failed, 2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Sequence

from .engines import EngineKind, det, det_bareiss, salihu_minors
from .graphs import (
    EdgeListFormatError,
    Graph,
    complete_graph,
    cycle_graph,
    friendship_graph,
    parse_edge_list,
    serialize_edge_list,
    subdivide,
)
from .matrix import ExactMatrix, MatrixFormatError, format_scalar, parse_matrix
from .spanning import (
    EngineConsistencyError,
    entropy_estimate,
    entropy_limit,
    tau,
    tau_bruteforce,
    tau_closed_friendship,
    tau_closed_subdivided_friendship,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_ENGINE_NAMES = [kind.value for kind in EngineKind]
_SCALABLE = (EngineKind.BAREISS, EngineKind.CHIO, EngineKind.DODGSON, EngineKind.SALIHU)

_COFACTOR_ORDER_LIMIT = 9


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _build_family(family: str, value: int) -> Graph:
    if family == "friendship":
        return friendship_graph(value)
    if family == "subdivided":
        return subdivide(friendship_graph(value))
    if family == "cycle":
        return cycle_graph(value)
    if family == "complete":
        return complete_graph(value)
    raise ValueError(f"unknown family {family!r}")


def _parse_int_list(text: str) -> list[int]:
    """Parse '3', '1-7', or '1,2,5' (ranges and commas may mix)."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo_text, hi_text = part.split("-", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            values.extend(range(lo, hi + 1))
        else:
            values.append(int(part))
    if not values:
        raise ValueError(f"no values in {text!r}")
    return values


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _random_matrix(rng: random.Random, order: int, lo: int = -9, hi: int = 9) -> ExactMatrix:
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(order)] for _ in range(order)])


def cmd_gen(args: argparse.Namespace) -> int:
    g = _build_family(args.family, args.size)
    _write_output(serialize_edge_list(g), args.out)
    return EXIT_OK


def _load_tau_graph(args: argparse.Namespace) -> Graph:
    if args.input is not None and args.family is not None:
        raise ValueError("give either an edge-list file or --family, not both")
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as handle:
            return parse_edge_list(handle.read())
    if args.family is not None:
        if args.k is None:
            raise ValueError("--family needs --k")
        return _build_family(args.family, args.k)
    raise ValueError("give an edge-list file or --family/--k")


def cmd_tau(args: argparse.Namespace) -> int:
    g = _load_tau_graph(args)
    start = time.perf_counter()
    value = tau(g, EngineKind(args.engine), drop=args.drop)
    millis = (time.perf_counter() - start) * 1000.0
    print(f"tau={value} engine={args.engine} millis={millis:.3f}")
    if args.check_bruteforce:
        oracle = tau_bruteforce(g, edge_cap=args.edge_cap)
        if oracle != value:
            print(f"oracle=disagree tau_bruteforce={oracle}")
            return EXIT_FAIL
        print(f"oracle=agree tau_bruteforce={oracle}")
    return EXIT_OK


def cmd_det(args: argparse.Namespace) -> int:
    with open(args.matrix, "r", encoding="utf-8") as handle:
        m = parse_matrix(handle.read())
    print(format_scalar(det(m, EngineKind(args.engine))))
    return EXIT_OK


def cmd_entropy(args: argparse.Namespace) -> int:
    if args.k_max < 1:
        raise ValueError(f"--k-max must be at least 1, got {args.k_max}")
    closed = tau_closed_friendship if args.family == "friendship" else tau_closed_subdivided_friendship
    limit = entropy_limit(args.family)
    lines = ["family,k,n,tau_digits,entropy,limit,abs_gap"]
    for k in range(1, args.k_max + 1):
        est = entropy_estimate(args.family, k)
        digits = len(str(closed(k)))
        lines.append(
            f"{args.family},{k},{est.n},{digits},{_fmt(est.value)},{_fmt(limit)},{_fmt(abs(est.value - limit))}"
        )
    lines.append(f"{args.family},inf,,,{_fmt(limit)},{_fmt(limit)},0")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    orders = sorted(set(_parse_int_list(args.orders)))
    if any(o < 1 or o > 8 for o in orders):
        raise ValueError(f"orders must lie in 1..8, got {args.orders!r}")
    if args.trials < 1:
        raise ValueError(f"--trials must be at least 1, got {args.trials}")
    rng = random.Random(args.seed)
    failed = False

    mismatches = 0
    for order in orders:
        for _ in range(args.trials):
            m = _random_matrix(rng, order)
            reference = det(m, EngineKind.COFACTOR)
            for kind in _SCALABLE:
                if det(m, kind) != reference:
                    mismatches += 1
    status = "PASS" if mismatches == 0 else f"FAIL mismatches={mismatches}"
    print(f"engine-agreement: {status} orders={args.orders} trials={args.trials}")
    failed |= mismatches > 0

    wrong = 0
    checked = 0
    skipped = 0
    for order in (o for o in orders if o >= 3):
        for _ in range(args.trials):
            m = _random_matrix(rng, order)
            corners = salihu_minors(m)
            if corners.interior == 0:
                skipped += 1
                continue
            lhs = corners.interior * det_bareiss(m)
            rhs = corners.top_left * corners.bottom_right - corners.top_right * corners.bottom_left
            checked += 1
            if lhs != rhs:
                wrong += 1
    status = "PASS" if wrong == 0 else f"FAIL wrong={wrong}"
    print(f"salihu-identity: {status} checked={checked} skipped={skipped}")
    failed |= wrong > 0

    bad_friendship = sum(
        1
        for k in range(1, 9)
        for kind in _SCALABLE
        if tau(friendship_graph(k), kind) != tau_closed_friendship(k)
    )
    status = "PASS" if bad_friendship == 0 else f"FAIL mismatches={bad_friendship}"
    print(f"closed-form-friendship: {status} k=1..8")
    failed |= bad_friendship > 0

    bad_subdivided = sum(
        1
        for k in range(1, 6)
        for kind in _SCALABLE
        if tau(subdivide(friendship_graph(k)), kind) != tau_closed_subdivided_friendship(k)
    )
    status = "PASS" if bad_subdivided == 0 else f"FAIL mismatches={bad_subdivided}"
    print(f"closed-form-subdivided: {status} k=1..5")
    failed |= bad_subdivided > 0

    print(f"overall: {'FAIL' if failed else 'PASS'}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    engines = [EngineKind(name.strip()) for name in args.engine_list.split(",") if name.strip()]
    if not engines:
        raise ValueError("no engines selected")
    ks = _parse_int_list(args.k_list)
    graphs = {k: _build_family(args.family, k) for k in ks}
    orders = {k: graphs[k].n - 1 for k in ks}
    if EngineKind.COFACTOR in engines:
        too_big = [k for k in ks if orders[k] > _COFACTOR_ORDER_LIMIT]
        if too_big:
            raise ValueError(
                f"cofactor engine refused for order {orders[too_big[0]]} "
                f"(limit {_COFACTOR_ORDER_LIMIT}); drop it from --engine-list"
            )
    rows: list[tuple[str, int, int, float, int]] = []
    counts: dict[int, set[int]] = {}
    for kind in engines:
        for k in ks:
            start = time.perf_counter()
            value = tau(graphs[k], kind)
            millis = (time.perf_counter() - start) * 1000.0
            rows.append((kind.value, k, orders[k], millis, value))
            counts.setdefault(k, set()).add(value)
    rows.sort(key=lambda r: (r[0], r[1]))
    lines = ["engine,k,order,millis,tau"]
    lines.extend(f"{e},{k},{o},{ms:.3f},{v}" for e, k, o, ms, v in rows)
    _write_output("\n".join(lines) + "\n", args.out)
    disagreeing = sorted(k for k, seen in counts.items() if len(seen) > 1)
    if disagreeing:
        print(f"error: engines disagree on tau at k={disagreeing}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecount",
        description="Exact spanning-tree counting via Laplacian determinants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p_gen.add_argument("family", choices=["friendship", "subdivided", "cycle", "complete"])
    p_gen.add_argument("size", type=int, help="k for the windmill families, n for cycle/complete")
    p_gen.add_argument("--out", default=None, help="output file (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_tau = sub.add_parser("tau", help="count spanning trees of a graph")
    p_tau.add_argument("input", nargs="?", default=None, help="edge-list file")
    p_tau.add_argument("--family", choices=["friendship", "subdivided", "cycle", "complete"], default=None)
    p_tau.add_argument("--k", type=int, default=None, help="family parameter")
    p_tau.add_argument("--engine", choices=_ENGINE_NAMES, default=EngineKind.BAREISS.value)
    p_tau.add_argument("--drop", type=int, default=0, help="vertex whose Laplacian row/column is removed")
    p_tau.add_argument("--check-bruteforce", action="store_true", help="cross-check against exhaustive search")
    p_tau.add_argument("--edge-cap", type=int, default=24, help="edge cap for the exhaustive cross-check")
    p_tau.set_defaults(func=cmd_tau)

    p_det = sub.add_parser("det", help="exact determinant of a matrix file")
    p_det.add_argument("matrix", help="matrix file (order, then rows of ints or p/q)")
    p_det.add_argument("--engine", choices=_ENGINE_NAMES, default=EngineKind.BAREISS.value)
    p_det.set_defaults(func=cmd_det)

    p_entropy = sub.add_parser("entropy", help="entropy table ln(tau)/n for a windmill family")
    p_entropy.add_argument("--family", choices=["friendship", "subdivided"], required=True)
    p_entropy.add_argument("--k-max", type=int, required=True)
    p_entropy.add_argument("--out", default=None, help="output CSV file (default stdout)")
    p_entropy.set_defaults(func=cmd_entropy)

    p_verify = sub.add_parser("verify", help="run the randomized engine cross-checks")
    p_verify.add_argument("--orders", default="1-7", help="matrix orders, e.g. 1-7 or 2,4,6 (within 1..8)")
    p_verify.add_argument("--trials", type=int, default=1000, help="random matrices per order")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time tau per engine over a family sweep")
    p_bench.add_argument("--family", choices=["friendship", "subdivided", "cycle", "complete"], default="friendship")
    p_bench.add_argument("--k-list", default="1-8", help="family parameters, e.g. 1-8 or 2,4,8")
    p_bench.add_argument(
        "--engine-list",
        default="bareiss,chio,dodgson,salihu",
        help="comma-separated engines to time",
    )
    p_bench.add_argument("--out", default=None, help="output CSV file (default stdout)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListFormatError, MatrixFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
