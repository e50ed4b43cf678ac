"""Batch command-line front end.

One verb per artifact: generate a counterexample coloring, verify its
certificates or refute exactly, test connectivity, search for a maximum
k-connected subgraph, decompose, check certificate files, classify (n, k),
and run the brute-force cross-checks.

Every invocation prints a final machine-readable line

    RESULT <verdict> <key=value ...>

and exits 0 on success/verified, 1 on refuted or invalid input, 2 on usage
errors. Output never depends on wall-clock time or container ordering, so
equal inputs give byte-equal reports.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .bounds import classify
from .coloring import (
    Color,
    EdgeColoring,
    ParseError,
    SimpleGraph,
    monochromatic_view,
    parse_coloring,
    serialize_coloring,
)
from .connectivity import (
    BudgetExceeded,
    find_small_cut,
    is_k_connected,
    k_core,
    max_k_connected_subgraph,
    oracle_max_k_connected,
)
from .counterexample import (
    blue_certificate,
    generate,
    parse_peeling,
    red_certificate,
    serialize_labels,
    verify_peeling,
)
from .decomposition import (
    Decomposed,
    greedy_decompose,
    parse_decomposition,
    serialize_decomposition,
    verify_decomposition,
)

SWEEP_MAX_N = 6
ORACLE_TRIALS = 200


@dataclass(frozen=True)
class ColoringSweep:
    n: int
    k: int
    colorings: int
    min_max_order: int


def sweep_colorings(n: int, k: int) -> ColoringSweep:
    """Enumerate every 2-coloring of K_n and report the minimum over
    colorings of the maximum monochromatic k-connected order.

    Guarded to n <= 6 (2^15 colorings); the denser color class is solved
    first and the sparser one is skipped whenever the result can no longer
    lower the running minimum, which changes nothing about the answer.
    """
    if not (2 <= n <= SWEEP_MAX_N):
        raise ValueError(f"coloring sweep supports 2 <= n <= {SWEEP_MAX_N}, got {n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    verts = tuple(range(n))
    best = n + 1
    for mask in range(1 << m):
        chosen = frozenset(p for j, p in enumerate(pairs) if (mask >> j) & 1)
        other = frozenset(p for j, p in enumerate(pairs) if not (mask >> j) & 1)
        first, second = (chosen, other) if len(chosen) >= len(other) else (other, chosen)
        a = max_k_connected_subgraph(SimpleGraph(verts, first), k).order
        if a >= best:
            continue
        b = max_k_connected_subgraph(SimpleGraph(verts, second), k).order
        best = min(best, max(a, b))
    return ColoringSweep(n=n, k=k, colorings=1 << m, min_max_order=best)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> SimpleGraph:
    edges = [pair for pair in itertools.combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph.from_edges(range(n), edges)


def oracle_subgraph_trials(n: int, k: int, trials: int, seed: int) -> tuple[int, int]:
    """Compare the solver against the brute-force oracle on random graphs.

    Returns (trials, mismatches)."""
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(trials):
        g = random_graph(n, rng)
        fast = max_k_connected_subgraph(g, k).order
        slow = oracle_max_k_connected(g, k).order
        if fast != slow:
            mismatches += 1
            print(f"mismatch: n={n} k={k} solver={fast} oracle={slow} edges={sorted(g.edges)}")
    return trials, mismatches


def _result(verdict: str, **fields: object) -> None:
    tail = "".join(f" {key}={value}" for key, value in fields.items())
    print(f"RESULT {verdict}{tail}")


def _read_coloring(path: str) -> EdgeColoring:
    return parse_coloring(Path(path).read_bytes())


def _view(args: argparse.Namespace) -> SimpleGraph:
    coloring = _read_coloring(args.infile)
    return monochromatic_view(coloring, _color(args))


def _color(args: argparse.Namespace) -> Color:
    return Color.RED if args.color == "red" else Color.BLUE


def _deadline(args: argparse.Namespace) -> float | None:
    budget = getattr(args, "budget_seconds", None)
    return None if budget is None else time.monotonic() + budget


def _cmd_gen(args: argparse.Namespace) -> int:
    inst = generate(args.k)
    out = Path(args.out)
    out.write_bytes(serialize_coloring(inst.coloring).encode("ascii"))
    sidecar = out.with_suffix(".klabels")
    sidecar.write_bytes(serialize_labels(inst.labels).encode("ascii"))
    print(f"wrote {out} and {sidecar}")
    _result("ok", n=inst.n, tau=inst.tau)
    return 0


def _cmd_verify_counterexample(args: argparse.Namespace) -> int:
    inst = generate(args.k)
    target = inst.n - 2 * inst.k + 2
    red_view = monochromatic_view(inst.coloring, Color.RED)
    if args.mode == "certificates":
        decomp = red_certificate(inst)
        violations = verify_decomposition(red_view, decomp, strong=True)
        for v in violations:
            print(f"violation clause={v.clause} i={v.index}: {v.detail}")
        peel = verify_peeling(inst.coloring, Color.BLUE, blue_certificate(inst))
        if not peel.ok:
            print(
                f"peeling failed at position {peel.fail_index} "
                f"with residual degree {peel.fail_degree}"
            )
        red_bound = inst.n - decomp.f - 1
        ok = (
            not violations
            and peel.ok
            and red_bound < target
            and peel.bound is not None
            and peel.bound < target
        )
        _result(
            "verified" if ok else "refuted",
            red_bound=red_bound,
            blue_bound=peel.bound if peel.bound is not None else "none",
            target=target,
        )
        return 0 if ok else 1
    deadline = _deadline(args)
    try:
        red = max_k_connected_subgraph(red_view, inst.k, deadline)
    except BudgetExceeded:
        _result("inconclusive", reason="budget", target=target)
        return 1
    blue_view = monochromatic_view(inst.coloring, Color.BLUE)
    core = k_core(blue_view, inst.k)
    ok = red.order < target and len(core) < target
    _result(
        "verified" if ok else "refuted",
        red_max_order=red.order,
        blue_core_order=len(core),
        target=target,
    )
    return 0 if ok else 1


def _cmd_connectivity(args: argparse.Namespace) -> int:
    view = _view(args)
    if is_k_connected(view, args.k):
        _result("k_connected", k=args.k, order=view.order)
        return 0
    cut = find_small_cut(view, args.k)
    if cut is None:
        _result("not_k_connected", k=args.k, order=view.order, reason="too_few_vertices")
    else:
        _result("not_k_connected", k=args.k, order=view.order, cut_size=cut.size)
    return 1


def _cmd_max_kconn(args: argparse.Namespace) -> int:
    view = _view(args)
    try:
        report = max_k_connected_subgraph(view, args.k, _deadline(args))
    except BudgetExceeded:
        _result("inconclusive", reason="budget")
        return 1
    if report.order:
        witness = ",".join(str(v) for v in sorted(report.witness))
        _result("ok", k=args.k, order=report.order, witness=witness)
    else:
        _result("ok", k=args.k, order=0)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    view = _view(args)
    outcome = greedy_decompose(view, args.k, args.f)
    if isinstance(outcome, Decomposed):
        d = outcome.decomposition
        if args.out:
            Path(args.out).write_bytes(serialize_decomposition(d).encode("ascii"))
            print(f"wrote {args.out}")
        _result("decomposed", l=d.l, sum_a=d.sum_a())
    else:
        _result("found", order=len(outcome.vertices))
    return 0


def _cmd_check_decomp(args: argparse.Namespace) -> int:
    coloring = _read_coloring(args.infile)
    view = monochromatic_view(coloring, _color(args))
    d = parse_decomposition(Path(args.decomp).read_bytes())
    strong = args.mode == "strong"
    violations = verify_decomposition(view, d, strong=strong)
    if violations:
        for v in violations:
            print(f"violation clause={v.clause} i={v.index}: {v.detail}")
        _result("invalid", violations=len(violations))
        return 1
    if strong:
        _result("verified", bound=d.n - d.f - 1)
    else:
        _result("ok", l=d.l)
    return 0


def _cmd_check_peel(args: argparse.Namespace) -> int:
    coloring = _read_coloring(args.infile)
    cert = parse_peeling(Path(args.cert).read_bytes())
    verdict = verify_peeling(coloring, _color(args), cert)
    if verdict.ok:
        _result("ok", bound=verdict.bound)
        return 0
    _result("invalid", index=verdict.fail_index, degree=verdict.fail_degree)
    return 1


def _cmd_classify(args: argparse.Namespace) -> int:
    report = classify(args.n, args.k)
    print(f"{report.regime.value}: {report.citation}")
    _result(report.regime.value)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.mode == "colorings":
        if args.n is None or args.k is None:
            print("error: oracle --mode colorings requires --n and --k")
            return 2
        sweep = sweep_colorings(args.n, args.k)
        target = args.n - 2 * args.k + 2
        ok = sweep.min_max_order >= target
        _result(
            "verified" if ok else "refuted",
            n=sweep.n,
            k=sweep.k,
            colorings=sweep.colorings,
            min_max_order=sweep.min_max_order,
            target=target,
        )
        return 0 if ok else 1
    n = 10 if args.n is None else args.n
    k = 3 if args.k is None else args.k
    trials, mismatches = oracle_subgraph_trials(n, k, ORACLE_TRIALS, args.seed)
    if mismatches:
        _result("mismatch", trials=trials, mismatches=mismatches)
        return 1
    _result("ok", trials=trials, mismatches=0)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kconn",
        description="exact checks for k-connected monochromatic subgraphs "
        "of 2-edge-colored complete graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a counterexample coloring")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True, help="output kcoloring path")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser(
        "verify-counterexample",
        help="check the generated coloring via certificates or exact search",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["certificates", "exact"], default="certificates")
    p.add_argument("--budget-seconds", type=float, default=None)
    p.set_defaults(func=_cmd_verify_counterexample)

    p = sub.add_parser("connectivity", help="test k-connectivity of a color view")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--color", choices=["red", "blue"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("max-kconn", help="maximum k-connected subgraph of a color view")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--color", choices=["red", "blue"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.set_defaults(func=_cmd_max_kconn)

    p = sub.add_parser("decompose", help="greedy (f, k)-decomposition of a color view")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--color", choices=["red", "blue"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--out", default=None, help="optional kdecomp output path")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("check-decomp", help="verify a kdecomp file against a coloring")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--color", choices=["red", "blue"], required=True)
    p.add_argument("--decomp", required=True)
    p.add_argument("--mode", choices=["basic", "strong"], default="basic")
    p.set_defaults(func=_cmd_check_decomp)

    p = sub.add_parser("check-peel", help="verify a kpeel file against a coloring")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--color", choices=["red", "blue"], required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_check_peel)

    p = sub.add_parser("classify", help="place (n, k) into its regime")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("oracle", help="brute-force cross-checks")
    p.add_argument("--mode", choices=["subgraph", "colorings"], required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}")
        _result("invalid")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
