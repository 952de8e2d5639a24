"""Command-line interface.

One JSON report object goes to stdout; a short human-readable summary goes
to stderr.  Exit status: 0 when every check passes (indeterminate results
do not fail a run), 1 when any check fails, 2 on bad input.

Commands:
    q K                     value and certificate of the partition minimum
    witness N K [--out F]   certified extremal graph for chi = N - K
    verify FILE [--props]   solve omega/chi/alpha/nu for a graph6 file
    check TARGET [...]      theorem1 | theorem2 | catalog | gap
    gap N [--mode M]        largest chi - omega on N vertices
    compose F1 F2 [...]     merge two alpha <= 2 graphs

The RAMSEY_WITNESS_DIR environment variable may point at a directory of
graph6 files (named "<vertex-count>.g6") with extra extremal witnesses.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import constructions, matching, oracle, qfunction, solvers
from .errors import PreconditionError, UnsupportedWitnessError
from .graphs import Graph, parse_graph6, serialize_graph6
from .intervals import IntInterval
from .ramsey import default_catalog, small_omega
from .reports import FAIL, INDETERMINATE, PASS, CheckResult

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

ALL_PROPS = ("omega", "chi", "alpha", "nu")


class _InputError(Exception):
    pass


def _emit(command: str, inputs: dict, results: dict, checks: list[CheckResult],
          started: float, out=sys.stdout, err=sys.stderr) -> int:
    report = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "checks": [c.as_dict() for c in checks],
        "timing_ms": int((time.perf_counter() - started) * 1000),
    }
    json.dump(report, out, indent=2)
    out.write("\n")
    failed = [c for c in checks if c.status == FAIL]
    open_ = [c for c in checks if c.status == INDETERMINATE]
    if checks:
        err.write(
            f"{command}: {len(checks) - len(failed) - len(open_)} passed, "
            f"{len(failed)} failed, {len(open_)} indeterminate\n"
        )
    for c in failed:
        err.write(f"  FAIL {c.name}: {c.condition}\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _interval_json(value: IntInterval) -> list[int]:
    return [value.lo, value.hi]


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return parse_graph6(line)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    raise _InputError(f"{path} contains no graph6 line")


def _cmd_q(args, out, err) -> int:
    started = time.perf_counter()
    value, cert = qfunction.q(args.k)
    results = {
        "q": _interval_json(value),
        "parts": list(cert.parts),
        "part_values": [_interval_json(v) for v in cert.part_values],
        "indeterminate": cert.conditional,
    }
    checks = []
    if cert.conditional:
        checks.append(CheckResult(
            f"q({args.k})", INDETERMINATE,
            f"value depends on open Ramsey bounds; known to lie in {value}",
        ))
    return _emit("q", {"k": args.k}, results, checks, started, out, err)


def _cmd_witness(args, out, err) -> int:
    started = time.perf_counter()
    witness = constructions.build_extremal(args.n, args.k, default_catalog())
    g6 = serialize_graph6(witness.graph)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(g6 + "\n")
    results = {
        "graph6": g6,
        "n": witness.n,
        "k": witness.k,
        "omega": witness.omega,
        "chi": witness.chi,
        "parts": list(witness.certificate.parts),
        "q": _interval_json(witness.certificate.total),
        "deleted_edges": [list(e) for e in witness.deleted_edges],
    }
    checks = [
        CheckResult("chi", PASS, f"chromatic number {witness.chi} equals n - k = {args.n - args.k}"),
        CheckResult("omega", PASS,
                    f"clique number {witness.omega} equals n - 2k + q(k) = "
                    f"{args.n} - {2 * args.k} + {witness.certificate.total.lo}"),
    ]
    return _emit("witness", {"n": args.n, "k": args.k}, results, checks, started, out, err)


def _cmd_verify(args, out, err) -> int:
    started = time.perf_counter()
    g = _load_graph(args.file)
    props = ALL_PROPS if args.props == "all" else tuple(p.strip() for p in args.props.split(","))
    results: dict = {"n": g.n, "edges": g.num_edges}
    for prop in props:
        if prop == "omega":
            results["omega"] = solvers.clique_number(g)
        elif prop == "chi":
            results["chi"] = solvers.chromatic_number(g)
        elif prop == "alpha":
            results["alpha"] = solvers.independence_number(g)
        elif prop == "nu":
            results["nu"] = matching.matching_number(g)
        else:
            raise _InputError(f"unknown property {prop!r}; choose from {ALL_PROPS}")
    return _emit("verify", {"file": args.file, "props": list(props)},
                 results, [], started, out, err)


def _cmd_gap(args, out, err) -> int:
    started = time.perf_counter()
    mode = args.mode
    if mode == "auto":
        mode = "oracle" if args.n <= 8 else "formula"
    value = constructions.chromatic_gap(args.n, mode)
    results = {"gap": _interval_json(value), "mode": mode}
    return _emit("gap", {"n": args.n, "mode": args.mode}, results, [], started, out, err)


def _cmd_compose(args, out, err) -> int:
    started = time.perf_counter()
    g1 = _load_graph(args.file1)
    g2 = _load_graph(args.file2)
    clique1 = _parse_vertex_list(args.clique1)
    clique2 = _parse_vertex_list(args.clique2)
    merged = constructions.compose_alpha2(
        constructions.ComposeInput.build(g1, g2, clique1, clique2)
    )
    g6 = serialize_graph6(merged)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(g6 + "\n")
    omega = solvers.clique_number(merged)
    alpha = solvers.independence_number(merged)
    results = {"graph6": g6, "n": merged.n, "omega": omega, "alpha": alpha}
    checks = [
        CheckResult("alpha", PASS if alpha <= 2 else FAIL,
                    f"independence number {alpha} <= 2"),
        CheckResult("size-identity", PASS if merged.n == g1.n + g2.n + solvers.clique_number(g2) else FAIL,
                    f"|V| = {merged.n} equals |V1| + |V2| + omega2"),
    ]
    bound = constructions.eq4_upper_bound(solvers.clique_number(g1), solvers.clique_number(g2))
    if bound.exact:
        checks.append(CheckResult(
            "size-bound", PASS if merged.n <= bound.lo else FAIL,
            f"|V| = {merged.n} <= R(3, omega1 + omega2 + 1) - 1 = {bound.lo}",
        ))
    return _emit("compose", {"file1": args.file1, "file2": args.file2},
                 results, checks, started, out, err)


def _parse_vertex_list(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise _InputError(f"bad vertex list {text!r}: {exc}") from exc


def _cmd_check(args, out, err) -> int:
    started = time.perf_counter()
    target = args.target
    checks: list[CheckResult] = []
    results: dict = {}
    if target == "theorem1":
        report = oracle.verify_clique_formula(args.nmax)
        checks = list(report.entries)
        results["pairs_checked"] = len(checks)
        counts = [oracle.count_graphs(n) for n in range(args.nmax + 1)]
        results["class_counts"] = counts
        for n, got in enumerate(counts):
            want = oracle.KNOWN_CLASS_COUNTS[n]
            checks.append(CheckResult(
                f"count-n={n}", PASS if got == want else FAIL,
                f"{got} isomorphism classes enumerated, published count is {want}",
            ))
        if args.dump_csv:
            with open(args.dump_csv, "w") as fh:
                fh.write(oracle.export_q_table_csv(args.nmax))
        if args.dump_graph6:
            with open(args.dump_graph6, "w") as fh:
                for g in oracle.enumerate_graphs(args.nmax):
                    fh.write(serialize_graph6(g) + "\n")
    elif target == "theorem2":
        report = qfunction.check_three_parts_suffice(args.kmax)
        checks = list(report.entries)
        results["indeterminate_k"] = list(report.indeterminate)
        results["two_part_exceptions"] = list(report.two_part_exceptions)
        results["single_block_exceptions"] = list(report.single_block_exceptions)
    elif target == "catalog":
        catalog = default_catalog()
        verified = 0
        for size in catalog.base_sizes():
            if size < 5:
                continue  # the 0- and 2-vertex bases are trivial plumbing
            g = catalog.witness_alpha2(size)
            omega = solvers.clique_number(g)
            alpha = solvers.independence_number(g)
            want = small_omega(size).lo
            ok = alpha <= 2 and omega == want
            verified += ok
            checks.append(CheckResult(
                f"witness-{size}", PASS if ok else FAIL,
                f"{size}-vertex witness: clique {omega} (want {want}), "
                f"independence {alpha} (want <= 2)",
            ))
        for note in catalog.diagnostics:
            checks.append(CheckResult("external-witness", FAIL, note))
        results["witnesses_verified"] = verified
    elif target == "gap":
        if args.nmax > 8:
            raise _InputError("gap check is exhaustive; supports --nmax <= 8")
        for n in range(1, args.nmax + 1):
            brute = oracle.brute_gap(n)
            table = oracle.brute_q_table(n)
            by_q = max((c - q for c, q in table.items()), default=0)
            checks.append(CheckResult(
                f"identity-n={n}", PASS if brute == by_q else FAIL,
                f"max chi - omega is {brute}; max over c of c - Q(n, c) is {by_q}",
            ))
            formula = constructions.chromatic_gap(n, "formula")
            if n >= 3:
                ok = formula.exact and formula.lo == brute
                checks.append(CheckResult(
                    f"formula-n={n}", PASS if ok else FAIL,
                    f"arithmetic gap {formula} vs exhaustive {brute}",
                ))
    else:
        raise _InputError(f"unknown check target {target!r}")
    inputs = {"target": target, "nmax": args.nmax, "kmax": args.kmax, "jobs": args.jobs}
    return _emit(f"check {target}", inputs, results, checks, started, out, err)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minclique",
        description="Exact minimum clique numbers at prescribed chromatic number, "
                    "with certified extremal constructions over Ramsey bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("q", help="partition minimum q(k) with certificate")
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_q)

    p = sub.add_parser("witness", help="certified extremal graph for chi = n - k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--out", help="write the graph6 line to this file")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="solve graph invariants for a graph6 file")
    p.add_argument("file")
    p.add_argument("--props", default="all",
                   help="comma list from omega,chi,alpha,nu (default: all)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("target", choices=("theorem1", "theorem2", "catalog", "gap"))
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--kmax", type=int, default=22)
    p.add_argument("--jobs", type=int, default=1,
                   help="accepted for compatibility; runs single-threaded")
    p.add_argument("--dump-csv", help="theorem1: write the (n, c, Q) table as CSV")
    p.add_argument("--dump-graph6", help="theorem1: write enumerated graphs as graph6 lines")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gap", help="largest chi - omega on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("oracle", "formula", "auto"), default="auto")
    p.set_defaults(func=_cmd_gap)

    p = sub.add_parser("compose", help="merge two alpha <= 2 graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--clique1", help="comma list of vertices forming a clique in graph 1")
    p.add_argument("--clique2", help="comma list of vertices forming a clique in graph 2")
    p.add_argument("--out", help="write the merged graph6 line to this file")
    p.set_defaults(func=_cmd_compose)
    return parser


def main(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    if args.command == "check" and args.jobs < 1:
        err.write("error: --jobs must be positive\n")
        return EXIT_INPUT_ERROR
    try:
        return args.func(args, out, err)
    except (_InputError, PreconditionError, UnsupportedWitnessError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
