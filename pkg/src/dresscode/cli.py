"""Command-line front end: construct codes to JSON files, verify them, print
bound tables, and run failure/repair scripts against a simulated cluster.

Exit codes: 0 success, 1 semantic failure (irregular verification, failed
retrieval or repair), 2 usage or malformed-input error.  All output is
line-oriented so runs can be snapshot-tested.
"""

from __future__ import annotations

import argparse
import sys
from math import comb
from pathlib import Path

from .codefile import CodeFile, read_codefile, write_codefile
from .constructions import (
    modular_code,
    projective_plane_code,
    regular_graph_code,
    ring_code,
    wfr_from_prg,
)
from .errors import (
    AlreadyDead,
    CodeFileError,
    DressCodeError,
    LengthMismatch,
    ParamViolation,
    StaleReport,
)
from .frcode import (
    IRREGULAR,
    DssParams,
    FrCode,
    VerificationReport,
    cut_set_bound,
    mbr_capacity,
    mbr_file_size,
    normalize_symbols,
    supported_file_size,
    verify_code,
)
from .sim import (
    RELAXED,
    STRICT,
    assemble_dress,
    execute_repair,
    fail_node,
    plan_repair,
    retrieve_file,
    store_file,
)

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_USAGE = 2

# name -> (constructor, required flags)
_METHODS = {
    "regular-graph": (regular_graph_code, ("n", "d")),
    "modular": (modular_code, ("n", "t", "rho")),
    "prg": (wfr_from_prg, ("n", "d")),
    "ring": (ring_code, ("n", "theta")),
    "projective-plane": (projective_plane_code, ("m",)),
}


def _summary_line(code: FrCode, report: VerificationReport) -> str:
    return (
        f"{report.classification} rho={code.nominal_rho} theta={code.theta} "
        f"n={code.n} d={report.d_max} delta={report.delta_total}"
    )


def _print_report(code: FrCode, report: VerificationReport) -> None:
    print(_summary_line(code, report))
    print("node sizes: " + " ".join(str(s) for s in report.node_sizes))
    if report.classification == IRREGULAR:
        by_count: dict[int, list[int]] = {}
        for sym, count in report.rho_observed.items():
            by_count.setdefault(count, []).append(sym)
        print("replication profile:")
        for count in sorted(by_count):
            syms = " ".join(str(s) for s in sorted(by_count[count]))
            print(f"  rho={count}: symbols {syms}")
    else:
        print(f"replication: every symbol stored {code.nominal_rho} times")
    print("supported file size:")
    for k in range(1, code.n + 1):
        print(f"  k={k} B={supported_file_size(code, k)}")


def _cmd_construct(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    build, needed = _METHODS[args.method]
    params = {}
    for name in needed:
        value = getattr(args, name)
        if value is None:
            parser.error(f"--{name} is required for method {args.method}")
        params[name] = value
    code = normalize_symbols(build(**params))
    report = verify_code(code)
    meta = {"construction": args.method, **params}
    write_codefile(args.out, CodeFile.from_code(code, meta))
    _print_report(code, report)
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    code = read_codefile(args.codefile).to_code()
    report = verify_code(code)
    _print_report(code, report)
    return EXIT_OK if report.classification != IRREGULAR else EXIT_SEMANTIC


def _cmd_bounds(args: argparse.Namespace) -> int:
    n, k, d = args.n, args.k, args.d
    alpha = args.alpha if args.alpha is not None else d
    beta = args.beta if args.beta is not None else 1
    DssParams(n=n, k=k, d=d, alpha=alpha, beta=beta)
    print(f"params: n={n} k={k} d={d} alpha={alpha} beta={beta}")
    print(f"cut-set bound: {cut_set_bound(k, d, alpha, beta)}")
    print(f"mbr file size: {mbr_file_size(k, d, beta)}")
    print(f"mbr capacity: {mbr_capacity(n, k, d)}")
    if n % 2 == 1 and d % 2 == 1 and 3 <= d <= n - 2 and comb(n, k) <= 200_000:
        weak = wfr_from_prg(n, d)
        b = supported_file_size(weak, k)
        print(f"note: weak code from prg({n},{d}) supports B={b} at k={k}")
    return EXIT_OK


def _parse_script(text: str) -> list[tuple[str, list[int]]]:
    ops: list[tuple[str, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if len(parts) == 2 and parts[0] in ("fail", "repair"):
                ops.append((parts[0], [int(parts[1])]))
            elif len(parts) == 2 and parts[0] == "retrieve":
                ops.append(("retrieve", [int(tok) for tok in parts[1].split(",")]))
            else:
                raise ValueError
        except ValueError:
            raise CodeFileError(f"script line {lineno} is malformed: {raw!r}") from None
    return ops


def _cmd_simulate(args: argparse.Namespace) -> int:
    code = read_codefile(args.codefile).to_code()
    dress = assemble_dress(code, args.k, allow_irregular=True)
    try:
        original = Path(args.file).read_bytes()
    except OSError as exc:
        raise CodeFileError(f"cannot read {args.file}: {exc}") from exc
    try:
        script_text = Path(args.script).read_text()
    except OSError as exc:
        raise CodeFileError(f"cannot read {args.script}: {exc}") from exc
    ops = _parse_script(script_text)

    cluster = store_file(dress, original)
    print(f"B={dress.b} k={dress.k} n={code.n} theta={code.theta}")
    shown = 0

    def flush_events() -> None:
        nonlocal shown
        for line in cluster.events[shown:]:
            print(line)
        shown = len(cluster.events)

    flush_events()
    ok = True
    for op, operands in ops:
        if op == "fail":
            fail_node(cluster, operands[0])
            flush_events()
        elif op == "repair":
            try:
                report = plan_repair(dress, cluster, operands[0], mode=args.mode)
                execute_repair(cluster, report)
            except (ParamViolation, AlreadyDead, StaleReport):
                raise
            except DressCodeError as exc:
                print(f"REPAIR node={operands[0]} FAIL ({exc})")
                ok = False
            flush_events()
        else:
            label = ",".join(str(x) for x in operands)
            try:
                got = retrieve_file(cluster, operands)
            except ParamViolation:
                raise
            except DressCodeError as exc:
                print(f"RETRIEVE nodes={label} FAIL ({exc})")
                ok = False
            else:
                if got == original:
                    print(f"RETRIEVE nodes={label} ok")
                else:
                    print(f"RETRIEVE nodes={label} FAIL (bytes differ)")
                    ok = False
    print("result: ok" if ok else "result: fail")
    return EXIT_OK if ok else EXIT_SEMANTIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dresscode",
        description="Construct, verify, and simulate repetition-based storage codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="build a code and write it to a JSON file")
    p_construct.add_argument("--method", required=True, choices=sorted(_METHODS))
    p_construct.add_argument("--out", required=True, help="output code file path")
    p_construct.add_argument("--n", type=int)
    p_construct.add_argument("--d", type=int)
    p_construct.add_argument("--t", type=int)
    p_construct.add_argument("--rho", type=int)
    p_construct.add_argument("--theta", type=int)
    p_construct.add_argument("--m", type=int)

    p_verify = sub.add_parser("verify", help="classify a code file and print its report")
    p_verify.add_argument("codefile")

    p_bounds = sub.add_parser("bounds", help="print storage bounds for (n,k,d)")
    p_bounds.add_argument("--n", type=int, required=True)
    p_bounds.add_argument("--k", type=int, required=True)
    p_bounds.add_argument("--d", type=int, required=True)
    p_bounds.add_argument("--alpha", type=int)
    p_bounds.add_argument("--beta", type=int)

    p_sim = sub.add_parser("simulate", help="run a fail/repair/retrieve script")
    p_sim.add_argument("codefile")
    p_sim.add_argument("--k", type=int, required=True)
    p_sim.add_argument("--file", required=True, help="payload of exactly B bytes")
    p_sim.add_argument("--script", required=True, help="script of fail/repair/retrieve lines")
    p_sim.add_argument("--mode", choices=(STRICT, RELAXED), default=STRICT)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "construct":
            return _cmd_construct(args, parser)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "bounds":
            return _cmd_bounds(args)
        return _cmd_simulate(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ParamViolation, LengthMismatch, CodeFileError, AlreadyDead, StaleReport) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
