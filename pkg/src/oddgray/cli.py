"""Command-line front end.

Subcommands: ``gen`` (odd-graph Hamilton cycle), ``middle`` (middle-levels
cycle), ``factor`` (the underlying cycle factor), ``tree`` (spanning tree as
JSON), ``verify`` (check a certificate file), ``selfcheck`` (run the
verification suites), ``bench`` (generation throughput). Output is streamed
line by line; identical invocations produce byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 bad arguments. The
environment variable ODDGRAY_MAX_K lowers the accepted k ceiling (default
30), which keeps accidental huge runs out of CI.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from math import comb
from typing import IO

from . import assembly, spanning, verify
from .factor import cycle_factor
from .words import Bits, enumerate_dyck


def _ceiling() -> int:
    raw = os.environ.get("ODDGRAY_MAX_K")
    if raw is None:
        return 30
    try:
        return max(1, min(30, int(raw)))
    except ValueError:
        return 30


def _render(val: int, n: int) -> str:
    return f"{val:0{n}b}"[::-1]


def _subset_line(val: int, n: int) -> str:
    out = []
    while val:
        low = val & -val
        out.append(str(low.bit_length()))
        val ^= low
    return "{" + ",".join(out) + "}"


def _check_family(parser: argparse.ArgumentParser, k: int, family: int | None) -> None:
    if family is None:
        return
    if k < 6:
        parser.error("--family needs k >= 6")
    width = spanning.mask_width(k)
    if not 0 <= family < (1 << width):
        parser.error(f"--family outside 0..{(1 << width) - 1} for k = {k}")


def _cmd_gen(args, parser, out: IO[str]) -> int:
    k = args.k
    if k == 2:
        print(assembly.PETERSEN_NOTE, file=sys.stderr)
        return 2
    if not 3 <= k <= _ceiling():
        parser.error(f"gen needs 3 <= k <= {_ceiling()}")
    _check_family(parser, k, args.family)
    tree = assembly._tree_for(k, args.family)
    n = 2 * k + 1
    full = (1 << n) - 1
    vals = assembly.stream_gplus_vals(k, tree)
    if args.format == "bits":
        for v in vals:
            out.write(_render(assembly.odd_val(v, k), n))
            out.write("\n")
    elif args.format == "subsets":
        for v in vals:
            out.write(_subset_line(assembly.odd_val(v, k), n))
            out.write("\n")
    else:  # delta: the one position left unflipped by each step
        first = None
        prev = None
        for v in vals:
            ov = assembly.odd_val(v, k)
            if prev is None:
                first = ov
            else:
                out.write(str((full ^ (prev | ov)).bit_length()))
                out.write("\n")
            prev = ov
        out.write(str((full ^ (prev | first)).bit_length()))
        out.write("\n")
    return 0


def _cmd_middle(args, parser, out: IO[str]) -> int:
    k = args.k
    if not 1 <= k <= _ceiling():
        parser.error(f"middle needs 1 <= k <= {_ceiling()}")
    _check_family(parser, k, args.family)
    n = 2 * k + 1
    for v in assembly.stream_middle_vals(k, args.family):
        out.write(_render(v, n))
        out.write("\n")
    return 0


def _cmd_factor(args, parser, out: IO[str]) -> int:
    k = args.k
    if not 1 <= k <= _ceiling():
        parser.error(f"factor needs 1 <= k <= {_ceiling()}")
    for p in cycle_factor(k):
        out.write(",".join(str(v) for v in p.vertices))
        out.write("\n")
    return 0


def _cmd_tree(args, parser, out: IO[str]) -> int:
    k = args.k
    if not 3 <= k <= _ceiling():
        parser.error(f"tree needs 3 <= k <= {_ceiling()}")
    _check_family(parser, k, args.family)
    tree = assembly._tree_for(k, args.family)
    payload = {"k": k, "family": args.family, **tree.to_json()}
    out.write(json.dumps(payload, indent=2))
    out.write("\n")
    return 0


def _cmd_verify(args, parser, out: IO[str]) -> int:
    k = args.k
    if k < 1:
        parser.error("verify needs k >= 1")
    try:
        with open(args.input, "r", encoding="ascii") as fh:
            lines = [line.strip() for line in fh if line.strip()]
    except OSError as exc:
        parser.error(f"cannot read {args.input}: {exc}")
    n = 2 * k if args.target == "gplus" else 2 * k + 1
    failures = []
    vertices = []
    for i, line in enumerate(lines):
        if len(line) != n or set(line) - {"0", "1"}:
            failures.append(("line-format", f"line {i + 1}: {line!r}"))
            break
        vertices.append(Bits.parse(line))
    if not failures:
        if args.target == "odd":
            # lines are characteristic vectors of k-subsets of [2k+1]
            verts = tuple(
                tuple(i for i in range(1, n + 1) if v.bit(i)) for v in vertices
            )
        else:
            verts = tuple(vertices)
        cert = assembly.CycleCertificate(k, args.target, verts)
        report = verify.verify_certificate(cert)
        failures = list(report.failures)
    for name, item in failures:
        out.write(f"FAIL {name}: {item}\n")
    out.write("PASS\n" if not failures else "FAIL\n")
    return 0 if not failures else 1


def _iter_selfcheck(max_k: int):
    """Yield (label, report) pairs for every suite, capped per suite."""
    for k in range(1, min(max_k, 11) + 1):
        yield f"factor k={k}", verify.verify_factor(k)
        yield f"flip-sequences k={k}", verify.verify_flip_properties(k)
    for k in range(2, min(max_k, 6) + 1):
        yield f"tuple-pool k={k}", verify.verify_tuple_closure(k)
    for k in range(3, min(max_k, 9) + 1):
        yield f"tree k={k}", verify.verify_tree(k)
    for k in range(6, min(max_k, 7) + 1):
        for mask in range(1 << spanning.mask_width(k)):
            yield f"tree k={k} mask={mask}", verify.verify_tree(k, mask)
    for k in range(3, min(max_k, 8) + 1):
        yield f"odd cycle k={k}", verify.verify_certificate(assembly.hamilton_odd(k))
    for k in range(1, min(max_k, 8) + 1):
        yield (
            f"middle cycle k={k}",
            verify.verify_certificate(assembly.hamilton_middle_levels(k)),
        )


def _cmd_selfcheck(args, parser, out: IO[str]) -> int:
    max_k = min(args.max_k, _ceiling())
    if max_k < 1:
        parser.error("selfcheck needs --max-k >= 1")
    ok = True
    for label, report in _iter_selfcheck(max_k):
        status = "ok" if report.passed else "FAIL"
        out.write(f"{label}: {status}\n")
        if not report.passed:
            ok = False
            for name, item in report.failures[:5]:
                out.write(f"  {name}: {item}\n")
    out.write("selfcheck passed\n" if ok else "selfcheck FAILED\n")
    return 0 if ok else 1


def _cmd_bench(args, parser, out: IO[str]) -> int:
    k = args.k
    if not 3 <= k <= _ceiling():
        parser.error(f"bench needs 3 <= k <= {_ceiling()}")
    total = comb(2 * k + 1, k)
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        count = sum(1 for _ in cycle_factor(k))
        t1 = time.perf_counter()
        n = 0
        for _ in assembly.stream_gplus_vals(k):
            n += 1
        t2 = time.perf_counter()
        out.write(
            f"k={k} factor: {count} cycles in {t1 - t0:.3f}s | "
            f"hamilton: {n} vertices in {t2 - t1:.3f}s "
            f"({n / (t2 - t1):,.0f} vertices/s)\n"
        )
    if n != total:
        out.write(f"FAIL: streamed {n} vertices, expected {total}\n")
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddgray",
        description="Hamilton cycles (cyclic Gray codes) for odd graphs and the middle-levels graph",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a Hamilton cycle of the odd graph K(2k+1,k)")
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--format", choices=("bits", "subsets", "delta"), default="bits")
    gen.add_argument("--family", type=int, default=None, help="counting-tree bitmask (k >= 6)")

    middle = sub.add_parser("middle", help="emit a Hamilton cycle of the middle-levels graph")
    middle.add_argument("--k", type=int, required=True)
    middle.add_argument("--family", type=int, default=None)

    fac = sub.add_parser("factor", help="emit the cycle factor, one cycle per line")
    fac.add_argument("--k", type=int, required=True)

    tree = sub.add_parser("tree", help="emit the spanning tree with derivations")
    tree.add_argument("--k", type=int, required=True)
    tree.add_argument("--family", type=int, default=None)
    tree.add_argument("--emit", choices=("json",), default="json")

    ver = sub.add_parser("verify", help="check a certificate file in bits format")
    ver.add_argument("--k", type=int, required=True)
    ver.add_argument("--input", required=True)
    ver.add_argument("--target", choices=("odd", "gplus", "middle"), required=True)

    chk = sub.add_parser("selfcheck", help="run the verification suites")
    chk.add_argument("--max-k", type=int, default=6)

    bench = sub.add_parser("bench", help="time factor and Hamilton-cycle generation")
    bench.add_argument("--k", type=int, default=8)
    bench.add_argument("--repeat", type=int, default=3)

    return parser


_COMMANDS = {
    "gen": _cmd_gen,
    "middle": _cmd_middle,
    "factor": _cmd_factor,
    "tree": _cmd_tree,
    "verify": _cmd_verify,
    "selfcheck": _cmd_selfcheck,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None, out: IO[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    stream = out if out is not None else sys.stdout
    try:
        return _COMMANDS[args.command](args, parser, stream)
    except BrokenPipeError:
        return 0
    except (ValueError, assembly.AssemblyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
