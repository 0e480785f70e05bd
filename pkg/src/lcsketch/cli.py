"""Command line front end.

Exit codes: 0 on success (and for ``decide`` answering YES), 1 when
``decide`` answers NO or ``verify`` sees a failing criterion, 2 on usage,
parse or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .core import (
    MAX_SIGMA,
    MIN_SIGMA,
    format_rle,
    iter_text_chunks,
    parse_text,
    parse_weights,
    render_text,
)
from .errors import LcsketchError
from .hardgen import gen_pat, gen_perm_hard, gen_xz
from .lcs import decide_from_sketches
from .sketcher import encode_sketch, sketch_chunks
from .wlcs import WlcsStats, wlcs_solve


def _sigma(value: str) -> int:
    try:
        sigma = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if not MIN_SIGMA <= sigma <= MAX_SIGMA:
        raise argparse.ArgumentTypeError(f"sigma must be in {MIN_SIGMA}..{MAX_SIGMA}")
    return sigma


def _nonneg(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _int_list(value: str) -> list[int]:
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcsketch", description="LCS sketches and weighted LCS solvers.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sketch", help="sketch a digit stream")
    p.add_argument("--sigma", type=_sigma, required=True)
    p.add_argument("--limit", type=_nonneg, required=True)
    p.add_argument("--input", help="input file (default: stdin)")
    p.add_argument("--binary", action="store_true", help="write the binary LCSK1 format")

    p = sub.add_parser("decide", help="decide LCS(x, y) >= limit from sketches")
    p.add_argument("--sigma", type=_sigma, required=True)
    p.add_argument("--limit", type=_nonneg, required=True)
    p.add_argument("x_file")
    p.add_argument("y_file")

    p = sub.add_parser("wlcs", help="weighted LCS value")
    p.add_argument("--sigma", type=_sigma, required=True)
    p.add_argument("--weights", required=True)
    p.add_argument("--algo", choices=("auto", "dp", "rle"), default="auto")
    p.add_argument("--stats", action="store_true")
    p.add_argument("x_file")
    p.add_argument("y_file")

    p = sub.add_parser("gen", help="generate adversarial strings")
    gen = p.add_subparsers(dest="family", required=True)
    g = gen.add_parser("perm-hard")
    g.add_argument("--sigma", type=_sigma, required=True)
    g.add_argument("--limit", type=_nonneg, required=True)
    g = gen.add_parser("xz")
    g.add_argument("--sigma", type=_sigma, required=True)
    g.add_argument("--m", type=_nonneg, required=True)
    g.add_argument("--z", type=_int_list, required=True)
    g = gen.add_parser("pat")
    g.add_argument("--sigma", type=_sigma, required=True)
    g.add_argument("--m", type=_nonneg, required=True)
    g.add_argument("--i", type=_nonneg, required=True)
    g.add_argument("--t", type=_nonneg, required=True)

    p = sub.add_parser("verify", help="run the desk-scale acceptance checks")
    p.add_argument("--quick", action="store_true", help="reduced fuzz counts")
    return parser


def _sketch_file(path: Optional[str], sigma: int, limit: int):
    if path is None:
        return sketch_chunks(iter_text_chunks(sys.stdin.buffer, sigma), sigma, limit)
    with open(path, "rb") as fh:
        return sketch_chunks(iter_text_chunks(fh, sigma), sigma, limit)


def _read_text(path: str, sigma: int) -> bytes:
    with open(path, "rb") as fh:
        return parse_text(fh.read(), sigma)


def cmd_sketch(args: argparse.Namespace) -> int:
    r = _sketch_file(args.input, args.sigma, args.limit)
    if args.binary:
        sys.stdout.flush()
        sys.stdout.buffer.write(encode_sketch(r, args.sigma, args.limit))
        sys.stdout.buffer.flush()
    else:
        print(format_rle(r))
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    sx = _sketch_file(args.x_file, args.sigma, args.limit)
    sy = _sketch_file(args.y_file, args.sigma, args.limit)
    report = decide_from_sketches(sx, sy, args.limit, args.sigma)
    print("YES" if report.answer else "NO")
    print(f"sketch_x_bits={report.sketch_x_bits} sketch_y_bits={report.sketch_y_bits}")
    return 0 if report.answer else 1


def cmd_wlcs(args: argparse.Namespace) -> int:
    with open(args.weights, encoding="ascii", errors="replace") as fh:
        weights = parse_weights(fh.read(), args.sigma)
    x = _read_text(args.x_file, args.sigma)
    y = _read_text(args.y_file, args.sigma)
    stats = WlcsStats()
    print(wlcs_solve(x, y, weights, args.algo, stats))
    if args.stats:
        print(f"path={stats.path or 'empty'}")
        print(f"compressed_runs={stats.runs}")
        print(f"deque_insertions={stats.insertions} deque_removals={stats.removals}")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "perm-hard":
        x = gen_perm_hard(args.limit, args.sigma)
    elif args.family == "xz":
        x = gen_xz(args.z, args.m, args.sigma)
    else:
        x = gen_pat(args.i, bytes(args.t), args.m, args.sigma)
    print(render_text(x))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    from .acceptance import run_all

    results = run_all(0.05 if args.quick else 1.0)
    for r in results:
        print(r.line(), flush=True)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 1 if failed else 0


COMMANDS = {
    "sketch": cmd_sketch,
    "decide": cmd_decide,
    "wlcs": cmd_wlcs,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (LcsketchError, OSError) as exc:
        print(f"lcsketch: error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
