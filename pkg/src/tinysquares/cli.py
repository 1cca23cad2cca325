"""Command-line interface.

With --json, stdout carries only the command's payload as JSON (for
``construct`` that is an ideal document, so it can be fed straight back to
``mu``); notes go to stderr.  Exit status: 0 ok, 1 domain failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, List, Optional

from . import constructions, search
from .core import IdealError, StaircaseIdeal, ideal_power
from .io import IdealFormatError, parse_ideal, write_scan_csv

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandResult:
    status: str
    payload: Any
    text: str = ""
    diagnostics: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.status == "ok" else EXIT_FAILED


def render_ideal(I: StaircaseIdeal) -> str:
    return ", ".join(str(g) for g in I)


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def _read_ideal(path: str) -> StaircaseIdeal:
    if path == "-":
        return parse_ideal(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def cmd_construct(args) -> CommandResult:
    I = constructions.tiny_square_ideal(args.m)
    notes = [f"tiny-square ideal, m={args.m}"]
    if args.k is not None:
        if args.k < 1:
            raise IdealError("k must be >= 1")
        I = ideal_power(I, args.k)
        notes.append(f"power k={args.k}")
    notes.append(f"mu={len(I)}")
    return CommandResult("ok", I.to_list(), render_ideal(I), notes)


def cmd_verify(args) -> CommandResult:
    rep = constructions.check_conditions(constructions.tiny_square_ideal(args.m))
    lines = [f"m = {rep.m}"]
    lines += [f"condition ({k}): {'holds' if v else 'FAILS'}" for k, v in sorted(rep.conditions.items())]
    lines.append(f"mu(I^2) = {rep.square_mu}")
    lines.append("verified" if rep.verified else "NOT verified")
    return CommandResult("ok" if rep.verified else "failed", rep.to_dict(), "\n".join(lines), rep.failures)


def cmd_mu(args) -> CommandResult:
    I = _read_ideal(args.file)
    if args.k < 1:
        raise IdealError("k must be >= 1")
    value = len(ideal_power(I, args.k))
    return CommandResult("ok", value, str(value))


def cmd_power_profile(args) -> CommandResult:
    if args.file is not None:
        I = _read_ideal(args.file)
    elif args.m is not None:
        I = constructions.tiny_square_ideal(args.m)
    else:
        raise IdealError("give an ideal file or --m")
    prof = constructions.power_mu_profile(I, args.kmax)
    text = "\n".join(f"k={k}: mu={v}" for k, v in prof)
    return CommandResult("ok", [[k, v] for k, v in prof], text)


def cmd_search(args) -> CommandResult:
    out = search.min_mu_square(args.m, args.bound, args.workers, symmetric=not args.no_symmetry)
    banner = f"verified within exponent bound B={args.bound}"
    text = "\n".join([
        f"{banner} (not a proof)",
        f"m = {out.m}, candidates = {out.candidates_examined}",
        f"minimum mu(I^2) = {out.minimum_mu_square}",
        f"witness: {render_ideal(out.witness)}",
    ])
    return CommandResult("ok", out.to_dict(), text, [banner])


def cmd_scan(args) -> CommandResult:
    rows = search.two_degree_scan(args.gap, args.m, args.bound, args.workers)
    with open(args.output, "w", encoding="utf-8", newline="") as fh:
        write_scan_csv(rows, fh)
    summary = [
        f"m={r.m}: " + ("none" if r.min_mu_square is None else f"min mu(I^2)={r.min_mu_square}")
        for r in rows
    ]
    payload = [
        {"m": r.m, "gap": r.gap, "bound": r.bound, "min_mu_square": r.min_mu_square,
         "witness": None if r.witness is None else r.witness.to_list()}
        for r in rows
    ]
    return CommandResult("ok", payload, "\n".join(summary), [f"wrote {args.output}"])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the payload as JSON")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes for searches (default: available CPUs)")

    p = argparse.ArgumentParser(prog="tinysquares", parents=[common],
                                description="Monomial ideals in two variables with tiny squares.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="print the m-generator tiny-square ideal")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--k", type=int, help="print the k-th power instead")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check the five divisibility conditions")
    v.add_argument("--m", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    mu = sub.add_parser("mu", parents=[common], help="mu(I^k) of an ideal file ('-' for stdin)")
    mu.add_argument("file")
    mu.add_argument("--k", type=int, default=1)
    mu.set_defaults(func=cmd_mu)

    pp = sub.add_parser("power-profile", parents=[common], help="mu(I^k) for k = 1..kmax")
    pp.add_argument("file", nargs="?")
    pp.add_argument("--m", type=int, help="use the tiny-square ideal instead of a file")
    pp.add_argument("--kmax", type=int, default=5)
    pp.set_defaults(func=cmd_power_profile)

    s = sub.add_parser("search", parents=[common], help="exhaustive minimum of mu(I^2)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--no-symmetry", action="store_true", help="disable x<->y pruning")
    s.set_defaults(func=cmd_search)

    sc = sub.add_parser("scan", parents=[common], help="two-degree scan at a fixed degree gap")
    sc.add_argument("--gap", type=int, required=True)
    sc.add_argument("--m", type=_int_range, required=True, metavar="A..B")
    sc.add_argument("--bound", type=int, required=True)
    sc.add_argument("--output", required=True)
    sc.set_defaults(func=cmd_scan)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.workers = getattr(args, "workers", None)
    try:
        result = args.func(args)
    except IdealFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IdealError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.json:
        print(json.dumps(result.payload, sort_keys=True, separators=(",", ":")))
        for note in result.diagnostics:
            print(note, file=sys.stderr)
    else:
        print(result.text)
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
