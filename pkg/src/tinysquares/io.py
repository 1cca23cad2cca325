"""Ideal files (a JSON array of [x, y] exponent pairs) and scan CSVs."""

from __future__ import annotations

import csv
import json
from typing import IO, Iterable

from .core import StaircaseIdeal

__all__ = ["IdealFormatError", "parse_ideal", "dump_ideal", "write_scan_csv", "SCAN_HEADER"]

SCAN_HEADER = ["m", "gap", "bound", "min_mu_square", "witness"]


class IdealFormatError(ValueError):
    def __init__(self, msg: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


def parse_ideal(text: str) -> StaircaseIdeal:
    """Parse an ideal document; generator order is irrelevant and the result is minimalized."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IdealFormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, list) or not data:
        raise IdealFormatError("expected a nonempty array of [x, y] pairs")
    for k, g in enumerate(data):
        if not (
            isinstance(g, list)
            and len(g) == 2
            and all(type(e) is int and e >= 0 for e in g)
        ):
            raise IdealFormatError(f"entry {k} is not a pair of nonnegative integers: {g!r}")
    try:
        return StaircaseIdeal(data)
    except (ValueError, OverflowError) as exc:
        raise IdealFormatError(str(exc)) from None


def dump_ideal(I: StaircaseIdeal) -> str:
    return json.dumps(I.to_list(), separators=(",", ":"))


def write_scan_csv(rows: Iterable, fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SCAN_HEADER)
    for r in rows:
        w.writerow([
            r.m,
            r.gap,
            r.bound,
            "none" if r.min_mu_square is None else r.min_mu_square,
            "" if r.witness is None else dump_ideal(r.witness),
        ])
