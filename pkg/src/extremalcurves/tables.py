"""Symbolic summary table, parameter scans, and record serialization.

The summary table lists, per gonality, the degree ranges an extremal
curve in P^r can occupy and whether the r-th slope inequality is settled
there.  Rows are symbolic in r; ``row_models`` instantiates a row at a
concrete r and ``expected_status`` says what verdict the row claims, so
the table can be cross-checked against the engine.

``scan`` walks a concrete (r, d) window instead and emits one flat
record per extremal model, including its slope verdict and the
Brill-Noether number at the extremal genus.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .castelnuovo import brill_noether, profile
from .errors import InvalidInput
from .extremal import ExtremalModel, ModelKind, classify_extremal
from .gonality import slope_verdict
from .verdicts import Status

TABLE_FIELDS = ("d", "gamma", "m", "eps", "slope")
SCAN_FIELDS = ("r", "d", "m", "eps", "pi", "kind", "gamma", "verdict", "rho")

STAR = "★"
STAR_RESOLVED = "yes if r=4; no if r>=5"


@dataclass(frozen=True)
class TableRow:
    """One symbolic row: a degree range in r, its invariants, and the
    slope-column token.  degree_lo/degree_hi are (coefficient, offset)
    pairs meaning coefficient*r + offset; None marks the filler row."""

    degree_expr: str
    gamma: int | None
    m: int | None
    eps: int | None
    eps_expr: str
    verdict: str
    degree_lo: tuple[int, int] | None
    degree_hi: tuple[int, int] | None
    star: bool = False

    def record(self) -> dict:
        return {
            "d": self.degree_expr,
            "gamma": "" if self.gamma is None else self.gamma,
            "m": "" if self.m is None else self.m,
            "eps": self.eps_expr,
            "slope": self.verdict,
        }


def table1(gamma_max: int = 6, mode: str = "paper-faithful") -> list[TableRow]:
    """Rows of the degree/gonality summary table up to the given gonality.

    mode "paper-faithful" leaves the open gamma=4 corner as a star;
    "resolved" spells out its r=4 / r>=5 split.  Everything else is
    identical between the modes.
    """
    if gamma_max < 4:
        raise InvalidInput(f"need gamma_max >= 4, got {gamma_max}")
    if mode not in ("paper-faithful", "resolved"):
        raise InvalidInput(f"unknown mode {mode!r}; use paper-faithful or resolved")
    rows = [
        TableRow("2r+1 <= d <= 3r-3", 3, 2, None, "2 <= eps <= r-2",
                 "yes (trigonal)", (2, 1), (3, -3)),
        TableRow("3r-2", 3, 3, 0, "0", "yes (trigonal)", (3, -2), (3, -2)),
    ]
    for gam in range(4, gamma_max + 1):
        for eps in range(gam - 2):  # fixed small remainders, one row each
            offset = eps - (gam - 2)
            expr = f"{gam - 1}r{offset}"
            if gam == 4:
                token = (STAR if mode == "paper-faithful" else STAR_RESOLVED) \
                    if eps == 0 else "no"
            else:
                token = ""
            rows.append(TableRow(expr, gam, gam - 1, eps, str(eps), token,
                                 (gam - 1, offset), (gam - 1, offset),
                                 star=(gam == 4 and eps == 0)))
        rows.append(TableRow(f"{gam - 1}r <= d <= {gam}r-{gam}", gam, gam - 1,
                             None, f"{gam - 2} <= eps <= r-2", "yes",
                             (gam - 1, 0), (gam, -gam)))
        rows.append(TableRow(f"{gam}r-{gam - 1}", gam, gam, 0, "0", "yes",
                             (gam, -(gam - 1)), (gam, -(gam - 1))))
    rows.append(TableRow("...", None, None, None, "", "", None, None))
    return rows


def row_models(row: TableRow, r: int) -> list[ExtremalModel]:
    """The row's extremal models at a concrete r (empty off the row)."""
    if r < 3:
        raise InvalidInput(f"need r >= 3, got {r}")
    if row.degree_lo is None:
        return []
    d_lo = row.degree_lo[0] * r + row.degree_lo[1]
    d_hi = row.degree_hi[0] * r + row.degree_hi[1]
    out = []
    for d in range(d_lo, d_hi + 1):
        if d < 2 * r + 1:
            continue
        for model in classify_extremal(d, r):
            if model.gamma != row.gamma:
                continue
            if model.kind is ModelKind.PLANE_VERONESE:
                continue
            if model.m != row.m:
                continue
            if row.eps is not None and model.eps != row.eps:
                continue
            out.append(model)
    return out


def expected_status(row: TableRow, r: int) -> Status | None:
    """The verdict the row claims at a concrete r; None where it is silent."""
    if row.star:
        if r == 4:
            return Status.HOLDS
        if r >= 5:
            return Status.VIOLATED
        return None
    if row.verdict.startswith("yes"):
        return Status.HOLDS
    if row.verdict == "no":
        return Status.VIOLATED
    return None


def scan(r_lo: int, r_hi: int, d_max: int | None = None) -> list[dict]:
    """Flat per-model records over r in [r_lo, r_hi], d from 2r+1 up.

    The degree ceiling is d_max when given, else 6r-5 per r (one full
    period past the highest tabulated family).  rho is the Brill-Noether
    number at the extremal genus.
    """
    if r_lo < 3:
        raise InvalidInput(f"need r_lo >= 3, got {r_lo}")
    if r_hi < r_lo:
        raise InvalidInput(f"need r_hi >= r_lo, got {r_hi} < {r_lo}")
    records = []
    for r in range(r_lo, r_hi + 1):
        ceiling = d_max if d_max is not None else 6 * r - 5
        for d in range(2 * r + 1, ceiling + 1):
            prof = profile(d, r)
            for model in classify_extremal(d, r):
                records.append({
                    "r": r,
                    "d": d,
                    "m": prof.m,
                    "eps": prof.eps,
                    "pi": prof.pi,
                    "kind": model.kind.value,
                    "gamma": model.gamma,
                    "verdict": str(slope_verdict(model).status),
                    "rho": brill_noether(d, r, prof.pi),
                })
    return records


def serialize(records: list[dict], fmt: str = "md",
              fieldnames: tuple[str, ...] | None = None) -> str:
    """Render records as a markdown pipe table, csv, or json.

    Fields come from the first record unless given explicitly; an empty
    record list needs explicit fieldnames.  Output ends with a newline.
    """
    if fieldnames is None:
        if not records:
            raise InvalidInput("empty record list needs explicit fieldnames")
        fieldnames = tuple(records[0])
    if fmt in ("md", "markdown"):
        lines = ["| " + " | ".join(fieldnames) + " |",
                 "| " + " | ".join("---" for _ in fieldnames) + " |"]
        for rec in records:
            cells = [_cell(rec.get(f)) for f in fieldnames]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fieldnames)
        for rec in records:
            writer.writerow([_cell(rec.get(f)) for f in fieldnames])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    raise InvalidInput(f"unknown format {fmt!r}; use md, csv, or json")


def _cell(value) -> str:
    return "" if value is None else str(value)
