"""Degree/genus bookkeeping for curves in P^r.

Splitting d - 1 = m*(r-1) + eps with 0 <= eps <= r-2 gives the ratio m
and remainder eps that drive the maximal-genus bound

    pi(d, r) = m * ( (m-1)*(r-1)/2 + eps ).

m*(m-1) is always even, so the bound is computed exactly in integers.
A curve whose genus attains pi(d, r) is called extremal.  Strict mode
keeps to the regime d >= 2r+1 where the bound machinery is meaningful;
lenient mode accepts d >= r+1 and is used for raw ratio/remainder reads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .verdicts import SlopeVerdict, Status


@dataclass(frozen=True)
class CurveProfile:
    """The (m, eps) split of (d, r) together with the genus bound pi."""

    d: int
    r: int
    m: int
    eps: int
    pi: int


def profile(d: int, r: int, strict: bool = True) -> CurveProfile:
    """Ratio, remainder and maximal genus for degree d in P^r.

    Strict mode requires d >= 2r+1; lenient mode accepts d >= r+1.
    """
    if r < 3:
        raise InvalidInput(f"need r >= 3, got r={r}")
    floor = 2 * r + 1 if strict else r + 1
    if d < floor:
        mode = "strict" if strict else "lenient"
        raise InvalidInput(f"need d >= {floor} in {mode} mode, got d={d}")
    m, eps = divmod(d - 1, r - 1)
    pi = (m * (m - 1) // 2) * (r - 1) + m * eps
    return CurveProfile(d=d, r=r, m=m, eps=eps, pi=pi)


def brill_noether(d: int, r: int, g: int) -> int:
    """The Brill-Noether number rho = g - (r+1)*(g - d + r)."""
    if r < 1:
        raise InvalidInput(f"need r >= 1, got r={r}")
    if g < 0:
        raise InvalidInput(f"need g >= 0, got g={g}")
    return g - (r + 1) * (g - d + r)


def low_degree_verdict(d: int, r: int) -> SlopeVerdict:
    """Slope verdict in the low range r+1 <= d <= 2r, below the extremal regime.

    For d < 2r the series is nonspecial and the whole sequence is known;
    at d = 2r the bound still leaves no room for a violation.
    """
    if r < 3:
        raise InvalidInput(f"need r >= 3, got r={r}")
    if d < r + 1 or d > 2 * r:
        raise InvalidInput(
            f"low-degree range is {r + 1} <= d <= {2 * r}, got d={d}"
            " (higher degrees go through the extremal pipeline)"
        )
    if d < 2 * r:
        return SlopeVerdict(
            Status.HOLDS,
            "nonspecial",
            "degree below 2r: the series is nonspecial and every slope inequality holds",
        )
    return SlopeVerdict(
        Status.HOLDS,
        "d=2r",
        "degree 2r: maximal genus r+1 leaves no room for a slope violation",
    )
