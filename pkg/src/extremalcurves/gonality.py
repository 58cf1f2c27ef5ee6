"""Gonality-sequence intervals, slope verdicts, and the two worked families.

For a curve of gonality gamma and genus g, the ledger keeps one integer
interval [lo, hi] per index r, certain to contain the r-th gonality d_r,
with a provenance tag on each side.  Baseline seeds:

    d_1 = gamma,   d_{g-1} = 2g-2,   d_r = r+g for r >= g,   d_r <= r*gamma.

Extremal-curve facts sharpen individual entries, and two rules close the
system to a fixed point:

    strict increase   lo[r+1] >= lo[r] + 1,   hi[r] <= hi[r+1] - 1
    subadditivity     hi[r+s] <= hi[r] + hi[s]      (r+s <= g+2)

Lower and upper bounds never feed each other except through the final
crossing check, so the lower fixed point is one ascending pass and the
upper one alternates a descending chain pass with an ascending
subadditivity pass until stable.  Bounds only tighten and are integers,
so this terminates immediately.  Inconsistent seeds raise a
``ContradictionError`` naming the provenance tags on both sides.

Ledgers are single-owner and mutable while built, then frozen; frozen
ledgers are immutable and safe to share.  The derived-fact helpers below
(``apply_extremal_facts``, ``with_assumptions``, ``verylast_sequence``)
all return new frozen ledgers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .castelnuovo import profile
from .errors import ContradictionError, InvalidInput, UnsupportedInput
from .extremal import ExtremalModel, ModelKind, gonality_from_class
from .lattice import DivisorClass, adjunction_genus
from .verdicts import SlopeVerdict, Status

_INF = 10**18  # pre-seed sentinel; baseline ledgers always end up finite


@dataclass(frozen=True)
class GonalityEntry:
    """One closed interval lo <= d_index <= hi with its provenance tags."""

    index: int
    lo: int
    hi: int
    exact: bool
    provenance: tuple[str, ...]


class GonalityLedger:
    """Interval ledger for the gonality sequence of a (gamma, g) curve.

    Indices 1..g+2 are materialized; entries past the end are the known
    tail d_r = r + g."""

    __slots__ = ("gamma", "g", "max_index", "_lo", "_hi", "_lo_tag", "_hi_tag", "_frozen")

    def __init__(self, gamma: int, g: int):
        if gamma < 2:
            raise InvalidInput(f"need gamma >= 2, got {gamma}")
        if g < 3:
            raise InvalidInput(f"need g >= 3, got {g}")
        self.gamma = gamma
        self.g = g
        self.max_index = g + 2
        size = self.max_index + 1  # index 0 unused
        self._lo = [1] * size
        self._hi = [_INF] * size
        self._lo_tag = ["trivial"] * size
        self._hi_tag = ["trivial"] * size
        self._frozen = False

    # -- construction -------------------------------------------------

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> "GonalityLedger":
        self._frozen = True
        return self

    def thaw(self) -> "GonalityLedger":
        """A mutable copy; the receiver is untouched."""
        twin = GonalityLedger.__new__(GonalityLedger)
        twin.gamma = self.gamma
        twin.g = self.g
        twin.max_index = self.max_index
        twin._lo = list(self._lo)
        twin._hi = list(self._hi)
        twin._lo_tag = list(self._lo_tag)
        twin._hi_tag = list(self._hi_tag)
        twin._frozen = False
        return twin

    def _check_mutable(self) -> None:
        if self._frozen:
            raise RuntimeError("ledger is frozen; thaw() a copy to refine it")

    def _check_index(self, r: int) -> None:
        if not 1 <= r <= self.max_index:
            raise InvalidInput(
                f"index {r} outside the tracked range 1..{self.max_index}"
            )

    def set_lo(self, r: int, value: int, tag: str) -> None:
        self._check_mutable()
        self._check_index(r)
        if value > self._lo[r]:
            self._lo[r] = value
            self._lo_tag[r] = tag
            if value > self._hi[r]:
                raise ContradictionError(r, value, self._hi[r], tag, self._hi_tag[r])

    def set_hi(self, r: int, value: int, tag: str) -> None:
        self._check_mutable()
        self._check_index(r)
        if value < self._hi[r]:
            self._hi[r] = value
            self._hi_tag[r] = tag
            if value < self._lo[r]:
                raise ContradictionError(r, self._lo[r], value, self._lo_tag[r], tag)

    def set_exact(self, r: int, value: int, tag: str) -> None:
        self.set_lo(r, value, tag)
        self.set_hi(r, value, tag)

    def propagate(self) -> "GonalityLedger":
        """Close the intervals under strict increase and subadditivity."""
        self._check_mutable()
        lo, hi = self._lo, self._hi
        lo_tag, hi_tag = self._lo_tag, self._hi_tag
        top = self.max_index
        for r in range(1, top):  # lower bounds: one ascending pass suffices
            v = lo[r] + 1
            if v > lo[r + 1]:
                lo[r + 1] = v
                lo_tag[r + 1] = lo_tag[r]
        changed = True
        while changed:
            changed = False
            for r in range(top - 1, 0, -1):  # hi[r] <= hi[r+1] - 1
                v = hi[r + 1] - 1
                if v < hi[r]:
                    hi[r] = v
                    hi_tag[r] = hi_tag[r + 1]
                    changed = True
            for t in range(2, top + 1):  # hi[t] <= hi[s] + hi[t-s]
                best = hi[t]
                split = 0
                for s in range(1, t // 2 + 1):
                    v = hi[s] + hi[t - s]
                    if v < best:
                        best = v
                        split = s
                if split:
                    hi[t] = best
                    hi_tag[t] = _join_tags(hi_tag[split], hi_tag[t - split])
                    changed = True
        for r in range(1, top + 1):
            if lo[r] > hi[r]:
                raise ContradictionError(r, lo[r], hi[r], lo_tag[r], hi_tag[r])
        return self

    # -- queries -------------------------------------------------------

    def entry(self, r: int) -> GonalityEntry:
        if r < 1:
            raise InvalidInput(f"need index >= 1, got {r}")
        if r > self.max_index:
            # beyond the materialized window the sequence is the known tail
            return GonalityEntry(r, r + self.g, r + self.g, True, ("riemann-roch",))
        lo, hi = self._lo[r], self._hi[r]
        tags = (self._lo_tag[r],)
        if self._hi_tag[r] != self._lo_tag[r]:
            tags = (self._lo_tag[r], self._hi_tag[r])
        return GonalityEntry(r, lo, hi, lo == hi, tags)

    def entries(self) -> list[GonalityEntry]:
        return [self.entry(r) for r in range(1, self.max_index + 1)]

    def exact_value(self, r: int) -> int | None:
        e = self.entry(r)
        return e.lo if e.exact else None


def _join_tags(t1: str, t2: str) -> str:
    if t1 == t2:
        return t1
    parts = sorted(set(t1.split("+")) | set(t2.split("+")))
    return "+".join(parts)


def baseline_ledger(gamma: int, g: int) -> GonalityLedger:
    """The frozen ledger seeded with the classical facts alone."""
    led = GonalityLedger(gamma, g)
    for r in range(1, led.max_index + 1):
        led.set_hi(r, r * gamma, "gonal-ceiling")
    led.set_exact(1, gamma, "gonality")
    led.set_exact(g - 1, 2 * g - 2, "canonical")
    for r in range(g, led.max_index + 1):
        led.set_exact(r, r + g, "riemann-roch")
    return led.propagate().freeze()


def _seed_extremal_facts(led: GonalityLedger, model: ExtremalModel) -> None:
    """Seed (without propagating) the exact entries an extremal model pins.

    Degree d >= 3r-1 pins d_{r-1} = d-1, and for gonality >= 4 also
    d_r = d plus, away from plane models, hi_{r+1} <= d + gamma - 1.
    Fourgonal models of degree exactly 3r-2 with r >= 5 pin
    d_{r+1} = 3r+1.
    """
    r, d, gamma = model.r, model.d, model.gamma
    if d >= 3 * r - 1:
        led.set_exact(r - 1, d - 1, "extremal-drop")
        if gamma >= 4:
            led.set_exact(r, d, "extremal-degree")
            if model.kind is not ModelKind.PLANE_VERONESE:
                led.set_hi(r + 1, d + gamma - 1, "gonal-residual")
    if gamma == 4 and d == 3 * r - 2 and r >= 5:
        led.set_exact(r + 1, 3 * r + 1, "dual-projection")


def apply_extremal_facts(ledger: GonalityLedger, model: ExtremalModel) -> GonalityLedger:
    """A new frozen ledger with the model's exact facts folded in."""
    if ledger.gamma != model.gamma or ledger.g != model.g:
        raise InvalidInput(
            f"ledger is for (gamma={ledger.gamma}, g={ledger.g}) but the model"
            f" has (gamma={model.gamma}, g={model.g})"
        )
    led = ledger.thaw()
    _seed_extremal_facts(led, model)
    return led.propagate().freeze()


def with_assumptions(
    ledger: GonalityLedger, assumptions: list[tuple[int, int]], tag: str = "assume"
) -> GonalityLedger:
    """A new frozen ledger with hypothetical exact values asserted.

    Useful for what-if checks; crossing a derived bound raises a
    ``ContradictionError`` naming the assumption tag and the bound's tag.
    """
    led = ledger.thaw()
    for r, value in assumptions:
        if r < 1:
            raise InvalidInput(f"need index >= 1, got {r}")
        if r > led.max_index:
            known = r + led.g
            if value != known:  # the tail is already exact out here
                if value > known:
                    raise ContradictionError(r, value, known, tag, "riemann-roch")
                raise ContradictionError(r, known, value, "riemann-roch", tag)
            continue
        led.set_exact(r, value, tag)
    return led.propagate().freeze()


def slope_verdict(model: ExtremalModel) -> SlopeVerdict:
    """Three-valued verdict on the r-th slope inequality for an extremal model.

    Decision order (first match wins): low gonality, plane models, the
    fourgonal degree-(3r-2) split, degree 3r-1, the harmless band
    r*(gamma-1) <= d <= gamma*(r-1)+1, otherwise Undetermined.
    """
    r, d, gamma = model.r, model.d, model.gamma
    if gamma <= 3:
        return SlopeVerdict(
            Status.HOLDS,
            "low-gonality",
            "gonality at most 3: the full sequence is known and slope-monotone",
        )
    if model.kind is ModelKind.PLANE_VERONESE:
        return plane_slope_verdict(model.k, r)
    if gamma == 4 and d == 3 * r - 2:
        if r == 4:
            return SlopeVerdict(
                Status.HOLDS,
                "fourgonal-10-4",
                "the genus-9 fourgonal space model has d_4=10 and d_5=13;"
                " no slope violation fits",
            )
        if r >= 5:
            return SlopeVerdict(
                Status.VIOLATED,
                "dual-projection",
                "double projection pins d_{r+1} = 3r+1 while d_r <= 3r-2;"
                " the r-th slope fails",
            )
    if d == 3 * r - 1:
        return SlopeVerdict(
            Status.VIOLATED,
            "degree-3r-1",
            "degree 3r-1 extremal curves violate the r-th slope inequality",
        )
    if r * (gamma - 1) <= d <= gamma * (r - 1) + 1:
        return SlopeVerdict(
            Status.HOLDS,
            "band",
            "degree sits in the band r*(gamma-1) <= d <= gamma*(r-1)+1 where"
            " the residual pencil argument closes the inequality",
        )
    return SlopeVerdict(
        Status.UNDETERMINED,
        "open",
        "outside every certified range; no verdict is known",
    )


def known_family_verdict(family: str) -> SlopeVerdict:
    """Verdicts for curve families whose whole sequence behavior is known.

    Only reachable by naming the family explicitly; nothing infers these
    from (d, r, gamma).
    """
    families = ("hyperelliptic", "trigonal", "bielliptic", "general_fourgonal")
    if family not in families:
        raise InvalidInput(f"unknown curve family {family!r}; pick one of {families}")
    return SlopeVerdict(
        Status.HOLDS,
        "known-family",
        f"every slope inequality holds for {family.replace('_', ' ')} curves",
    )


# -- smooth plane curves ---------------------------------------------------


def _noether_split(r: int) -> tuple[int, int]:
    """The unique (alpha, beta) with r = alpha*(alpha+3)/2 - beta, 0 <= beta <= alpha.

    The blocks [alpha*(alpha+1)/2, alpha*(alpha+3)/2] tile the positive
    integers, so alpha is the largest value with alpha*(alpha+1)/2 <= r.
    """
    alpha = (isqrt(8 * r + 1) - 1) // 2
    beta = alpha * (alpha + 3) // 2 - r
    return alpha, beta


def plane_curve_gonality(k: int, r: int) -> int:
    """The r-th gonality of a smooth plane curve of degree k >= 5.

    Below the genus the sequence is alpha*k - beta on the Noether split
    of r; from r = g on it is the known tail r + g.
    """
    if k < 5:
        raise UnsupportedInput(f"plane-curve sequences need degree k >= 5, got {k}")
    if r < 1:
        raise InvalidInput(f"need r >= 1, got {r}")
    g = (k - 1) * (k - 2) // 2
    if r >= g:
        return r + g
    alpha, beta = _noether_split(r)
    return alpha * k - beta


def plane_slope_verdict(k: int, r: int) -> SlopeVerdict:
    """Slope verdict for a smooth plane curve of degree k at index r.

    Inside a Noether block (beta != 0) the step is one and the inequality
    holds; on a block boundary it fails when alpha <= k-4 and is left
    open otherwise.
    """
    if k < 5:
        raise UnsupportedInput(f"plane-curve sequences need degree k >= 5, got {k}")
    if r < 1:
        raise InvalidInput(f"need r >= 1, got {r}")
    alpha, beta = _noether_split(r)
    if beta != 0:
        return SlopeVerdict(
            Status.HOLDS,
            "noether-step",
            f"index {r} sits inside a Noether block (beta={beta});"
            " the next step is one and the inequality holds",
        )
    if alpha <= k - 4:
        return SlopeVerdict(
            Status.VIOLATED,
            "noether-block",
            f"index {r} ends a Noether block (beta=0 and alpha={alpha} <= k-4);"
            " the next step jumps and the inequality fails",
        )
    return SlopeVerdict(
        Status.UNDETERMINED,
        "noether-edge",
        f"index {r} ends a Noether block with alpha={alpha} > k-4;"
        " no verdict is known",
    )


# -- the foursecant family on a Hirzebruch surface -------------------------


@dataclass(frozen=True)
class VerylastRow:
    """One unisecant re-embedding in the sweep: |C0 + (n+a)*L| puts the
    curve in P^r with r = n+2a+1, degree 4(n+a) and remainder n-2a-1."""

    a: int
    r: int
    degree: int
    eps: int

    def record(self) -> dict:
        return {"a": self.a, "r": self.r, "degree": self.degree, "eps": self.eps}


def verylast_sequence(n: int) -> tuple[GonalityLedger, list[VerylastRow]]:
    """Ledger and sweep report for the class 4*C0 + 4n*L on the surface n >= 3.

    The curve has genus 6n-3 and gonality 4.  Each a in
    0..floor((n-3)/2) re-embeds it as an extremal curve of degree 4(n+a)
    in P^{n+2a+1}; folding those models' exact facts into one ledger
    pins d_{n+2a} = 4(n+a)-1 and d_{n+2a+1} = 4(n+a) across the sweep
    and bounds the first entry after it by 4(n+abar)+3.
    """
    if n < 3:
        raise UnsupportedInput(f"the foursecant sweep needs n >= 3, got {n}")
    x = DivisorClass(n, 4, 4 * n)
    g = adjunction_genus(x)
    gamma = gonality_from_class(x)
    if (g, gamma) != (6 * n - 3, 4):
        raise ArithmeticError(f"foursecant invariants broke for {x}: g={g} gamma={gamma}")
    led = baseline_ledger(gamma, g).thaw()
    rows = []
    for a in range((n - 3) // 2 + 1):
        r_a = n + 2 * a + 1
        delta_a = 4 * (n + a)
        prof = profile(delta_a, r_a)
        if (prof.m, prof.eps, prof.pi) != (3, n - 2 * a - 1, g):
            raise ArithmeticError(
                f"re-embedding a={a} is not extremal: m={prof.m} eps={prof.eps}"
                f" pi={prof.pi} g={g}"
            )
        model = ExtremalModel(
            kind=ModelKind.TYPE_III,
            d=delta_a,
            r=r_a,
            m=3,
            eps=prof.eps,
            gamma=4,
            g=g,
            scroll_class=(4, -4 * a),
        )
        rows.append(VerylastRow(a=a, r=r_a, degree=delta_a, eps=prof.eps))
        _seed_extremal_facts(led, model)
    led.propagate().freeze()
    return led, rows
