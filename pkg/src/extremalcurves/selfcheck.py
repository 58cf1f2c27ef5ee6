"""Cross-checks recomputing core facts two independent ways.

Wired into the command line as ``selfcheck``.  Every check compares a
closed form, a round trip, or an invariant against the engine; the count
is deterministic (fixed grids, fixed seed).
"""

from __future__ import annotations

import random

from .castelnuovo import profile
from .extremal import (
    ModelKind,
    classify_extremal,
    embed_extremal,
    verify_extremal_class,
)
from .errors import EmbeddingError
from .gonality import plane_curve_gonality, slope_verdict, verylast_sequence
from .lattice import (
    DivisorClass,
    adjunction_genus,
    canonical_class,
    class_in_HL,
    formal_genus,
    intersect,
    scroll_from_rn,
)
from .verdicts import Status


def run_selfcheck() -> tuple[int, list[str]]:
    """Run every check; returns (number of checks, failure messages)."""
    count = 0
    failures: list[str] = []

    def check(ok: bool, msg: str) -> None:
        nonlocal count
        count += 1
        if not ok:
            failures.append(msg)

    rng = random.Random(20210614)
    for _ in range(200):  # bilinearity and symmetry of the pairing
        n = rng.randint(0, 6)
        x, y, z = (
            DivisorClass(n, rng.randint(-9, 9), rng.randint(-9, 9))
            for _ in range(3)
        )
        check(intersect(x, y) == intersect(y, x), f"symmetry broke at {x}, {y}")
        check(
            intersect(x + y, z) == intersect(x, z) + intersect(y, z),
            f"additivity broke at {x}, {y}, {z}",
        )
        check(intersect(3 * x, y) == 3 * intersect(x, y), f"scaling broke at {x}, {y}")

    for n in range(7):  # adjunction pairing parity (formal_genus asserts it)
        k = canonical_class(n)
        for a in range(-15, 16):
            for b in range(-15, 16):
                x = DivisorClass(n, a, b)
                pair = intersect(k + x, x)
                check(pair % 2 == 0, f"odd adjunction pairing at {x}")
                check(
                    formal_genus(x) == pair // 2 + 1,
                    f"formal genus disagrees with pairing at {x}",
                )

    for n in range(7):  # genus closed form on smoothable classes
        for a in range(2, 9):
            for b in range(a * n + 1, a * n + 10):
                x = DivisorClass(n, a, b)
                closed = (b - 1) * (a - 1) - n * a * (a - 1) // 2
                check(
                    adjunction_genus(x) == closed,
                    f"genus closed form broke at {x}",
                )

    for n in range(5):  # embedding round trips
        for gamma in range(3, 8):
            # lam >= gamma keeps gamma the ruling degree on the product surface
            lam_floor = max(gamma * n + 1, gamma, -(-gamma * (gamma + n - 2) // 2))
            for lam in range(lam_floor, lam_floor + 6):
                if n == 1 and lam == gamma:
                    continue
                try:
                    res = embed_extremal(gamma, lam, n)
                except EmbeddingError:
                    continue
                check(res.hypothesis_met, f"hypothesis lost at ({gamma},{lam},{n})")
                check(
                    res.profile.m == gamma - 1 and res.genus == res.profile.pi,
                    f"embedding not extremal at ({gamma},{lam},{n})",
                )
                check(
                    class_in_HL(DivisorClass(n, gamma, lam), res.scroll)
                    == res.model.scroll_class,
                    f"scroll class mismatch at ({gamma},{lam},{n})",
                )

    for r in range(3, 13):  # classification vs genus-based verification
        scroll = scroll_from_rn(r, (r + 1) % 2)
        for d in range(2 * r + 1, 4 * r + 1):
            for model in classify_extremal(d, r):
                if model.scroll_class is None:
                    continue
                h, l = model.scroll_class
                check(
                    verify_extremal_class(h, l, scroll),
                    f"classified class {h}H{l:+d}L fails verification at d={d} r={r}",
                )
            check(
                not verify_extremal_class(2, d - 2 * (r - 1), scroll),
                f"bisecant class passed verification at d={d} r={r}",
            )

    for r in range(3, 31, 3):  # profile round trips
        for d in range(2 * r + 1, 10 * r + 1):
            p = profile(d, r)
            check(
                d - 1 == p.m * (r - 1) + p.eps and 0 <= p.eps <= r - 2,
                f"profile division broke at d={d} r={r}",
            )
            check(
                p.pi == p.m * (p.m - 1) // 2 * (r - 1) + p.m * p.eps,
                f"genus bound formula broke at d={d} r={r}",
            )

    for k in range(5, 13):  # plane-curve sequences are strictly increasing
        g = (k - 1) * (k - 2) // 2
        seq = [plane_curve_gonality(k, r) for r in range(1, g + 4)]
        check(seq[0] == k - 1 and seq[1] == k, f"plane sequence start broke at k={k}")
        check(
            all(a < b for a, b in zip(seq, seq[1:])),
            f"plane sequence not strictly increasing at k={k}",
        )
        check(seq[g - 1 - 1] == 2 * g - 2, f"plane canonical entry broke at k={k}")

    for n in range(3, 16):  # foursecant sweep invariants
        led, rows = verylast_sequence(n)
        check(
            led.gamma == 4 and led.g == 6 * n - 3,
            f"foursecant invariants broke at n={n}",
        )
        check(len(rows) == (n - 3) // 2 + 1, f"foursecant sweep length broke at n={n}")
        for row in rows:
            check(
                led.exact_value(row.r) == row.degree
                and led.exact_value(row.r - 1) == row.degree - 1,
                f"foursecant ledger entries broke at n={n} a={row.a}",
            )
        abar = (n - 3) // 2
        for r in range(n, n + 2 * abar + 2):
            d_r = led.exact_value(r)
            hi_next = led.entry(r + 1).hi
            check(
                d_r is not None and r * hi_next <= (r + 1) * d_r,
                f"foursecant slope window broke at n={n} r={r}",
            )

    for gamma in range(4, 9):  # verdict bands (empty degree window below r=gamma-1)
        for r in range(4, 21):
            for d in range(r * (gamma - 1), gamma * (r - 1) + 2):
                for model in classify_extremal(d, r):
                    if model.gamma != gamma or model.kind is ModelKind.PLANE_VERONESE:
                        continue
                    check(
                        slope_verdict(model).status is Status.HOLDS,
                        f"band verdict broke at gamma={gamma} d={d} r={r}",
                    )
    for r in range(3, 21):  # the two fourgonal boundary degrees
        for model in classify_extremal(3 * r - 1, r):
            if model.gamma == 4:
                check(
                    slope_verdict(model).status is Status.VIOLATED,
                    f"degree 3r-1 verdict broke at r={r}",
                )
        if r >= 4:
            for model in classify_extremal(3 * r - 2, r):
                if model.gamma == 4 and model.kind is ModelKind.TYPE_III:
                    want = Status.HOLDS if r == 4 else Status.VIOLATED
                    check(
                        slope_verdict(model).status is want,
                        f"degree 3r-2 verdict broke at r={r}",
                    )

    for r in range(3, 13):  # no degenerate rational models ever classify
        for d in range(2 * r + 1, 5 * r + 1):
            for model in classify_extremal(d, r):
                check(
                    not (model.eps == 0 and model.m == 1),
                    f"degenerate model emitted at d={d} r={r}",
                )

    return count, failures
