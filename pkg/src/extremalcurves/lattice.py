"""Exact intersection theory on Hirzebruch surfaces and their scroll models.

The Picard lattice of the surface with invariant n >= 0 is Z[C0] + Z[L],
where C0 is the section of self-intersection -n and L a ruling fiber:

    C0.C0 = -n,    C0.L = 1,    L.L = 0.

A unisecant system |C0 + beta*L| with beta >= n maps the surface to a
rational normal scroll of degree 2*beta - n in P^r, r = 2*beta + 1 - n
(a cone over a rational normal curve exactly when beta = n).  On the
scroll we work in the (H, L) basis with

    H.H = r - 1,   H.L = 1,   L.L = 0,   K ~ -2H + (r-3)L.

The surface canonical class is -2*C0 - (n+2)*L and the genus of a curve
class X comes from adjunction, 2g - 2 = (K + X).X; the pairing is
provably even, which is asserted rather than truncated.  All arithmetic
is exact (Python integers), and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvalidInput


@dataclass(frozen=True)
class DivisorClass:
    """A class a*C0 + b*L on the surface with invariant n."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput(f"surface invariant must be >= 0, got n={self.n}")

    def _check_same_surface(self, other: "DivisorClass") -> None:
        if self.n != other.n:
            raise InvalidInput(
                f"classes live on different surfaces (n={self.n} vs n={other.n})"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_surface(other)
        return DivisorClass(self.n, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_surface(other)
        return DivisorClass(self.n, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.n, -self.a, -self.b)

    def __rmul__(self, c: int) -> "DivisorClass":
        return DivisorClass(self.n, c * self.a, c * self.b)

    __mul__ = __rmul__

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def normalized_ruling(self) -> "DivisorClass":
        """On n=0 the two rulings play symmetric roles; swap so that a <= b."""
        if self.n == 0 and self.a > self.b:
            return DivisorClass(0, self.b, self.a)
        return self

    def __str__(self) -> str:
        return f"{self.a}*C0 + {self.b}*L on F{self.n}"


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number of two classes on the same surface."""
    d1._check_same_surface(d2)
    return -d1.n * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b


def canonical_class(n: int) -> DivisorClass:
    """Canonical class -2*C0 - (n+2)*L of the surface with invariant n."""
    if n < 0:
        raise InvalidInput(f"surface invariant must be >= 0, got n={n}")
    return DivisorClass(n, -2, -(n + 2))


def is_irreducible_smoothable(x: DivisorClass) -> bool:
    """Whether the class contains an irreducible curve, smooth for generic
    members: the fiber, the negative section, or a > 0 with b > a*n
    (b = a*n also qualifies when n > 0; those members pass through the
    vertex side of the cone model)."""
    a, b, n = x.a, x.b, x.n
    if (a, b) == (0, 1) or (a, b) == (1, 0):
        return True
    if a > 0 and b > a * n:
        return True
    if a > 0 and b == a * n and n > 0:
        return True
    return False


def is_very_ample(x: DivisorClass) -> bool:
    """Very ample exactly when a > 0 and b > a*n (so b > 0 when n = 0)."""
    return x.a > 0 and x.b > x.a * x.n


def formal_genus(x: DivisorClass) -> int:
    """Adjunction genus computed formally, with no effectivity checks.

    May be negative; useful as a raw oracle.  The pairing (K+X).X is even
    for every class, which is asserted.
    """
    pairing = intersect(canonical_class(x.n) + x, x)
    if pairing % 2:
        raise ArithmeticError(f"adjunction pairing {pairing} is odd for {x}")
    return pairing // 2 + 1


def adjunction_genus(x: DivisorClass) -> int:
    """Genus of a general member of |X|, via 2g - 2 = (K + X).X.

    Requires the class to be irreducible-smoothable and the genus to come
    out non-negative.
    """
    if not is_irreducible_smoothable(x):
        raise DomainError(f"{x} is not an irreducible-smoothable class")
    pairing = intersect(canonical_class(x.n) + x, x)
    if pairing < -2:
        raise DomainError(f"adjunction pairing {pairing} < -2 for {x}")
    g = formal_genus(x)
    if g < 0:
        raise DomainError(f"negative genus {g} for {x}")
    return g


def h0_unisecant(beta: int, n: int) -> int:
    """Number of sections of |C0 + beta*L|, namely 2*beta + 2 - n."""
    if n < 0:
        raise InvalidInput(f"surface invariant must be >= 0, got n={n}")
    if beta < n:
        raise InvalidInput(f"unisecant systems need beta >= n, got beta={beta}, n={n}")
    return 2 * beta + 2 - n


@dataclass(frozen=True)
class ScrollEmbedding:
    """The surface with invariant n embedded by |C0 + beta*L| in P^r."""

    n: int
    beta: int
    r: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput(f"surface invariant must be >= 0, got n={self.n}")
        if self.beta < self.n:
            raise InvalidInput(
                f"unisecant systems need beta >= n, got beta={self.beta}, n={self.n}"
            )
        if self.r != 2 * self.beta + 1 - self.n:
            raise InvalidInput(
                f"r={self.r} inconsistent with beta={self.beta}, n={self.n}"
            )
        if self.r < 3:
            raise InvalidInput(f"scrolls need r >= 3, got r={self.r}")

    @classmethod
    def from_unisecant(cls, n: int, beta: int) -> "ScrollEmbedding":
        return cls(n=n, beta=beta, r=2 * beta + 1 - n)

    @property
    def degree(self) -> int:
        """Scroll degree H.H = 2*beta - n = r - 1."""
        return self.r - 1

    @property
    def is_cone(self) -> bool:
        """beta = n contracts the negative section to the vertex of a cone."""
        return self.beta == self.n

    @property
    def hyperplane_class(self) -> DivisorClass:
        return DivisorClass(self.n, 1, self.beta)


def scroll_from_rn(r: int, n: int) -> ScrollEmbedding:
    """The scroll in P^r built from the surface with invariant n.

    Needs r >= 3, n >= 0, r + n - 1 even, and beta = (r+n-1)/2 >= n.
    """
    if r < 3:
        raise InvalidInput(f"scrolls need r >= 3, got r={r}")
    if n < 0:
        raise InvalidInput(f"surface invariant must be >= 0, got n={n}")
    if (r + n - 1) % 2:
        raise InvalidInput(f"r+n-1 must be even, got r={r}, n={n}")
    beta = (r + n - 1) // 2
    if beta < n:
        raise InvalidInput(f"beta={beta} < n={n}; no such scroll in P^{r}")
    return ScrollEmbedding(n=n, beta=beta, r=r)


def class_in_HL(x: DivisorClass, scroll: ScrollEmbedding) -> tuple[int, int]:
    """Rewrite a*C0 + b*L as h*H + l*L on the scroll: (h, l) = (a, b - a*beta)."""
    if x.n != scroll.n:
        raise InvalidInput(
            f"class lives on n={x.n} but the scroll embeds n={scroll.n}"
        )
    return (x.a, x.b - x.a * scroll.beta)


def scroll_canonical_class(r: int) -> tuple[int, int]:
    """Scroll canonical class -2H + (r-3)L in the (H, L) basis."""
    if r < 3:
        raise InvalidInput(f"scrolls need r >= 3, got r={r}")
    return (-2, r - 3)


def intersect_on_scroll(r: int, c1: tuple[int, int], c2: tuple[int, int]) -> int:
    """Intersection number of h*H + l*L classes on the degree r-1 scroll."""
    if r < 3:
        raise InvalidInput(f"scrolls need r >= 3, got r={r}")
    h1, l1 = c1
    h2, l2 = c2
    return h1 * h2 * (r - 1) + h1 * l2 + h2 * l1
