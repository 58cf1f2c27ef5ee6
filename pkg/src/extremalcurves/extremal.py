"""Extremal-curve models: classification, verification, construction.

An extremal curve of degree d >= 2r+1 in P^r (genus equal to the maximal
genus pi(d, r)) is, up to the classical trichotomy, one of

  * a plane curve of degree k embedded by conics (only r = 5, d = 2k),
  * a curve in |m*H + L| on a scroll (remainder eps = 0),
  * a curve in |(m+1)*H - (r-eps-2)*L| on a scroll,

and the scroll classes are what the gonality theory consumes: the ruling
cuts out the gonality pencil, so type-II models are m-gonal and type-III
models are (m+1)-gonal, while the plane model of degree k is (k-1)-gonal.

``classify_extremal`` enumerates the candidate models for (d, r); they
are candidates, not a unique answer.  ``verify_extremal_class`` checks a
scroll class by adjunction against the genus bound.  ``embed_extremal``
runs the constructive direction: it takes a class gamma*C0 + lambda*L on
a Hirzebruch surface and produces the unisecant embedding under which
the curve is extremal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .castelnuovo import CurveProfile, profile
from .errors import (
    DomainError,
    EmbeddingError,
    InvalidInput,
    PlaneCurveContraction,
    UnsupportedInput,
)
from .lattice import (
    DivisorClass,
    ScrollEmbedding,
    adjunction_genus,
    class_in_HL,
    intersect_on_scroll,
    is_irreducible_smoothable,
    scroll_canonical_class,
)


class ModelKind(Enum):
    TYPE_II = "type_ii"
    TYPE_III = "type_iii"
    PLANE_VERONESE = "plane_veronese"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExtremalModel:
    """One candidate model of an extremal curve of degree d in P^r.

    Scroll kinds carry their class in the (H, L) basis; the plane kind
    carries the plane degree k instead.  Construction re-derives every
    redundant invariant and refuses inconsistent data.
    """

    kind: ModelKind
    d: int
    r: int
    m: int
    eps: int
    gamma: int
    g: int
    scroll_class: tuple[int, int] | None = None
    k: int | None = None

    def __post_init__(self):
        if self.d - 1 != self.m * (self.r - 1) + self.eps or not (
            0 <= self.eps <= self.r - 2
        ):
            raise InvalidInput(f"(m, eps) do not split d-1 for {self}")
        pi = (self.m * (self.m - 1) // 2) * (self.r - 1) + self.m * self.eps
        if self.g != pi:
            raise InvalidInput(f"genus {self.g} is not the maximal genus {pi}")
        if self.kind is ModelKind.TYPE_II:
            if self.eps != 0 or self.gamma != self.m:
                raise InvalidInput("type-II models need eps=0 and gamma=m")
            if self.scroll_class != (self.m, 1) or self.k is not None:
                raise InvalidInput("type-II models live in |m*H + L|")
        elif self.kind is ModelKind.TYPE_III:
            if self.gamma != self.m + 1:
                raise InvalidInput("type-III models need gamma=m+1")
            expected = (self.m + 1, -(self.r - self.eps - 2))
            if self.scroll_class != expected or self.k is not None:
                raise InvalidInput(
                    "type-III models live in |(m+1)*H - (r-eps-2)*L|"
                )
        else:
            if self.r != 5 or self.k is None or self.d != 2 * self.k:
                raise InvalidInput("plane models need r=5 and d=2k")
            if self.gamma != self.k - 1 or self.scroll_class is not None:
                raise InvalidInput("plane models of degree k are (k-1)-gonal")
            if self.g != (self.k - 1) * (self.k - 2) // 2:
                raise InvalidInput(
                    "plane model genus must be the plane-curve genus"
                )

    @property
    def class_label(self) -> str:
        """Human-readable class, e.g. '4H+L', '5H-4L', or '' for plane models."""
        if self.scroll_class is None:
            return ""
        h, l = self.scroll_class
        head = "H" if h == 1 else f"{h}H"
        if l == 0:
            return head
        if l == 1:
            return head + "+L"
        if l == -1:
            return head + "-L"
        return f"{head}{l:+d}L"

    def record(self) -> dict:
        h, l = self.scroll_class if self.scroll_class else (None, None)
        return {
            "kind": self.kind.value,
            "gamma": self.gamma,
            "m": self.m,
            "eps": self.eps,
            "d": self.d,
            "r": self.r,
            "genus": self.g,
            "class": self.class_label,
            "k": self.k,
        }


def classify_extremal(d: int, r: int) -> list[ExtremalModel]:
    """Candidate models for an extremal curve of degree d in P^r.

    Always contains the type-III model; adds the type-II model when
    eps = 0 (listed first, it has the lower gonality) and the plane model
    when r = 5 and d = 2k is even (listed last; k >= 6 holds automatically
    once d >= 2r+1).
    """
    if r < 3:
        raise InvalidInput(f"need r >= 3, got r={r}")
    if d < 2 * r + 1:
        raise InvalidInput(f"extremal curves need d >= 2r+1 = {2 * r + 1}, got d={d}")
    p = profile(d, r)
    models = []
    if p.eps == 0:
        models.append(
            ExtremalModel(
                kind=ModelKind.TYPE_II,
                d=d,
                r=r,
                m=p.m,
                eps=0,
                gamma=p.m,
                g=p.pi,
                scroll_class=(p.m, 1),
            )
        )
    models.append(
        ExtremalModel(
            kind=ModelKind.TYPE_III,
            d=d,
            r=r,
            m=p.m,
            eps=p.eps,
            gamma=p.m + 1,
            g=p.pi,
            scroll_class=(p.m + 1, -(r - p.eps - 2)),
        )
    )
    if r == 5 and d % 2 == 0:
        k = d // 2
        models.append(
            ExtremalModel(
                kind=ModelKind.PLANE_VERONESE,
                d=d,
                r=5,
                m=p.m,
                eps=p.eps,
                gamma=k - 1,
                g=p.pi,
                k=k,
            )
        )
    return models


def verify_extremal_class(h: int, l: int, scroll: ScrollEmbedding) -> bool:
    """Whether the class h*H + l*L on the scroll is an extremal-curve class.

    Computes the degree d = h*(r-1) + l and the adjunction genus against
    the scroll canonical class, and compares with the maximal genus.
    Classes with d < 2r+1 are outside the extremal regime and verify
    False; d <= 0 is a domain error.
    """
    r = scroll.r
    d = h * (r - 1) + l
    if d <= 0:
        raise DomainError(f"class {h}H{l:+d}L has non-positive degree {d}")
    if d < 2 * r + 1:
        return False
    kh, kl = scroll_canonical_class(r)
    pairing = intersect_on_scroll(r, (h + kh, l + kl), (h, l))
    if pairing % 2:
        raise ArithmeticError(f"adjunction pairing {pairing} is odd")
    g = pairing // 2 + 1
    if g < 0:
        return False
    return g == profile(d, r).pi


@dataclass(frozen=True)
class EmbedResult:
    """Output of ``embed_extremal``.

    ``gamma``, ``lam``, ``n`` are the inputs after ruling normalization on
    n=0.  ``eps`` is the division remainder lambda - n - 1 = beta*(gamma-2)
    + eps.  When the hypothesis 2*lambda >= gamma*(gamma+n-2) holds, the
    embedded curve is provably extremal: ``model`` carries the type-III
    model and ``hypothesis_met`` is True.  Otherwise the embedding data is
    still returned with ``model=None`` (extremality unproven).
    """

    gamma: int
    lam: int
    n: int
    scroll: ScrollEmbedding
    eps: int
    profile: CurveProfile
    genus: int
    model: ExtremalModel | None
    hypothesis_met: bool

    @property
    def d(self) -> int:
        return self.profile.d

    @property
    def r(self) -> int:
        return self.profile.r


def embed_extremal(gamma: int, lam: int, n: int) -> EmbedResult:
    """Embed the curve class gamma*C0 + lambda*L by a unisecant system under
    which it becomes an extremal curve.

    Sets beta = (lambda-n-1) div (gamma-2) and eps the remainder, embeds by
    |C0 + beta*L| into P^r with r = 2*beta+1-n, and the image has degree
    d = gamma*(beta-n) + lambda.  Under 2*lambda >= gamma*(gamma+n-2) the
    image is extremal with ratio gamma-1 and remainder eps; without the
    hypothesis the embedding is returned unproven.

    Refuses gamma < 3 (after the n=0 ruling swap), classes that are not
    irreducible-smoothable, and multiples of C0+L on n=1, which blow down
    to plane curves instead of embedding.  beta = n is allowed exactly
    when lambda = gamma*n: the unisecant model is then a cone, but the
    curve misses the contracted section and still embeds.
    """
    x = DivisorClass(n, gamma, lam).normalized_ruling()
    gamma, lam, n = x.a, x.b, x.n
    if not is_irreducible_smoothable(x):
        raise DomainError(f"{x} is not an irreducible-smoothable class")
    if gamma < 3:
        raise UnsupportedInput(
            f"gonality coefficient {gamma} < 3: the unisecant split divides by gamma-2"
        )
    if n == 1 and lam == gamma:
        raise PlaneCurveContraction(
            f"{x} is a multiple of C0+L on the n=1 surface: the unisecant map"
            f" contracts C0 and the image is a plane curve of degree {gamma}"
            f" with gonality {gamma - 1}, not cut out by the ruling"
        )
    beta, eps = divmod(lam - n - 1, gamma - 2)
    if beta < n:
        raise EmbeddingError(
            f"beta={beta} < n={n}: |C0 + beta*L| has no unisecant model"
        )
    if beta == n and lam > gamma * n:
        # the cone case: |C0 + n*L| contracts C0, and the curve meets it
        # in lam - gamma*n > 0 points, so the image is singular
        raise EmbeddingError(
            f"beta={beta} = n: the unisecant model is a cone and the curve"
            f" meets the contracted section (intersection {lam - gamma * n})"
        )
    scroll = ScrollEmbedding.from_unisecant(n, beta)
    d = gamma * (beta - n) + lam
    prof = profile(d, scroll.r, strict=False)
    genus = adjunction_genus(x)
    hypothesis = 2 * lam >= gamma * (gamma + n - 2)
    model = None
    if hypothesis:
        if (prof.m, prof.eps) != (gamma - 1, eps) or genus != prof.pi:
            raise ArithmeticError(
                f"embedding invariants broke for {x}: "
                f"m={prof.m} eps={prof.eps} g={genus} pi={prof.pi}"
            )
        hl = class_in_HL(x, scroll)
        model = ExtremalModel(
            kind=ModelKind.TYPE_III,
            d=d,
            r=scroll.r,
            m=gamma - 1,
            eps=eps,
            gamma=gamma,
            g=genus,
            scroll_class=hl,
        )
    return EmbedResult(
        gamma=gamma,
        lam=lam,
        n=n,
        scroll=scroll,
        eps=eps,
        profile=prof,
        genus=genus,
        model=model,
        hypothesis_met=hypothesis,
    )


def gonality_from_class(x: DivisorClass) -> int:
    """Gonality of a general member of |X|, read off the ruling.

    The ruling cuts a pencil of degree X.L = a, and that is the gonality
    except in two situations: on n=0 the two rulings compete (min(a, b)),
    and on n=1 the multiples alpha*(C0+L), alpha >= 2, blow down to plane
    curves of degree alpha with gonality alpha-1.
    """
    if not is_irreducible_smoothable(x):
        raise DomainError(f"{x} is not an irreducible-smoothable class")
    a, b, n = x.a, x.b, x.n
    if n == 0:
        if (a, b) in ((0, 1), (1, 0)):
            raise DomainError(f"{x} is a ruling fiber; its members are lines")
        return min(a, b)
    if (a, b) == (0, 1):
        raise DomainError(f"{x} is a ruling fiber; its members are lines")
    if n == 1 and a == b and a >= 2:
        return a - 1
    return a
