"""Scroll data, Picard classes on the resolution and the intersection form.

A rational normal scroll is given by its splitting type ``(a_1, ..., a_r)``,
``0 <= a_1 <= ... <= a_r``, with degree ``f = sum(a_i)``, dimension ``r`` and
ambient space ``P^n``, ``n = f + r - 1``.  Classes on the resolution are
written ``a*H + b*R`` where ``H`` is the tautological class and ``R`` a fibre.

The intersection ring of the resolution is determined by::

    H^r = f,   H^(r-1) R = 1,   H^(r-2) R^2 = 0
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Sequence

from .errors import (
    EmptyOrAllZero,
    LengthOne,
    NotACone,
    ScrollError,
    SmoothScroll,
    WrongArity,
)


class Regime(enum.Enum):
    SMOOTH = "Smooth"
    HIGHER_CODIM = "HigherCodim"
    CONE = "Cone"

    def __str__(self) -> str:
        return self.value


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever ``k < 0`` or ``n < k`` (also for ``n < 0``)."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class ScrollType:
    degrees: tuple[int, ...]

    @property
    def f(self) -> int:
        return sum(self.degrees)

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def n(self) -> int:
        return self.f + self.r - 1

    @property
    def zero_count(self) -> int:
        return sum(1 for a in self.degrees if a == 0)

    @property
    def regime(self) -> Regime:
        l = self.zero_count
        if l == 0:
            return Regime.SMOOTH
        if l == self.r - 1:
            return Regime.CONE
        return Regime.HIGHER_CODIM

    @property
    def vertex_dim(self) -> int:
        return self.zero_count - 1

    @property
    def codim_vertex(self) -> int | None:
        """Codimension of the vertex in X, ``None`` for a smooth scroll."""
        if self.zero_count == 0:
            return None
        return self.r - self.zero_count + 1

    @property
    def is_cone(self) -> bool:
        return self.regime is Regime.CONE

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.degrees)


def classify(degrees: Iterable[int]) -> ScrollType:
    degs = list(degrees)
    for a in degs:
        if isinstance(a, bool) or not isinstance(a, int):
            raise ScrollError(f"splitting degrees must be integers, got {a!r}")
        if a < 0:
            raise ScrollError(f"splitting degrees must be nonnegative, got {a}")
    if not degs or all(a == 0 for a in degs):
        raise EmptyOrAllZero("splitting type is empty or all zero: no scroll")
    if len(degs) == 1:
        raise LengthOne("a scroll needs r >= 2 splitting degrees")
    return ScrollType(tuple(sorted(degs)))


def parse_scroll(text: str) -> ScrollType:
    """Parse the ``"a1,a2,...,ar"`` scroll format."""
    parts = [p.strip() for p in text.split(",")]
    try:
        degs = [int(p) for p in parts if p != ""]
    except ValueError as exc:
        raise ScrollError(f"cannot parse scroll {text!r}: {exc}") from None
    return classify(degs)


@dataclass(frozen=True)
class PicClass:
    """The class ``a*H + b*R`` on the resolution."""

    a: int
    b: int

    def __add__(self, other: PicClass) -> PicClass:
        return PicClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: PicClass) -> PicClass:
        return PicClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> PicClass:
        return PicClass(-self.a, -self.b)

    def __mul__(self, k: int) -> PicClass:
        return PicClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def as_list(self) -> list[int]:
        return [self.a, self.b]


H = PicClass(1, 0)
R = PicClass(0, 1)


@dataclass(frozen=True)
class PairClass:
    """Weil class ``alpha*H + beta*R`` on a scroll whose vertex has codimension > 2."""

    alpha: int
    beta: int


@dataclass(frozen=True)
class ConeClass:
    """Weil class ``d*R`` on a cone (the class group is generated by R)."""

    d: int


WeilClass = PairClass | ConeClass


def intersection_number(f: int, pairs: Sequence[tuple]) -> object:
    """Multilinear expansion of a product of ``a_i H + b_i R``.

    Works for any numeric coefficients, so it also evaluates products of
    Q-divisors.  Terms with two or more ``R`` factors vanish.
    """
    a_s = [p[0] for p in pairs]
    b_s = [p[1] for p in pairs]
    total = prod(a_s) * f
    for j, bj in enumerate(b_s):
        total += bj * prod(a for i, a in enumerate(a_s) if i != j)
    return total


def pic_intersect(scroll: ScrollType, classes: Sequence[PicClass]) -> int:
    if len(classes) != scroll.r:
        raise WrongArity(f"need exactly r={scroll.r} classes, got {len(classes)}")
    return intersection_number(scroll.f, [(c.a, c.b) for c in classes])


def exceptional_class(scroll: ScrollType) -> PicClass:
    if not scroll.is_cone:
        raise NotACone(f"scroll {scroll} is not a cone (regime {scroll.regime})")
    return PicClass(1, -scroll.f)


def canonical_class(scroll: ScrollType) -> PicClass:
    return PicClass(-scroll.r, scroll.f - 2)


def strict_image(scroll: ScrollType, c: PicClass) -> WeilClass:
    regime = scroll.regime
    if regime is Regime.SMOOTH:
        raise SmoothScroll("strict image is only meaningful on a singular scroll")
    if regime is Regime.CONE:
        return ConeClass(c.a * scroll.f + c.b)
    return PairClass(c.a, c.b)


def require_cone(scroll: ScrollType) -> None:
    if not scroll.is_cone:
        raise NotACone(f"scroll {scroll} is not a cone (regime {scroll.regime})")


def require_singular(scroll: ScrollType) -> None:
    if scroll.regime is Regime.SMOOTH:
        raise SmoothScroll(f"scroll {scroll} is smooth; a singular scroll is required")
