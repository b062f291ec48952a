"""Total transforms of Weil divisors on a rational normal cone.

On a cone the class group is ``Z[R]`` and every Weil divisor is ``D ~ dR``.
Writing ``d - 1 = k*f + h`` with ``0 <= h < f`` the integral total transform is

    D* ~ (k+1) H - (f-h-1) R

and the rational (Mumford) transform is the Q-class ``(d/f) H``.  Their
difference is ``eps * E`` with ``eps = (f-h-1)/f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import PicClass, ScrollType, exceptional_class, require_cone
from .errors import InvalidVertexMultiplicity, NegativeDegree


@dataclass(frozen=True)
class TransformData:
    """Division data of ``d - 1 = k*f + h`` and the resulting transforms.

    ``q_ceil`` is ``ceil(b/f)`` for the least vertex multiplicity ``b = d mod f``;
    for that choice ``k + 1 = a + q_ceil`` with ``D~ = aH + bR``.
    """

    d: int
    k: int
    h: int
    q_ceil: int
    epsilon: Fraction
    total: PicClass


def _split(f: int, d: int) -> tuple[int, int]:
    # Euclidean: 0 <= h < f for every integer d
    k, h = divmod(d - 1, f)
    return k, h


def _total(f: int, d: int) -> PicClass:
    if d < 0:
        return -_total(f, -d)
    k, h = _split(f, d)
    return PicClass(k + 1, -(f - h - 1))


def transform_data(scroll: ScrollType, d: int) -> TransformData:
    require_cone(scroll)
    f = scroll.f
    k, h = _split(f, d)
    eps = Fraction(f - h - 1, f)
    return TransformData(
        d=d,
        k=k,
        h=h,
        q_ceil=1 if d % f else 0,
        epsilon=eps,
        total=_total(f, d),
    )


def integral_total_transform(scroll: ScrollType, d: int) -> PicClass:
    require_cone(scroll)
    return _total(scroll.f, d)


def rational_total_transform(scroll: ScrollType, d: int) -> tuple[Fraction, Fraction]:
    """Coefficients of ``H`` and ``R`` of the Q-divisor ``D~ + (b/f) E``.

    Substituting ``E ~ H - fR`` cancels the R part, leaving ``(d/f) H``.
    """
    require_cone(scroll)
    return Fraction(d, scroll.f), Fraction(0)


def epsilon(scroll: ScrollType, d: int) -> Fraction:
    require_cone(scroll)
    if d < 0:
        raise NegativeDegree(f"epsilon is only defined for effective classes, got d={d}")
    f = scroll.f
    _, h = _split(f, d)
    return Fraction(f - h - 1, f)


def sum_defect(scroll: ScrollType, d1: int, d2: int) -> int:
    """``floor(eps1 + eps2)``: 1 exactly when ``(D1+D2)* = D1* + D2* - E``."""
    e1 = epsilon(scroll, d1)
    e2 = epsilon(scroll, d2)
    return int(e1 + e2 >= 1)


def check_vertex_multiplicity(scroll: ScrollType, d: int, b: int) -> None:
    """Validate that ``b`` can be ``D~ . E . H^(r-2)`` for an effective ``D ~ dR``.

    The proper transform is then ``((d-b)/f) H + b R``, which is effective
    only when ``0 <= b <= d``.
    """
    if d < 0:
        raise NegativeDegree(f"divisor must be effective, got d={d}")
    if b < 0:
        raise InvalidVertexMultiplicity(f"vertex multiplicity must be >= 0, got b={b}")
    if (b - d) % scroll.f:
        raise InvalidVertexMultiplicity(
            f"vertex multiplicity b={b} must be congruent to d={d} mod f={scroll.f}"
        )
    if b > d:
        raise InvalidVertexMultiplicity(
            f"b={b} > d={d} gives a proper transform with negative H coefficient"
        )


def proper_transform(scroll: ScrollType, d: int, b: int) -> PicClass:
    require_cone(scroll)
    check_vertex_multiplicity(scroll, d, b)
    return PicClass((d - b) // scroll.f, b)


def pushforward_latitude(scroll: ScrollType, d: int, b: int) -> int:
    """Largest ``alpha`` with ``j_*(D~ + alpha E) = D``, namely ``ceil(b/f)``."""
    require_cone(scroll)
    check_vertex_multiplicity(scroll, d, b)
    return -(-b // scroll.f)


def transform_from_proper(scroll: ScrollType, d: int, b: int) -> PicClass:
    """``D~ + ceil(b/f) E``, the round-up of the rational transform."""
    return proper_transform(scroll, d, b) + pushforward_latitude(scroll, d, b) * exceptional_class(scroll)
