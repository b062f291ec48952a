"""Divisorial sheaves ``O_X(a, b) = j_* O(aH + bR)`` and their group law.

On a cone, ``O_X(a, b)`` is reflexive iff ``b < f``; each Weil class ``dR``
has exactly one label with ``0 <= b < f``, namely ``(d // f, d % f)``, and
the group law carries ``b + b'`` modulo ``f``.  When the vertex has
codimension > 2 every ``O_X(a, b)`` is reflexive and the law is componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import cohomology_X
from .core import (
    ConeClass,
    PairClass,
    PicClass,
    Regime,
    ScrollType,
    WeilClass,
    binom,
    require_cone,
    require_singular,
    strict_image,
)
from .errors import NonEffective, RegimeMismatch


@dataclass(frozen=True)
class SheafForm:
    a: int
    b: int
    regime: Regime

    def as_list(self) -> list[int]:
        return [self.a, self.b]


def _check_weil(scroll: ScrollType, w: WeilClass) -> None:
    expected = ConeClass if scroll.is_cone else PairClass
    if scroll.regime is Regime.SMOOTH or not isinstance(w, expected):
        raise RegimeMismatch(
            f"{type(w).__name__} cannot be used on scroll {scroll} (regime {scroll.regime})"
        )


def _check_form(scroll: ScrollType, s: SheafForm) -> None:
    if s.regime is not scroll.regime:
        raise RegimeMismatch(f"sheaf label of regime {s.regime} used on regime {scroll.regime}")
    if scroll.is_cone and not 0 <= s.b < scroll.f:
        raise RegimeMismatch(f"cone sheaf label needs 0 <= b < {scroll.f}, got b={s.b}")


def is_reflexive(scroll: ScrollType, a: int, b: int) -> bool:
    require_singular(scroll)
    if scroll.is_cone:
        return b < scroll.f
    return True


def sheaf_of_divisor(scroll: ScrollType, w: WeilClass) -> SheafForm:
    _check_weil(scroll, w)
    if isinstance(w, ConeClass):
        a, b = divmod(w.d, scroll.f)
        return SheafForm(a, b, Regime.CONE)
    return SheafForm(w.alpha, w.beta, scroll.regime)


def normalize_sheaf(scroll: ScrollType, a: int, b: int) -> SheafForm:
    """Label of the double dual of ``j_* O(a, b)``."""
    require_singular(scroll)
    return sheaf_of_divisor(scroll, strict_image(scroll, PicClass(a, b)))


def div_group_op(scroll: ScrollType, s1: SheafForm, s2: SheafForm) -> SheafForm:
    _check_form(scroll, s1)
    _check_form(scroll, s2)
    if scroll.is_cone:
        carry, b = divmod(s1.b + s2.b, scroll.f)
        return SheafForm(s1.a + s2.a + carry, b, Regime.CONE)
    return SheafForm(s1.a + s2.a, s1.b + s2.b, scroll.regime)


def div_dual(scroll: ScrollType, s: SheafForm) -> SheafForm:
    _check_form(scroll, s)
    return normalize_sheaf(scroll, -s.a, -s.b)


def is_cartier(scroll: ScrollType, w: WeilClass) -> bool | None:
    """Cartier test; ``None`` means undetermined.

    Off the cone regime only ``alpha*H`` (restriction of an ambient line
    bundle) is known to be Cartier; classes involving ``R`` are left open.
    """
    require_singular(scroll)
    _check_weil(scroll, w)
    if isinstance(w, ConeClass):
        return w.d % scroll.f == 0
    if w.beta == 0:
        return True
    return None


def dim_linear_system(scroll: ScrollType, d: int) -> int:
    """``h^0(O_X(dR)) - 1`` via the normal-form label."""
    require_cone(scroll)
    if d < 1:
        raise NonEffective(f"linear system needs d >= 1, got d={d}")
    s = sheaf_of_divisor(scroll, ConeClass(d))
    return cohomology_X(scroll, s.a, s.b)[0] - 1


def dim_linear_system_printed(scroll: ScrollType, d: int) -> int:
    """The two-branch closed form as published, kept only as a cross-check.

    With ``d = k*f + h + 1``: ``f C(k+r-1, r) + (h+2) C(k+r-1, r-1) - 1`` for
    non-Cartier classes and ``f C(k+r, r)`` for Cartier ones.  The Cartier
    branch disagrees with :func:`dim_linear_system` (quadric cone, d=2: 2 vs 3).
    """
    require_cone(scroll)
    if d < 1:
        raise NonEffective(f"linear system needs d >= 1, got d={d}")
    f, r = scroll.f, scroll.r
    k, h = divmod(d - 1, f)
    if h != f - 1:
        return f * binom(k + r - 1, r) + (h + 2) * binom(k + r - 1, r - 1) - 1
    return f * binom(k + r, r)
