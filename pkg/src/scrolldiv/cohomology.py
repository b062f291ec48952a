"""Cohomology of line bundles ``O(a, b)`` on the resolution of a scroll.

For ``a >= 0`` the pushforward to the base line splits as a sum over
degree-``a`` monomials ``I`` in the splitting summands::

    H^i(O(a, b)) = sum_I H^i(P^1, O(b + sigma_I)),   sigma_I = sum_{j in I} a_j

so only ``h^0`` and ``h^1`` survive.  For ``-r < a < 0`` everything vanishes,
and for ``a <= -r`` Serre duality with ``K = O(-r, f-2)`` maps back to the
first region.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .core import ScrollType, binom, canonical_class, require_singular
from .errors import OutOfValidityRegion

CohomVector = tuple[int, ...]


@lru_cache(maxsize=4096)
def degree_distribution(degrees: tuple[int, ...], a: int) -> tuple[tuple[int, int], ...]:
    """Pairs ``(sigma, count)``: how many degree-``a`` monomials have weight ``sigma``.

    Dynamic programming over the generators with state (monomial degree used,
    running weight).
    """
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    for g in degrees:
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (used, s), cnt in table.items():
            for m in range(a - used + 1):
                nxt[used + m, s + m * g] += cnt
        table = nxt
    return tuple(sorted((s, cnt) for (used, s), cnt in table.items() if used == a))


def _direct(scroll: ScrollType, a: int, b: int) -> tuple[int, int]:
    h0 = h1 = 0
    for s, cnt in degree_distribution(scroll.degrees, a):
        e = b + s
        if e >= 0:
            h0 += cnt * (e + 1)
        elif e <= -2:
            h1 += cnt * (-e - 1)
    return h0, h1


def cohomology_tilde(scroll: ScrollType, a: int, b: int) -> CohomVector:
    r = scroll.r
    h = [0] * (r + 1)
    if a >= 0:
        h[0], h[1] = _direct(scroll, a, b)
    elif a <= -r:
        k = canonical_class(scroll)
        dual = cohomology_tilde(scroll, k.a - a, k.b - b)
        h = [dual[r - i] for i in range(r + 1)]
    return tuple(h)


def chi_tilde(scroll: ScrollType, a: int, b: int) -> int:
    return sum((-1) ** i * x for i, x in enumerate(cohomology_tilde(scroll, a, b)))


def h0_closed(scroll: ScrollType, a: int, b: int) -> int:
    if a < 0 or b < -1:
        raise OutOfValidityRegion(f"closed form needs a >= 0 and b >= -1, got a={a}, b={b}")
    r = scroll.r
    return scroll.f * binom(a + r - 1, r) + (b + 1) * binom(a + r - 1, r - 1)


def cohomology_X(scroll: ScrollType, a: int, b: int) -> CohomVector:
    """Cohomology of ``j_* O(a, b)`` on the scroll itself.

    Equal to the resolution's cohomology because the higher direct images
    vanish for ``b >= -1``; below that the answer depends on the splitting
    type and is refused.
    """
    require_singular(scroll)
    if b < -1:
        raise OutOfValidityRegion(f"cohomology on X needs b >= -1, got b={b}")
    return cohomology_tilde(scroll, a, b)


def chi_X(scroll: ScrollType, a: int, b: int) -> int:
    return sum((-1) ** i * x for i, x in enumerate(cohomology_X(scroll, a, b)))

