"""Brute-force verifiers, independent of the fast code paths.

Nothing here calls into :mod:`scrolldiv.cohomology`, :mod:`scrolldiv.transform`
or :mod:`scrolldiv.intersect`; the only shared pieces are the scroll value
type and plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Sequence

from .core import ScrollType
from .errors import EnumerationTooLarge, NonEffective, NotACone

ENUMERATION_CAP = 8


def _line_h0(e: int) -> int:
    return e + 1 if e >= 0 else 0


def _line_h1(e: int) -> int:
    return -e - 1 if e <= -2 else 0


def naive_cohomology(scroll: ScrollType, a: int, b: int, cap: int = ENUMERATION_CAP) -> tuple[int, ...]:
    """Cohomology of ``O(a, b)`` by listing every degree-``a`` monomial explicitly."""
    degs, r, f = scroll.degrees, len(scroll.degrees), sum(scroll.degrees)
    if -r < a < 0:
        return (0,) * (r + 1)
    if a <= -r:
        # Serre duality against K = O(-r, f-2)
        dual = naive_cohomology(scroll, -r - a, f - 2 - b, cap)
        return tuple(reversed(dual))
    if a > cap:
        raise EnumerationTooLarge(f"a={a} exceeds the enumeration cap {cap}")
    h0 = h1 = 0
    for mono in combinations_with_replacement(range(r), a):
        e = b + sum(degs[j] for j in mono)
        h0 += _line_h0(e)
        h1 += _line_h1(e)
    return (h0, h1) + (0,) * (r - 1)


def naive_chi(scroll: ScrollType, a: int, b: int, cap: int = ENUMERATION_CAP) -> int:
    return sum((-1) ** i * h for i, h in enumerate(naive_cohomology(scroll, a, b, cap)))


def total_transform_via_proper(f: int, d: int) -> tuple[int, int]:
    """``D~ + ceil(b/f) E`` for the proper transform with least vertex multiplicity."""
    if d < 0:
        a, b = total_transform_via_proper(f, -d)
        return -a, -b
    a, b = divmod(d, f)
    lift = 1 if b > 0 else 0
    return a + lift, b - lift * f


def intersection_by_euler(scroll: ScrollType, classes: Sequence[tuple[int, int]]) -> int:
    """Top intersection number as the r-th mixed difference of ``chi``.

    ``sum over subsets S of (-1)^(r-|S|) chi(sum_{i in S} D_i)`` equals
    ``D_1 ... D_r`` because ``chi`` is a polynomial of degree r whose top
    form is ``D^r / r!``.
    """
    r = len(scroll.degrees)
    if len(classes) != r:
        raise ValueError(f"need exactly r={r} classes")
    total = 0
    for mask in range(1 << r):
        a = sum(classes[i][0] for i in range(r) if mask >> i & 1)
        b = sum(classes[i][1] for i in range(r) if mask >> i & 1)
        sign = -1 if (r - bin(mask).count("1")) % 2 else 1
        total += sign * naive_chi(scroll, a, b)
    return total


@dataclass(frozen=True)
class HilbertSample:
    k: int
    chi: int


def _require_cone_pair(scroll: ScrollType, d1: int, d2: int) -> None:
    degs = scroll.degrees
    if sum(1 for a in degs if a == 0) != len(degs) - 1:
        raise NotACone(f"scroll {scroll} is not a cone")
    if d1 < 1 or d2 < 1:
        raise NonEffective(f"effective nonzero classes required, got {d1}, {d2}")


def hilbert_samples(scroll: ScrollType, d1: int, d2: int) -> list[HilbertSample]:
    """``chi(O_Y(k))`` for ``k = 0..r`` from the twisted reflexive resolution."""
    _require_cone_pair(scroll, d1, d2)
    f, r = sum(scroll.degrees), len(scroll.degrees)
    t1 = total_transform_via_proper(f, d1)
    t2 = total_transform_via_proper(f, d2)
    t12 = total_transform_via_proper(f, d1 + d2)
    out = []
    for k in range(r + 1):
        chi = (
            naive_chi(scroll, k, 0)
            - naive_chi(scroll, k - t1[0], -t1[1])
            - naive_chi(scroll, k - t2[0], -t2[1])
            + naive_chi(scroll, k - t12[0], -t12[1])
        )
        out.append(HilbertSample(k, chi))
    return out


def _forward_differences(values: list[int]) -> list[int]:
    """Leading entries ``Delta^j v(0)`` for ``j = 0..len-1``."""
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return [row[0] for row in rows]


def hilbert_polynomial(scroll: ScrollType, d1: int, d2: int) -> list[Fraction]:
    """Coefficients (constant term first) of ``chi(O_Y(k))`` as a polynomial in k."""
    samples = [s.chi for s in hilbert_samples(scroll, d1, d2)]
    diffs = _forward_differences(samples)
    deg = len(scroll.degrees) - 2
    if any(diffs[deg + 1 :]):
        raise ArithmeticError(f"Hilbert samples {samples} are not a polynomial of degree {deg}")
    # Newton basis C(k, j) expanded into monomials
    coeffs = [Fraction(0)] * (deg + 1)
    for j in range(deg + 1):
        basis = [Fraction(1)]
        for i in range(j):
            basis = [Fraction(0)] + basis  # multiply by k
            for t in range(len(basis) - 1):
                basis[t] -= i * basis[t + 1]
        for t, c in enumerate(basis):
            coeffs[t] += Fraction(diffs[j], factorial(j)) * c
    return coeffs


def hilbert_degree_genus(scroll: ScrollType, d1: int, d2: int) -> tuple[int, int]:
    """``(degree, chi(O_Y))`` read off the Hilbert polynomial of ``Y = D n D'``."""
    coeffs = hilbert_polynomial(scroll, d1, d2)
    deg = len(coeffs) - 1
    degree = coeffs[-1] * factorial(deg)
    if degree.denominator != 1:
        raise ArithmeticError(f"non-integral degree {degree}")
    return int(degree), int(coeffs[0])
