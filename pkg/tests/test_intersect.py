from fractions import Fraction

import pytest

from scrolldiv import PairClass, PicClass, classify, pic_intersect
from scrolldiv.errors import (
    Degenerate,
    DegreeTooSmall,
    DimensionTooSmall,
    InvalidVertexMultiplicity,
    NegativeTwist,
    NonEffective,
    NonEffectiveClass,
    NotACone,
    NotHigherCodim,
    ScrollError,
    TooManyFactors,
    WrongArity,
)
from scrolldiv.intersect import (
    EffectiveDivisorData as E,
    acm_koszul,
    castelnuovo_G,
    ci_degree_high_codim,
    cone_ci_degree,
    cone_ci_invariants,
    genus_divisor,
    intersection_resolution,
    is_acm_cone,
    koszul_middle_vanishing,
    mumford_intersection,
    mumford_vertex_multiplicity,
    quarto_closed_form,
    resolution_identity_holds,
    transform_degree,
    vertex_multiplicity,
)
from scrolldiv.transform import proper_transform
from scrolldiv.verify import admissible_b, cone, cone_grid


def test_ci_degree_high_codim(hc):
    assert ci_degree_high_codim(hc, [PairClass(1, 0), PairClass(1, 0)]) == 3
    assert ci_degree_high_codim(hc, [PairClass(1, 1), PairClass(1, -1)]) == 3
    assert ci_degree_high_codim(hc, [PairClass(0, 1), PairClass(0, 1)]) == 0


def test_ci_degree_high_codim_errors(hc, cone3):
    with pytest.raises(NotHigherCodim):
        ci_degree_high_codim(cone3, [PairClass(1, 0)])
    with pytest.raises(TooManyFactors):
        ci_degree_high_codim(hc, [PairClass(1, 0)] * 3)
    with pytest.raises(WrongArity):
        ci_degree_high_codim(hc, [])
    with pytest.raises(NonEffectiveClass):
        ci_degree_high_codim(hc, [PairClass(-1, 0)])


def test_acm_koszul(hc):
    assert acm_koszul(hc, [(2, 1), (1, 1)]) is True
    assert acm_koszul(hc, [(2, 2), (1, 2)]) is False
    assert acm_koszul(hc, [(1, 0), (1, 0)]) is True
    with pytest.raises(NegativeTwist):
        acm_koszul(hc, [(1, -1)])
    with pytest.raises(TooManyFactors):
        acm_koszul(hc, [(1, 0)] * 3)


def test_koszul_criterion_matches_cohomology(hc):
    for pairs in ([(2, 1), (1, 1)], [(2, 2), (1, 2)], [(1, 0), (1, 0)], [(1, 3), (1, 0)]):
        assert koszul_middle_vanishing(hc, pairs) == acm_koszul(hc, pairs)


@pytest.mark.parametrize(
    "degs, d1, d2, want", [((0, 0, 3), 4, 5, 7), ((0, 0, 2), 3, 3, 5), ((0, 2), 1, 1, 1)]
)
def test_cone_ci_degree(degs, d1, d2, want):
    assert cone_ci_degree(classify(degs), d1, d2) == want


def test_cone_ci_degree_errors(cone3, hc):
    with pytest.raises(NonEffective):
        cone_ci_degree(cone3, 0, 4)
    with pytest.raises(NotACone):
        cone_ci_degree(hc, 1, 1)


def test_degree_symmetric_and_cartier_specialization():
    for s in cone_grid():
        for d1 in range(1, 3 * s.f + 1):
            for d2 in range(1, 3 * s.f + 1):
                assert cone_ci_degree(s, d1, d2) == cone_ci_degree(s, d2, d1)
                if d1 % s.f == 0:
                    assert cone_ci_degree(s, d1, d2) == d1 // s.f * d2


@pytest.mark.parametrize(
    "degs, e1, e2, want",
    [((0, 2), (1, 1), (1, 1), 1), ((0, 2), (2, 0), (1, 1), 0), ((0, 0, 3), (4, 1), (5, 2), 1)],
)
def test_vertex_multiplicity(degs, e1, e2, want):
    s = classify(degs)
    assert vertex_multiplicity(s, E(*e1), E(*e2)) == want
    assert vertex_multiplicity(s, E(*e2), E(*e1)) == want


def test_vertex_multiplicity_errors(cone3):
    with pytest.raises(ScrollError):
        vertex_multiplicity(cone3, E(4), E(5, 2))
    with pytest.raises(InvalidVertexMultiplicity):
        vertex_multiplicity(cone3, E(4, 2), E(5, 2))


def test_decomposition_independent_of_b():
    for s in cone_grid(f_values=range(2, 5)):
        for d1 in range(1, 2 * s.f + 1):
            for d2 in range(1, 2 * s.f + 1):
                deg = cone_ci_degree(s, d1, d2)
                for b1 in admissible_b(s, d1, 2 * s.f):
                    for b2 in admissible_b(s, d2, 2 * s.f):
                        p1, p2 = proper_transform(s, d1, b1), proper_transform(s, d2, b2)
                        tilde = pic_intersect(s, [p1, p2] + [PicClass(1, 0)] * (s.r - 2))
                        assert deg == tilde + vertex_multiplicity(s, E(d1, b1), E(d2, b2))


def test_mumford(quadric_cone, cone3):
    assert mumford_intersection(quadric_cone, [1, 1]) == Fraction(1, 2)
    assert mumford_intersection(cone3, [3, 3, 3]) == 3
    assert mumford_intersection(cone3, [4, 5, 3]) == Fraction(20, 3)
    assert mumford_vertex_multiplicity(quadric_cone, 1, 1) == Fraction(1, 2)
    assert mumford_vertex_multiplicity(cone3, 0, 7) == 0
    assert mumford_vertex_multiplicity(cone3, 1, 2) == Fraction(2, 3)
    with pytest.raises(WrongArity):
        mumford_intersection(cone3, [1, 1])


@pytest.mark.parametrize("degs, d, want", [((0, 3), 5, 1), ((0, 2), 3, 0), ((0, 0, 3), 4, 0)])
def test_genus_divisor(degs, d, want):
    assert genus_divisor(classify(degs), d) == want


@pytest.mark.parametrize("n, d, want", [(4, 5, 1), (3, 4, 1), (5, 7, 2)])
def test_castelnuovo(n, d, want):
    assert castelnuovo_G(n, d) == want


def test_castelnuovo_errors():
    with pytest.raises(DegreeTooSmall):
        castelnuovo_G(2, 5)
    with pytest.raises(DegreeTooSmall):
        castelnuovo_G(4, 3)


@pytest.mark.parametrize(
    "degs, d1, d2, left, mid1, mid2",
    [
        ((0, 0, 3), 4, 5, (-3, 0), (-2, 2), (-2, 1)),
        ((0, 2), 1, 1, (-1, 0), (-1, 1), (-1, 1)),
        ((0, 0, 2), 3, 3, (-3, 0), (-2, 1), (-2, 1)),
    ],
)
def test_intersection_resolution(degs, d1, d2, left, mid1, mid2):
    s = classify(degs)
    res = intersection_resolution(s, d1, d2)
    assert (res.left, res.mid1, res.mid2) == (PicClass(*left), PicClass(*mid1), PicClass(*mid2))
    assert resolution_identity_holds(s, d1, d2)


def test_cone_ci_invariants(cone3, cone2, quadric_cone):
    inv = cone_ci_invariants(cone3, 4, 5)
    assert (inv.degree, inv.genus, inv.chi0) == (7, 2, -1)
    inv = cone_ci_invariants(cone2, 3, 3)
    assert (inv.degree, inv.genus, inv.chi0) == (5, 1, 0)
    inv = cone_ci_invariants(quadric_cone, 1, 1)
    assert (inv.degree, inv.chi0) == (1, 1)
    with pytest.raises(DimensionTooSmall):
        inv.genus


def test_quarto_closed_form(cone3, cone2, quadric_cone):
    cf = quarto_closed_form(cone3, 4, 5)
    assert (cf.degree_formula, cf.genus_formula, cf.genus_corrected) == (4, 2, 2)
    cf = quarto_closed_form(cone2, 3, 3)
    assert (cf.degree_formula, cf.genus_formula, cf.genus_corrected) == (3, 1, 1)
    # the verbatim genus sum breaks once alpha - 1 >= r
    cf = quarto_closed_form(cone2, 3, 4)
    assert (cf.genus_formula, cf.genus_corrected, cone_ci_invariants(cone2, 3, 4).genus) == (1, 2, 2)
    with pytest.raises(Degenerate):
        quarto_closed_form(cone3, 3, 5)
    with pytest.raises(DimensionTooSmall):
        quarto_closed_form(quadric_cone, 3, 3)


def test_closed_form_genus_on_grid():
    mismatches = 0
    for f in range(2, 6):
        for r in (3, 4):
            s = cone(f, r)
            for d1 in range(f + 1, 3 * f + 1):
                for d2 in range(f + 1, 3 * f + 1):
                    cf = quarto_closed_form(s, d1, d2)
                    genus = cone_ci_invariants(s, d1, d2).genus
                    assert cf.genus_corrected == genus
                    mismatches += cf.genus_formula != genus
    # the verbatim form is not a usable substitute on the grid
    assert mismatches > 0


def test_is_acm_cone(cone3, quadric_cone):
    assert is_acm_cone(cone3, 4)
    assert is_acm_cone(cone3, 4, 5)
    assert is_acm_cone(quadric_cone, 7)


def test_transform_degree(cone3):
    assert [transform_degree(cone3, d) for d in range(10)] == list(range(10))
