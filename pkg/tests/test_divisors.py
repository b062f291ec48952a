import pytest

from scrolldiv import ConeClass, PairClass, Regime, classify
from scrolldiv.divisors import (
    SheafForm,
    div_dual,
    div_group_op,
    dim_linear_system,
    dim_linear_system_printed,
    is_cartier,
    is_reflexive,
    normalize_sheaf,
    sheaf_of_divisor,
)
from scrolldiv.errors import NonEffective, NotACone, RegimeMismatch, SmoothScroll


def C(a, b):
    return SheafForm(a, b, Regime.CONE)


def HC(a, b):
    return SheafForm(a, b, Regime.HIGHER_CODIM)


def test_is_reflexive(cone3, hc):
    assert is_reflexive(cone3, 0, 2)
    assert not is_reflexive(cone3, 0, 3)
    assert is_reflexive(hc, 5, -7)
    with pytest.raises(SmoothScroll):
        is_reflexive(classify([1, 1]), 0, 0)


@pytest.mark.parametrize("d, want", [(4, (1, 1)), (-4, (-2, 2)), (3, (1, 0))])
def test_sheaf_of_divisor(cone3, d, want):
    assert sheaf_of_divisor(cone3, ConeClass(d)) == C(*want)


def test_sheaf_of_divisor_regime_mismatch(cone3, hc):
    with pytest.raises(RegimeMismatch):
        sheaf_of_divisor(cone3, PairClass(1, 0))
    with pytest.raises(RegimeMismatch):
        sheaf_of_divisor(hc, ConeClass(1))
    assert sheaf_of_divisor(hc, PairClass(2, 3)) == HC(2, 3)


@pytest.mark.parametrize("a, b, want", [(1, -2, (0, 1)), (0, 4, (1, 1)), (2, 0, (2, 0))])
def test_normalize_sheaf(cone3, a, b, want):
    assert normalize_sheaf(cone3, a, b) == C(*want)


def test_group_op(cone3, hc):
    assert div_group_op(cone3, C(0, 2), C(0, 2)) == C(1, 1)
    assert div_group_op(cone3, C(0, 2), C(0, 2)) == sheaf_of_divisor(cone3, ConeClass(4))
    assert div_group_op(cone3, C(5, 1), C(0, 0)) == C(5, 1)
    assert div_group_op(hc, HC(1, 2), HC(3, -5)) == HC(4, -3)


def test_group_op_rejects_bad_labels(cone3, hc):
    with pytest.raises(RegimeMismatch):
        div_group_op(cone3, C(0, 3), C(0, 0))
    with pytest.raises(RegimeMismatch):
        div_group_op(cone3, HC(0, 1), C(0, 0))
    with pytest.raises(RegimeMismatch):
        div_group_op(hc, C(0, 1), HC(0, 0))


def test_dual(cone3, hc):
    assert div_dual(cone3, C(1, 1)) == C(-2, 2)
    assert div_group_op(cone3, C(1, 1), C(-2, 2)) == C(0, 0)
    assert div_dual(cone3, C(2, 0)) == C(-2, 0)
    assert div_dual(hc, HC(3, -4)) == HC(-3, 4)


def test_is_cartier(cone3, hc):
    assert is_cartier(cone3, ConeClass(3)) is True
    assert is_cartier(cone3, ConeClass(1)) is False
    assert is_cartier(hc, PairClass(2, 3)) is None
    assert is_cartier(hc, PairClass(2, 0)) is True


@pytest.mark.parametrize("d, want", [(4, 8), (3, 5), (1, 1)])
def test_dim_linear_system(cone3, d, want):
    assert dim_linear_system(cone3, d) == want


def test_dim_linear_system_printed_cross_check(cone3, quadric_cone):
    # non-Cartier branch agrees, Cartier branch does not
    assert dim_linear_system_printed(cone3, 4) == 8
    assert dim_linear_system_printed(cone3, 1) == 1
    assert dim_linear_system_printed(cone3, 3) == 3
    assert dim_linear_system(quadric_cone, 2) == 3
    assert dim_linear_system_printed(quadric_cone, 2) == 2


def test_dim_linear_system_errors(cone3, hc):
    with pytest.raises(NonEffective):
        dim_linear_system(cone3, 0)
    with pytest.raises(NotACone):
        dim_linear_system(hc, 2)


def test_non_cartier_branch_agrees_on_grid():
    for f in range(2, 6):
        for r in range(2, 5):
            s = classify([0] * (r - 1) + [f])
            for d in range(1, 4 * f):
                if d % f:
                    assert dim_linear_system(s, d) == dim_linear_system_printed(s, d)
