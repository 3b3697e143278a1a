import numpy as np
import pytest

from cutopt.geometry import BoxRegion, CutState, contains, cut, widths


def interval(lo, hi):
    return BoxRegion([lo], [hi])


def bounds(region):
    return region.lower.tolist(), region.upper.tolist()


def test_centered_cut():
    r = cut(CutState(interval(0, 10), 0.4, 1), [5.0])
    assert bounds(r) == ([3.0], [7.0])


def test_cut_shifted_at_lower_edge():
    r = cut(CutState(interval(0, 10), 0.4, 1), [0.5])
    assert bounds(r) == ([0.0], [4.0])


def test_cut_shifted_at_upper_edge():
    r = cut(CutState(interval(0, 10), 0.4, 1), [9.9])
    assert bounds(r) == ([6.0], [10.0])


def test_second_cut_uses_original_widths():
    r = cut(CutState(interval(0, 10), 0.4, 2), [5.0])
    np.testing.assert_allclose(r.lower, [4.2], rtol=0, atol=1e-14)
    np.testing.assert_allclose(r.upper, [5.8], rtol=0, atol=1e-14)


def test_cut_per_dimension():
    region = BoxRegion([-1, 0], [1, 100])
    r = cut(CutState(region, 0.5, 1), [1.0, 50.0])
    assert bounds(r) == ([0.0, 25.0], [1.0, 75.0])


def test_degenerate_dimension():
    region = BoxRegion([0, 2], [1, 2])
    r = cut(CutState(region, 0.5, 3), [0.5, 2.0])
    assert widths(r)[1] == 0.0
    assert contains(r, [0.5, 2.0])


def test_cut_is_pure():
    state = CutState(BoxRegion([0, 0], [3, 7]), 0.3, 4)
    assert cut(state, [1.0, 2.0]) == cut(state, [1.0, 2.0])


def test_center_outside_rejected():
    with pytest.raises(ValueError):
        cut(CutState(interval(0, 1), 0.5, 1), [2.0])


def test_center_dimension_checked():
    with pytest.raises(ValueError):
        cut(CutState(interval(0, 1), 0.5, 1), [0.5, 0.5])


@pytest.mark.parametrize("lam", [0.0, 1.0, -0.2, 1.5])
def test_lambda_range(lam):
    with pytest.raises(ValueError):
        CutState(interval(0, 1), lam, 1)


@pytest.mark.parametrize("n", [0, -1, 1.5])
def test_iteration_positive_integer(n):
    with pytest.raises(ValueError):
        CutState(interval(0, 1), 0.5, n)


def test_region_validation():
    with pytest.raises(ValueError):
        BoxRegion([1.0], [0.0])
    with pytest.raises(ValueError):
        BoxRegion([0.0, 0.0], [1.0])
    with pytest.raises(ValueError):
        BoxRegion([0.0], [np.inf])
    with pytest.raises(ValueError):
        BoxRegion([], [])


def test_region_is_immutable():
    region = BoxRegion([0.0], [1.0])
    with pytest.raises(ValueError):
        region.lower[0] = 5.0


def test_contains_boundary_inclusive():
    region = BoxRegion([0, -1], [1, 1])
    assert contains(region, [0.0, -1.0])
    assert contains(region, [1.0, 1.0])
    assert not contains(region, [1.0 + 1e-12, 0.0])
    with pytest.raises(ValueError):
        contains(region, [0.5])


def test_equality_and_hash():
    a = BoxRegion.cube(-1, 1, 3)
    b = BoxRegion([-1, -1, -1], [1, 1, 1])
    assert a == b and hash(a) == hash(b)
    assert a.issubset(BoxRegion.cube(-2, 2, 3))
    assert not BoxRegion.cube(-2, 2, 3).issubset(a)
