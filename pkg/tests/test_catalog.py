import math
import time

import numpy as np
import pytest

from cutopt import benchmarks as bm
from cutopt.sampling import RandomStream, uniform_samples

from reference_functions import REFERENCE

ALL_IDS = [f"f{k}" for k in range(1, 51)]


def close(a, b, rel=1e-10, abs_=1e-10):
    return math.isclose(a, b, rel_tol=rel, abs_tol=abs_)


def test_catalog_sizes():
    assert len(bm.catalog()) == 50
    assert [e.id for e in bm.catalog()] == ALL_IDS
    assert len(bm.catalog(2)) == 20
    assert [e.id for e in bm.catalog(4)] == [f"f{k}" for k in range(21, 31)]
    assert len(bm.catalog(30)) == 20


def test_get_unknown():
    with pytest.raises(KeyError):
        bm.get("f51")


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        bm.evaluate("f3", [1.0, 2.0, 3.0])


@pytest.mark.parametrize("fid", ALL_IDS)
def test_matches_reference_at_minimizers(fid):
    entry = bm.get(fid)
    ref = REFERENCE[fid]
    for m in entry.minimizers:
        assert close(bm.evaluate(fid, m), ref(list(m)), abs_=1e-12)


@pytest.mark.parametrize("fid", ALL_IDS)
def test_matches_reference_at_random_points(fid):
    entry = bm.get(fid)
    ref = REFERENCE[fid]
    pts = uniform_samples(entry.region, 20, RandomStream(7, entry.index))
    got = entry(pts)
    assert got.shape == (20,)
    for p, g in zip(pts, got):
        want = ref(p.tolist())
        # Weierstrass and Whitley evaluate cosines of huge arguments
        assert close(g, want, rel=1e-9, abs_=1e-9 * max(1.0, abs(want))), (p, g, want)


@pytest.mark.parametrize("fid", ALL_IDS)
def test_single_point_and_batch_agree(fid):
    entry = bm.get(fid)
    pts = uniform_samples(entry.region, 5, RandomStream(3, entry.index))
    batch = entry(pts)
    for p, v in zip(pts, batch):
        assert entry(p) == v


def test_booth_value():
    assert bm.evaluate("f3", [0.0, 0.0]) == 74.0


def test_damavandi_trap_value():
    # Local minimum at (7, 7) with value 2, the basin a grid search falls into.
    assert bm.evaluate("f8", [7.0, 7.0]) == pytest.approx(2.0, abs=1e-12)


def test_damavandi_singular_point():
    assert bm.evaluate("f8", [2.0, 2.0]) == 0.0


def test_csendes_origin():
    assert bm.evaluate("f33", np.zeros(30)) == 0.0


def test_csendes_subnormal_is_finite():
    x = np.zeros(30)
    x[0] = 5e-324
    assert bm.evaluate("f33", x) == 0.0


def test_corana_origin():
    assert bm.evaluate("f23", np.zeros(4)) == 0.0


def test_stepint_floor():
    assert bm.evaluate("f45", np.full(30, -5.12)) == 25 + 30 * (-6)
    assert bm.evaluate("f45", np.full(30, 5.0)) == 25 + 30 * 5
    assert bm.evaluate("f45", np.full(30, -0.5)) == 25 - 30


def test_cosine_mixture_origin():
    assert bm.evaluate("f32", np.zeros(30)) == pytest.approx(-3.0, abs=1e-15)


def test_gear_constant():
    # The printed minimum is reproduced by 1/6.931, not by 10/6.931.
    ratio = 16 * 19 / (43 * 49)
    assert math.isclose((1 / 6.931 - ratio) ** 2, 2.700857148886513e-12, rel_tol=1e-9)
    assert (10 / 6.931 - ratio) ** 2 > 1.0
    assert "erratum" in bm.get("f25").notes


def test_ackley3_sign():
    entry = bm.get("f1")
    assert math.isclose(entry(entry.minimizers[0]), -234.8853900346117, rel_tol=1e-12)
    assert "minus" in entry.notes


@pytest.mark.parametrize("fid", ["f6", "f13", "f17", "f20", "f34", "f40", "f41"])
def test_multi_minima_listed(fid):
    entry = bm.get(fid)
    assert len(entry.minimizers) >= 2
    for m in entry.minimizers:
        assert close(entry(m), entry.f_star, abs_=1e-9)


def test_to_dict():
    d = bm.get("f4").to_dict()
    assert d["bounds"] == [[-15.0, -5.0], [-3.0, 3.0]]
    assert d["dimension"] == 2
    assert d["minimizers"] == [[-10.0, 0.0]]


def test_validate_default_passes_and_is_fast():
    t0 = time.perf_counter()
    report = bm.validate_catalog()
    elapsed = time.perf_counter() - t0
    assert report.ok, [c.id for c in report.failures()]
    assert report.n_passed == 50
    assert elapsed < 1.0


def test_validate_exact_fails():
    report = bm.validate_catalog(0.0, 0.0)
    assert not report.ok
    assert report.to_dict()["total"] == 50


def test_validation_catches_a_wrong_minimum(monkeypatch):
    entries = list(bm._CATALOG)
    bad = entries[2].__class__(**{**entries[2].__dict__, "f_star": 1.0})
    entries[2] = bad
    monkeypatch.setattr(bm, "_CATALOG", tuple(entries))
    report = bm.validate_catalog()
    assert [c.id for c in report.failures()] == ["f3"]
