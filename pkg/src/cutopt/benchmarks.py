"""Fifty benchmark functions with bounds, known minima and minimizers.

Every evaluator accepts an array whose last axis holds the coordinates,
so ``f(x)`` works on a single point of shape (D,) and on a batch of shape
(n, D) alike. Values at points outside the nominal bounds are returned
as computed; the optimizers treat NaN results as +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .geometry import BoxRegion, contains
from .sampling import RandomStream, uniform_samples

PI = np.pi

# ---------------------------------------------------------------------------
# 2-D functions
# ---------------------------------------------------------------------------


def ackley3(x):
    # Minus sign on the second term; the tabulated minimum is only reachable with it.
    x1, x2 = x[..., 0], x[..., 1]
    return -200 * np.exp(-0.02 * np.sqrt(x1**2 + x2**2)) - 5 * np.exp(
        np.cos(3 * x1) + np.sin(3 * x2)
    )


def beale(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (
        (1.5 - x1 + x1 * x2) ** 2
        + (2.25 - x1 + x1 * x2**2) ** 2
        + (2.625 - x1 + x1 * x2**3) ** 2
    )


def booth(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (x1 + 2 * x2 - 7) ** 2 + (2 * x1 + x2 - 5) ** 2


def bukin2(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 100 * (x2 - 0.01 * x1**2 + 1) ** 2 + 0.01 * (x1 + 10) ** 2


def camel3(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 2 * x1**2 - 1.05 * x1**4 + x1**6 / 6 + x1 * x2 + x2**2


def chen_bird(x, b=0.001):
    x1, x2 = x[..., 0], x[..., 1]
    r = x1**2 + x2**2
    return (
        -b / (b**2 + (r - 1) ** 2)
        - b / (b**2 + (r - 0.5) ** 2)
        - b / (b**2 + (x1 - x2) ** 2)
    )


def cube(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 100 * (x2 - x1**3) ** 2 + (1 - x1) ** 2


def _sinc(t):
    """sin(pi t) / (pi t), with the removable singularity filled in for |t| < 1e-12."""
    t = np.asarray(t, dtype=float)
    tiny = np.abs(t) < 1e-12
    safe = np.where(tiny, 1.0, t)
    return np.where(tiny, 1.0, np.sin(PI * safe) / (PI * safe))


def damavandi(x):
    x1, x2 = x[..., 0], x[..., 1]
    q = np.abs(_sinc(x1 - 2) * _sinc(x2 - 2)) ** 5
    return (1 - q) * (2 + (x1 - 7) ** 2 + 2 * (x2 - 7) ** 2)


def jennrich_sampson(x):
    x1, x2 = x[..., 0, None], x[..., 1, None]
    i = np.arange(1, 11, dtype=float)
    return np.sum((2 + 2 * i - (np.exp(i * x1) + np.exp(i * x2))) ** 2, axis=-1)


def leon(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 100 * (x2 - x1**2) ** 2 + (1 - x1) ** 2


def matyas(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 0.26 * (x1**2 + x2**2) - 0.48 * x1 * x2


def mishra3(x):
    x1, x2 = x[..., 0], x[..., 1]
    return np.sqrt(np.abs(np.cos(np.sqrt(np.abs(x1**2 + x2))))) + 0.01 * (x1 + x2)


def mishra10a(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (x1 + x2 - x1 * x2) ** 2


def price2(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 1 + np.sin(x1) ** 2 + np.sin(x2) ** 2 - 0.1 * np.exp(-(x1**2) - x2**2)


def schaffer1(x):
    x1, x2 = x[..., 0], x[..., 1]
    r2 = x1**2 + x2**2
    return 0.5 + (np.sin(r2**2) ** 2 - 0.5) / (1 + 0.001 * r2) ** 2


def schwefel26(x):
    x1, x2 = x[..., 0], x[..., 1]
    return np.maximum(np.abs(x1 + 2 * x2 - 7), np.abs(2 * x1 + x2 - 5))


def testtube_holder(x):
    x1, x2 = x[..., 0], x[..., 1]
    return -4 * np.abs(
        np.sin(x1) * np.cos(x2) * np.exp(np.abs(np.cos((x1**2 + x2**2) / 200)))
    )


def trefethen(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (
        np.exp(np.sin(50 * x1))
        + np.sin(60 * np.exp(x2))
        + np.sin(70 * np.sin(x1))
        + np.sin(np.sin(80 * x2))
        - np.sin(10 * (x1 + x2))
        + 0.25 * (x1**2 + x2**2)
    )


def tripod(x):
    x1, x2 = x[..., 0], x[..., 1]
    p1 = (x1 >= 0).astype(float)
    p2 = (x2 >= 0).astype(float)
    return p2 * (1 + p1) + np.abs(x1 + 50 * p2 * (1 - 2 * p1)) + np.abs(x2 + 50 * (1 - 2 * p2))


def wayburn_seader2(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (1.613 - 4 * (x1 - 0.3125) ** 2 - 4 * (x2 - 1.625) ** 2) ** 2 + (x2 - 1) ** 2


# ---------------------------------------------------------------------------
# 4-D functions
# ---------------------------------------------------------------------------


def biggs_exp4(x):
    t = 0.1 * np.arange(1, 11, dtype=float)
    x1, x2, x3, x4 = (x[..., k, None] for k in range(4))
    return np.sum(
        (x3 * np.exp(-t * x1) - x4 * np.exp(-t * x2) - np.exp(-t) + 5 * np.exp(-10 * t)) ** 2,
        axis=-1,
    )


def colville(x):
    x1, x2, x3, x4 = (x[..., k] for k in range(4))
    return (
        100 * (x1 - x2**2) ** 2
        + (1 - x1) ** 2
        + 90 * (x4 - x3**2) ** 2
        + (1 - x3) ** 2
        + 10.1 * ((x2 - 1) ** 2 + (x4 - 1) ** 2)
        + 19.8 * (x2 - 1) * (x4 - 1)
    )


CORANA_D = np.array([1.0, 1000.0, 10.0, 100.0])


def corana(x):
    x = np.asarray(x, dtype=float)
    z = 0.2 * np.floor(np.abs(x / 0.2) + 0.49999) * np.sign(x)
    near = np.abs(x - z) < 0.05
    terms = np.where(near, 0.15 * CORANA_D * (z - 0.05 * np.sign(z)) ** 2, CORANA_D * x**2)
    return np.sum(terms, axis=-1)


DEVILLIERS_ABCD = (60.137, 1.371, 3.112, 1.761)


def devilliers_glasser1(x):
    a, b, c, d = DEVILLIERS_ABCD
    t = 0.1 * np.arange(24, dtype=float)
    x1, x2, x3, x4 = (x[..., k, None] for k in range(4))
    with np.errstate(invalid="ignore"):
        model = x1 * x2**t * np.sin(x3 * t + x4)
    return np.sum((model - a * b**t * np.sin(c * t + d)) ** 2, axis=-1)


# Printed as 10/6.931, but the tabulated minimum only holds for 1/6.931.
GEAR_RATIO = 1 / 6.931


def gear(x):
    fx = np.floor(x)
    return (GEAR_RATIO - fx[..., 0] * fx[..., 1] / (fx[..., 2] * fx[..., 3])) ** 2


def miele_cantrell(x):
    x1, x2, x3, x4 = (x[..., k] for k in range(4))
    return (np.exp(-x1) - x2) ** 4 + 100 * (x2 - x3) ** 6 + np.tan(x3 - x4) ** 4 + x1**8


def powell_singular(x):
    x1, x2, x3, x4 = (x[..., k] for k in range(4))
    return (x1 + 10 * x2) ** 2 + 5 * (x3 - x4) ** 2 + (x2 - x3) ** 4 + 10 * (x1 - x4) ** 4


SHEKEL_A = np.array(
    [
        [4, 1, 8, 6, 3, 2, 5, 8, 6, 7],
        [4, 1, 8, 6, 7, 9, 3, 1, 2, 3.6],
        [4, 1, 8, 6, 3, 2, 5, 8, 6, 7],
        [4, 1, 8, 6, 7, 9, 3, 1, 2, 3.6],
    ],
    dtype=float,
).T
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def shekel(x, m):
    diff = x[..., None, :] - SHEKEL_A[:m]
    return -np.sum(1.0 / (np.sum(diff**2, axis=-1) + SHEKEL_C[:m]), axis=-1)


def shekel5(x):
    return shekel(x, 5)


def shekel7(x):
    return shekel(x, 7)


def shekel10(x):
    return shekel(x, 10)


# ---------------------------------------------------------------------------
# 30-D functions (valid for any D)
# ---------------------------------------------------------------------------


def ackley1(x):
    d = x.shape[-1]
    return (
        -20 * np.exp(-0.02 * np.sqrt(np.sum(x**2, axis=-1) / d))
        - np.exp(np.sum(np.cos(2 * PI * x), axis=-1) / d)
        + 20
        + np.e
    )


def cosine_mixture(x):
    return -0.1 * np.sum(np.cos(5 * PI * x), axis=-1) + np.sum(x**2, axis=-1)


def csendes(x):
    # The term is bounded by 3 x^6, so it is 0 wherever x^6 underflows (including x = 0,
    # and subnormal x where 1/x would overflow).
    x = np.asarray(x, dtype=float)
    x2 = x * x
    x6 = x2 * x2 * x2
    zero = x6 == 0
    safe = np.where(zero, 1.0, x)
    return np.sum(np.where(zero, 0.0, x6 * (2 + np.sin(1 / safe))), axis=-1)


def deb1(x):
    s2 = np.sin(5 * PI * x) ** 2
    return -np.mean(s2 * s2 * s2, axis=-1)


def dixon_price(x):
    i = np.arange(2, x.shape[-1] + 1, dtype=float)
    return (x[..., 0] - 1) ** 2 + np.sum(i * (2 * x[..., 1:] ** 2 - x[..., :-1]) ** 2, axis=-1)


def exponential(x):
    return -np.exp(-0.5 * np.sum(x**2, axis=-1))


def griewank(x):
    i = np.arange(1, x.shape[-1] + 1, dtype=float)
    return np.sum(x**2, axis=-1) / 4000 - np.prod(np.cos(x / np.sqrt(i)), axis=-1) + 1


def mishra1(x):
    g = 1 + x.shape[-1] - np.sum(x, axis=-1)
    with np.errstate(invalid="ignore", over="ignore"):
        return (1 + g) ** g


def powell_sum(x):
    i = np.arange(1, x.shape[-1] + 1, dtype=float)
    return np.sum(np.abs(x) ** (i + 1), axis=-1)


def qing(x):
    i = np.arange(1, x.shape[-1] + 1, dtype=float)
    return np.sum((x**2 - i) ** 2, axis=-1)


def quintic(x):
    # x^5 - 3x^4 + 4x^3 + 2x^2 - 10x - 4 in Horner form
    return np.sum(np.abs(((((x - 3) * x + 4) * x + 2) * x - 10) * x - 4), axis=-1)


def rosenbrock(x):
    return np.sum(
        100 * (x[..., 1:] - x[..., :-1] ** 2) ** 2 + (x[..., :-1] - 1) ** 2, axis=-1
    )


def salomon(x):
    r = np.sqrt(np.sum(x**2, axis=-1))
    return 1 - np.cos(2 * PI * r) + 0.1 * r


def schwefel(x, alpha=0.1):
    return np.sum(x**2, axis=-1) ** alpha


def stepint(x):
    return 25 + np.sum(np.floor(x), axis=-1)


def stretched_v_sine(x):
    s = x[..., 1:] ** 2 + x[..., :-1] ** 2
    return np.sum(s**0.25 * (np.sin(50 * s**0.1) ** 2 + 0.1), axis=-1)


def wavy(x, k=10.0):
    return 1 - np.mean(np.cos(k * x) * np.exp(-(x**2) / 2), axis=-1)


WEIERSTRASS_A = 0.5
WEIERSTRASS_KMAX = 20


def _cos_triple_series(theta):
    """cos(3**k * theta) for k = 0..20 stacked on a new last axis.

    Uses cos(3t) = 4 cos(t)**3 - 3 cos(t): one cosine instead of 21 cosines
    of arguments up to 3**20 * 2 pi. Rounding of theta is amplified by 3**k
    either way, so the recurrence is no less accurate than direct evaluation,
    and it is exact at theta = pi, where every term equals -1.
    """
    c = np.cos(theta)
    out = [c]
    for _ in range(WEIERSTRASS_KMAX):
        c = c * (4 * c * c - 3)
        out.append(c)
    return np.stack(out, axis=-1)


WEIERSTRASS_AK = WEIERSTRASS_A ** np.arange(WEIERSTRASS_KMAX + 1, dtype=float)
WEIERSTRASS_OFFSET = float(np.sum(WEIERSTRASS_AK * _cos_triple_series(np.float64(PI))))


def weierstrass(x):
    # sum_k a^k cos(2 pi 3^k (x + 0.5)) minus the constant sum_k a^k cos(pi 3^k), per coordinate
    terms = _cos_triple_series(2 * PI * (x + 0.5)) @ WEIERSTRASS_AK
    return np.sum(terms, axis=-1) - x.shape[-1] * WEIERSTRASS_OFFSET


def _whitley(x):
    xi = x[..., :, None]
    xj = x[..., None, :]
    g = 100 * (xi**2 - xj) ** 2 + (1 - xj) ** 2
    return np.sum(g**2 / 4000 - np.cos(g) + 1, axis=(-2, -1))


def whitley(x, chunk=128):
    # D x D intermediates per point; evaluate large batches in slices
    if x.ndim < 2 or len(x) <= chunk:
        return _whitley(x)
    return np.concatenate([_whitley(x[s : s + chunk]) for s in range(0, len(x), chunk)])


def zakharov(x):
    i = np.arange(1, x.shape[-1] + 1, dtype=float)
    s = 0.5 * np.sum(i * x, axis=-1)
    return np.sum(x**2, axis=-1) + s**2 + s**4


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BenchmarkEntry:
    id: str
    name: str
    dimension: int
    region: BoxRegion
    f_star: float
    minimizers: Tuple[Tuple[float, ...], ...]
    func: Callable = field(repr=False, compare=False)
    notes: str = ""

    def __call__(self, x):
        return evaluate_entry(self, x)

    @property
    def index(self) -> int:
        return int(self.id[1:])

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "dimension": self.dimension,
            "bounds": [[float(lo), float(hi)] for lo, hi in zip(self.region.lower, self.region.upper)],
            "f_star": self.f_star,
            "minimizers": [list(m) for m in self.minimizers],
            "notes": self.notes,
        }


def evaluate_entry(entry: BenchmarkEntry, x):
    x = np.asarray(x, dtype=float)
    if x.ndim == 0 or x.shape[-1] != entry.dimension:
        raise ValueError(
            f"{entry.id} expects points of dimension {entry.dimension}, got shape {x.shape}"
        )
    with np.errstate(all="ignore"):
        out = entry.func(x)
    if np.ndim(out) == 0:
        return float(out)
    return np.asarray(out, dtype=float)


def _box2(lo, hi):
    return BoxRegion([lo, lo], [hi, hi])


def _const(value, dim):
    return (tuple([float(value)] * dim),)


D30 = 30
SQRT_I = np.sqrt(np.arange(1, D30 + 1, dtype=float))
_SQ2 = math.sqrt(2) / 2
_WS = math.sqrt(0.0505) / 2


def _build() -> List[BenchmarkEntry]:
    e = BenchmarkEntry
    c = BoxRegion.cube
    entries = [
        e("f1", "Ackley 3", 2, _box2(-32, 32), -234.8853900346117,
          ((0.0, 0.511681300749165),), ackley3,
          "second term carries a minus sign (required by the tabulated minimum)"),
        e("f2", "Beale", 2, _box2(-4.5, 4.5), 0.0, ((3.0, 0.5),), beale),
        e("f3", "Booth", 2, _box2(-10, 10), 0.0, ((1.0, 3.0),), booth),
        e("f4", "Bukin 2", 2, BoxRegion([-15, -3], [-5, 3]), 0.0, ((-10.0, 0.0),), bukin2),
        e("f5", "Camel 3-Hump", 2, _box2(-5, 5), 0.0, ((0.0, 0.0),), camel3),
        e("f6", "Chen Bird", 2, _box2(-500, 500), -2000.003999984001,
          ((0.5, 0.5), (-0.5, -0.5), (_SQ2, _SQ2), (-_SQ2, -_SQ2)), chen_bird,
          "four global minima; b = 0.001"),
        e("f7", "Cube", 2, _box2(-10, 10), 0.0, ((1.0, 1.0),), cube),
        e("f8", "Damavandi", 2, _box2(0, 14), 0.0, ((2.0, 2.0),), damavandi,
          "sinc quotient evaluated as its limit 1 within 1e-12 of the singular point"),
        e("f9", "Jennrich-Sampson", 2, _box2(-1, 1), 124.36218235561473896,
          ((0.257825214197515, 0.257825213363251),), jennrich_sampson),
        e("f10", "Leon", 2, _box2(-1.2, 1.2), 0.0, ((1.0, 1.0),), leon),
        e("f11", "Matyas", 2, _box2(-10, 10), 0.0, ((0.0, 0.0),), matyas),
        e("f12", "Mishra 3", 2, _box2(-10, 10), -0.184666993496657,
          ((-8.466701099413424, -10.0),), mishra3,
          "minimizer on the boundary x2 = -10; tabulated value is the float64 value there"),
        e("f13", "Mishra 10a", 2, _box2(-10, 10), 0.0, ((0.0, 0.0), (2.0, 2.0)), mishra10a,
          "two global minima"),
        e("f14", "Price 2", 2, _box2(-10, 10), 0.9, ((0.0, 0.0),), price2),
        e("f15", "Schaffer 1", 2, _box2(-100, 100), 0.0, ((0.0, 0.0),), schaffer1),
        e("f16", "Schwefel 2.6", 2, _box2(-100, 100), 0.0, ((1.0, 3.0),), schwefel26,
          "max-of-affine form as printed"),
        e("f17", "Testtube Holder", 2, _box2(-10, 10), -10.872300105622747,
          ((1.570602622190189, 0.0), (-1.570602622190189, 0.0)), testtube_holder,
          "two global minima"),
        e("f18", "Trefethen", 2, _box2(-10, 10), -3.306868647475237,
          ((-0.024403079433617, 0.210612427428984),), trefethen),
        e("f19", "Tripod", 2, _box2(-100, 100), 0.0, ((0.0, -50.0),), tripod),
        e("f20", "Wayburn Seader 2", 2, _box2(-500, 500), 0.0,
          ((0.424861025271221, 1.0), (0.200138974728779, 1.0)), wayburn_seader2,
          "two global minima at (0.3125 +- sqrt(0.0505)/2, 1)"),
        # 4-D
        e("f21", "Biggs EXP4", 4, c(0, 20, 4), 0.0, ((1.0, 10.0, 1.0, 5.0),), biggs_exp4),
        e("f22", "Colville", 4, c(-10, 10, 4), 0.0, _const(1, 4), colville),
        e("f23", "Corana", 4, c(-500, 500, 4), 0.0, _const(0, 4), corana,
          "infinitely many minima with |x_i| < 0.05; sign(0) = 0"),
        e("f24", "deVilliers Glasser 1", 4, c(1, 100, 4), 0.0, (DEVILLIERS_ABCD,),
          devilliers_glasser1,
          "minimizer family x1=a, x2=b, sin(x3 t + x4) = sin(c t + d); representative (a, b, c, d)"),
        e("f25", "Gear", 4, c(12, 60, 4), 2.700857148886513e-12,
          ((16.0, 19.0, 43.0, 49.0), (19.0, 16.0, 49.0, 43.0)), gear,
          "erratum: constant implemented as 1/6.931; the printed 10/6.931 "
          "contradicts the tabulated minimum"),
        e("f26", "Miele Cantrell", 4, c(-1, 1, 4), 0.0, ((0.0, 1.0, 1.0, 1.0),), miele_cantrell),
        e("f27", "Powell Singular", 4, c(-4, 5, 4), 0.0, _const(0, 4), powell_singular),
        e("f28", "Shekel 5", 4, c(0, 10, 4), -10.153199679058231,
          ((4.000037152015988, 4.000133277358568, 4.000037152015988, 4.000133277358568),),
          shekel5),
        e("f29", "Shekel 7", 4, c(0, 10, 4), -10.402915336777747,
          ((4.000572820035435, 3.999606208991378, 4.000572820035435, 3.999606208991378),),
          shekel7),
        e("f30", "Shekel 10", 4, c(0, 10, 4), -10.536443153483534,
          ((4.000746868833048, 3.999509479273299, 4.000746868833048, 3.999509479273299),),
          shekel10),
        # 30-D
        e("f31", "Ackley 1", D30, c(-32, 32, D30), 0.0, _const(0, D30), ackley1),
        e("f32", "Cosine Mixture", D30, c(-1, 1, D30), -0.1 * D30, _const(0, D30), cosine_mixture),
        e("f33", "Csendes", D30, c(-1, 1, D30), 0.0, _const(0, D30), csendes,
          "term x^6 (2 + sin(1/x)) defined as 0 at x = 0 and wherever x^6 underflows"),
        e("f34", "Deb 1", D30, c(-1, 1, D30), -1.0,
          _const(0.1, D30) + _const(-0.9, D30)
          + (tuple((0.3, -0.5, 0.7, -0.1, 0.9)[k % 5] for k in range(D30)),),
          deb1, "10^D global minima at x_i in {+-0.1, +-0.3, ..., +-0.9}"),
        e("f35", "Dixon & Price", D30, c(-10, 10, D30), 0.0,
          (tuple(2.0 ** (2.0 ** -(i - 1) - 1) for i in range(1, D30 + 1)),), dixon_price),
        e("f36", "Exponential", D30, c(-1, 1, D30), -1.0, _const(0, D30), exponential),
        e("f37", "Griewank", D30, c(-100, 100, D30), 0.0, _const(0, D30), griewank),
        e("f38", "Mishra 1", D30, c(0, 1, D30), 2.0, _const(1, D30), mishra1,
          "undefined (NaN) where 1 + g < 0, which only happens outside the bounds"),
        e("f39", "Powell Sum", D30, c(-1, 1, D30), 0.0, _const(0, D30), powell_sum),
        e("f40", "Qing", D30, c(-500, 500, D30), 0.0,
          (tuple(SQRT_I.tolist()), tuple((-SQRT_I).tolist())), qing,
          "2^D global minima at x_i = +-sqrt(i)"),
        e("f41", "Quintic", D30, c(-10, 10, D30), 0.0,
          _const(-1, D30) + _const(2, D30) + _const(-0.402627941186124, D30), quintic,
          "3^D global minima at x_i in {-1, 2, -0.402627941186124}"),
        e("f42", "Rosenbrock", D30, c(-30, 30, D30), 0.0, _const(1, D30), rosenbrock),
        e("f43", "Salomon", D30, c(-100, 100, D30), 0.0, _const(0, D30), salomon),
        e("f44", "Schwefel", D30, c(-100, 100, D30), 0.0, _const(0, D30), schwefel,
          "alpha = 0.1"),
        e("f45", "Stepint", D30, c(-5.12, 5.12, D30), 25.0 - 6 * D30, _const(-5.12, D30), stepint,
          "infinitely many minima with x_i in [-5.12, -5); floor rounds toward -inf"),
        e("f46", "Stretched V Sine Wave", D30, c(-10, 10, D30), 0.0, _const(0, D30),
          stretched_v_sine),
        e("f47", "W / Wavy", D30, c(-PI, PI, D30), 0.0, _const(0, D30), wavy, "k = 10"),
        e("f48", "Weierstrass", D30, c(-0.5, 0.5, D30), 0.0, _const(0, D30), weierstrass,
          "a = 0.5, b = 3, K = 20; no recentering term"),
        e("f49", "Whitley", D30, c(-10, 10, D30), 0.0, _const(1, D30), whitley),
        e("f50", "Zakharov", D30, c(-5, 10, D30), 0.0, _const(0, D30), zakharov),
    ]
    return entries


_CATALOG: Tuple[BenchmarkEntry, ...] = tuple(_build())
_BY_ID: Dict[str, BenchmarkEntry] = {entry.id: entry for entry in _CATALOG}


def catalog(dimension: Optional[int] = None) -> List[BenchmarkEntry]:
    """Catalog entries in order f1..f50, optionally filtered by dimension."""
    if dimension is None:
        return list(_CATALOG)
    return [entry for entry in _CATALOG if entry.dimension == dimension]


def get(function_id: str) -> BenchmarkEntry:
    try:
        return _BY_ID[function_id]
    except KeyError:
        raise KeyError(f"unknown benchmark function {function_id!r}") from None


def evaluate(function_id: str, point):
    return evaluate_entry(get(function_id), point)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass
class EntryCheck:
    id: str
    name: str
    f_star: float
    values: List[float]
    residuals: List[float]
    in_region: List[bool]
    sample_min: float
    allowed: float
    passed: bool
    notes: str = ""

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class ValidationReport:
    tolerance_rel: float
    tolerance_abs: float
    checks: List[EntryCheck]

    @property
    def n_passed(self) -> int:
        return sum(ch.passed for ch in self.checks)

    @property
    def ok(self) -> bool:
        return self.n_passed == len(self.checks)

    def failures(self) -> List[EntryCheck]:
        return [ch for ch in self.checks if not ch.passed]

    def to_dict(self) -> dict:
        return {
            "tolerance_rel": self.tolerance_rel,
            "tolerance_abs": self.tolerance_abs,
            "passed": self.n_passed,
            "total": len(self.checks),
            "entries": [ch.to_dict() for ch in self.checks],
        }


def validate_catalog(
    tolerance_rel: float = 1e-9,
    tolerance_abs: float = 1e-9,
    samples: int = 10_000,
    seed: int = 42,
) -> ValidationReport:
    """Check every entry's minimizers against its tabulated minimum.

    An entry passes when each listed minimizer lies in the region and
    evaluates to ``f_star`` within ``max(tolerance_abs, tolerance_rel*|f_star|)``,
    and no point of a seeded uniform sample of the region falls below
    ``f_star`` by more than that same allowance.
    """
    checks = []
    for k, entry in enumerate(_CATALOG):
        allowed = max(tolerance_abs, tolerance_rel * abs(entry.f_star))
        pts = np.array(entry.minimizers, dtype=float)
        values = np.atleast_1d(evaluate_entry(entry, pts))
        residuals = np.abs(values - entry.f_star)
        inside = [contains(entry.region, p) for p in pts]
        sample = uniform_samples(entry.region, samples, RandomStream(seed, k))
        sample_vals = np.atleast_1d(evaluate_entry(entry, sample))
        sample_min = float(np.nanmin(sample_vals)) if samples else math.inf
        passed = (
            all(inside)
            and bool(np.all(residuals <= allowed))
            and sample_min >= entry.f_star - allowed
        )
        checks.append(
            EntryCheck(
                id=entry.id,
                name=entry.name,
                f_star=entry.f_star,
                values=values.tolist(),
                residuals=residuals.tolist(),
                in_region=inside,
                sample_min=sample_min,
                allowed=allowed,
                passed=passed,
                notes=entry.notes,
            )
        )
    return ValidationReport(tolerance_rel, tolerance_abs, checks)
