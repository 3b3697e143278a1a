"""Axis-aligned boxes and the shrink-and-shift cut used by the OC loop."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class BoxRegion:
    """Closed box ``{x : lower <= x <= upper}`` in R^D.

    Bounds are stored as read-only float64 arrays.
    """

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.array(self.lower, dtype=float).reshape(-1)
        upper = np.array(self.upper, dtype=float).reshape(-1)
        if lower.size < 1:
            raise ValueError("region needs at least one dimension")
        if lower.shape != upper.shape:
            raise ValueError(
                f"lower and upper differ in length ({lower.size} vs {upper.size})"
            )
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ValueError("region bounds must be finite")
        if np.any(lower > upper):
            raise ValueError("lower bound exceeds upper bound")
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def cube(cls, low: float, high: float, dim: int) -> "BoxRegion":
        return cls(np.full(dim, float(low)), np.full(dim, float(high)))

    @property
    def dim(self) -> int:
        return self.lower.size

    def __eq__(self, other):
        if not isinstance(other, BoxRegion):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(
            self.upper, other.upper
        )

    def __hash__(self):
        return hash((self.lower.tobytes(), self.upper.tobytes()))

    def __repr__(self):
        return f"BoxRegion(lower={self.lower.tolist()}, upper={self.upper.tolist()})"

    def issubset(self, other: "BoxRegion") -> bool:
        return bool(np.all(self.lower >= other.lower) and np.all(self.upper <= other.upper))


@dataclass(frozen=True)
class CutState:
    """Inputs of one cut: the fixed feasible region, the shrink factor and the iteration."""

    original: BoxRegion
    lam: float
    iteration: int

    def __post_init__(self):
        if not 0.0 < self.lam < 1.0:
            raise ValueError(f"lambda must lie in (0, 1), got {self.lam}")
        if int(self.iteration) != self.iteration or self.iteration < 1:
            raise ValueError(f"iteration must be a positive integer, got {self.iteration}")

    @property
    def scale(self) -> float:
        return float(self.lam) ** int(self.iteration)


def widths(region: BoxRegion) -> np.ndarray:
    return region.upper - region.lower


def contains(region: BoxRegion, point) -> bool:
    """Boundary-inclusive membership test."""
    point = np.asarray(point, dtype=float).reshape(-1)
    if point.size != region.dim:
        raise ValueError(f"point has dimension {point.size}, region has {region.dim}")
    return bool(np.all(region.lower <= point) and np.all(point <= region.upper))


def cut(state: CutState, center) -> BoxRegion:
    """Box of widths ``lam**n * widths(original)`` centred on `center`, shifted into the original region.

    The half-width is always taken against the original region, never the
    previous iterate, so successive boxes need not be nested in each other.
    Where the raw box sticks out of the original on one side it is slid back
    along that axis until its edge coincides with the original bound.
    """
    original = state.original
    center = np.asarray(center, dtype=float).reshape(-1)
    if center.size != original.dim:
        raise ValueError(f"center has dimension {center.size}, region has {original.dim}")
    if not contains(original, center):
        raise ValueError("center lies outside the original region")

    half = 0.5 * state.scale * widths(original)
    lo = center - half
    hi = center + half

    below = lo < original.lower
    above = ~below & (hi > original.upper)
    # Shifted edges can overshoot the opposite bound by an ulp; clip keeps the result inside.
    hi = np.where(below, np.minimum(hi + (original.lower - lo), original.upper), hi)
    lo = np.where(below, original.lower, lo)
    lo = np.where(above, np.maximum(lo + (original.upper - hi), original.lower), lo)
    hi = np.where(above, original.upper, hi)
    return BoxRegion(lo, hi)
