"""Candidate-point generators and the seedable random stream.

Random numbers come from numpy's Philox4x64 counter-based bit generator
keyed by ``(seed, stream_index)``, read through ``Generator.random`` which
yields doubles on [0, 1) with 53 random bits. Both pieces are frozen in
numpy's stream-compatibility policy, so a given key reproduces the same
draws on every platform. Run ``r`` of an experiment uses stream index ``r``.
"""

from __future__ import annotations

import numpy as np

from .geometry import BoxRegion, widths

DEFAULT_GRID_CAP = 10**8

_U64 = 2**64


class GridBudgetError(ValueError):
    """Raised when a full grid of N**D points exceeds the configured cap."""


class RandomStream:
    """Independent uniform stream identified by ``(seed, stream_index)``.

    The stream is stateful: consecutive calls continue the same sequence.
    """

    def __init__(self, seed: int, stream_index: int = 0):
        if not (0 <= seed < _U64 and 0 <= stream_index < _U64):
            raise ValueError("seed and stream_index must be 64-bit unsigned integers")
        self.seed = int(seed)
        self.stream_index = int(stream_index)
        key = np.array([self.seed, self.stream_index], dtype=np.uint64)
        self._gen = np.random.Generator(np.random.Philox(key=key))
        self.draws = 0

    def uniform(self, shape) -> np.ndarray:
        """Return an array of U[0, 1) draws filled in C (row-major) order."""
        out = self._gen.random(shape)
        self.draws += out.size
        return out

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, stream_index={self.stream_index})"


def grid_size(dim: int, n: int) -> int:
    return int(n) ** int(dim)


def check_grid_budget(dim: int, n: int, cap: int = DEFAULT_GRID_CAP) -> int:
    if n < 2:
        raise ValueError(f"grid sampling needs at least 2 points per axis, got {n}")
    size = grid_size(dim, n)
    if size > cap:
        raise GridBudgetError(
            f"grid of {n}^{dim} = {size} points exceeds the budget cap of {cap}; "
            "deterministic sampling is not applicable at this dimension"
        )
    return size


def grid_axes(region: BoxRegion, n: int) -> np.ndarray:
    """Per-axis grid coordinates, shape (D, n); both endpoints are exact."""
    frac = np.arange(n, dtype=float) / (n - 1)
    axes = region.lower[:, None] + frac[None, :] * widths(region)[:, None]
    axes[:, -1] = region.upper
    return np.minimum(axes, region.upper[:, None])


def grid_samples(region: BoxRegion, n: int, cap: int = DEFAULT_GRID_CAP) -> np.ndarray:
    """All ``n**D`` vertices of the uniform grid over `region`, shape (n**D, D).

    Points are in lexicographic order of the per-axis indices with the
    first coordinate varying slowest.
    """
    check_grid_budget(region.dim, n, cap)
    axes = grid_axes(region, n)
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.reshape(-1) for m in mesh], axis=-1)


def uniform_samples(region: BoxRegion, n: int, stream: RandomStream) -> np.ndarray:
    """`n` independent uniform points in `region`, shape (n, D).

    Draws are consumed dimension-major: all n values of coordinate 1,
    then all n of coordinate 2, and so on (exactly n * D draws).
    """
    if n < 0:
        raise ValueError(f"sample count must be non-negative, got {n}")
    r = stream.uniform((region.dim, n))
    pts = region.lower[:, None] + widths(region)[:, None] * r
    pts = np.clip(pts, region.lower[:, None], region.upper[:, None])
    return np.ascontiguousarray(pts.T)
