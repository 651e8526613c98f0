"""Canonical point enumerations for projective and affine space over GF(q).

Projective points are listed by chart: first {1} x F^m, then
{0} x {1} x F^(m-1), ..., ending with (0,...,0,1); inside a chart the free
coordinates run lexicographically in encoding order, leftmost slowest.
The charts mirror the decomposition the hull computations lean on, and
they make generator matrices block-structured for debugging.  Affine
points are plain lexicographic tuples.  Every code in the package uses
these orders for its coordinates.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .fields import FieldContext


class PointSet:
    """Ordered tuples of element encodings; immutable once built."""

    def __init__(self, ctx: FieldContext, kind: str, m: int, points: tuple):
        self.ctx = ctx
        self.kind = kind
        self.m = m
        self.points = points
        self.array = np.array(points, dtype=np.int64)
        self.array.setflags(write=False)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def arity(self) -> int:
        return self.m + 1 if self.kind == "projective" else self.m

    def __repr__(self) -> str:
        return f"PointSet({self.kind}, m={self.m}, {self.ctx!r}, n={len(self)})"


@lru_cache(maxsize=None)
def projective_points(ctx: FieldContext, m: int) -> PointSet:
    """Representatives of P^m with leftmost nonzero coordinate 1."""
    if m < 1:
        raise ValueError("projective dimension must be >= 1")
    q = ctx.q
    pts = []
    for chart in range(m + 1):
        prefix = (0,) * chart + (1,)
        for tail in product(range(q), repeat=m - chart):
            pts.append(prefix + tail)
    expected = (q ** (m + 1) - 1) // (q - 1)
    if len(pts) != expected:
        raise AssertionError("projective point count mismatch")
    return PointSet(ctx, "projective", m, tuple(pts))


@lru_cache(maxsize=None)
def affine_points(ctx: FieldContext, m: int) -> PointSet:
    """All q^m tuples, lexicographic in encoding order, first coordinate slowest."""
    if m < 1:
        raise ValueError("affine dimension must be >= 1")
    pts = tuple(product(range(ctx.q), repeat=m))
    return PointSet(ctx, "affine", m, pts)
