"""Projective and affine Reed-Muller codes and their closed-form parameters.

PRM_d(q, m) evaluates all degree-d monomials at the canonical projective
representatives; RM_d(q, m) evaluates monomials with every exponent at
most q-1 and total degree at most d at all affine points.  Dimensions and
minimum distances come from the classical alternating-sum and (q-s)q^(m-r-1)
formulas; duality sends PRM_d to PRM_{m(q-1)-d}, plus the all-ones vector
exactly when d = 0 mod q-1 (with PRM_0 meaning the all-ones code), and
RM_d to RM_{m(q-1)-d-1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .codes import LinearCode, rref
from .fields import FieldContext, field_for_size
from .points import affine_points, projective_points
from .polynomials import evaluate_monomials, grlex_key


def binom(n: int, r: int) -> int:
    """Binomial coefficient with C(n, r) = 0 for r < 0 or n < r."""
    if r < 0 or n < r:
        return 0
    return math.comb(n, r)


@dataclass(frozen=True)
class CodeParams:
    family: str
    q: int
    m: int
    d: int
    n: int
    k: int
    wt: int


@dataclass(frozen=True)
class DualDescription:
    """Dual of PRM_d: PRM_{dual_degree}, plus the all-ones row when flagged.

    dual_degree 0 means the all-ones code itself.
    """

    dual_degree: int
    extra_all_ones: bool


def degree_monomials(nvars: int, d: int) -> list:
    """All exponent tuples of total degree exactly d, in graded-lex order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, nvars)
    return sorted(out, key=grlex_key)


def bounded_monomials(nvars: int, d: int, cap: int) -> list:
    """Exponent tuples with total degree <= d and each exponent <= cap."""
    out = [
        m
        for m in product(range(min(d, cap) + 1), repeat=nvars)
        if sum(m) <= d
    ]
    return sorted(out, key=grlex_key)


@lru_cache(maxsize=None)
def prm_code(ctx: FieldContext, m: int, d: int) -> LinearCode:
    """The projective Reed-Muller code of degree d over P^m."""
    if not 1 <= d <= m * (ctx.q - 1):
        raise ValueError(f"degree {d} outside [1, {m*(ctx.q-1)}] for PRM over GF({ctx.q})")
    pts = projective_points(ctx, m)
    rows = evaluate_monomials(ctx, pts, degree_monomials(m + 1, d))
    R, piv = rref(ctx, rows)
    return LinearCode(ctx, len(pts), R, piv)


@lru_cache(maxsize=None)
def rm_code(ctx: FieldContext, m: int, d: int) -> LinearCode:
    """The affine Reed-Muller code of order d over A^m."""
    if not 0 <= d <= m * (ctx.q - 1):
        raise ValueError(f"order {d} outside [0, {m*(ctx.q-1)}] for RM over GF({ctx.q})")
    pts = affine_points(ctx, m)
    rows = evaluate_monomials(ctx, pts, bounded_monomials(m, d, ctx.q - 1))
    R, piv = rref(ctx, rows)
    return LinearCode(ctx, len(pts), R, piv)


def _weight_formula(q: int, m: int, reduced: int) -> int:
    """(q - s) q^(m - r - 1) where reduced = r(q-1) + s, 0 <= s < q-1."""
    r, s = divmod(reduced, q - 1)
    return (q - s) * q ** (m - r - 1)


def prm_params(q: int, m: int, d: int) -> CodeParams:
    """Closed-form [n, k, wt] of PRM_d(q, m)."""
    if not 1 <= d <= m * (q - 1):
        raise ValueError(f"degree {d} outside [1, {m*(q-1)}]")
    n = (q ** (m + 1) - 1) // (q - 1)
    k = 0
    for t in range(1, d + 1):
        if t % (q - 1) != d % (q - 1):
            continue
        k += sum(
            (-1) ** j * binom(m + 1, j) * binom(t - j * q + m, t - j * q)
            for j in range(m + 2)
        )
    return CodeParams("PRM", q, m, d, n, k, _weight_formula(q, m, d - 1))


def rm_params(q: int, m: int, d: int) -> CodeParams:
    """Closed-form [n, k, wt] of RM_d(q, m)."""
    if not 0 <= d <= m * (q - 1):
        raise ValueError(f"order {d} outside [0, {m*(q-1)}]")
    k = 0
    for t in range(d + 1):
        k += sum(
            (-1) ** j * binom(m, j) * binom(t - j * q + m - 1, t - j * q)
            for j in range(m + 1)
        )
    return CodeParams("RM", q, m, d, q**m, k, _weight_formula(q, m, d))


def prm_dual_description(q: int, m: int, d: int) -> DualDescription:
    """Dual degree m(q-1)-d; the all-ones row joins when d = 0 mod q-1."""
    if not 1 <= d <= m * (q - 1):
        raise ValueError(f"degree {d} outside [1, {m*(q-1)}]")
    d_perp = m * (q - 1) - d
    extra = d % (q - 1) == 0 and d < m * (q - 1)
    return DualDescription(d_perp, extra)


def rm_dual_degree(q: int, m: int, d: int) -> int:
    """Dual order m(q-1)-d-1 (-1 meaning the zero code)."""
    if not 0 <= d <= m * (q - 1):
        raise ValueError(f"order {d} outside [0, {m*(q-1)}]")
    return m * (q - 1) - d - 1


def prm_dual_code(ctx: FieldContext, m: int, d: int) -> LinearCode:
    """The dual of PRM_d built from its description (oracle comparisons)."""
    desc = prm_dual_description(ctx.q, m, d)
    n = (ctx.q ** (m + 1) - 1) // (ctx.q - 1)
    ones = np.ones((1, n), dtype=np.int64)
    if desc.dual_degree == 0:
        rows = ones
    else:
        rows = prm_code(ctx, m, desc.dual_degree).matrix
        if desc.extra_all_ones:
            rows = np.vstack([rows, ones])
    R, piv = rref(ctx, rows)
    return LinearCode(ctx, n, R, piv)


def dim_prm(q: int, d: int) -> int:
    """dim PRM_d(q, 2), the plane case used throughout the hull work."""
    return prm_params(q, 2, d).k


def dim_rm(q: int, d: int) -> int:
    """dim RM_d(q, 2), with the empty convention for d < 0."""
    if d < 0:
        return 0
    return rm_params(q, 2, d).k


def code_for_size(q: int, d: int) -> LinearCode:
    """PRM_d(q, 2) over the cached context for field size q."""
    return prm_code(field_for_size(q), 2, d)
