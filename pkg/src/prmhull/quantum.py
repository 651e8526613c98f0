"""Entanglement-assisted quantum code parameters from plane Reed-Muller codes.

The CSS-type construction turns a pair (C1, C2) into an asymmetric
[[n, kappa, dz/dx; c]] code with c = dim C1 - dim(C1 cap C2perp) and
kappa = n - (k1 + k2) + c; the Hermitian construction turns one code over
GF(q^2) into [[n, kappa, delta; c]] with c = k - dim(C cap Cperp_h) and
kappa = n - 2k + c.  For projective Reed-Muller pairs the hull dimensions
have closed forms, so every parameter is emitted in closed form; the
generic oracle path stays available for arbitrary codes and for
cross-checking.  Hermitian distances are emitted as dual-weight lower
bounds; Euclidean ones are exact weight-formula values and the codes are
pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import DEFAULT_WEIGHT_CAP, EnumerationBudgetError, LinearCode
from .fields import field_for_size
from .hermitian_hull import affine_u_size, hermitian_hull_dim
from .prm import (
    dim_prm,
    dim_rm,
    prm_code,
    prm_params,
    rm_dual_degree,
    rm_params,
)


@dataclass(frozen=True)
class EaqeccParams:
    """[[n, kappa, delta_z/delta_x (or delta); c]] over GF(base_q) qudits."""

    base_q: int
    n: int
    kappa: int
    c: int
    delta_z: int | None = None
    delta_x: int | None = None
    delta: int | None = None
    delta_is_bound: bool = False  # delta fields are lower bounds (>=)
    c_is_bound: bool = False  # c is an upper bound (<=); kappa follows it
    pure: bool | None = None
    weights_omitted: bool = False
    provenance: str = "closed_form"  # closed_form | oracle


def asym_from_codes(
    c1: LinearCode, c2: LinearCode, weight_cap: int = DEFAULT_WEIGHT_CAP
) -> EaqeccParams:
    """CSS-type parameters for an arbitrary code pair; ranks exact, weights
    enumerated only when they fit the cap (omitted with a flag otherwise)."""
    c1._check_compatible(c2)
    n = c1.n
    k1, k2 = c1.k, c2.k
    hull = c1.intersect(c2.dual())
    c = k1 - hull.k
    kappa = n - (k1 + k2) + c
    dz = dx = wt1 = wt2 = None
    omitted = False
    d1 = c1.dual()
    d2 = c2.dual()
    if d1.k and d2.k:
        try:
            dz = d1.min_weight_excluding(d1.intersect(c2), cap=weight_cap)
            dx = d2.min_weight_excluding(d2.intersect(c1), cap=weight_cap)
            wt1 = d1.min_weight(cap=weight_cap)
            wt2 = d2.min_weight(cap=weight_cap)
        except EnumerationBudgetError:
            dz = dx = None
            omitted = True
    pure = None
    if not omitted and dz is not None and dx is not None:
        pure = dz == wt1 and dx == wt2
    return EaqeccParams(
        base_q=c1.ctx.q,
        n=n,
        kappa=kappa,
        c=c,
        delta_z=dz,
        delta_x=dx,
        pure=pure,
        weights_omitted=omitted,
        provenance="oracle",
    )


def _check_asym_degrees(q: int, d1: int, d2: int) -> None:
    if not 1 <= d1 <= d2 < 2 * (q - 1):
        raise ValueError(
            f"require 1 <= d1 <= d2 < 2(q-1) = {2*(q-1)}; got d1={d1}, d2={d2}"
        )
    if q - 1 in (d1, d2):
        raise ValueError(
            f"degree q-1 = {q-1} excluded: the dual involved is not a PRM code"
        )


def prm_asym_eaqecc(q: int, d1: int, d2: int) -> EaqeccParams:
    """Asymmetric EAQECC from the pair (PRM_d1, PRM_d2) over the plane.

    c comes from the relative-hull dimension in closed form; the
    congruent-sum degenerations (sum a multiple of q-1) are served with
    their containment values of c.
    """
    _check_asym_degrees(q, d1, d2)
    n = q * q + q + 1
    k1 = dim_rm(q, d1 - 1)
    d2_perp = 2 * (q - 1) - d2
    k2 = dim_rm(q, d2_perp - 1)
    s = d1 + d2
    if s % (q - 1) == 0:
        if s in (q - 1, 2 * (q - 1)):
            c = 0
        elif s in (3 * (q - 1), 4 * (q - 1)):
            c = dim_prm(q, d1) - dim_prm(q, d2_perp)
        else:  # unreachable for in-range degrees
            raise ValueError(f"congruent degree sum {s} is not served")
        pure = None
    elif s < 2 * (q - 1):
        c = d1 + 1 - min(d1, q - 1 - d2) if d2 < q - 1 else d1 + 1
        pure = True
    else:
        if d1 < q - 1:
            c = k1 - k2 + d1 + 1
        else:
            c = k1 - k2 + q + 1 - min(d2_perp, d1 - (q - 1))
        pure = True
    kappa = n - (dim_prm(q, d1) + dim_prm(q, d2)) + c
    dz = prm_params(q, 2, 2 * (q - 1) - d2).wt
    dx = prm_params(q, 2, 2 * (q - 1) - d1).wt
    return EaqeccParams(
        base_q=q, n=n, kappa=kappa, c=c, delta_z=dz, delta_x=dx, pure=pure
    )


def prm_symmetric_best(q: int, d1: int) -> EaqeccParams:
    """The symmetric EAQECC at the optimal partner degree d2 = d1."""
    if not 1 <= d1 < 2 * (q - 1):
        raise ValueError(f"require 1 <= d1 < 2(q-1) = {2*(q-1)}")
    if d1 == q - 1:
        raise ValueError(f"degree q-1 = {q-1} excluded: dual is not a PRM code")
    if (2 * d1) % (q - 1) == 0:
        raise ValueError("2*d1 = 0 mod q-1: congruent case, no closed form here")
    n = q * q + q + 1
    k1 = dim_rm(q, d1 - 1)
    d1_perp = 2 * (q - 1) - d1
    if d1 < q - 1:
        c = d1 + 1 - min(d1, q - 1 - d1)
    else:
        k2 = dim_rm(q, d1_perp - 1)
        c = k1 - k2 + q + 1 - min(d1_perp, d1 - (q - 1))
    kappa = n - 2 * dim_prm(q, d1) + c
    delta = prm_params(q, 2, d1_perp).wt
    return EaqeccParams(base_q=q, n=n, kappa=kappa, c=c, delta=delta, pure=True)


def herm_eaqecc_prm(q: int, d: int) -> EaqeccParams:
    """Hermitian-construction EAQECC from PRM_d(q^2, 2).

    c is exact for d <= 2(q-1) or d = 0 mod q-1, otherwise an upper bound
    mirroring the hull's lower bound; kappa = n - 2k + c is achievable with
    that many pairs either way.  delta is the dual-weight lower bound.
    """
    Q = q * q
    if not 1 <= d < Q - 1:
        raise ValueError(f"require 1 <= d < q^2-1 = {Q-1} (d = q^2-1 is excluded)")
    n = Q * Q + Q + 1
    k = dim_rm(Q, d - 1) + d + 1  # dim PRM_d(q^2, 2)
    hull = hermitian_hull_dim(q, d)
    c = k - hull.value
    kappa = n - 2 * k + c
    delta = prm_params(Q, 2, 2 * (Q - 1) - d).wt
    return EaqeccParams(
        base_q=q,
        n=n,
        kappa=kappa,
        c=c,
        delta=delta,
        delta_is_bound=True,
        c_is_bound=not hull.exact,
    )


def herm_eaqecc_rm(q: int, d: int) -> EaqeccParams:
    """Hermitian-construction EAQECC from RM_d(q^2, 2); c is always exact."""
    Q = q * q
    if not 0 <= d < Q - 1:
        raise ValueError(f"require 0 <= d < q^2-1 = {Q-1}")
    n = Q * Q
    k = dim_rm(Q, d)
    c = 0 if d < 2 * (q - 1) else k - affine_u_size(q, d).total
    kappa = n - 2 * k + c
    delta = rm_params(Q, 2, rm_dual_degree(Q, 2, d)).wt
    return EaqeccParams(
        base_q=q, n=n, kappa=kappa, c=c, delta=delta, delta_is_bound=True
    )


@dataclass(frozen=True)
class PurityReport:
    q: int
    d1: int
    d2: int
    wt_full: int
    wt_excluding: int | None
    empty: bool

    @property
    def pure(self) -> bool:
        return not self.empty and self.wt_full == self.wt_excluding


def purity_probe(
    q: int, d1: int, d2: int, cap: int = DEFAULT_WEIGHT_CAP
) -> PurityReport:
    """Compare wt(PRM_d1) with the minimum weight outside the intersection."""
    ctx = field_for_size(q)
    c1 = prm_code(ctx, 2, d1)
    hull = c1.intersect(prm_code(ctx, 2, d2))
    wt_full = c1.min_weight(cap=cap)
    wt_excl = c1.min_weight_excluding(hull, cap=cap)
    return PurityReport(q, d1, d2, wt_full, wt_excl, empty=wt_excl is None)


def asym_table_rows(q: int) -> list[tuple[int, int, EaqeccParams]]:
    """All admissible closed-form asymmetric rows for this field, sorted."""
    rows = []
    for d1 in range(1, 2 * (q - 1)):
        if d1 == q - 1:
            continue
        for d2 in range(d1, 2 * (q - 1)):
            if d2 == q - 1:
                continue
            params = prm_asym_eaqecc(q, d1, d2)
            if params.kappa >= 0:
                rows.append((d1, d2, params))
    return sorted(rows, key=lambda r: (r[0], r[1]))
