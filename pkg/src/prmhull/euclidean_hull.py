"""Closed-form bases for PRM_d1(2) cap PRM_d2(2) over the plane, and the
oracle verification that backs them.

All functions take intersection degrees 1 <= d1 <= d2 <= 2(q-1) (inputs
are sorted; the intersection is symmetric).  When d1 = d2 mod q-1 the
smaller code is contained in the larger and the basis is its whole
degree-d1 monomial basis.  Otherwise the basis is A_1^{d1}, plus the
monomials x1^(d1-a2) x2^a2 for a2 in Y = {0..min(d1-1, d2-q)}, plus one
four-term polynomial attached to the smaller degree when q <= d1.

Reading the intersection as a relative hull Hull_{C2}(C1) requires the
dual of C2 to be another PRM code, which fails exactly at degree q-1;
`hull_report` enforces that refusal for the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import LinearCode
from .fields import field_for_size
from .points import projective_points
from .polynomials import (
    Monomial,
    SparsePolynomial,
    basis_a1,
    basis_ad,
    evaluate_polynomials,
    overline,
)
from .prm import dim_rm, prm_code, prm_params


class DualNotPrmError(ValueError):
    """Hull interpretation refused: the dual involved is not a PRM code."""


def _validate(q: int, d1: int, d2: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError("field size must be >= 2")
    if not (1 <= d1 <= 2 * (q - 1) and 1 <= d2 <= 2 * (q - 1)):
        raise ValueError(f"degrees must lie in [1, {2*(q-1)}] for GF({q})")
    return (d1, d2) if d1 <= d2 else (d2, d1)


def y_set(q: int, d1: int, d2: int) -> list[int]:
    """Y = {0, ..., min(d1-1, d2-q)}; empty when d2 < q."""
    if d2 - q < 0:
        return []
    return list(range(min(d1 - 1, d2 - q) + 1))


def q_polynomial(q: int, d1: int, d2: int) -> tuple[SparsePolynomial, SparsePolynomial]:
    """The degree-d1 polynomial covering x2^d1, and its degree-d2 companion.

    Both have the same evaluation at every plane point, which is what puts
    the class in the intersection.
    """
    d1, d2 = _validate(q, d1, d2)
    if not (q <= d1 < d2):
        raise ValueError(f"requires q <= d1 < d2, got q={q}, d1={d1}, d2={d2}")
    if (d2 - d1) % (q - 1) == 0:
        raise ValueError("degrees congruent mod q-1: containment case, no polynomial")
    ctx = field_for_size(q)
    o1, o2 = overline(d1, q), overline(d2, q)
    qpoly = SparsePolynomial(
        ctx,
        3,
        {
            (0, 0, d1): 1,
            (0, d1 - o2, o2): 1,
            (d1 - o2, 0, o2): 1,
            (d1 - o2, o2 - o1, o1): 1,
        },
    )
    companion = SparsePolynomial(
        ctx,
        3,
        {
            (0, 0, d2): 1,
            (0, d2 - o1, o1): 1,
            (d2 - o1, 0, o1): 1,
            (d2 - d1, d1 - o2, o2): 1,
        },
    )
    return qpoly, companion


def membership_identity(q: int, d1: int, d2: int, a2: int) -> tuple[Monomial, SparsePolynomial]:
    """x1^(d1-a2) x2^a2 rewritten as a degree-d2 combination with equal evaluation."""
    d1, d2 = _validate(q, d1, d2)
    if a2 not in y_set(q, d1, d2):
        raise ValueError(f"a2={a2} is not in Y for (q, d1, d2)=({q}, {d1}, {d2})")
    ctx = field_for_size(q)
    o2 = overline(d2, q)
    lhs = (0, d1 - a2, a2)
    rhs = SparsePolynomial(
        ctx,
        3,
        {
            (0, d2 - a2, a2): 1,
            (d2 - o2, o2 - a2, a2): ctx.neg(1),
            (d2 - d1, d1 - a2, a2): 1,
        },
    )
    return lhs, rhs


@dataclass(frozen=True)
class EuclidHullBasis:
    """Basis of the degree-(d1, d2) intersection inside the plane quotient."""

    q: int
    d1: int
    d2: int
    congruent: bool
    part_a1: tuple[Monomial, ...]
    part_y: tuple[Monomial, ...]
    part_q: SparsePolynomial | None
    congruent_tail: tuple[Monomial, ...] = field(default=())

    @property
    def dimension(self) -> int:
        return (
            len(self.part_a1)
            + len(self.part_y)
            + (1 if self.part_q is not None else 0)
            + len(self.congruent_tail)
        )

    @property
    def hull_readable(self) -> bool:
        """False when d2 = q-1: the intersection then is not a relative hull."""
        return self.d2 != self.q - 1

    def polynomials(self) -> list[SparsePolynomial]:
        ctx = field_for_size(self.q)
        out = [SparsePolynomial.monomial(ctx, m) for m in self.part_a1]
        out += [SparsePolynomial.monomial(ctx, m) for m in self.part_y]
        if self.part_q is not None:
            out.append(self.part_q)
        out += [SparsePolynomial.monomial(ctx, m) for m in self.congruent_tail]
        return out


def relative_hull_basis(q: int, d1: int, d2: int) -> EuclidHullBasis:
    """Basis of PRM_d1(2) cap PRM_d2(2) (intersection degrees, sorted)."""
    d1, d2 = _validate(q, d1, d2)
    if (d2 - d1) % (q - 1) == 0:
        a1, a2m, a3 = basis_ad(q, d1)
        return EuclidHullBasis(
            q, d1, d2, True, tuple(a1), (), None, tuple(a2m) + tuple(a3)
        )
    a1 = tuple(basis_a1(q, d1))
    ymonos = tuple((0, d1 - a2, a2) for a2 in y_set(q, d1, d2))
    qpoly = q_polynomial(q, d1, d2)[0] if q <= d1 else None
    return EuclidHullBasis(q, d1, d2, False, a1, ymonos, qpoly)


def relative_hull_dim(q: int, d1: int, d2: int) -> int:
    """dim(PRM_d1(2) cap PRM_d2(2)) in closed form."""
    d1, d2 = _validate(q, d1, d2)
    if (d2 - d1) % (q - 1) == 0:
        return prm_params(q, 2, d1).k
    k1 = dim_rm(q, d1 - 1)
    if d2 <= q - 1:
        return k1
    if d1 <= q - 1:
        return k1 + min(d1, d2 - (q - 1))
    return k1 + d2 - q + 2


def self_hull_basis(q: int, d: int) -> EuclidHullBasis:
    """Basis of PRM_d(2) cap its dual, for 1 <= d <= q-1."""
    if not 1 <= d <= q - 1:
        raise ValueError(f"self-hull basis defined for 1 <= d <= q-1, got {d}")
    return relative_hull_basis(q, d, 2 * (q - 1) - d)


def self_hull_dim(q: int, d: int) -> int:
    """dim(PRM_d(2) cap PRM_d(2)^perp) across the full degree range."""
    if not 1 <= d <= 2 * (q - 1):
        raise ValueError(f"degree {d} outside [1, {2*(q-1)}]")
    if d == 2 * (q - 1):
        return 0  # the dual is the all-ones code and 1 is not a degree-d class
    d_perp = 2 * (q - 1) - d
    return relative_hull_dim(q, min(d, d_perp), max(d, d_perp))


def hull_dim_with_dual(q: int, d1: int, d2: int) -> int:
    """dim Hull_{PRM_d2}(PRM_d1) = dim(PRM_d1 cap PRM_d2^perp), d2 != q-1.

    The dual side reduces to the intersection at the complementary degree
    2(q-1) - d2; at d2 = 2(q-1) the dual is the all-ones code and the hull
    is zero because constants are never degree-d classes.
    """
    if not (1 <= d1 <= 2 * (q - 1) and 1 <= d2 <= 2 * (q - 1)):
        raise ValueError(f"degrees must lie in [1, {2*(q-1)}] for GF({q})")
    if d2 == q - 1:
        raise DualNotPrmError(
            f"d2 = q-1: dual is not a PRM code (q={q}); only the oracle "
            "path serves the extended dual"
        )
    partner = 2 * (q - 1) - d2
    if partner == 0:
        return 0
    return relative_hull_dim(q, min(d1, partner), max(d1, partner))


def hull_oracle(q: int, d1: int, d2: int) -> LinearCode:
    """Gaussian-elimination intersection of the two PRM codes."""
    d1, d2 = _validate(q, d1, d2)
    ctx = field_for_size(q)
    return prm_code(ctx, 2, d1).intersect(prm_code(ctx, 2, d2))


def basis_code(q: int, d1: int, d2: int) -> LinearCode:
    """Span of the closed-form basis evaluations (RREF canonical form)."""
    ctx = field_for_size(q)
    pts = projective_points(ctx, 2)
    polys = relative_hull_basis(q, d1, d2).polynomials()
    rows = evaluate_polynomials(ctx, pts, polys)
    return LinearCode.from_rows(ctx, rows)


@dataclass(frozen=True)
class HullCheck:
    q: int
    d1: int
    d2: int
    formula_dim: int
    basis_size: int
    oracle_dim: int
    basis_spans: bool

    @property
    def ok(self) -> bool:
        return self.formula_dim == self.oracle_dim == self.basis_size and self.basis_spans


def verify_relative_hull(q: int, d1: int, d2: int) -> HullCheck:
    """Closed form vs oracle: dimensions equal and the basis spans exactly."""
    d1, d2 = _validate(q, d1, d2)
    basis = relative_hull_basis(q, d1, d2)
    oracle = hull_oracle(q, d1, d2)
    bc = basis_code(q, d1, d2)
    return HullCheck(
        q,
        d1,
        d2,
        formula_dim=relative_hull_dim(q, d1, d2),
        basis_size=basis.dimension,
        oracle_dim=oracle.k,
        basis_spans=bc == oracle,
    )


def extended_dual_hull_oracle(q: int, d1: int, d2: int) -> LinearCode:
    """Oracle-only Hull_{PRM_d2}(PRM_d1) with the true (extended) dual of PRM_d2."""
    ctx = field_for_size(q)
    c1 = prm_code(ctx, 2, d1)
    c2 = prm_code(ctx, 2, d2)
    return c1.intersect(c2.dual())


def hull_report(q: int, d1: int, d2: int, allow_self_dual_degree: bool = False) -> dict:
    """Intersection report with the hull reading; refuses d2 = q-1.

    At d2 = q-1 the dual of the paired code picks up the all-ones vector
    and is no longer a PRM code, so the intersection is not the hull; pass
    allow_self_dual_degree to get the plain intersection report anyway.
    """
    d1, d2 = _validate(q, d1, d2)
    if d2 == q - 1 and not allow_self_dual_degree:
        raise DualNotPrmError(
            f"d2 = q-1: dual is not a PRM code (q={q}); "
            "use --intersection-only for the bare intersection or "
            "--extended-dual for the oracle hull against the extended dual"
        )
    basis = relative_hull_basis(q, d1, d2)
    return {
        "q": q,
        "d1": d1,
        "d2": d2,
        "congruent": basis.congruent,
        "hull_readable": basis.hull_readable,
        "dimension": relative_hull_dim(q, d1, d2),
        "hull_of": {"code_degree": d1, "dual_partner_degree": 2 * (q - 1) - d2},
        "basis": basis,
    }
