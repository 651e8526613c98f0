import pytest

from prmhull.codes import LinearCode
from prmhull.fields import field_for_size
from prmhull.hermitian_hull import (
    HermHullDim,
    affine_hermitian_hull_dim,
    affine_hull_monomials,
    affine_hull_oracle,
    affine_u_size,
    dual_degree,
    hermitian_hull_basis,
    hermitian_hull_dim,
    hermitian_hull_oracle,
    lambda_expansion,
    power_span_code,
    qadic,
    set_t,
    set_u,
    set_v,
    set_w,
    t_size,
    t_size_closed,
    u_size,
    v_companion,
    verify_hermitian_hull,
    w_companion,
    w_indices,
)
from prmhull.points import projective_points
from prmhull.polynomials import (
    SparsePolynomial,
    basis_a1,
    evaluate_polynomials,
    format_monomial,
    format_polynomial,
)
from prmhull.prm import prm_code, rm_code


def test_qadic_expansions():
    assert qadic(7, 3) == (1, 2)
    assert qadic(0, 3) == (0, 0)
    assert qadic(8, 3) == (2, 2)
    with pytest.raises(ValueError):
        qadic(9, 3)
    # dperp = l0 + l1 q + q^2
    assert dual_degree(3, 7) == 9
    assert lambda_expansion(3, 7) == (0, 0)
    assert lambda_expansion(3, 4) == (0, 1)
    with pytest.raises(ValueError):
        lambda_expansion(3, 8)


def test_affine_hull_monomials_examples():
    # only the monomial with both exponents 2 fails the bound at q=3, d=4
    monos = affine_hull_monomials(3, 4, 4)
    assert len(monos) == 14
    assert (2, 2) not in monos
    assert affine_hull_monomials(3, 1, 1) == [(0, 0), (0, 1), (1, 0)]
    assert affine_hull_monomials(2, 0, 5) == [(0, 0)]
    assert affine_hull_monomials(2, 0, 2 * (4 - 1)) == []


def test_set_u_worked_example():
    u = set_u(3, 7)
    assert len(u) == 21
    excluded = [m for m in basis_a1(9, 7) if m not in set(u)]
    assert {m for m in excluded} == {
        (1, 1, 5),
        (1, 2, 4),
        (1, 4, 2),
        (1, 5, 1),
        (3, 2, 2),
        (4, 1, 2),
        (4, 2, 1),
    }


def test_set_u_small_degree_is_a1():
    assert set_u(3, 4) == basis_a1(9, 4)
    assert set_u(2, 1) == [(1, 0, 0)]
    for q in (2, 3, 4):
        for d in range(1, 2 * (q - 1) + 1):
            assert set_u(q, d) == basis_a1(q * q, d), (q, d)


def test_set_t_and_v_worked_example():
    assert set_t(3, 7) == [0]
    assert [format_monomial(m) for m in set_v(3, 7)] == ["x1^7"]
    assert set_t(3, 8) == []  # endpoint degree q^2-1: threshold is strict


def test_t_size_examples():
    assert t_size(3, 7) == 1 == t_size_closed(3, 7)
    assert t_size(3, 4) == 3
    assert t_size(4, 5) == 4


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_t_and_u_formulas_equal_enumeration(q):
    for d in range(1, q * q):
        assert t_size(q, d) == len(set_t(q, d)) == t_size_closed(q, d), (q, d)
        if d < q * q - 1:
            assert u_size(q, d).total == len(set_u(q, d)), (q, d)
            assert affine_u_size(q, d).total == len(affine_hull_monomials(q, d, d)), (q, d)


def test_u_size_components_worked_example():
    uc = u_size(3, 7)
    assert (uc.b1, uc.b2, uc.b3, uc.b4) == (1, 0, 2, 4)
    assert uc.total == 28 - 7 == 21
    assert u_size(3, 4).total == 10
    assert u_size(3, 1).total == 1
    with pytest.raises(ValueError):
        u_size(3, 8)  # lambda expansion undefined at q^2-1


def test_set_w_worked_example():
    w = set_w(3, 7)
    assert len(w) == 1
    assert format_polynomial(w[0]) == "x1^6*x2 + x0^4*x1^2*x2"
    assert w_indices(3, 7) == [1]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_set_w_empty_at_small_degrees(q):
    for d in range(1, 2 * (q - 1) + 1):
        assert set_w(q, d) == [], (q, d)


@pytest.mark.parametrize("q", [2, 3])
def test_power_identities_exhaustive(q):
    """The q-th power partners of the V and W elements evaluate identically."""
    Q = q * q
    ctx = field_for_size(Q)
    pts = projective_points(ctx, 2)
    for d in range(1, Q):
        for a2 in set_t(q, d):
            lhs = SparsePolynomial.monomial(ctx, (0, d - a2, a2))
            assert (lhs.evaluate(pts) == v_companion(q, d, a2).evaluate(pts)).all()
        for w, a2 in zip(set_w(q, d), w_indices(q, d)):
            assert (w.evaluate(pts) == w_companion(q, d, a2).evaluate(pts)).all()


def test_power_identities_sampled_q4():
    ctx = field_for_size(16)
    pts = projective_points(ctx, 2)
    for d in (3, 7, 10, 14, 15):
        for a2 in set_t(4, d):
            lhs = SparsePolynomial.monomial(ctx, (0, d - a2, a2))
            assert (lhs.evaluate(pts) == v_companion(4, d, a2).evaluate(pts)).all()
        for w, a2 in zip(set_w(4, d), w_indices(4, d)):
            assert (w.evaluate(pts) == w_companion(4, d, a2).evaluate(pts)).all()


def test_hull_dim_examples():
    assert hermitian_hull_dim(3, 7) == HermHullDim(23, False)
    assert hermitian_hull_dim(3, 2) == HermHullDim(6, True)
    assert hermitian_hull_dim(3, 1) == HermHullDim(2, True)
    # 4 = 0 mod q-1 at q=3: congruent case, the whole code (oracle-confirmed)
    assert hermitian_hull_dim(3, 4) == HermHullDim(15, True)
    with pytest.raises(ValueError):
        hermitian_hull_dim(3, 8)


def test_hull_basis_modes():
    assert hermitian_hull_basis(3, 4).mode == "exact_congruent"
    assert hermitian_hull_basis(3, 3).mode == "exact_small"
    assert hermitian_hull_basis(3, 7).mode == "lower_bound"
    # degree q^2-1 allowed for the basis statement itself
    assert hermitian_hull_basis(3, 8).mode == "exact_congruent"


@pytest.mark.parametrize("q", [2, 3])
def test_verify_exhaustive_and_tight(q):
    for d in range(1, q * q - 1):
        chk = verify_hermitian_hull(q, d)
        assert chk.ok, (q, d, chk)
        assert chk.spans_or_bound_tight, (q, d, chk)


def test_verify_worked_example():
    chk = verify_hermitian_hull(3, 7)
    assert chk.closed_form == 23 and chk.oracle_dim == 23
    assert not chk.exact and chk.spans_or_bound_tight
    assert chk.independent and chk.contained


@pytest.mark.parametrize("q", [2, 3])
def test_independence_of_uvw(q):
    Q = q * q
    ctx = field_for_size(Q)
    pts = projective_points(ctx, 2)
    for d in range(1, Q):
        basis = hermitian_hull_basis(q, d)
        rows = evaluate_polynomials(ctx, pts, basis.elements())
        assert LinearCode.from_rows(ctx, rows).k == basis.size, (q, d)


@pytest.mark.parametrize("q", [2, 3])
def test_basis_spans_power_space_even_at_top_degree(q):
    """At every degree (including q^2-1) the basis spans the intersection
    with the q-th-power span of the complementary-degree basis."""
    Q = q * q
    ctx = field_for_size(Q)
    pts = projective_points(ctx, 2)
    for d in range(1, Q):
        basis = hermitian_hull_basis(q, d)
        rows = evaluate_polynomials(ctx, pts, basis.elements())
        span = LinearCode.from_rows(ctx, rows)
        target = prm_code(ctx, 2, d).intersect(power_span_code(q, dual_degree(q, d)))
        if basis.mode == "lower_bound":
            assert span.is_subcode_of(target), (q, d)
        else:
            assert span == target, (q, d)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_corner_coordinate_obstruction(q):
    """For d <= 2(q-1) the hull reaches the last coordinate iff d = 0 mod q-1."""
    for d in range(1, 2 * (q - 1) + 1):
        oracle = hermitian_hull_oracle(q, d)
        has = bool(oracle.matrix[:, -1].any()) if oracle.k else False
        assert has == (d % (q - 1) == 0), (q, d)


def test_affine_dim_examples():
    assert affine_hermitian_hull_dim(3, 1) == 3
    assert affine_hermitian_hull_dim(3, 4) == 14
    assert affine_hermitian_hull_dim(2, 0) == 1
    assert affine_u_size(3, 4).total == 14


@pytest.mark.parametrize("q", [2, 3])
def test_affine_inclusion_boundary_oracle(q):
    Q = q * q
    ctx = field_for_size(Q)
    for d in range(0, 2 * (Q - 1) + 1):
        code = rm_code(ctx, 2, d)
        included = code.is_subcode_of(code.hermitian_dual(q))
        assert included == (d <= 2 * (q - 1) - 1), (q, d)


@pytest.mark.parametrize("q", [2, 3])
def test_affine_hull_dim_matches_oracle(q):
    for d in range(0, q * q - 1):
        assert (
            affine_hull_oracle(q, d, d).k
            == affine_hermitian_hull_dim(q, d)
            == affine_u_size(q, d).total
        ), (q, d)


def test_affine_two_degree_oracle_spot():
    # the two-degree form backs the homogenized set U = U_{d-1,d}
    for q, d in ((2, 2), (3, 5), (3, 7)):
        oracle = affine_hull_oracle(q, d - 1, d)
        assert oracle.k == len(affine_hull_monomials(q, d - 1, d)), (q, d)
