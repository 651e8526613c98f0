import pytest

from prmhull.fields import field_for_size
from prmhull.prm import prm_code, prm_params, rm_params
from prmhull.quantum import (
    asym_from_codes,
    asym_table_rows,
    herm_eaqecc_prm,
    herm_eaqecc_rm,
    prm_asym_eaqecc,
    prm_symmetric_best,
    purity_probe,
)


def test_asym_worked_example_q9():
    p = prm_asym_eaqecc(9, 3, 11)
    assert (p.n, p.kappa, p.delta_z, p.delta_x, p.c) == (91, 15, 45, 5, 4)
    assert p.pure is True
    assert p.base_q == 9


def test_asym_table1_rows_q4():
    p = prm_asym_eaqecc(4, 1, 4)
    assert (p.n, p.kappa, p.delta_z, p.delta_x, p.c) == (21, 5, 12, 3, 2)
    p = prm_asym_eaqecc(4, 2, 5)
    assert (p.kappa, p.delta_x, p.delta_z, p.c) == (2, 4, 16, 5)
    p = prm_asym_eaqecc(4, 4, 4)
    assert (p.kappa, p.c) == (2, 11)


def test_high_asymmetry_family():
    p = prm_asym_eaqecc(9, 1, 14)
    assert (p.n, p.kappa, p.delta_z, p.delta_x, p.c) == (91, 5, 72, 3, 2)


def test_asym_rejects_excluded_degrees():
    with pytest.raises(ValueError):
        prm_asym_eaqecc(4, 3, 5)  # d1 = q-1
    with pytest.raises(ValueError):
        prm_asym_eaqecc(4, 1, 3)  # d2 = q-1
    with pytest.raises(ValueError):
        prm_asym_eaqecc(4, 1, 6)  # d2 = 2(q-1) out of range
    with pytest.raises(ValueError):
        prm_asym_eaqecc(4, 0, 2)


def test_congruent_sum_note_cases():
    # d1 + d2 = q - 1: containment gives c = 0
    p = prm_asym_eaqecc(5, 1, 3)
    assert p.c == 0
    # d1 + d2 = 2(q-1)
    p = prm_asym_eaqecc(5, 2, 6)
    assert p.c == 0 and p.kappa == 0
    # d1 + d2 = 3(q-1): c is the dimension gap
    p = prm_asym_eaqecc(5, 5, 7)
    assert p.c == prm_params(5, 2, 5).k - prm_params(5, 2, 1).k


def test_kappa_identity_everywhere():
    for q in (4, 5, 9):
        for d1, d2, p in asym_table_rows(q):
            k1, k2 = prm_params(q, 2, d1).k, prm_params(q, 2, d2).k
            assert p.kappa == p.n - (k1 + k2) + p.c, (q, d1, d2)
            assert p.kappa >= 0 and p.c >= 0


def test_symmetric_best_examples():
    p = prm_symmetric_best(4, 1)
    assert (p.n, p.kappa, p.delta, p.c) == (21, 16, 3, 1)
    q9 = prm_symmetric_best(9, 2)
    asym = prm_asym_eaqecc(9, 2, 2)
    assert (q9.kappa, q9.c, q9.delta) == (asym.kappa, asym.c, asym.delta_z)


def test_symmetric_best_congruent_degree_rejected():
    # 2*2 = 0 mod 4: outside the closed form; the asym path serves it with c=0
    with pytest.raises(ValueError):
        prm_symmetric_best(5, 2)
    assert prm_asym_eaqecc(5, 2, 2).c == 0
    with pytest.raises(ValueError):
        prm_symmetric_best(4, 3)  # d1 = q-1


@pytest.mark.parametrize("q", [4, 5])
def test_symmetric_best_matches_asym_specialization(q):
    for d1 in range(1, 2 * (q - 1)):
        if d1 == q - 1 or (2 * d1) % (q - 1) == 0:
            continue
        sym = prm_symmetric_best(q, d1)
        asym = prm_asym_eaqecc(q, d1, d1)
        assert (sym.kappa, sym.c) == (asym.kappa, asym.c)
        assert sym.delta == min(asym.delta_z, asym.delta_x)


def test_herm_prm_examples():
    p = herm_eaqecc_prm(3, 2)
    assert (p.n, p.kappa, p.c, p.delta) == (91, 79, 0, 4)
    assert p.delta_is_bound and not p.c_is_bound
    p = herm_eaqecc_prm(3, 1)
    assert (p.c, p.delta, p.kappa) == (1, 3, 86)  # identity value, not 85
    p = herm_eaqecc_prm(3, 3)
    assert (p.c, p.delta, p.kappa) == (2, 5, 73)  # identity value, not 71
    p = herm_eaqecc_prm(3, 7)
    assert p.c == 13 and p.c_is_bound


def test_herm_prm_range():
    with pytest.raises(ValueError):
        herm_eaqecc_prm(3, 8)  # q^2 - 1 excluded
    with pytest.raises(ValueError):
        herm_eaqecc_prm(3, 0)


def test_herm_prm_c_branches_small_degrees():
    # c = 0 / 1 / 2 by congruence and position relative to q-1
    assert herm_eaqecc_prm(4, 3).c == 0
    assert herm_eaqecc_prm(4, 6).c == 0
    assert herm_eaqecc_prm(4, 1).c == 1
    assert herm_eaqecc_prm(4, 2).c == 1
    assert herm_eaqecc_prm(4, 4).c == 2
    assert herm_eaqecc_prm(4, 5).c == 2


def test_herm_rm_examples():
    p = herm_eaqecc_rm(3, 1)
    assert (p.c, p.kappa, p.n) == (0, 75, 81)
    assert herm_eaqecc_rm(3, 4).c == 1
    assert herm_eaqecc_rm(3, 3).c == 0
    with pytest.raises(ValueError):
        herm_eaqecc_rm(3, 8)


@pytest.mark.parametrize("q", [2, 3])
def test_herm_rm_c_against_oracle(q):
    from prmhull.hermitian_hull import affine_hull_oracle

    Q = q * q
    for d in range(0, Q - 1):
        p = herm_eaqecc_rm(q, d)
        k = rm_params(Q, 2, d).k
        assert p.c == k - affine_hull_oracle(q, d, d).k, (q, d)
        assert p.kappa == p.n - 2 * k + p.c


@pytest.mark.parametrize("q", [2, 3])
def test_herm_prm_c_against_oracle(q):
    from prmhull.hermitian_hull import hermitian_hull_oracle

    Q = q * q
    for d in range(1, Q - 1):
        p = herm_eaqecc_prm(q, d)
        k = prm_params(Q, 2, d).k
        oracle_c = k - hermitian_hull_oracle(q, d).k
        if p.c_is_bound:
            assert oracle_c <= p.c, (q, d)
        else:
            assert oracle_c == p.c, (q, d)


def test_purity_probe_examples():
    rep = purity_probe(4, 2, 4)
    assert rep.wt_full == rep.wt_excluding == 12 and rep.pure
    rep = purity_probe(3, 4, 3)
    assert rep.pure and rep.wt_full == prm_params(3, 2, 4).wt
    # congruent degrees with d2 >= d1: nothing outside the intersection
    assert purity_probe(4, 2, 5).empty
    assert purity_probe(3, 1, 3).empty


def test_asym_from_codes_matches_closed_form():
    ctx = field_for_size(4)
    for d1 in (1, 2, 4, 5):
        for d2 in (1, 2, 4, 5):
            if d1 > d2:
                continue
            closed = prm_asym_eaqecc(4, d1, d2)
            oracle = asym_from_codes(
                prm_code(ctx, 2, d1), prm_code(ctx, 2, d2), weight_cap=10**6
            )
            assert (oracle.c, oracle.kappa) == (closed.c, closed.kappa), (d1, d2)
            assert oracle.provenance == "oracle"


def test_asym_from_codes_fano():
    ctx = field_for_size(2)
    fano = prm_code(ctx, 2, 1)
    p = asym_from_codes(fano, fano)
    # the simplex code is contained in its dual, so no entanglement is needed
    assert p.c == 0 and p.kappa == 7 - 6 + 0
    assert not p.weights_omitted


def test_asym_from_codes_degenerate_full_code():
    import numpy as np

    from prmhull.codes import LinearCode

    ctx = field_for_size(2)
    full = LinearCode.from_rows(ctx, np.eye(4, dtype=int))
    p = asym_from_codes(full, full)
    # dual is the zero code: distances do not exist, ranks still do
    assert p.c == 4 and p.kappa == 0
    assert p.delta_z is None and not p.weights_omitted


def test_asym_from_codes_weight_budget_flag():
    ctx = field_for_size(4)
    p = asym_from_codes(prm_code(ctx, 2, 1), prm_code(ctx, 2, 4), weight_cap=10)
    assert p.weights_omitted and p.delta_z is None and p.pure is None
    assert p.c == prm_asym_eaqecc(4, 1, 4).c


@pytest.mark.parametrize("q", [3, 5, 7, 8])
def test_closed_form_c_matches_oracle_across_fields(q):
    from prmhull.verify import eaqecc_euclid_sweep

    records, ok = eaqecc_euclid_sweep(q)
    assert ok, [r for r in records if r["status"] != "pass"][:5]


def test_table_rows_sorted_and_admissible():
    rows = asym_table_rows(4)
    keys = [(d1, d2) for d1, d2, _ in rows]
    assert keys == sorted(keys)
    assert all(d1 != 3 and d2 != 3 for d1, d2 in keys)
    assert (1, 4) in keys and (2, 5) in keys
