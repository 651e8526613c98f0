"""Verification sweeps: closed forms against the Gaussian-elimination oracle.

Each sweep returns a list of deterministic record dicts (sorted inputs,
sorted keys downstream) plus a pass/fail verdict.  Exact-mode mismatches
are failures; lower-bound tightness is reported but non-fatal.  The
PRMHULL_THREADS environment variable caps worker threads; results are
buffered and sorted, so output does not depend on scheduling.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import euclidean_hull as eh
from . import hermitian_hull as hh
from . import quantum as qt
from .codes import DEFAULT_WEIGHT_CAP, EnumerationBudgetError
from .fields import field_for_size
from .prm import prm_code, prm_params, rm_code, rm_params


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PRMHULL_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items: list) -> list:
    workers = _threads()
    items = list(items)
    if workers == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def euclid_sweep(q: int) -> tuple[list[dict], bool]:
    """Formula dim == oracle dim and exact span equality, all degree pairs."""
    pairs = [
        (d1, d2)
        for d1 in range(1, 2 * (q - 1) + 1)
        for d2 in range(d1, 2 * (q - 1) + 1)
    ]

    def check(pair):
        d1, d2 = pair
        chk = eh.verify_relative_hull(q, d1, d2)
        return {
            "check": "euclid-hull",
            "q": q,
            "d1": d1,
            "d2": d2,
            "formula_dim": chk.formula_dim,
            "oracle_dim": chk.oracle_dim,
            "basis_spans": chk.basis_spans,
            "status": "pass" if chk.ok else "fail",
        }

    records = _pmap(check, pairs)
    endpoint = eh.extended_dual_hull_oracle(q, 2 * (q - 1), 2 * (q - 1)).k
    records.append(
        {
            "check": "euclid-self-dual-endpoint",
            "q": q,
            "d": 2 * (q - 1),
            "oracle_dim": endpoint,
            "status": "pass" if endpoint == 0 else "fail",
        }
    )
    return records, all(r["status"] == "pass" for r in records)


def hermitian_sweep(q: int) -> tuple[list[dict], bool]:
    """Counting formulas vs enumeration and hull closed forms vs oracle."""
    degrees = list(range(1, q * q - 1))

    def check(d):
        chk = hh.verify_hermitian_hull(q, d)
        count_ok = (
            hh.t_size(q, d) == len(hh.set_t(q, d)) == hh.t_size_closed(q, d)
            and hh.u_size(q, d).total == len(hh.set_u(q, d))
        )
        return {
            "check": "hermitian-hull",
            "q": q,
            "d": d,
            "mode": chk.mode,
            "closed_form": chk.closed_form,
            "exact": chk.exact,
            "oracle_dim": chk.oracle_dim,
            "independent": chk.independent,
            "contained": chk.contained,
            "tight": chk.spans_or_bound_tight,
            "counts_match": count_ok,
            "status": "pass" if (chk.ok and count_ok) else "fail",
        }

    records = _pmap(check, degrees)
    ok = all(r["status"] == "pass" for r in records)
    return records, ok


def affine_sweep(q: int) -> tuple[list[dict], bool]:
    """Self-orthogonality boundary and the |U_{d,d}| count, all degrees."""
    Q = q * q
    ctx = field_for_size(Q)
    records = []
    for d in range(0, 2 * (Q - 1) + 1):
        code = rm_code(ctx, 2, d)
        included = code.is_subcode_of(code.hermitian_dual(q))
        expected = d <= 2 * (q - 1) - 1
        records.append(
            {
                "check": "affine-self-orthogonal-boundary",
                "q": q,
                "d": d,
                "self_orthogonal": included,
                "expected": expected,
                "status": "pass" if included == expected else "fail",
            }
        )
    for d in range(0, Q - 1):
        oracle = hh.affine_hull_oracle(q, d, d).k
        formula = hh.affine_u_size(q, d).total
        listed = hh.affine_hermitian_hull_dim(q, d)
        ok = oracle == formula == listed
        records.append(
            {
                "check": "affine-hull-dim",
                "q": q,
                "d": d,
                "formula": formula,
                "enumerated": listed,
                "oracle_dim": oracle,
                "status": "pass" if ok else "fail",
            }
        )
    return records, all(r["status"] == "pass" for r in records)


def eaqecc_euclid_sweep(q: int) -> tuple[list[dict], bool]:
    """Closed-form c and kappa against the oracle for all admissible pairs."""
    ctx = field_for_size(q)
    pairs = [
        (d1, d2)
        for d1 in range(1, 2 * (q - 1))
        if d1 != q - 1
        for d2 in range(d1, 2 * (q - 1))
        if d2 != q - 1
    ]

    def check(pair):
        d1, d2 = pair
        closed = qt.prm_asym_eaqecc(q, d1, d2)
        oracle = qt.asym_from_codes(
            prm_code(ctx, 2, d1), prm_code(ctx, 2, d2), weight_cap=0
        )
        ok = (closed.c, closed.kappa) == (oracle.c, oracle.kappa)
        return {
            "check": "eaqecc-asym-closed-vs-oracle",
            "q": q,
            "d1": d1,
            "d2": d2,
            "closed_c": closed.c,
            "oracle_c": oracle.c,
            "closed_kappa": closed.kappa,
            "oracle_kappa": oracle.kappa,
            "status": "pass" if ok else "fail",
        }

    records = _pmap(check, pairs)
    return records, all(r["status"] == "pass" for r in records)


def purity_sweep(q: int, cap: int = DEFAULT_WEIGHT_CAP) -> tuple[list[dict], bool]:
    """Purity probes for every enumeration-feasible non-congruent pair."""
    records = []
    for d1 in range(1, 2 * (q - 1) + 1):
        for d2 in range(1, 2 * (q - 1) + 1):
            if (d1 - d2) % (q - 1) == 0:
                continue
            try:
                rep = qt.purity_probe(q, d1, d2, cap=cap)
            except EnumerationBudgetError:
                records.append(
                    {
                        "check": "eaqecc-purity",
                        "q": q,
                        "d1": d1,
                        "d2": d2,
                        "status": "info",
                        "detail": "enumeration exceeds cap; skipped",
                    }
                )
                continue
            records.append(
                {
                    "check": "eaqecc-purity",
                    "q": q,
                    "d1": d1,
                    "d2": d2,
                    "wt_full": rep.wt_full,
                    "wt_excluding": rep.wt_excluding,
                    "status": "pass" if rep.pure else "fail",
                }
            )
    ok = all(r["status"] != "fail" for r in records)
    return records, ok


def table1_diff(golden_path: str | Path) -> tuple[list[dict], bool]:
    """Each golden asym row must reproduce exactly from the closed forms."""
    records = []
    with open(golden_path, newline="") as fh:
        for row in csv.DictReader(fh):
            q, d1, d2 = int(row["q"]), int(row["d1"]), int(row["d2"])
            params = qt.prm_asym_eaqecc(q, d1, d2)
            expected = {
                "n": int(row["n"]),
                "kappa": int(row["kappa"]),
                "delta_x": int(row["delta_x"]),
                "delta_z": int(row["delta_z"]),
                "c": int(row["c"]),
            }
            got = {
                "n": params.n,
                "kappa": params.kappa,
                "delta_x": params.delta_x,
                "delta_z": params.delta_z,
                "c": params.c,
            }
            records.append(
                {
                    "check": "eaqecc-reference-table",
                    "q": q,
                    "d1": d1,
                    "d2": d2,
                    "expected": expected,
                    "got": got,
                    "status": "pass" if expected == got else "fail",
                }
            )
    return records, all(r["status"] == "pass" for r in records)


# Published reference parameters whose kappa disagrees with the defining
# identity kappa = n - 2k + c given the construction's own c values; the
# package follows the identity and reports the difference as a warning.
HERM_REFERENCE_Q3 = {1: 85, 3: 71}


def herm_reference_warn() -> list[dict]:
    records = []
    for d, published_kappa in sorted(HERM_REFERENCE_Q3.items()):
        params = qt.herm_eaqecc_prm(3, d)
        records.append(
            {
                "check": "eaqecc-herm-reference-kappa",
                "q": 3,
                "d": d,
                "published_kappa": published_kappa,
                "identity_kappa": params.kappa,
                "c": params.c,
                "status": "warn",
                "detail": (
                    "published parameters list kappa="
                    f"{published_kappa} but kappa = n - 2k + c gives "
                    f"{params.kappa}; emitted parameters follow the identity"
                ),
            }
        )
    return records


def eaqecc_herm_sweep(q: int) -> tuple[list[dict], bool]:
    """Hermitian-construction c values against the hull oracle."""
    Q = q * q
    records = []
    for d in range(1, Q - 1):
        params = qt.herm_eaqecc_prm(q, d)
        k = prm_params(Q, 2, d).k
        oracle_c = k - hh.hermitian_hull_oracle(q, d).k
        ok = oracle_c <= params.c if params.c_is_bound else oracle_c == params.c
        records.append(
            {
                "check": "eaqecc-herm-closed-vs-oracle",
                "q": q,
                "d": d,
                "closed_c": params.c,
                "c_is_bound": params.c_is_bound,
                "oracle_c": oracle_c,
                "kappa_identity": params.kappa == params.n - 2 * k + params.c,
                "status": "pass" if ok else "fail",
            }
        )
    for d in range(0, Q - 1):
        params = qt.herm_eaqecc_rm(q, d)
        k = rm_params(Q, 2, d).k
        oracle_c = k - hh.affine_hull_oracle(q, d, d).k
        records.append(
            {
                "check": "eaqecc-affine-herm-closed-vs-oracle",
                "q": q,
                "d": d,
                "closed_c": params.c,
                "oracle_c": oracle_c,
                "kappa_identity": params.kappa == params.n - 2 * k + params.c,
                "status": "pass" if oracle_c == params.c else "fail",
            }
        )
    ok = all(r["status"] == "pass" and r.get("kappa_identity", True) for r in records)
    return records, ok


def worked_examples_payload() -> dict:
    """The worked-example values, regenerated from the library."""
    from .polynomials import format_monomial, format_polynomial

    basis = eh.relative_hull_basis(4, 4, 5)
    qpoly, companion = eh.q_polynomial(4, 4, 5)
    identities = []
    for a2 in eh.y_set(4, 4, 5):
        lhs, rhs = eh.membership_identity(4, 4, 5, a2)
        identities.append(
            {"lhs": format_monomial(lhs), "rhs": format_polynomial(rhs)}
        )
    euclid = {
        "a1_part": [format_monomial(m) for m in basis.part_a1],
        "basis": [format_polynomial(p) for p in basis.polynomials()],
        "dimension": basis.dimension,
        "q_polynomial": format_polynomial(qpoly),
        "q_polynomial_companion": format_polynomial(companion),
        "y_membership_identities": identities,
    }
    from .polynomials import basis_a1

    u = hh.set_u(3, 7)
    u_set = set(u)
    excluded = [format_monomial(m) for m in basis_a1(9, 7) if m not in u_set]
    herm = {
        "hull_dimension": hh.hermitian_hull_dim(3, 7).value,
        "t_size": hh.t_size(3, 7),
        "u_excluded_from_a1": excluded,
        "u_size": len(u),
        "v": [format_monomial(m) for m in hh.set_v(3, 7)],
        "w": [format_polynomial(w) for w in hh.set_w(3, 7)],
    }
    return {
        "euclidean_q4_intersection_4_5": euclid,
        "hermitian_q3_d7": herm,
    }
