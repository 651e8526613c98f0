"""Exact linear algebra over GF(q): reduced row echelon form, duals,
intersections, Hermitian duals, and brute-force minimum weight.

A LinearCode is its RREF generator matrix (zero rows dropped), which is
the canonical representative of the row space: two codes are equal iff
their matrices are identical.  Row operations are vectorized through the
field's dense lookup tables, so the kernel needs q <= fields.TABLE_LIMIT.

Minimum weight enumerates the message space in blocks.  Messages are
expanded into GF(p) digits and multiplied against a GF(p)-component
expansion of the generator matrix with a float64 matmul (exact at these
magnitudes), then reduced mod p; a coordinate is nonzero iff any of its
e components is.  The cap makes infeasible enumerations an explicit
error, never an estimate.
"""

from __future__ import annotations

import numpy as np

from .fields import FieldContext

DEFAULT_WEIGHT_CAP = 20_000_000
_BLOCK = 1 << 15


class EnumerationBudgetError(RuntimeError):
    """Enumeration would exceed the codeword budget."""


def _tables(ctx: FieldContext):
    if ctx.mul_table is None:
        raise ValueError(f"matrix kernel needs dense tables; {ctx!r} is too large")
    return ctx


def rref(ctx: FieldContext, rows: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns; zero rows dropped."""
    _tables(ctx)
    M = np.array(rows, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError("expected a 2-d array of encodings")
    nrows, ncols = M.shape
    MUL, SUB, INV = ctx.mul_table, ctx.sub_table, ctx.inv_table
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        inv = INV[M[r, c]]
        if inv != 1:
            M[r] = MUL[inv, M[r]]
        col = M[:, c].copy()
        col[r] = 0
        hits = np.nonzero(col)[0]
        if hits.size:
            M[hits] = SUB[M[hits], MUL[col[hits][:, None], M[r][None, :]]]
        pivots.append(c)
        r += 1
    return M[:r], tuple(pivots)


class LinearCode:
    """A length-n code over GF(q), held as its RREF generator matrix."""

    __slots__ = ("ctx", "n", "matrix", "pivots")

    def __init__(self, ctx: FieldContext, n: int, matrix: np.ndarray, pivots: tuple):
        self.ctx = ctx
        self.n = n
        self.matrix = matrix
        self.matrix.setflags(write=False)
        self.pivots = pivots

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows, n: int | None = None) -> LinearCode:
        rows = list(rows)
        if not rows:
            if n is None:
                raise ValueError("zero code needs an explicit length")
            return cls(ctx, n, np.zeros((0, n), dtype=np.int64), ())
        lengths = {len(r) for r in rows}
        if len(lengths) != 1:
            raise ValueError("ragged rows")
        length = lengths.pop()
        if n is not None and n != length:
            raise ValueError(f"rows have length {length}, expected {n}")
        M = np.array(rows, dtype=np.int64)
        if M.size and (M.min() < 0 or M.max() >= ctx.q):
            raise ValueError("entries are not element encodings of this field")
        R, piv = rref(ctx, M)
        return cls(ctx, length, R, piv)

    @property
    def k(self) -> int:
        return self.matrix.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.ctx == other.ctx
            and self.n == other.n
            and self.matrix.shape == other.matrix.shape
            and bool((self.matrix == other.matrix).all())
        )

    def __repr__(self) -> str:
        return f"LinearCode({self.ctx!r}, n={self.n}, k={self.k})"

    # -- duals, sums, intersections --------------------------------------------

    def dual(self) -> LinearCode:
        """Euclidean dual under the standard inner product."""
        ctx = _tables(self.ctx)
        n = self.n
        free = [c for c in range(n) if c not in set(self.pivots)]
        H = np.zeros((len(free), n), dtype=np.int64)
        NEG = ctx.neg_table
        for i, f in enumerate(free):
            H[i, f] = 1
            for r, pc in enumerate(self.pivots):
                H[i, pc] = NEG[self.matrix[r, f]]
        R, piv = rref(ctx, H)
        return LinearCode(ctx, n, R, piv)

    def _check_compatible(self, other: LinearCode) -> None:
        if self.ctx != other.ctx:
            raise ValueError("codes over different fields")
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    def sum_with(self, other: LinearCode) -> LinearCode:
        self._check_compatible(other)
        stacked = np.vstack([self.matrix, other.matrix])
        R, piv = rref(self.ctx, stacked)
        return LinearCode(self.ctx, self.n, R, piv)

    def intersect(self, other: LinearCode) -> LinearCode:
        """C1 cap C2, computed as dual(dual(C1) + dual(C2))."""
        self._check_compatible(other)
        return self.dual().sum_with(other.dual()).dual()

    def hermitian_dual(self, base_q: int) -> LinearCode:
        """Dual under sum(u_i v_i^q) over GF(base_q^2): Frobenius of the dual."""
        ctx = self.ctx
        if ctx.q != base_q * base_q:
            raise ValueError(f"{ctx!r} is not GF({base_q}^2)")
        frob = ctx.power_table(base_q)
        D = self.dual()
        R, piv = rref(ctx, frob[D.matrix])
        return LinearCode(ctx, self.n, R, piv)

    # -- membership ---------------------------------------------------------------

    def _reduce_rows(self, rows: np.ndarray) -> np.ndarray:
        ctx = self.ctx
        MUL, SUB = ctx.mul_table, ctx.sub_table
        R = np.array(rows, dtype=np.int64)
        for r, c in enumerate(self.pivots):
            coef = R[:, c].copy()
            hits = np.nonzero(coef)[0]
            if hits.size:
                R[hits] = SUB[R[hits], MUL[coef[hits][:, None], self.matrix[r][None, :]]]
        return R

    def contains(self, vector) -> bool:
        v = np.array(vector, dtype=np.int64).reshape(1, -1)
        if v.shape[1] != self.n:
            raise ValueError("vector length mismatch")
        return not self._reduce_rows(v).any()

    def is_subcode_of(self, other: LinearCode) -> bool:
        self._check_compatible(other)
        return not other._reduce_rows(self.matrix).any()

    # -- minimum weight ---------------------------------------------------------------

    def min_weight(self, cap: int = DEFAULT_WEIGHT_CAP) -> int:
        """Exact minimum Hamming weight by message-space enumeration."""
        if self.k == 0:
            raise ValueError("zero code has no nonzero codeword")
        total = self.ctx.q**self.k
        if total > cap:
            raise EnumerationBudgetError(
                f"q^k = {total} codewords exceeds the cap {cap}"
            )
        w = _min_weight_scan(self.ctx, self.matrix, 1, total)
        assert w is not None
        return w

    def min_weight_excluding(
        self, sub: LinearCode, cap: int = DEFAULT_WEIGHT_CAP
    ) -> int | None:
        """Minimum weight over this code minus a verified subcode.

        Returns None (the "empty" signal) when the subcode is the whole
        code.  Enumerates exactly the complement: the generator stacks a
        basis of the subcode below extension rows, and message indices
        with zero extension digits are skipped wholesale.
        """
        self._check_compatible(sub)
        if not sub.is_subcode_of(self):
            raise ValueError("excluded code is not a subcode")
        total = self.ctx.q**self.k
        if total > cap:
            raise EnumerationBudgetError(
                f"q^k = {total} codewords exceeds the cap {cap}"
            )
        ext, _ = rref(self.ctx, sub._reduce_rows(self.matrix))
        if ext.shape[0] == 0:
            return None
        gen = np.vstack([sub.matrix, ext])
        start = self.ctx.q ** sub.k
        return _min_weight_scan(self.ctx, gen, start, total)


def _component_expansion(ctx: FieldContext, gen: np.ndarray) -> np.ndarray:
    """GF(p)-digit matrix of the generator: row e*i+l expands alpha^l * row i."""
    p, e = ctx.p, ctx.e
    k, n = gen.shape
    out = np.empty((e * k, e * n), dtype=np.float64)
    digits = ctx.digit_table
    alpha = p if e > 1 else 1
    scale = 1
    for l in range(e):
        scaled = gen if scale == 1 else ctx.mul_table[scale, gen]
        out[np.arange(k) * e + l, :] = digits[scaled].reshape(k, e * n)
        scale = ctx.mul(scale, alpha)
    return out


def _min_weight_scan(ctx: FieldContext, gen: np.ndarray, start: int, stop: int) -> int | None:
    """Minimum symbol weight over message indices in [start, stop)."""
    if start >= stop:
        return None
    _tables(ctx)
    p, e = ctx.p, ctx.e
    k, n = gen.shape
    ghat = _component_expansion(ctx, gen)
    pw = p ** np.arange(e * k, dtype=np.int64)
    best: int | None = None
    for lo in range(start, stop, _BLOCK):
        idx = np.arange(lo, min(lo + _BLOCK, stop), dtype=np.int64)
        digits = ((idx[:, None] // pw) % p).astype(np.float64)
        cw = (digits @ ghat) % p
        weights = (cw.reshape(len(idx), n, e) != 0).any(axis=2).sum(axis=1)
        w = int(weights.min())
        if best is None or w < best:
            best = w
    return best
