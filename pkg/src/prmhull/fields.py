"""Exact arithmetic in GF(p^e) for prime p, 2 <= p^e <= 2^16.

Elements are encoded as integers in [0, q) whose base-p digits
(little-endian) are the coefficients of a polynomial over GF(p).
Arithmetic is modulo the lexicographically smallest monic irreducible
polynomial of degree e, found by scanning candidates in encoding order,
so the construction is deterministic across runs.  The integer encoding
gives every field a total element order used wherever a fixed order is
needed (point enumeration, matrix pivoting); the order has no algebraic
meaning.

Multiplication, inversion and powering go through log/antilog tables
built from a generator of the (cyclic) multiplicative group; finding
the generator doubles as the construction-time check that the group has
order exactly q - 1.  For fields with q <= TABLE_LIMIT, dense numpy
lookup tables are also built so the linear-algebra kernel can vectorize
row operations.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_FIELD_SIZE = 1 << 16
TABLE_LIMIT = 512  # dense q x q numpy tables only below this size


class ContextMismatchError(ValueError):
    """Raised when elements bound to different fields are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num/den over GF(p); coefficient lists little-endian."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        factor = (num[-1] * inv_lead) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        while num and num[-1] == 0:
            num.pop()
    return num


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= e/2."""
    e = len(coeffs) - 1
    if e == 1:
        return True
    for deg in range(1, e // 2 + 1):
        for m in range(p**deg):
            den = _digits(m, p, deg) + [1]
            if not _poly_rem(coeffs, den, p):
                return False
    return True


def _digits(v: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(v % p)
        v //= p
    return out


class FieldContext:
    """Immutable arithmetic context for GF(p^e); construct via field_make."""

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._build_log_tables()
        if self.q <= TABLE_LIMIT:
            self._build_dense_tables()
        else:
            self.add_table = self.sub_table = self.mul_table = None
            self.neg_table = self.inv_table = self.digit_table = None
        self._pow_tables: dict[int, np.ndarray] = {}

    # -- construction helpers ------------------------------------------------

    def _mul_poly(self, a: int, b: int) -> int:
        """Product via polynomial multiplication mod the modulus (bootstrap)."""
        p, e = self.p, self.e
        da = _digits(a, p, e)
        db = _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        rem = _poly_rem(prod, list(self.modulus), p)
        return sum(c * p**i for i, c in enumerate(rem))

    def _pow_poly(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self._mul_poly(r, a)
            a = self._mul_poly(a, a)
            n >>= 1
        return r

    def _build_log_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = _prime_factors(order) if order > 1 else []
        gen = 1
        for cand in range(2, q):
            if all(self._pow_poly(cand, order // f) != 1 for f in factors):
                gen = cand
                break
        self.generator = gen
        exp = [1] * order
        log = [-1] * q
        v = 1
        for i in range(order):
            exp[i] = v
            log[v] = i
            v = self._mul_poly(v, gen)
        if v != 1:
            raise AssertionError("generator does not have order q-1")
        self._exp = exp
        self._log = log

    def _build_dense_tables(self) -> None:
        q, p, e = self.q, self.p, self.e
        vals = np.arange(q, dtype=np.int64)
        digs = np.zeros((q, e), dtype=np.int64)
        v = vals.copy()
        for t in range(e):
            digs[:, t] = v % p
            v //= p
        self.digit_table = digs
        pw = p ** np.arange(e, dtype=np.int64)
        self.add_table = ((digs[:, None, :] + digs[None, :, :]) % p @ pw).astype(np.int64)
        self.neg_table = ((-digs) % p @ pw).astype(np.int64)
        self.sub_table = self.add_table[:, self.neg_table]
        mul = np.zeros((q, q), dtype=np.int64)
        exp = np.array(self._exp, dtype=np.int64)
        log = np.array(self._log, dtype=np.int64)
        nz = vals[1:]
        mul[np.ix_(nz, nz)] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.int64)
        inv[nz] = exp[(-(log[nz])) % (q - 1)]
        self.inv_table = inv

    # -- scalar arithmetic on encodings ---------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % p
        out, shift = 0, 1
        for _ in range(self.e):
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.e == 1:
            return (-a) % p
        out, shift = 0, 1
        for _ in range(self.e):
            out += ((-a) % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """a**n for n >= 0, with a**0 == 1 (including 0**0)."""
        if n < 0:
            raise ValueError("negative exponent; use inv explicitly")
        if n == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def power_table(self, n: int) -> np.ndarray:
        """Vector of v**n over all encodings (fields with dense tables only)."""
        tab = self._pow_tables.get(n)
        if tab is None:
            tab = np.array([self.pow(v, n) for v in range(self.q)], dtype=np.int64)
            self._pow_tables[n] = tab
        return tab

    # -- misc ------------------------------------------------------------------

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value % self.q)

    def elements(self):
        return (FieldElement(self, v) for v in range(self.q))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldContext)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"


class FieldElement:
    """A field element bound to its context; thin wrapper over the encoding."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        if not 0 <= value < ctx.q:
            raise ValueError(f"encoding {value} out of range for {ctx!r}")
        self.ctx = ctx
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.q
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub(self.value, v))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.div(self.value, v))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, n))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.value))

    def __repr__(self) -> str:
        return f"{self.ctx!r}[{self.value}]"


@lru_cache(maxsize=None)
def field_make(p: int, e: int) -> FieldContext:
    """GF(p^e) with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p**e > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p**e} exceeds {MAX_FIELD_SIZE}")
    for m in range(p**e):
        coeffs = _digits(m, p, e) + [1]
        if _is_irreducible(coeffs, p):
            return FieldContext(p, e, tuple(coeffs))
    raise AssertionError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=None)
def field_for_size(q: int) -> FieldContext:
    """GF(q) for a prime power q, factoring q as p^e."""
    if q < 2:
        raise ValueError("field size must be >= 2")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e = 0
    n = q
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise ValueError(f"{q} is not a prime power")
    return field_make(p, e)


def frobenius(a: FieldElement, base_q: int) -> FieldElement:
    """a -> a**base_q on GF(base_q^2); the conjugation behind Hermitian duals."""
    if a.ctx.q != base_q * base_q:
        raise ValueError(f"{a.ctx!r} is not GF({base_q}^2)")
    return a**base_q
