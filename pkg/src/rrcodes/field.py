"""Exact arithmetic in GF(p^m) for primes p >= 7.

Elements are carried around as integer codes ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
where ``(c_0, ..., c_{m-1})`` is the coefficient vector in the polynomial basis
``1, x, ..., x^{m-1}`` modulo the field's defining polynomial.  The
:class:`FieldElement` wrapper gives operator syntax on top of the codes; the
polynomial and oracle layers work with raw codes for speed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import CompositeP, DivisionByZero, FieldMismatch, FieldOverflow, PTooSmall

MAX_ORDER = 2**63 - 1
# numpy lookup tables (q x q) are only built below this order
TABLE_LIMIT = 4096
# log/exp tables for m > 1 are only built below this order
LOG_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---- GF(p)[x] helpers used only for modulus selection and slow multiplication ----

def _gfp_rem(a: list[int], b: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a by monic b over GF(p); coefficient lists are lowest-first."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]]


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducible polynomials of degree d over GF(p), lowest-first tuples
    (leading 1 included), in lexicographic order of ``(c_0, ..., c_{d-1})``."""
    out = []
    for low in itertools.product(range(p), repeat=d):
        cand = low + (1,)
        if _is_irreducible(cand, p):
            out.append(cand)
    return tuple(out)


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    deg = len(f) - 1
    if deg <= 1:
        return deg == 1
    if f[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_irreducibles(p, d):
            if not any(_gfp_rem(f, g, p)):
                return False
    return True


class FieldCtx:
    """The field GF(p^m) with a fixed monic irreducible modulus.

    Instances are immutable and are normally obtained from :func:`make_field`,
    which caches them so equal parameters give the same object.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (make_field, (self.p, self.m))

    # ---- encoding ----

    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"expected at most {self.m} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def scalar(self, n: int) -> int:
        """Code of the prime-field element n mod p."""
        return n % self.p

    def element(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            self._check(x)
            return x
        if isinstance(x, (int, np.integer)):
            return FieldElement(self, self.scalar(int(x)))
        return FieldElement(self, self.from_coeffs(x))

    def elements(self):
        for a in range(self.q):
            yield FieldElement(self, a)

    def lex_key(self, a: int) -> tuple[int, ...]:
        """Sort key ordering codes by coefficient vector, lowest degree first."""
        return self.coeffs(a)

    def _check(self, x: FieldElement):
        if x.ctx != self:
            raise FieldMismatch(f"element of {x.ctx!r} used with {self!r}")

    # ---- scalar arithmetic on codes ----

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        r, scale = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return r

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return -a % p
        r, scale = 0, 1
        while a:
            r += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return r

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        tables = self._logexp
        if tables is None:
            return self._slow_mul(a, b)
        log, exp = tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(a, -1, self.p)
        tables = self._logexp
        if tables is None:
            return self.pow(a, self.q - 2)
        log, exp = tables
        return exp[(-log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.m == 1:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _slow_mul(self, a: int, b: int) -> int:
        p = self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.from_coeffs(_gfp_rem(prod, self.modulus, p))

    @cached_property
    def _logexp(self):
        if self.m == 1 or self.q > LOG_LIMIT:
            return None
        q = self.q
        gen = self._primitive_element()
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._slow_mul(x, gen)
        return log, exp

    def _primitive_element(self) -> int:
        order = self.q - 1
        cofactors = [order // r for r in prime_factors(order)]
        for g in range(2, self.q):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("no primitive element found")  # unreachable for a field

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def sqrt(self, a: int) -> int | None:
        """A square root of a (Tonelli-Shanks), or None for a non-residue."""
        if a == 0:
            return 0
        q = self.q
        if self.pow(a, (q - 1) // 2) != 1:
            return None
        s, odd = 0, q - 1
        while odd % 2 == 0:
            s, odd = s + 1, odd // 2
        z = next(z for z in range(2, q) if self.pow(z, (q - 1) // 2) == self.neg(1))
        mm, c = s, self.pow(z, odd)
        t, r = self.pow(a, odd), self.pow(a, (odd + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            b = self.pow(c, 1 << (mm - i - 1))
            mm, c = i, self.mul(b, b)
            t, r = self.mul(t, c), self.mul(r, b)
        return r

    # ---- vectorised tables for the brute-force oracle ----

    def _require_tables(self):
        if self.q > TABLE_LIMIT:
            raise FieldOverflow(f"lookup tables need q <= {TABLE_LIMIT}, got {self.q}")

    @cached_property
    def add_table(self) -> np.ndarray:
        self._require_tables()
        q, p = self.q, self.p
        digits = self.digit_table
        s = (digits[:, None, :] + digits[None, :, :]) % p
        weights = p ** np.arange(self.m, dtype=np.int64)
        tbl = (s * weights).sum(axis=-1).astype(np.int32)
        return tbl.reshape(q, q)

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._require_tables()
        q = self.q
        if self.m == 1:
            r = np.arange(q, dtype=np.int64)
            return (np.outer(r, r) % q).astype(np.int32)
        tbl = np.zeros((q, q), dtype=np.int32)
        for a in range(1, q):
            for b in range(a, q):
                tbl[a, b] = tbl[b, a] = self.mul(a, b)
        return tbl

    @cached_property
    def digit_table(self) -> np.ndarray:
        """Row a holds the coefficient vector of the element with code a."""
        codes = np.arange(self.q, dtype=np.int64)
        return np.stack([(codes // self.p**i) % self.p for i in range(self.m)], axis=-1)


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            if b.ctx != self.ctx:
                raise FieldMismatch(f"cannot combine elements of {self.ctx!r} and {b.ctx!r}")
            return b.value
        if isinstance(b, (int, np.integer)):
            return self.ctx.scalar(int(b))
        return NotImplemented

    def __add__(self, b):
        v = self._other(b)
        return FieldElement(self.ctx, self.ctx.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, b):
        return FieldElement(self.ctx, self.ctx.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return FieldElement(self.ctx, self.ctx.sub(self._other(b), self.value))

    def __mul__(self, b):
        return FieldElement(self.ctx, self.ctx.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return FieldElement(self.ctx, self.ctx.div(self.value, self._other(b)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, int(e)))

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __repr__(self):
        if self.ctx.m == 1:
            return str(self.value)
        return "(" + ",".join(map(str, self.coeffs)) + ")"


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldCtx:
    """Build GF(p^m) with the lexicographically smallest monic irreducible modulus.

    For m = 1 the modulus is ``x`` and elements are plain residues mod p.
    """
    if not is_prime(p):
        raise CompositeP(f"{p} is not prime")
    if p < 7:
        raise PTooSmall(f"p must be >= 7, got {p}")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise FieldOverflow(f"{p}^{m} does not fit a signed 64-bit integer")
    if m == 1:
        return FieldCtx(p, 1, (0, 1))
    modulus = monic_irreducibles(p, m)[0]
    return FieldCtx(p, m, modulus)


def fe_arith(ctx: FieldCtx, op: str, a: FieldElement, b=None) -> FieldElement:
    """Dispatch one of add/sub/mul/inv/pow on elements of ``ctx``."""
    ctx._check(a)
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    if isinstance(b, FieldElement):
        ctx._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown field operation {op!r}")


def find_fifth_root(ctx: FieldCtx) -> FieldElement | None:
    """Canonical primitive 5th root of unity, or None when 5 does not divide q - 1.

    Among the four primitive roots the one with the lexicographically smallest
    coefficient vector is returned.
    """
    q = ctx.q
    if (q - 1) % 5:
        return None
    e = (q - 1) // 5
    roots: set[int] = set()
    a = 1
    while len(roots) < 4:
        a += 1
        r = ctx.pow(a, e)
        if r != 1:
            # r generates the order-5 subgroup; its powers are all four roots
            roots = {ctx.pow(r, k) for k in range(1, 5)}
    return FieldElement(ctx, min(roots, key=ctx.lex_key))
