"""Dense univariate polynomials over a :class:`~rrcodes.field.FieldCtx`.

Coefficients are stored lowest degree first as field-element codes, with no
trailing zeros; the zero polynomial has an empty coefficient tuple and degree
``-1`` (standing in for minus infinity).
"""

from __future__ import annotations

from .errors import DivisionByZero, FieldMismatch
from .field import FieldCtx, FieldElement


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        # ints are prime-field scalars (reduced mod p); FieldElements are taken as-is
        cs = [ctx.element(c).value for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, ctx: FieldCtx, coeffs: list[int]) -> Poly:
        # coeffs are already valid codes; only trailing zeros are stripped
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints) -> Poly:
        """Polynomial whose coefficients are the prime-field scalars ``ints`` (mod p)."""
        return cls._raw(ctx, [ctx.scalar(c) for c in ints])

    @classmethod
    def monomial(cls, ctx: FieldCtx, k: int, c: int = 1) -> Poly:
        return cls._raw(ctx, [0] * k + [c])

    @classmethod
    def one(cls, ctx: FieldCtx) -> Poly:
        return cls._raw(ctx, [1])

    @classmethod
    def zero(cls, ctx: FieldCtx) -> Poly:
        return cls._raw(ctx, [])

    @classmethod
    def x_minus(cls, ctx: FieldCtx, a: int) -> Poly:
        """The linear polynomial ``x - a`` for a field code a."""
        return cls._raw(ctx, [ctx.neg(a), 1])

    @classmethod
    def x_pow_minus_one(cls, ctx: FieldCtx, n: int) -> Poly:
        return cls._raw(ctx, [ctx.neg(1)] + [0] * (n - 1) + [1])

    # ---- basic properties ----

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self.ctx, c) for c in self.coeffs]

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        ctx = self.ctx
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = repr(FieldElement(ctx, c))
            if k == 0:
                terms.append(cs)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)

    def _same(self, other: Poly):
        if self.ctx != other.ctx:
            raise FieldMismatch("polynomials over different fields")

    # ---- ring operations ----

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly._raw(ctx, out)

    def __neg__(self) -> Poly:
        ctx = self.ctx
        return Poly._raw(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        ctx = self.ctx
        if isinstance(other, (int, FieldElement)):
            c = ctx.element(other).value
            return Poly._raw(ctx, [ctx.mul(c, a) for a in self.coeffs])
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(ctx)
        if ctx.m == 1:
            p = ctx.p
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return Poly._raw(ctx, [c % p for c in out])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
        return Poly._raw(ctx, out)

    __rmul__ = __mul__

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        """(quotient, remainder) with deg(remainder) < deg(other)."""
        self._same(other)
        ctx = self.ctx
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero():
            return Poly.zero(ctx), Poly.zero(ctx)
        b = other.coeffs
        db = len(b) - 1
        inv_lead = ctx.inv(b[-1])
        rem = list(self.coeffs)
        if len(rem) <= db:
            return Poly.zero(ctx), Poly._raw(ctx, rem)
        quot = [0] * (len(rem) - db)
        if ctx.m == 1:
            p = ctx.p
            for i in range(len(rem) - 1, db - 1, -1):
                c = rem[i] * inv_lead % p
                if c:
                    quot[i - db] = c
                    for j in range(db + 1):
                        rem[i - db + j] = (rem[i - db + j] - c * b[j]) % p
        else:
            for i in range(len(rem) - 1, db - 1, -1):
                c = ctx.mul(rem[i], inv_lead)
                if c:
                    quot[i - db] = c
                    for j in range(db + 1):
                        rem[i - db + j] = ctx.sub(rem[i - db + j], ctx.mul(c, b[j]))
        return Poly._raw(ctx, quot), Poly._raw(ctx, rem[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def divides(self, other: Poly) -> bool:
        """True when self divides other."""
        return other.divmod(self)[1].is_zero()

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * FieldElement(self.ctx, self.ctx.inv(self.lead))

    def reciprocal(self) -> Poly:
        """Coefficient reversal normalised to be monic (requires nonzero constant term)."""
        if self.is_zero():
            return self
        if self.coeffs[0] == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        return Poly._raw(self.ctx, list(reversed(self.coeffs))).monic()

    def __call__(self, x) -> FieldElement:
        ctx = self.ctx
        v = ctx.element(x).value
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, v), c)
        return FieldElement(ctx, acc)

    def reduce_cyclic(self, n: int) -> Poly:
        """Residue modulo ``x^n - 1`` by folding exponents mod n."""
        ctx = self.ctx
        out = [0] * min(n, len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            if c:
                out[k % n] = ctx.add(out[k % n], c)
        return Poly._raw(ctx, out)

    def padded(self, n: int) -> list[int]:
        """Coefficient codes padded with zeros to length n."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(f, 0) is f made monic."""
    a._same(b)
    if a.is_zero() and b.is_zero():
        raise DivisionByZero("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_pow(a: Poly, e: int, modulus: Poly | None = None) -> Poly:
    if e < 0:
        raise ValueError("negative exponent")
    result = Poly.one(a.ctx)
    base = a if modulus is None else a % modulus
    while e:
        if e & 1:
            result = result * base
            if modulus is not None:
                result = result % modulus
        e >>= 1
        if e:
            base = base * base
            if modulus is not None:
                base = base % modulus
    return result


def poly_weight(a: Poly) -> int:
    return a.weight()


def poly_arith(op: str, a: Poly, b: Poly):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divrem":
        return a.divmod(b)
    if op == "gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown polynomial operation {op!r}")
