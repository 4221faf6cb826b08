"""Factorization of x^5 - 1 over GF(q), split by how 5 sits relative to q - 1 and q + 1."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from types import MappingProxyType

from .errors import FiveDividesQ, InternalInconsistency
from .field import FieldCtx, FieldElement, find_fifth_root
from .poly import Poly


class CaseTag(str, Enum):
    C1 = "C1"  # 5 does not divide q^2 - 1: x^5 - 1 = (x - 1) * phi5
    C2 = "C2"  # 5 | q + 1, 5 does not divide q - 1: phi5 = f1 * f2
    C3 = "C3"  # 5 | q - 1: x^5 - 1 splits into linear factors

    def __str__(self):
        return self.value


def classify_case(q: int) -> CaseTag:
    r = q % 5
    if r == 0:
        raise FiveDividesQ(f"5 divides q = {q}")
    if r == 1:
        return CaseTag.C3
    if r == 4:
        return CaseTag.C2
    return CaseTag.C1


def cyclotomic_cosets(q: int) -> list[tuple[int, ...]]:
    """Orbits of multiplication by q on Z/5, each sorted, ordered by least element."""
    if q % 5 == 0:
        raise FiveDividesQ(f"5 divides q = {q}")
    seen: set[int] = set()
    cosets = []
    for i in range(5):
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in orbit:
            orbit.append(j)
            j = j * q % 5
        seen.update(orbit)
        cosets.append(tuple(sorted(orbit)))
    return cosets


@dataclass(frozen=True)
class Factor:
    label: str
    poly: Poly
    degree: int


@dataclass(frozen=True)
class Spectrum:
    ctx: FieldCtx
    case: CaseTag
    factors: tuple[Factor, ...]
    recip: MappingProxyType
    # canonical primitive 5th root of unity (Case 3 only)
    omega: FieldElement | None = None
    # omega^i + omega^-i for F1, F2: the roots of y^2 + y - 1 (Case 2 only)
    traces: tuple[FieldElement, ...] | None = None

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f.label for f in self.factors)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    def factor(self, label: str) -> Factor:
        for f in self.factors:
            if f.label == label:
                return f
        raise KeyError(label)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def degree(self, label: str) -> int:
        return self.factor(label).degree

    def __hash__(self):
        return hash((self.ctx, self.case, self.labels))

    def __reduce__(self):
        return (factor_x5m1, (self.ctx,))

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.ctx == other.ctx and self.factors == other.factors


def _golden_roots(ctx: FieldCtx) -> list[int]:
    """The two roots of y^2 + y - 1, i.e. (-1 +- sqrt 5) / 2."""
    r5 = ctx.sqrt(ctx.scalar(5))
    if r5 is None:
        raise InternalInconsistency(f"5 is not a square in GF({ctx.q})")
    half = ctx.inv(ctx.scalar(2))
    minus_one = ctx.neg(1)
    roots = [ctx.mul(ctx.add(minus_one, r5), half), ctx.mul(ctx.sub(minus_one, r5), half)]
    return sorted(roots, key=ctx.lex_key)


@lru_cache(maxsize=None)
def factor_x5m1(ctx: FieldCtx) -> Spectrum:
    case = classify_case(ctx.q)
    one = Poly.one(ctx)
    U = Poly.x_minus(ctx, 1)
    omega = traces = None
    if case is CaseTag.C1:
        named = [("U", U), ("Phi", Poly.from_ints(ctx, [1, 1, 1, 1, 1]))]
    elif case is CaseTag.C2:
        a, b = _golden_roots(ctx)
        traces = (FieldElement(ctx, a), FieldElement(ctx, b))
        named = [("U", U)]
        for label, tr in (("F1", a), ("F2", b)):
            named.append((label, Poly._raw(ctx, [1, ctx.neg(tr), 1])))
    else:
        omega = find_fifth_root(ctx)
        named = [("U", U)]
        for i in range(1, 5):
            named.append((f"W{i}", Poly.x_minus(ctx, ctx.pow(omega.value, i))))

    product = one
    for _, f in named:
        product = product * f
    if product != Poly.x_pow_minus_one(ctx, 5):
        raise InternalInconsistency(f"factors of x^5 - 1 over GF({ctx.q}) do not multiply back")

    by_poly = {f: label for label, f in named}
    recip = {}
    for label, f in named:
        r = f.reciprocal()
        if r not in by_poly:
            raise InternalInconsistency(f"reciprocal of {label} is not a listed factor")
        recip[label] = by_poly[r]

    factors = tuple(Factor(label, f, f.degree) for label, f in named)
    return Spectrum(ctx, case, factors, MappingProxyType(recip), omega, traces)
