"""Cyclic codes of length 5 p^s described by one exponent per irreducible factor of x^5 - 1.

Over GF(p^m), ``x^{5p^s} - 1 = (x^5 - 1)^{p^s}``, so every cyclic code of that
length is generated by ``prod_L L(x)^{e_L}`` with ``0 <= e_L <= p^s``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .errors import (
    ContextMismatch,
    ExponentOutOfRange,
    InternalInconsistency,
    MissingLabel,
    TOutOfRange,
)
from .field import FieldCtx, make_field
from .poly import Poly, poly_pow
from .spectrum import CaseTag, Spectrum, factor_x5m1


class Marker(Enum):
    ZERO_CODE = "ZeroCode"
    UNSUPPORTED = "Unsupported"

    def __repr__(self):
        return self.value


ZERO_CODE = Marker.ZERO_CODE
UNSUPPORTED = Marker.UNSUPPORTED


@dataclass(frozen=True)
class CodeSpec:
    ctx: FieldCtx
    s: int
    spectrum: Spectrum
    exponents: tuple[int, ...]

    @property
    def ps(self) -> int:
        return self.ctx.p**self.s

    @property
    def n(self) -> int:
        return 5 * self.ps

    @property
    def case(self) -> CaseTag:
        return self.spectrum.case

    @property
    def labels(self) -> tuple[str, ...]:
        return self.spectrum.labels

    @property
    def exps(self) -> dict[str, int]:
        return dict(zip(self.labels, self.exponents))

    def exp(self, label: str) -> int:
        return self.exponents[self.spectrum.index(label)]

    def is_zero_code(self) -> bool:
        return all(e == self.ps for e in self.exponents)

    def is_full_space(self) -> bool:
        return not any(self.exponents)

    def with_exps(self, exps) -> CodeSpec:
        return make_code(self.ctx, self.s, exps)

    def to_dict(self) -> dict:
        return {
            "p": self.ctx.p,
            "m": self.ctx.m,
            "s": self.s,
            "case": self.case.value,
            "exps": self.exps,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in self.exps.items())
        return f"CodeSpec(GF({self.ctx.q}), s={self.s}, {{{inner}}})"


def make_code(ctx: FieldCtx, s: int, exps: Mapping[str, int] | Sequence[int]) -> CodeSpec:
    """Validate exponents and build a :class:`CodeSpec`.

    ``exps`` is either a mapping from factor label to exponent or a sequence in
    the spectrum's canonical label order.
    """
    if s < 1:
        raise ValueError(f"s must be a positive integer, got {s}")
    spectrum = factor_x5m1(ctx)
    labels = spectrum.labels
    if isinstance(exps, Mapping):
        unknown = sorted(set(exps) - set(labels))
        if unknown:
            raise MissingLabel(f"unknown labels {unknown} for case {spectrum.case}; expected {list(labels)}")
        missing = [lab for lab in labels if lab not in exps]
        if missing:
            raise MissingLabel(f"missing exponents for {missing}")
        values = tuple(int(exps[lab]) for lab in labels)
    else:
        values = tuple(int(e) for e in exps)
        if len(values) != len(labels):
            raise MissingLabel(f"expected {len(labels)} exponents {list(labels)}, got {len(values)}")
    ps = ctx.p**s
    for lab, e in zip(labels, values):
        if not 0 <= e <= ps:
            raise ExponentOutOfRange(f"exponent {lab}={e} outside [0, {ps}]")
    return CodeSpec(ctx, s, spectrum, values)


def code_from_dict(d: Mapping) -> CodeSpec:
    """Inverse of :meth:`CodeSpec.to_dict`; the ``case`` key, if present, is checked."""
    ctx = make_field(int(d["p"]), int(d.get("m", 1)))
    code = make_code(ctx, int(d["s"]), d["exps"])
    if "case" in d and d["case"] != code.case.value:
        raise ValueError(f"case {d['case']} does not match GF({ctx.q}) ({code.case.value})")
    return code


def all_specs(ctx: FieldCtx, s: int) -> Iterator[CodeSpec]:
    """Every cyclic code of length 5 p^s, in lexicographic exponent order."""
    spectrum = factor_x5m1(ctx)
    ps = ctx.p**s
    for values in itertools.product(range(ps + 1), repeat=len(spectrum.labels)):
        yield CodeSpec(ctx, s, spectrum, values)


def spec_count(ctx: FieldCtx, s: int) -> int:
    return (ctx.p**s + 1) ** len(factor_x5m1(ctx).labels)


@lru_cache(maxsize=4096)
def generator_poly(code: CodeSpec) -> Poly:
    g = Poly.one(code.ctx)
    for f, e in zip(code.spectrum.factors, code.exponents):
        if e:
            g = g * poly_pow(f.poly, e)
    return g


def generator_degree(code: CodeSpec) -> int:
    return sum(e * d for e, d in zip(code.exponents, code.spectrum.degrees))


def dimension(code: CodeSpec) -> int:
    return code.n - generator_degree(code)


def parity_check_poly(code: CodeSpec) -> Poly:
    q, r = Poly.x_pow_minus_one(code.ctx, code.n).divmod(generator_poly(code))
    if not r.is_zero():
        raise InternalInconsistency("generator does not divide x^n - 1")
    return q


def _multiplicities(poly: Poly, spectrum: Spectrum) -> tuple[int, ...]:
    """Exponent of each spectrum factor in poly, which must factor over the spectrum."""
    out = []
    rest = poly
    for f in spectrum.factors:
        k = 0
        while rest.degree >= f.degree:
            quot, rem = rest.divmod(f.poly)
            if not rem.is_zero():
                break
            rest, k = quot, k + 1
        out.append(k)
    if rest.degree != 0:
        raise InternalInconsistency(f"{poly!r} does not factor over the spectrum")
    return tuple(out)


@lru_cache(maxsize=4096)
def dual_code(code: CodeSpec) -> CodeSpec:
    """Dual code, generated by the monic reciprocal of the parity-check polynomial."""
    h = parity_check_poly(code)
    exps = _multiplicities(h.reciprocal(), code.spectrum)
    return CodeSpec(code.ctx, code.s, code.spectrum, exps)


def paired_dual(code: CodeSpec) -> CodeSpec:
    """Dual from the reciprocal pairing: the exponent of L is p^s - e_{recip(L)}.

    A fast counterpart to :func:`dual_code` for sweeps; the two are compared in tests.
    """
    ps = code.ps
    recip = code.spectrum.recip
    e = code.exps
    return CodeSpec(code.ctx, code.s, code.spectrum, tuple(ps - e[recip[lab]] for lab in code.labels))


def printed_dual(code: CodeSpec) -> CodeSpec:
    """The dual with every exponent replaced by p^s - e on the same label.

    This agrees with :func:`dual_code` whenever every factor is self-reciprocal
    (Cases 1 and 2) but not in Case 3, where W1/W4 and W2/W3 are reciprocal pairs.
    """
    ps = code.ps
    return CodeSpec(code.ctx, code.s, code.spectrum, tuple(ps - e for e in code.exponents))


def _same_context(a: CodeSpec, b: CodeSpec):
    if a.ctx != b.ctx or a.s != b.s:
        raise ContextMismatch(f"{a!r} and {b!r} live in different ambient spaces")


def is_subcode(a: CodeSpec, b: CodeSpec) -> bool:
    """True when a is contained in b, i.e. the generator of b divides that of a."""
    _same_context(a, b)
    return all(x >= y for x, y in zip(a.exponents, b.exponents))


def is_dual_containing(code: CodeSpec) -> bool:
    return is_subcode(dual_code(code), code)


def printed_dual_containment(code: CodeSpec) -> bool:
    """The published iff-criterion for C-perp inside C, evaluated literally."""
    half = (code.ps - 1) // 2
    e = code.exponents
    if code.case is CaseTag.C1:
        return e[0] <= half and e[1] <= half
    if code.case is CaseTag.C2:
        return e[0] <= half and e[1] + e[2] <= code.ps
    return e[0] <= half and sum(e[1:]) <= code.ps


@dataclass(frozen=True)
class SimpleRootCode:
    """A cyclic code of length 5 generated by a product of distinct factors of x^5 - 1."""

    spectrum: Spectrum
    included: frozenset

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for lab in self.spectrum.labels if lab in self.included)

    @property
    def degree(self) -> int:
        return sum(self.spectrum.degree(lab) for lab in self.included)

    @property
    def dimension(self) -> int:
        return 5 - self.degree

    def is_zero(self) -> bool:
        return len(self.included) == len(self.spectrum.factors)

    def generator(self) -> Poly:
        g = Poly.one(self.spectrum.ctx)
        for lab in self.labels:
            g = g * self.spectrum.factor(lab).poly
        return g

    def dual(self) -> SimpleRootCode:
        recip = self.spectrum.recip
        excluded = [lab for lab in self.spectrum.labels if lab not in self.included]
        return SimpleRootCode(self.spectrum, frozenset(recip[lab] for lab in excluded))

    def __repr__(self):
        return "{" + ", ".join(self.labels) + "}"


def simple_code(spectrum: Spectrum, labels) -> SimpleRootCode:
    labels = frozenset(labels)
    unknown = labels - set(spectrum.labels)
    if unknown:
        raise MissingLabel(f"unknown labels {sorted(unknown)}")
    return SimpleRootCode(spectrum, labels)


def all_simple_codes(spectrum: Spectrum) -> list[SimpleRootCode]:
    """All 2^r subsets of the factors, smallest subsets first."""
    labels = spectrum.labels
    out = []
    for r in range(len(labels) + 1):
        for combo in itertools.combinations(labels, r):
            out.append(SimpleRootCode(spectrum, frozenset(combo)))
    return out


def component_code(code: CodeSpec, t: int) -> SimpleRootCode:
    """Length-5 code generated by the factors whose multiplicity exceeds t."""
    if not 0 <= t <= code.ps - 1:
        raise TOutOfRange(f"t={t} outside [0, {code.ps - 1}]")
    return SimpleRootCode(
        code.spectrum,
        frozenset(lab for lab, e in zip(code.labels, code.exponents) if e > t),
    )
