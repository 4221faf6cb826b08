"""Singleton defect and the MDS classification of cyclic codes of length 5 p^s."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .code import ZERO_CODE, CodeSpec, all_specs, generator_degree, spec_count
from .distance import default_max_specs, exact_from_exponents
from .errors import BudgetExceeded, InternalInconsistency, ZeroCodeHasNoDistance
from .field import FieldCtx
from .sweep import chunked_sweep

CLAUSE_FULL = "deg g = 0: full space, d = 1"
CLAUSE_LINEAR = "deg g = 1: one linear factor to the first power, d = 2"
CLAUSE_REPETITION = "deg g = n - 1: repetition-type code, d = n"


@dataclass(frozen=True)
class MdsVerdict:
    code: CodeSpec
    is_mds: bool
    defect: int | None  # None for the zero code
    clause: str | None

    def to_dict(self) -> dict:
        return {
            "spec": self.code.to_dict(),
            "is_mds": self.is_mds,
            "defect": self.defect,
            "clause": self.clause,
        }


def _defect(code: CodeSpec) -> int | None:
    d, _ = exact_from_exponents(code.exponents, code.spectrum.degrees, code.ctx.p, code.s)
    if d is ZERO_CODE:
        return None
    k = code.n - generator_degree(code)
    return code.n - k + 1 - d


def singleton_defect(code: CodeSpec) -> int:
    """(n - k + 1) - d, which is never negative."""
    defect = _defect(code)
    if defect is None:
        raise ZeroCodeHasNoDistance(f"{code!r} is the zero code")
    if defect < 0:
        raise InternalInconsistency(f"{code!r} beats the Singleton bound")
    return defect


def mds_clause(code: CodeSpec) -> str | None:
    """The classification predicted from deg g alone, without computing a distance."""
    if code.is_zero_code():
        return None
    deg = generator_degree(code)
    if deg == 0:
        return CLAUSE_FULL
    if deg == 1:
        # only a single degree-1 factor with exponent 1 can give deg g = 1
        return CLAUSE_LINEAR
    if deg == code.n - 1:
        return CLAUSE_REPETITION
    return None


def classify_mds(code: CodeSpec) -> MdsVerdict:
    clause = mds_clause(code)
    defect = _defect(code)
    if defect is None:
        return MdsVerdict(code, False, None, None)
    if (defect == 0) != (clause is not None):
        raise InternalInconsistency(f"{code!r}: defect {defect} disagrees with clause {clause!r}")
    return MdsVerdict(code, clause is not None, defect, clause)


def _verdicts(codes: Iterable[CodeSpec]) -> list[MdsVerdict]:
    return [classify_mds(c) for c in codes]


def _defect_zero(codes: Iterable[CodeSpec]) -> list[CodeSpec]:
    return [c for c in codes if _defect(c) == 0]


def _check_budget(ctx: FieldCtx, s: int, max_specs: int | None):
    if max_specs is None:
        max_specs = default_max_specs()
    count = spec_count(ctx, s)
    if count > max_specs:
        raise BudgetExceeded(f"sweep of {count} specs exceeds the budget of {max_specs}")


def mds_verdicts(ctx: FieldCtx, s: int, jobs: int = 1, max_specs: int | None = None) -> list[MdsVerdict]:
    """One verdict per spec, in lexicographic exponent order."""
    _check_budget(ctx, s, max_specs)
    return chunked_sweep(_verdicts, ctx, s, jobs)


def mds_scan(ctx: FieldCtx, s: int, jobs: int = 1, max_specs: int | None = None) -> list[CodeSpec]:
    """All MDS specs, found by Singleton defect alone and then checked against the deg g rule."""
    _check_budget(ctx, s, max_specs)
    found = chunked_sweep(_defect_zero, ctx, s, jobs)
    predicted = list(iter_predicted(ctx, s))
    if found != predicted:
        extra = sorted(set(found) - set(predicted), key=lambda c: c.exponents)
        missing = sorted(set(predicted) - set(found), key=lambda c: c.exponents)
        raise InternalInconsistency(f"MDS sweep mismatch: unexpected {extra[:5]}, missing {missing[:5]}")
    return found


def iter_predicted(ctx: FieldCtx, s: int) -> Iterator[CodeSpec]:
    """Specs with deg g in {0, 1, n - 1}, in lexicographic exponent order."""
    for code in all_specs(ctx, s):
        if mds_clause(code) is not None:
            yield code
