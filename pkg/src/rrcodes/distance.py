"""Minimum Hamming distance of repeated-root cyclic codes of length 5 p^s.

The exact engine uses ``d(C) = min_t P_t * d(C_t)`` where ``P_t`` is the weight
of ``(x - 1)^t`` (the product of ``digit + 1`` over the base-p digits of t) and
``C_t`` is the length-5 code generated by the factors of multiplicity > t.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .code import ZERO_CODE, CodeSpec, all_specs, spec_count
from .errors import BudgetExceeded, LOutOfRange, TOutOfRange
from .field import FieldCtx

DEFAULT_MAX_SPECS = 1 << 20
MAX_SPECS_ENV = "RRCODES_MAX_SPECS"
# range-argmin tables are precomputed up to this p^s
_RANGE_TABLE_LIMIT = 512


def default_max_specs() -> int:
    raw = os.environ.get(MAX_SPECS_ENV)
    return int(raw) if raw else DEFAULT_MAX_SPECS


@dataclass(frozen=True)
class DigitProfile:
    t: int
    digits: tuple[int, ...]
    P: int


def pt_weight(t: int, p: int, s: int) -> DigitProfile:
    if not 0 <= t <= p**s - 1:
        raise TOutOfRange(f"t={t} outside [0, {p**s - 1}]")
    digits = []
    rest = t
    for _ in range(s):
        digits.append(rest % p)
        rest //= p
    return DigitProfile(t, tuple(digits), math.prod(d + 1 for d in digits))


@lru_cache(maxsize=None)
def pt_table(p: int, s: int) -> tuple[int, ...]:
    return tuple(pt_weight(t, p, s).P for t in range(p**s))


def beta_tau(l: int, p: int, s: int) -> tuple[int, int]:
    """The unique (beta, tau) with
    p^s - p^(s-tau) + beta p^(s-tau-1) + 1 <= l <= p^s - p^(s-tau) + (beta+1) p^(s-tau-1),
    for 1 <= l <= p^s - 1."""
    ps = p**s
    if not 1 <= l <= ps - 1:
        raise LOutOfRange(f"l={l} outside [1, {ps - 1}]")
    for tau in range(s):
        base = ps - p ** (s - tau)
        step = p ** (s - tau - 1)
        if l <= base + (p - 1) * step:
            beta = (l - base - 1) // step
            return beta, tau
    raise LOutOfRange(f"l={l} not covered")  # unreachable: the tau = s-1 band ends at p^s - 1


def min_pt_at_least(l: int, p: int, s: int) -> int:
    """min{P_t : l <= t <= p^s - 1}, via the closed form (beta + 2) p^tau."""
    if not 0 <= l <= p**s - 1:
        raise LOutOfRange(f"l={l} outside [0, {p**s - 1}]")
    if l == 0:
        return 1
    beta, tau = beta_tau(l, p, s)
    return (beta + 2) * p**tau


@lru_cache(maxsize=None)
def _range_argmin(p: int, s: int):
    """argmin[lo][hi - lo - 1] = smallest t in [lo, hi) minimising P_t."""
    P = pt_table(p, s)
    ps = len(P)
    table = []
    for lo in range(ps):
        row = []
        best = lo
        for hi in range(lo + 1, ps + 1):
            if P[hi - 1] < P[best]:
                best = hi - 1
            row.append(best)
        table.append(tuple(row))
    return tuple(table)


def _argmin_range(p: int, s: int, lo: int, hi: int) -> int:
    if p**s <= _RANGE_TABLE_LIMIT:
        return _range_argmin(p, s)[lo][hi - lo - 1]
    P = pt_table(p, s)
    return min(range(lo, hi), key=P.__getitem__)


def exact_from_exponents(exponents: tuple[int, ...], degrees: tuple[int, ...], p: int, s: int):
    """(distance, witness t) for a generator with the given factor multiplicities.

    Distance is ZERO_CODE (witness None) when every exponent equals p^s.
    Component codes are constant between consecutive distinct exponents, so the
    sweep over t collapses to one range-minimum of P_t per interval.
    """
    ps = p**s
    P = pt_table(p, s)
    r = len(exponents)
    cuts = sorted({0, ps, *exponents})
    best = witness = None
    for lo, hi in zip(cuts, cuts[1:]):
        # for t in [lo, hi) the included factors are exactly those with e >= hi
        count = deg = 0
        for e, dg in zip(exponents, degrees):
            if e >= hi:
                count += 1
                deg += dg
        if count == r:
            continue
        t = _argmin_range(p, s, lo, hi)
        val = P[t] * (deg + 1)
        if best is None or val < best:
            best, witness = val, t
    if best is None:
        return ZERO_CODE, None
    return best, witness


def distance_exact(code: CodeSpec):
    return exact_with_witness(code)[0]


def exact_with_witness(code: CodeSpec):
    return exact_from_exponents(code.exponents, code.spectrum.degrees, code.ctx.p, code.s)


@dataclass(frozen=True)
class DistanceReport:
    exact: object
    witness_t: int | None
    paper_value: object
    agrees: bool

    def to_dict(self) -> dict:
        return {
            "exact": as_json_distance(self.exact),
            "witness_t": self.witness_t,
            "paper": as_json_distance(self.paper_value),
            "agrees": self.agrees,
        }


def as_json_distance(d):
    """ZeroCode renders as 0, an absent value as None, unsupported table rows as a string."""
    if d is ZERO_CODE:
        return 0
    if d is None or isinstance(d, int):
        return d
    return repr(d)


def distance_report(code: CodeSpec) -> DistanceReport:
    from .tables import distance_paper_table

    exact, witness = exact_with_witness(code)
    paper = distance_paper_table(code)
    return DistanceReport(exact, witness, paper, exact == paper)


@dataclass(frozen=True)
class Discrepancy:
    code: CodeSpec
    exact: object
    paper_value: object
    table: str
    row: str

    def to_dict(self) -> dict:
        return {
            "spec": self.code.to_dict(),
            "exact": as_json_distance(self.exact),
            "paper": as_json_distance(self.paper_value),
            "table": self.table,
            "row": self.row,
        }


def _check_sweep_budget(ctx: FieldCtx, s: int, max_specs: int):
    count = spec_count(ctx, s)
    if count > max_specs:
        raise BudgetExceeded(f"sweep of {count} specs exceeds the budget of {max_specs}")


def _discrepancies(codes: Iterable[CodeSpec]) -> list[Discrepancy]:
    from .tables import paper_table_lookups

    out = []
    for code in codes:
        exact = distance_exact(code)
        for hit in paper_table_lookups(code):
            if hit.value != exact:
                out.append(Discrepancy(code, exact, hit.value, hit.table, hit.row))
    return out


def discrepancy_report(
    ctx: FieldCtx,
    s: int,
    filter: Callable[[CodeSpec], bool] | None = None,
    max_specs: int | None = None,
    jobs: int = 1,
) -> list[Discrepancy]:
    """Every (spec, printed row) where a printed table disagrees with the exact distance.

    All printed tables whose ordering precondition holds are consulted, so a
    spec on a tie between orderings is audited against each of them.  Output is
    in lexicographic exponent order, then table order, for any ``jobs``.
    """
    from .sweep import chunked_sweep

    _check_sweep_budget(ctx, s, default_max_specs() if max_specs is None else max_specs)
    found = chunked_sweep(_discrepancies, ctx, s, jobs)
    if filter is not None:
        found = [d for d in found if filter(d.code)]
    return found


def sweep_distances(codes: Iterable[CodeSpec]) -> list[tuple[CodeSpec, object]]:
    return [(c, distance_exact(c)) for c in codes]
