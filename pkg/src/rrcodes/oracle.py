"""Exhaustive ground truth: codeword enumeration and direct orthogonality checks.

Nothing here uses the distance decomposition, the closed-form weight tables or
the reciprocal-pairing rule; codes are handled purely as spans of the shifted
generator ``x^i g(x)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .code import ZERO_CODE, CodeSpec, SimpleRootCode, dimension, dual_code, generator_poly
from .errors import BudgetExceeded
from .field import FieldCtx
from .poly import Poly
from .weights import WeightEnumerator

BUDGET_ENV = "RRCODES_MAX_CODEWORDS"
DEFAULT_MAX_CODEWORDS = 2**22
# entries of the materialised inner block of codewords
_BLOCK_ELEMENTS = 1 << 21


def default_max_codewords() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_MAX_CODEWORDS


@dataclass(frozen=True)
class Budget:
    max_codewords: int = field(default_factory=default_max_codewords)

    def __post_init__(self):
        if self.max_codewords <= 0:
            raise ValueError("budget must be positive")


def _setup(code) -> tuple[FieldCtx, Poly, int, int]:
    if isinstance(code, SimpleRootCode):
        return code.spectrum.ctx, code.generator(), 5, code.dimension
    return code.ctx, generator_poly(code), code.n, dimension(code)


def basis_rows(ctx: FieldCtx, g: Poly, n: int, k: int) -> np.ndarray:
    """k x n array of codes: row i is x^i g(x) mod x^n - 1."""
    rows = np.zeros((k, n), dtype=np.int32)
    for i in range(k):
        rows[i] = (Poly.monomial(ctx, i) * g).reduce_cyclic(n).padded(n)
    return rows


def _span(ctx: FieldCtx, rows: np.ndarray, n: int) -> np.ndarray:
    """All F_q-linear combinations of rows, one codeword per output row."""
    add, mul = ctx.add_table, ctx.mul_table
    scalars = np.arange(ctx.q)
    out = np.zeros((1, n), dtype=np.int32)
    for row in rows:
        scaled = mul[scalars[:, None], row[None, :]]
        out = add[out[:, None, :], scaled[None, :, :]].reshape(-1, n)
    return out


def weight_histogram(ctx: FieldCtx, rows: np.ndarray, n: int, budget: Budget | None = None) -> np.ndarray:
    """Histogram of Hamming weights over the whole span of ``rows``."""
    budget = budget or Budget()
    k = len(rows)
    q = ctx.q
    if q**k > budget.max_codewords:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the budget of {budget.max_codewords}")
    hist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        hist[0] = 1
        return hist
    inner_k = 1
    while inner_k < k and q ** (inner_k + 1) * n <= _BLOCK_ELEMENTS:
        inner_k += 1
    inner = _span(ctx, rows[:inner_k], n)
    outer = _span(ctx, rows[inner_k:], n)
    add = ctx.add_table
    for offset in outer:
        block = add[inner, offset[None, :]]
        hist += np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)
    return hist


def brute_enumerator(code: CodeSpec | SimpleRootCode, budget: Budget | None = None) -> WeightEnumerator:
    ctx, g, n, k = _setup(code)
    hist = weight_histogram(ctx, basis_rows(ctx, g, n, k), n, budget)
    return WeightEnumerator(n, tuple(int(c) for c in hist))


def brute_distance(code: CodeSpec | SimpleRootCode, budget: Budget | None = None):
    """Minimum nonzero codeword weight by full enumeration; ZERO_CODE if k = 0."""
    ctx, g, n, k = _setup(code)
    if k == 0:
        return ZERO_CODE
    hist = weight_histogram(ctx, basis_rows(ctx, g, n, k), n, budget)
    return int(np.flatnonzero(hist[1:])[0]) + 1


def _inner_products_vanish(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> bool:
    mul, digits, p = ctx.mul_table, ctx.digit_table, ctx.p
    for row in a:
        prods = mul[row[None, :], b]  # (len(b), n)
        sums = digits[prods].sum(axis=1) % p  # coefficient vectors of each inner product
        if sums.any():
            return False
    return True


def brute_dual_check(code: CodeSpec, budget: Budget | None = None, dual: CodeSpec | None = None) -> bool:
    """True iff every basis word of ``code`` is orthogonal to every basis word of the dual.

    ``dual`` defaults to :func:`~rrcodes.code.dual_code`; pass another spec to
    test a candidate dual (e.g. a published formula).
    """
    budget = budget or Budget()
    dual = dual_code(code) if dual is None else dual
    n = code.n
    k, kd = dimension(code), dimension(dual)
    if k * kd * n > budget.max_codewords:
        raise BudgetExceeded(f"{k} x {kd} inner products of length {n} exceed the budget")
    if k == 0 or kd == 0:
        return True
    ctx = code.ctx
    a = basis_rows(ctx, generator_poly(code), n, k)
    b = basis_rows(ctx, generator_poly(dual), n, kd)
    return _inner_products_vanish(ctx, a, b)


def brute_contains(outer: CodeSpec, inner: CodeSpec) -> bool:
    """Membership test: every basis word of ``inner`` leaves remainder 0 modulo g(outer)."""
    g = generator_poly(outer)
    ctx = inner.ctx
    gi = generator_poly(inner)
    for i in range(dimension(inner)):
        word = (Poly.monomial(ctx, i) * gi).reduce_cyclic(inner.n)
        if not (word % g).is_zero():
            return False
    return True
