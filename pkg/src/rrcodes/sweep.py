"""Order-preserving parallel sweeps over all exponent vectors of one (field, s).

Work is split on the first exponent, so chunk i holds every spec whose first
exponent equals i.  Results are concatenated in chunk order, which makes the
output identical for any number of workers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator

from .code import CodeSpec
from .field import FieldCtx
from .spectrum import factor_x5m1


def specs_with_first(ctx: FieldCtx, s: int, first: int) -> Iterator[CodeSpec]:
    spectrum = factor_x5m1(ctx)
    ps = ctx.p**s
    for rest in itertools.product(range(ps + 1), repeat=len(spectrum.labels) - 1):
        yield CodeSpec(ctx, s, spectrum, (first, *rest))


def _run_chunk(args):
    fn, ctx, s, first = args
    return fn(specs_with_first(ctx, s, first))


def chunked_sweep(fn: Callable[[Iterator[CodeSpec]], list], ctx: FieldCtx, s: int, jobs: int = 1) -> list:
    """Apply ``fn`` (a picklable function from an iterator of specs to a list) to every chunk."""
    chunks = [(fn, ctx, s, first) for first in range(ctx.p**s + 1)]
    if jobs <= 1:
        parts = map(_run_chunk, chunks)
        return [x for part in parts for x in part]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_run_chunk, chunks)
        return [x for part in parts for x in part]
