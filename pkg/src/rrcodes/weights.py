"""Weight distributions of the cyclic codes of length 5 and the MacWilliams transform."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .code import SimpleRootCode
from .errors import InconsistentEnumerator, InternalInconsistency, ZeroComponent
from .spectrum import CaseTag


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def min_weight(self) -> int | None:
        """Smallest nonzero weight present, or None for the zero code."""
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return None

    def to_csv(self) -> str:
        rows = ["weight,multiplicity"]
        rows += [f"{i},{c}" for i, c in enumerate(self.counts)]
        return "\n".join(rows) + "\n"


def full_space_enumerator(n: int, q: int) -> WeightEnumerator:
    return WeightEnumerator(n, tuple(comb(n, i) * (q - 1) ** i for i in range(n + 1)))


def zero_enumerator(n: int) -> WeightEnumerator:
    return WeightEnumerator(n, (1,) + (0,) * n)


def weight_table(src: SimpleRootCode, q: int) -> WeightEnumerator:
    """Closed-form weight distribution of a nonzero length-5 cyclic code.

    Only the degree of the generator matters: every such code is MDS, so the
    distribution is fixed by (n, k, q).
    """
    if src.is_zero():
        raise ZeroComponent("the zero code has no weight table beyond A_0 = 1")
    deg = src.degree
    u = q - 1
    if deg == 0:
        return full_space_enumerator(5, q)
    if deg == 1:
        counts = (1, 0, 10 * u, 10 * u * (q - 2), 5 * u * (q * q - 3 * q + 3), u * (q**3 - 4 * q * q + 6 * q - 4))
    elif deg == 2:
        counts = (1, 0, 0, 10 * u, 5 * u * (q - 3), u * (q * q - 4 * q + 6))
    elif deg == 3:
        counts = (1, 0, 0, 0, 5 * u, u * (q - 4))
    elif deg == 4:
        counts = (1, 0, 0, 0, 0, u)
    else:
        raise InternalInconsistency(f"generator degree {deg} impossible for a nonzero length-5 code")
    return WeightEnumerator(5, counts)


def macwilliams(a: WeightEnumerator, k: int, q: int) -> WeightEnumerator:
    """Weight enumerator of the dual of an [n, k] code with enumerator ``a``.

    Expands ``sum_i A_i (1 - z)^i (1 + (q - 1) z)^(n - i)`` over the integers and
    divides by q^k; a nonzero remainder means the input was not a linear code's
    enumerator and raises :class:`InternalInconsistency`.
    """
    n = a.n
    if a.total != q**k:
        raise InconsistentEnumerator(f"counts sum to {a.total}, expected q^k = {q**k}")
    acc = [0] * (n + 1)
    for i, ai in enumerate(a.counts):
        if not ai:
            continue
        left = [(-1) ** j * comb(i, j) for j in range(i + 1)]
        right = [comb(n - i, j) * (q - 1) ** j for j in range(n - i + 1)]
        for x, lx in enumerate(left):
            for y, ry in enumerate(right):
                acc[x + y] += ai * lx * ry
    scale = q**k
    out = []
    for c in acc:
        d, r = divmod(c, scale)
        if r:
            raise InternalInconsistency(f"MacWilliams coefficient {c} not divisible by {scale}")
        out.append(d)
    return WeightEnumerator(n, tuple(out))


def simple_distance(src: SimpleRootCode):
    """Minimum distance of a length-5 component code: deg(g) + 1, or inf for the zero code."""
    if src.is_zero():
        return math.inf
    return src.degree + 1


def printed_simple_distance(src: SimpleRootCode):
    """The component distances exactly as listed in the published proposition.

    Differs from :func:`simple_distance` in one place: Case 1 with generator
    phi5 is listed as 4, whereas its codewords are the q - 1 nonzero multiples
    of the all-ones word and all have weight 5.
    """
    if src.spectrum.case is CaseTag.C1 and src.included == frozenset({"Phi"}):
        return 4
    return simple_distance(src)
