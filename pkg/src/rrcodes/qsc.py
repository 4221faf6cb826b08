"""Quantum synchronizable code parameters from nested pairs of cyclic codes of length 5 p^s.

A pair c1 = <prod L^{i_L}>, c2 = <prod L^{j_L}> qualifies when
  (a) j_L < i_L for every factor L,
  (b) e_L + e_{recip(L)} <= p^s for both codes (so both are dual-containing),
  (c) some factor r other than x - 1 has i_r - j_r > p^(s-1), or has
      i_r - j_r > 0 while another factor r' has i_r' - j_r' > p^(s-1).
The resulting code is (a_l, a_r)-[[5p^s + a_l + a_r, 5p^s - 2 deg g(c1)]]_q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .code import CodeSpec, all_specs, dual_code, generator_degree, is_subcode
from .errors import ContextMismatch, InternalInconsistency, NegativeK, ToleranceTooLarge
from .spectrum import CaseTag


@dataclass(frozen=True)
class QscEligibility:
    eligible: bool
    reasons: tuple[str, ...]
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"eligible": self.eligible, "reasons": list(self.reasons), "checks": dict(self.checks)}


@dataclass(frozen=True)
class QscParams:
    a_l: int
    a_r: int
    n_out: int
    k_out: int
    q: int

    def __str__(self):
        return f"({self.a_l}, {self.a_r})-[[{self.n_out}, {self.k_out}]]_{self.q}"

    def to_dict(self) -> dict:
        return {"a_l": self.a_l, "a_r": self.a_r, "n_out": self.n_out, "k_out": self.k_out, "q": self.q}


def _reciprocal_violations(code: CodeSpec, name: str) -> list[str]:
    out = []
    recip = code.spectrum.recip
    e = code.exps
    for lab in code.labels:
        partner = recip[lab]
        # each unordered pair once
        if code.labels.index(partner) < code.labels.index(lab):
            continue
        if e[lab] + e[partner] > code.ps:
            out.append(f"{name}: {lab}+{partner} exponents {e[lab]}+{e[partner]} exceed p^s={code.ps}")
    return out


def _misalignment_witness(c1: CodeSpec, c2: CodeSpec) -> str | None:
    big = c1.ps // c1.ctx.p
    diff = {lab: c1.exp(lab) - c2.exp(lab) for lab in c1.labels}
    # the x - 1 factor has coset {0}, so it cannot serve as r
    for r in (lab for lab in c1.labels if lab != "U"):
        if diff[r] > big:
            return f"{r}: {diff[r]} > p^(s-1)={big}"
        if diff[r] > 0:
            for other in c1.labels:
                if other != r and diff[other] > big:
                    return f"{r}: {diff[r]} > 0 with {other}: {diff[other]} > p^(s-1)={big}"
    return None


def check_qsc_pair(c1: CodeSpec, c2: CodeSpec) -> QscEligibility:
    if c1.ctx != c2.ctx or c1.s != c2.s:
        raise ContextMismatch(f"{c1!r} and {c2!r} live in different ambient spaces")
    reasons = []

    dominance = [lab for lab in c1.labels if not c2.exp(lab) < c1.exp(lab)]
    if dominance:
        reasons.append("dominance fails at " + ", ".join(dominance))

    reciprocal = _reciprocal_violations(c1, "c1") + _reciprocal_violations(c2, "c2")
    reasons += reciprocal

    witness = _misalignment_witness(c1, c2)
    if witness is None:
        reasons.append(f"no misalignment witness with a difference above p^(s-1)={c1.ps // c1.ctx.p}")

    dual_ok = {name: is_subcode(dual_code(c), c) for name, c in (("c1", c1), ("c2", c2))}
    for name, ok in dual_ok.items():
        if not ok:
            reasons.append(f"{name} is not dual-containing")
    if dual_ok["c1"] != (not _reciprocal_violations(c1, "c1")) or dual_ok["c2"] != (not _reciprocal_violations(c2, "c2")):
        raise InternalInconsistency("reciprocal bound and dual containment disagree")

    checks = {
        "dominance": not dominance,
        "reciprocal_bound": not reciprocal,
        "misalignment": witness,
        "c1_dual_containing": dual_ok["c1"],
        "c2_dual_containing": dual_ok["c2"],
    }
    return QscEligibility(not reasons, tuple(reasons), checks)


def _printed_k(c1: CodeSpec) -> int:
    """Dimension formula written per case in terms of the exponents."""
    n, e = c1.n, c1.exponents
    if c1.case is CaseTag.C1:
        return n - 2 * (e[0] + 4 * e[1])
    if c1.case is CaseTag.C2:
        return n - 2 * (e[0] + 2 * e[1] + 2 * e[2])
    return n - 2 * sum(e)


def check_tolerance(c1: CodeSpec, a_l: int, a_r: int):
    if a_l < 0 or a_r < 0:
        raise ValueError("tolerances must be nonnegative")
    if a_l + a_r >= c1.n:
        raise ToleranceTooLarge(f"a_l + a_r = {a_l + a_r} must be below {c1.n}")


def qsc_params(c1: CodeSpec, a_l: int, a_r: int) -> QscParams:
    check_tolerance(c1, a_l, a_r)
    n = c1.n
    k = n - 2 * generator_degree(c1)
    if k != _printed_k(c1):
        raise InternalInconsistency(f"case formula gives {_printed_k(c1)}, generator degree gives {k}")
    if k < 0:
        raise NegativeK(f"k_out = {k} is negative")
    return QscParams(a_l, a_r, n + a_l + a_r, k, c1.ctx.q)


def eligible_first_codes(ctx, s: int) -> list[CodeSpec]:
    """Every c1 that forms an eligible pair with at least one c2, in lexicographic order.

    Dominance and the witness condition only get easier as c2 shrinks its
    exponents, and the zero-exponent c2 always meets the reciprocal bound, so c1
    qualifies with some c2 exactly when it qualifies with c2 = full space.
    """
    full = None
    out = []
    for c1 in all_specs(ctx, s):
        if full is None:
            full = c1.with_exps([0] * len(c1.labels))
        if min(c1.exponents) == 0 or _reciprocal_violations(c1, "c1"):
            continue
        if _misalignment_witness(c1, full) is not None:
            out.append(c1)
    return out
