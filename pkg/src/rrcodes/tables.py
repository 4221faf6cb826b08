"""The published closed-form distance tables, evaluated row by row exactly as printed.

Every table is keyed by an ordering of the exponents.  A table id names the
ordering it covers, e.g. ``C2:F>=U>=F`` is the table for ``f^i (x-1)^j f'^k``
with ``i >= j >= k``.  Row ids are the row's exponent conditions in terms of the
table's own variables (i, j, k, or i0..i4 for Case 3), with ``P`` for p^(s-1)
and ``B(e)`` for the closed form ``(beta + 2) p^tau`` attached to exponent e.

This module is an audit device.  It does not consult the exact engine; the
exact engine is the authoritative answer and :mod:`rrcodes.distance` compares
the two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import UNSUPPORTED, ZERO_CODE, CodeSpec
from .distance import min_pt_at_least
from .spectrum import CaseTag


@dataclass(frozen=True)
class TableLookup:
    table: str
    row: str
    value: object
    # the row's value rests on the listed length-5 distance of the phi5 code
    uses_phi5: bool = False


class _Rows:
    """Row-matching helpers bound to one (p, s)."""

    def __init__(self, p: int, s: int):
        self.p, self.s = p, s
        self.ps = p**s
        self.P = p ** (s - 1)

    def B(self, e: int) -> int:
        return min_pt_at_least(e, self.p, self.s)

    def mid(self, *es: int) -> bool:
        """Every exponent lies in some (beta, tau) band, i.e. in [1, p^s - 1]."""
        return all(1 <= e <= self.ps - 1 for e in es)


def _c1_u_major(r: _Rows, i: int, j: int):
    ps = r.ps
    if i == 0 and j == 0:
        return "i=0,j=0", 1
    if 0 < i <= ps and j == 0:
        return "0<i<=p^s,j=0", 2
    if r.mid(i, j):
        return "i,j banded", min(r.B(i), 2 * r.B(j))
    if i == ps and r.mid(j):
        return "i=p^s,j banded", 2 * r.B(j)
    if i == ps and j == ps:
        return "i=j=p^s", ZERO_CODE
    return None


def _c1_phi_major(r: _Rows, i: int, j: int):
    ps, P = r.ps, r.P
    if i == 0 and j == 0:
        return "i=0,j=0", 1, False
    if i == 0 and 0 < j <= P:
        return "i=0,0<j<=P", 2, False
    if i == 0 and P < j <= 2 * P:
        return "i=0,P<j<=2P", 3, False
    if i == 0 and 2 * P < j <= ps:
        return "i=0,2P<j<=p^s", 4, True
    if r.mid(i, j):
        return "i,j banded", min(r.B(j), 4 * r.B(i)), True
    if r.mid(i) and j == ps:
        return "i banded,j=p^s", 4 * r.B(i), True
    if i == ps and j == ps:
        return "i=j=p^s", ZERO_CODE, False
    return None


def _descending3(r: _Rows, i: int, j: int, k: int, cj: int, k0_rows):
    """Shared shape of the two Case-2 tables with i >= j >= k.

    ``cj`` is the coefficient on B(j); ``k0_rows`` are the values of the four
    k = 0 rows after the trivial one.
    """
    ps, P = r.ps, r.P
    if i == j == k == 0:
        return "i=j=k=0", 1
    if k == 0:
        if 0 < i <= P and 0 <= j <= P:
            return "0<i<=P,0<=j<=P,k=0", k0_rows[0]
        if P < i <= ps and j == 0:
            return "P<i<=p^s,j=0,k=0", k0_rows[1]
        if P < i <= 2 * P and 0 < j <= ps:
            return "P<i<=2P,0<j<=p^s,k=0", k0_rows[2]
        if 2 * P < i <= ps and 0 < j <= ps:
            return "2P<i<=p^s,0<j<=p^s,k=0", k0_rows[3]
    if r.mid(i, j, k):
        return "i,j,k banded", min(r.B(i), cj * r.B(j), 4 * r.B(k))
    if i == ps and r.mid(j, k):
        return "i=p^s,j,k banded", min(cj * r.B(j), 4 * r.B(k))
    if i == j == ps and r.mid(k):
        return "i=j=p^s,k banded", 4 * r.B(k)
    if i == j == k == ps:
        return "i=j=k=p^s", ZERO_CODE
    return None


def _ascending3(r: _Rows, i: int, j: int, k: int, ci: int, zero_rows):
    """Shared shape of the two Case-2 tables with i <= j <= k.

    ``ci`` is the coefficient on B(i); ``zero_rows`` lists (lower, upper, value)
    bands for k in the i = 0, j > 0 rows.
    """
    ps, P = r.ps, r.P
    if i == j == k == 0:
        return "i=j=k=0", 1
    if i == 0:
        if 0 <= j <= P and 0 < k <= P:
            return "i=0,0<=j<=P,0<k<=P", 2
        if j == 0 and P < k <= ps:
            return "i=0,j=0,P<k<=p^s", 3
        if 0 < j <= ps:
            for lo, hi, name, value in zero_rows:
                if lo < k <= hi:
                    return f"i=0,0<j<=p^s,{name}", value
    if r.mid(i, j, k):
        return "i,j,k banded", min(r.B(k), 3 * r.B(j), ci * r.B(i))
    if r.mid(i, j) and k == ps:
        return "i,j banded,k=p^s", min(3 * r.B(j), ci * r.B(i))
    if r.mid(i) and j == k == ps:
        return "i banded,j=k=p^s", ci * r.B(i)
    if i == j == k == ps:
        return "i=j=k=p^s", ZERO_CODE
    return None


def _c3_sorted(r: _Rows, e: tuple[int, ...]):
    """Case-3 table on exponents already sorted so that i0 >= i1 >= ... >= i4."""
    ps, P = r.ps, r.P
    i0, i1, i2, i3, i4 = e
    if not any(e):
        return "all zero", 1
    if i4 == 0:
        if 0 < i0 <= P and max(i1, i2, i3) <= P:
            return "0<i0<=P,i1..i3<=P,i4=0", 2
        if P < i0 <= ps and i1 == i2 == i3 == 0:
            return "P<i0<=p^s,i1=i2=i3=0,i4=0", 2
        if P < i0 <= 2 * P and i1 > 0:
            return "P<i0<=2P,0<i1,i4=0", 3
        if 2 * P < i0 <= ps and i1 > 0 and i2 == i3 == 0:
            return "2P<i0<=p^s,0<i1,i2=i3=0,i4=0", 3
        if 2 * P < i0 <= 3 * P and i1 > 0 and i2 > 0:
            return "2P<i0<=3P,0<i1,0<i2,i4=0", 4
        if 3 * P < i0 <= ps and i1 > 0 and i2 > 0 and i3 == 0:
            return "3P<i0<=p^s,0<i1,0<i2,i3=0,i4=0", 4
        if 3 * P < i0 <= ps and 0 < i1 <= P and 0 < i2 <= P and 0 < i3 <= P:
            return "3P<i0<=p^s,0<i1,i2,i3<=P,i4=0", 4
        if 3 * P < i0 <= ps and P < i1 <= ps and i2 > 0 and i3 > 0:
            return "3P<i0<=p^s,P<i1,0<i2,0<i3,i4=0", 5
        return None
    if all(x == ps for x in e):
        return "all p^s", ZERO_CODE
    # leading run of p^s, then every remaining exponent banded: row d_(lead+1)
    lead = 0
    while e[lead] == ps:
        lead += 1
    rest = e[lead:]
    if not r.mid(*rest):
        return None
    value = min((lead + idx + 1) * r.B(x) for idx, x in enumerate(rest))
    return f"d{lead + 1}", value


def paper_table_lookups(code: CodeSpec) -> list[TableLookup]:
    """Every printed row that applies to ``code``, one per table whose ordering holds.

    Ties between exponents make several orderings valid at once; each is
    reported so an audit can test all of them.  An ordering whose table has no
    matching row yields an UNSUPPORTED lookup.
    """
    r = _Rows(code.ctx.p, code.s)
    e = code.exps
    out = []

    def add(table, hit, uses_phi5=False):
        if hit is None:
            out.append(TableLookup(table, "no row", UNSUPPORTED))
        else:
            out.append(TableLookup(table, hit[0], hit[1], uses_phi5))

    if code.case is CaseTag.C1:
        u, phi = e["U"], e["Phi"]
        if u >= phi:
            add("C1:U>=Phi", _c1_u_major(r, u, phi))
        if u <= phi:
            hit = _c1_phi_major(r, u, phi)
            add("C1:U<=Phi", hit and hit[:2], bool(hit and hit[2]))
        return out

    if code.case is CaseTag.C2:
        u = e["U"]
        P, ps = r.P, r.ps
        u_minor_rows = ((P, 2 * P, "P<k<=2P", 3), (2 * P, 3 * P, "2P<k<=3P", 4), (3 * P, ps, "3P<k<=p^s", 5))
        u_middle_rows = ((P, 2 * P, "P<k<=2P", 3), (2 * P, ps, "2P<k<=p^s", 4))
        # each table's caption allows either labelling of the two quadratic factors
        for a, b in (("F1", "F2"), ("F2", "F1")):
            fa, fb = e[a], e[b]
            tag = f"{a},{b}"
            if u >= fa >= fb:
                add(f"C2:U>=F>=F[{tag}]", _descending3(r, u, fa, fb, 2, (2, 2, 3, 4)))
            if fa >= u >= fb:
                add(f"C2:F>=U>=F[{tag}]", _descending3(r, fa, u, fb, 3, (2, 3, 3, 4)))
            if u <= fa <= fb:
                add(f"C2:U<=F<=F[{tag}]", _ascending3(r, u, fa, fb, 5, u_minor_rows))
            if fa <= u <= fb:
                add(f"C2:F<=U<=F[{tag}]", _ascending3(r, fa, u, fb, 4, u_middle_rows))
        return _dedupe(out)

    ordered = tuple(sorted(code.exponents, reverse=True))
    add("C3:sorted", _c3_sorted(r, ordered))
    return out


def _dedupe(lookups: list[TableLookup]) -> list[TableLookup]:
    """Drop repeats that arise when F1 and F2 carry equal exponents."""
    seen = set()
    out = []
    for hit in lookups:
        key = (hit.table.split("[")[0], hit.row, hit.value)
        if key in seen:
            continue
        seen.add(key)
        out.append(hit)
    return out


def distance_paper_table(code: CodeSpec):
    """Distance as read off the first applicable printed table (UNSUPPORTED if none)."""
    lookups = paper_table_lookups(code)
    return lookups[0].value if lookups else UNSUPPORTED
