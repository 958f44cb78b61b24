"""Dimensions and Bose distances of C(n, 2, delta, 1) and its b = 0 companion.

``b = 0`` always means the defining set C_0 u C_1 u ... u C_{delta-1}, i.e. the
code usually written C(n, 2, delta + 1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd
from typing import NamedTuple

from .closed_form import delta_ladder, require_supported
from .cosets import CodeLength, Family, bose_distance, defining_set
from .errors import DomainError, OutOfTheoremRange, ParityError


@dataclass(frozen=True)
class CodeSpec:
    length: CodeLength
    b: int
    delta: int
    dimension: int
    defining_size: int
    bose: int
    distance_bound: int

    @property
    def n(self) -> int:
        return self.length.n


def _distance_bound(bose: int, b: int) -> int:
    # b = 0 sets are symmetric around 0, giving 2*bose - 1 consecutive roots.
    return bose if b == 1 else 2 * bose


def dimension_brute(L: CodeLength, delta: int, b: int) -> CodeSpec:
    T = defining_set(L, delta, b)
    bose = bose_distance(L, delta, b)
    return CodeSpec(L, b, delta, L.n - T.size, T.size, bose, _distance_bound(bose, b))


@dataclass(frozen=True)
class Row:
    """One piece of the piecewise dimension formula: k = base - slope*delta on [lo, hi]."""

    lo: int
    hi: int
    base: int
    slope: int
    bose: int | None  # None: the Bose distance is delta itself
    label: str

    def dimension(self, delta: int) -> int:
        return self.base - self.slope * delta


def dimension_rows(L: CodeLength, b: int = 1) -> list[Row]:
    """The rows for the narrow-sense code (b=1) or the C_0-augmented code (b=0)."""
    require_supported(L)
    n, m, t = L.n, L.m, L.t
    if L.family is Family.ODD_M:
        p, h = 1 << (t + 1), 1 << t
        rows = [
            Row(p + 3, p + h - 3, n + 5 * m, m, None, "affine-1"),
            Row(p + h + 3, 2 * p - 9, n + 9 * m, m, None, "affine-2"),
            Row(2 * p - 7, 2 * p + 9, n - 2 * p * m + 16 * m, 0, 2 * p + 9, "flat"),
        ]
        ladder_const = 3
    elif L.family is Family.FOUR_T_PLUS_2:
        p, q = 1 << (2 * t + 2), 1 << (2 * t)
        a = p + 2 * q
        rows = [
            Row(p // 2 + 3, p - 5, n + 3 * m, m, None, "affine-1"),
            Row(p + 5, p + q - 3, n + 11 * m, m, None, "affine-2"),
            Row(p + q + 3, a - 3, n + 15 * m, m, None, "affine-3"),
            Row(a - 1, a + 5, n - m * a + 16 * m, 0, a + 5, "flat"),
        ]
        ladder_const = 5
    else:
        p, q = 1 << (4 * t + 3), 1 << (4 * t + 1)
        top = p + 3 * q
        rows = [
            Row(p // 2 + 3, p - 5, n + 3 * m, m, None, "affine-1"),
            Row(p + 5, p + q - 3, n + 11 * m, m, None, "affine-2"),
            Row(p + q + 3, p + 2 * q - 3, n + 15 * m, m, None, "affine-3"),
            Row(p + 2 * q + 5, top - 3, n + 21 * m, m, None, "affine-4"),
            Row(top - 1, top + 3, n - m * top + 22 * m, 0, top + 3, "flat"),
        ]
        ladder_const = 9
    d = delta_ladder(L).deltas
    for i in range(1, 5):
        rows.append(Row(d[i] + 2, d[i - 1], 2 * m * (i - 1) + ladder_const, 0, d[i - 1], f"ladder-{i}"))
    if b == 1:
        rows.append(Row(d[0] + 2, n, 1, 0, n, "terminal"))
    else:
        rows = [Row(r.lo, r.hi, r.base - 1, r.slope, r.bose, r.label) for r in rows]
    return rows


def find_row(L: CodeLength, delta: int, b: int) -> Row:
    if delta % 2 == 0:
        raise ParityError(f"closed forms need odd delta, got {delta}")
    for row in dimension_rows(L, b):
        if row.lo <= delta <= row.hi:
            return row
    raise OutOfTheoremRange(
        f"delta = {delta} (m = {L.m}, b = {b}) is in no closed-form row; use dimension_brute")


def dimension_closed(L: CodeLength, delta: int, b: int) -> CodeSpec:
    if b not in (0, 1):
        raise DomainError(f"b must be 0 or 1, got {b!r}")
    row = find_row(L, delta, b)
    k = row.dimension(delta)
    bose = delta if row.bose is None else row.bose
    return CodeSpec(L, b, delta, k, L.n - k, bose, _distance_bound(bose, b))


class DimensionBound(NamedTuple):
    value: int
    vacuous: bool


def dim_lower_bound_generic(n: int, m_ord: int, delta: int, narrow_binary_odd: bool) -> DimensionBound:
    """k >= n - ord*(delta-1), halved for binary narrow-sense codes with odd delta."""
    if delta < 2:
        raise DomainError("delta must be >= 2")
    if narrow_binary_odd:
        if delta % 2 == 0:
            raise ParityError("the refined bound needs odd delta")
        value = n - m_ord * (delta - 1) // 2
    else:
        value = n - m_ord * (delta - 1)
    return DimensionBound(value, value <= 0)


def dim_aly(n: int, q: int, m_ord: int, delta: int) -> int | None:
    """Exact narrow-sense dimension for small delta, or None outside its window."""
    if gcd(q, n) != 1:
        raise DomainError(f"gcd({q}, {n}) != 1")
    qm = q ** m_ord
    if not q ** (m_ord // 2) <= n <= qm - 1:
        return None
    limit = min(Fraction(n * q ** ((m_ord + 1) // 2), qm - 1), Fraction(n))
    if not 2 <= delta <= limit:
        return None
    return n - m_ord * ceil(Fraction((delta - 1) * (q - 1), q))


def dim_small_delta(L: CodeLength, delta: int, b: int) -> int | None:
    """Known small-delta dimension formulas with q = 2; None outside their window."""
    m, n = L.m, L.n
    h = (m - 1) // 2
    if b == 1:
        top = 1 << (h + 1)
        if not 2 <= delta <= top:
            return None
        if m % 2 == 0 or delta <= top - 2:
            return n - 2 * m * (delta - 1 - (delta - 1) // 2)
        return n - 2 * m * (top - 2 - (delta - 1) // 2)
    if b == 0:
        # C_0 u ... u C_{delta-1} is the b=0 code of designed distance delta + 1.
        dd = delta + 1
        if not 3 <= dd <= (1 << h) + 3:
            return None
        return (1 << m) - 2 * m * (dd - 2 - (dd - 2) // 2)
    raise DomainError(f"b must be 0 or 1, got {b!r}")
