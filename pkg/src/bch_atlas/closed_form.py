"""Closed-form leader classification, the five largest leaders, coset sizes,
and the two interval partitions used to rule out leaders above the second
largest one."""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .cosets import CodeLength, Family
from .errors import DomainError, OutOfTheoremRange, UnsupportedFamily

# Smallest t for which the family's results hold.
T_FLOOR = {Family.ODD_M: 5, Family.FOUR_T_PLUS_2: 2, Family.EIGHT_T_PLUS_4: 1}
DELTA1_COSET_SIZE = {Family.ODD_M: 2, Family.FOUR_T_PLUS_2: 4, Family.EIGHT_T_PLUS_4: 8}


class LeaderVerdict(enum.Enum):
    LEADER = "leader"
    NOT_LEADER = "not-leader"
    OUT_OF_THEOREM_RANGE = "out-of-range"
    UNSUPPORTED_FAMILY = "unsupported"


def is_supported(L: CodeLength) -> bool:
    floor = T_FLOOR.get(L.family)
    return floor is not None and L.t >= floor


def require_supported(L: CodeLength) -> None:
    if L.family is Family.UNSUPPORTED:
        raise UnsupportedFamily(f"m = {L.m} is divisible by 8; no closed forms")
    if L.t < T_FLOOR[L.family]:
        raise UnsupportedFamily(
            f"m = {L.m} ({L.family.value}) needs t >= {T_FLOOR[L.family]}, has t = {L.t}")


def _leader_ranges(family: Family, t: int) -> list[tuple[int, int, bool]]:
    """Odd-x ranges (lo, hi, is_leader), unsorted."""
    if family is Family.ODD_M:
        p = 1 << (t + 1)
        h = 1 << t
        return [
            (1, p - 3, True),
            (p - 1, p + 1, False),
            (p + 3, p + h - 3, True),
            (p + h - 1, p + h + 1, False),
            (p + h + 3, 2 * p - 9, True),
            (2 * p - 7, 2 * p + 7, False),
        ]
    if family is Family.FOUR_T_PLUS_2:
        p = 1 << (2 * t + 2)
        q = 1 << (2 * t)
        a = p + 2 * q
        return [
            (1, p // 2 - 1, True),
            (p // 2 + 1, p // 2 + 1, False),
            (p // 2 + 3, p - 5, True),
            (p - 3, p + 3, False),
            (p + 5, p + q - 3, True),
            (p + q - 1, p + q + 1, False),
            (p + q + 3, a - 3, True),
            (a - 1, a + 3, False),
        ]
    if family is Family.EIGHT_T_PLUS_4:
        p = 1 << (4 * t + 3)
        q = 1 << (4 * t + 1)
        top = p + 2 * q + q
        return [
            (1, p // 2 - 1, True),
            (p // 2 + 1, p // 2 + 1, False),
            (p // 2 + 3, p - 5, True),
            (p - 3, p + 3, False),
            (p + 5, p + q - 3, True),
            (p + q - 1, p + q + 1, False),
            (p + q + 3, p + 2 * q - 3, True),
            (p + 2 * q - 1, p + 2 * q + 3, False),
            (p + 2 * q + 5, top - 3, True),
            (top - 1, top + 1, False),
        ]
    raise UnsupportedFamily(family.value)


@lru_cache(maxsize=None)
def decided_ranges(family: Family, t: int) -> tuple[tuple[int, int, bool], ...]:
    """Sorted decided ranges; raises if they fail to tile the odd numbers up to the envelope."""
    ranges = sorted(_leader_ranges(family, t))
    expected = 1
    for lo, hi, _ in ranges:
        if lo != expected or hi < lo or lo % 2 == 0 or hi % 2 == 0:
            raise AssertionError(f"decided ranges for {family.value}, t={t} do not tile: {ranges}")
        expected = hi + 2
    return tuple(ranges)


def envelope(L: CodeLength) -> int:
    """Largest x decided by the classification."""
    require_supported(L)
    return decided_ranges(L.family, L.t)[-1][1]


def classify_leader(x: int, L: CodeLength) -> LeaderVerdict:
    if not 1 <= x < L.n:
        raise DomainError(f"x = {x} outside [1, {L.n - 1}]")
    if x % 2 == 0:
        raise DomainError(f"x = {x} is even; even residues are never leaders")
    if not is_supported(L):
        return LeaderVerdict.UNSUPPORTED_FAMILY
    ranges = decided_ranges(L.family, L.t)
    if x > ranges[-1][1]:
        return LeaderVerdict.OUT_OF_THEOREM_RANGE
    lo, hi, leader = ranges[bisect_right(ranges, (x, float("inf"), True)) - 1]
    assert lo <= x <= hi
    return LeaderVerdict.LEADER if leader else LeaderVerdict.NOT_LEADER


@dataclass(frozen=True)
class DeltaLadder:
    deltas: tuple[int, int, int, int, int]
    coset_sizes: tuple[int, int, int, int, int]


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise RuntimeError(f"{a} is not divisible by {b}: family misclassified")
    return q


def delta_ladder(L: CodeLength, uncorrected: bool = False) -> DeltaLadder:
    """The five largest nonzero coset leaders and their coset sizes.

    For m = 12 the form d4 - 38 = 653 is not a leader (411 is in
    its coset); the true fifth leader is d4 - 6 = 685, which is what this returns
    unless ``uncorrected`` is set.
    """
    require_supported(L)
    n, t = L.n, L.t
    if L.family is Family.ODD_M:
        d1 = _exact_div(n, 3)
        d2 = _exact_div(n - 3, 6)
        rest = [d2, d2 - 2, d2 - 8, d2 - 10]
    elif L.family is Family.FOUR_T_PLUS_2:
        d1 = _exact_div(n, 5)
        d2 = (1 << (4 * t - 1)) + _exact_div((1 << (4 * t)) - 1, 5)
        if t == 2:
            rest = [d2, d2 - 6, d2 - 8, d2 - 24]
        else:
            rest = [d2, d2 - 6, d2 - 96, d2 - 102]
    else:
        d1 = _exact_div(3 * n, 17)
        if t == 1:
            d2 = d1 - 6
            d3 = d2 - 24
            d4 = d3 - 2
            d5 = d4 - 38 if uncorrected else d4 - 6
        else:
            d2 = d1 - _exact_div(d1 + 45, 128)
            d3 = d2 - 90
            if t == 2:
                d4 = d3 - 6
                d5 = d4 - 384
            else:
                d4 = d3 - 22950
                d5 = d4 - 90
        rest = [d2, d3, d4, d5]
    sizes = (DELTA1_COSET_SIZE[L.family],) + (2 * L.m,) * 4
    return DeltaLadder(deltas=(d1, *rest), coset_sizes=sizes)


def coset_cardinality(x: int, L: CodeLength) -> int:
    ladder = delta_ladder(L)
    if x in ladder.deltas:
        return ladder.coset_sizes[ladder.deltas.index(x)]
    if 1 <= x <= envelope(L):
        return 2 * L.m
    raise OutOfTheoremRange(f"no cardinality formula for x = {x} at m = {L.m}; use coset_of")


class Scheme(enum.Enum):
    IA1 = "ia1"
    IA2 = "ia2"


IA_FLOOR = {Scheme.IA1: 5, Scheme.IA2: 2}


@dataclass(frozen=True)
class IntervalPartition:
    scheme: Scheme
    t: int
    intervals: tuple[tuple[int, int], ...]

    @property
    def span(self) -> tuple[int, int]:
        return self.intervals[0][0], self.intervals[-1][1]


def _scheme(scheme) -> Scheme:
    return scheme if isinstance(scheme, Scheme) else Scheme(str(scheme).lower())


def _step(scheme: Scheme, level: int) -> tuple[int, int]:
    """(shift for copied intervals, right end of the new last interval) at ``level``."""
    if scheme is Scheme.IA1:
        return 1 << (2 * level - 7), 1 << (2 * level - 5)
    return 3 << (4 * level - 10), 3 << (4 * level - 6)


@lru_cache(maxsize=None)
def _build(scheme: Scheme, t: int) -> tuple[tuple[int, int], ...]:
    # IA1 starts from [1, 2] at level 3, IA2 from [1, 12] at level 2.
    if scheme is Scheme.IA1:
        base, intervals = 3, [(1, 2)]
    else:
        base, intervals = 2, [(1, 12)]
    for level in range(base + 1, t + 1):
        shift, right = _step(scheme, level)
        half = len(intervals)
        copies = [(a + shift, b + shift) for a, b in intervals[:half - 1]]
        last = (intervals[half - 1][0] + shift, right)
        intervals = intervals + copies + [last]
    return tuple(intervals)


def ia_partition(scheme, t: int) -> IntervalPartition:
    """Partition [1, 2^(2t-5)] (IA1) or [1, 3*2^(4t-6)] (IA2) into 2^(t-3) / 2^(t-2) intervals."""
    scheme = _scheme(scheme)
    if t < IA_FLOOR[scheme]:
        raise DomainError(f"{scheme.value} needs t >= {IA_FLOOR[scheme]}, got {t}")
    return IntervalPartition(scheme=scheme, t=t, intervals=_build(scheme, t))


def interval_count(scheme, t: int) -> int:
    scheme = _scheme(scheme)
    return 1 << (t - 3 if scheme is Scheme.IA1 else t - 2)


def interval_locate(s: int, t: int, scheme) -> tuple[int, int]:
    """(i, lambda) with i the lowest set bit of s and lambda the higher bits at stride 4 or 16."""
    scheme = _scheme(scheme)
    if t < IA_FLOOR[scheme]:
        raise DomainError(f"{scheme.value} needs t >= {IA_FLOOR[scheme]}, got {t}")
    if not 1 <= s <= interval_count(scheme, t):
        raise DomainError(f"s = {s} outside [1, {interval_count(scheme, t)}]")
    i = (s & -s).bit_length() - 1
    stride_bits = 2 if scheme is Scheme.IA1 else 4
    lam = 0
    rest = s >> (i + 1)
    pos = 0
    while rest:
        if rest & 1:
            lam |= 1 << (stride_bits * pos)
        rest >>= 1
        pos += 1
    return i, lam


def interval_offset(i: int, lam: int, scheme) -> int:
    """Offset of I_{i,lambda} from I_{2^i}.

    IA2 copies are shifted by 3 * 2^(4p+2) for bit p, hence the factor 3.
    """
    scheme = _scheme(scheme)
    if scheme is Scheme.IA1:
        return lam << (2 * i + 3)
    return 3 * (lam << (4 * i + 6))


def reconstruct_interval(s: int, t: int, scheme) -> tuple[int, int]:
    scheme = _scheme(scheme)
    i, lam = interval_locate(s, t, scheme)
    a, b = ia_partition(scheme, t).intervals[(1 << i) - 1]
    off = interval_offset(i, lam, scheme)
    return a + off, b + off
