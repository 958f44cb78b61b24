"""2-cyclotomic cosets modulo n = 2^m + 1.

Everything here is brute force: orbits are walked explicitly and leaders are
found by the min-over-orbit test.  The closed forms elsewhere in the package
are checked against these functions.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

# Lengths up to this bound get a cached numpy leader table.
TABLE_LIMIT = (1 << 24) + 1
_CHUNK = 1 << 20


class Family(enum.Enum):
    ODD_M = "2t+1"
    FOUR_T_PLUS_2 = "4t+2"
    EIGHT_T_PLUS_4 = "8t+4"
    UNSUPPORTED = "unsupported"


def _family_of(m: int) -> tuple[Family, int | None]:
    if m % 2 == 1:
        return Family.ODD_M, (m - 1) // 2
    if m % 4 == 2:
        return Family.FOUR_T_PLUS_2, (m - 2) // 4
    if m % 8 == 4:
        return Family.EIGHT_T_PLUS_4, (m - 4) // 8
    return Family.UNSUPPORTED, None


@dataclass(frozen=True)
class CodeLength:
    """The antiprimitive length n = 2^m + 1 together with its m-residue family."""

    m: int
    n: int = field(init=False)
    family: Family = field(init=False)
    t: int | None = field(init=False)

    def __post_init__(self):
        if not isinstance(self.m, (int, np.integer)) or self.m < 2:
            raise DomainError(f"m must be an integer >= 2, got {self.m!r}")
        m = int(self.m)
        n = (1 << m) + 1
        family, t = _family_of(m)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "t", t)
        # ord_n(2) = 2m: 2^m = -1 and no proper divisor of 2m outside m's divisors works.
        if pow(2, m, n) != n - 1:
            raise AssertionError(f"2^m != -1 mod {n}")
        for d in _divisors(2 * m):
            if d < 2 * m and pow(2, d, n) == 1:
                raise AssertionError(f"ord_{n}(2) = {d} != 2m")

    @property
    def order(self) -> int:
        """Multiplicative order of 2 modulo n."""
        return 2 * self.m


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


@dataclass(frozen=True)
class CosetRecord:
    leader: int
    size: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class DefiningSet:
    n: int
    b: int
    delta: int
    size: int
    leaders: tuple[int, ...]


def _modulus(L) -> int:
    if isinstance(L, CodeLength):
        return L.n
    n = int(L)
    if n < 3 or n % 2 == 0:
        raise DomainError(f"modulus must be odd and >= 3, got {n}")
    return n


def _check_residue(x: int, n: int) -> int:
    x = int(x)
    if not 0 <= x < n:
        raise DomainError(f"residue {x} outside [0, {n - 1}]")
    return x


def coset_of(x: int, L) -> CosetRecord:
    """Orbit of ``x`` under doubling modulo n.

    ``L`` is a :class:`CodeLength` or any odd modulus.
    """
    n = _modulus(L)
    x = _check_residue(x, n)
    orbit = [x]
    y = (2 * x) % n
    while y != x:
        orbit.append(y)
        y = (2 * y) % n
    elements = tuple(sorted(orbit))
    return CosetRecord(leader=elements[0], size=len(orbit), elements=elements)


def is_coset_leader(x: int, L) -> bool:
    """True iff ``x`` is the smallest element of its coset.

    For n = 2^m + 1 the coset is {y_k, n - y_k : 0 <= k < m} with y_k = 2^k x mod n,
    so only m doublings are walked and the test stops at the first smaller element.
    """
    n = _modulus(L)
    x = _check_residue(x, n)
    if x == 0:
        raise DomainError("the zero coset has no leader test; handle C_0 separately")
    if x % 2 == 0:
        return False
    if not isinstance(L, CodeLength):
        y = (2 * x) % n
        while y != x:
            if y < x:
                return False
            y = (2 * y) % n
        return True
    y = x
    for _ in range(L.m):
        if y < x or n - y < x:
            return False
        y <<= 1
        if y >= n:
            y -= n
    return True


class _LeaderTable:
    """Per-length arrays: coset minimum of every residue and sizes of leader cosets."""

    def __init__(self, L: CodeLength):
        n, m = L.n, L.m
        coset_min = np.empty(n, dtype=np.int32)
        for start in range(0, n, _CHUNK):
            x = np.arange(start, min(start + _CHUNK, n), dtype=np.int64)
            y = x.copy()
            best = x.copy()
            for _ in range(m):
                np.minimum(best, y, out=best)
                np.minimum(best, n - y, out=best)
                y <<= 1
                y[y >= n] -= n
            best[x == 0] = 0
            coset_min[start:start + len(x)] = best
        self.coset_min = coset_min
        leaders = np.flatnonzero(coset_min == np.arange(n, dtype=np.int32))
        sizes = np.zeros(len(leaders), dtype=np.int64)
        y = leaders.astype(np.int64)
        for k in range(1, 2 * m + 1):
            y = (y << 1) % n
            hit = (y == leaders) & (sizes == 0)
            sizes[hit] = k
        self.leaders = leaders
        self.sizes = sizes
        # prefix[j] = total size of the cosets with 1 <= leader < leaders[j]
        nonzero = np.where(leaders == 0, 0, sizes)
        self.prefix = np.concatenate(([0], np.cumsum(nonzero)))

    def leaders_in(self, lo: int, hi: int) -> np.ndarray:
        i = np.searchsorted(self.leaders, lo, side="left")
        j = np.searchsorted(self.leaders, hi, side="right")
        return self.leaders[i:j]

    def defining_size(self, delta: int) -> int:
        # cosets whose leader is in [1, delta - 1]
        j = int(np.searchsorted(self.leaders, delta - 1, side="right"))
        return int(self.prefix[j])

    def next_leader(self, x: int) -> int | None:
        i = int(np.searchsorted(self.leaders, x, side="left"))
        return int(self.leaders[i]) if i < len(self.leaders) else None


_tables: dict[int, _LeaderTable] = {}
_tables_lock = threading.Lock()


def leader_table(L: CodeLength) -> _LeaderTable | None:
    """The cached table for ``L``, built on first use; None above TABLE_LIMIT."""
    if L.n > TABLE_LIMIT:
        return None
    table = _tables.get(L.m)
    if table is None:
        with _tables_lock:
            table = _tables.get(L.m)
            if table is None:
                table = _LeaderTable(L)
                _tables[L.m] = table
    return table


def enumerate_leaders(L: CodeLength, lo: int, hi: int) -> list[CosetRecord]:
    """All nonzero coset leaders in [lo, hi], ascending."""
    if lo < 1 or hi >= L.n:
        raise DomainError(f"need 1 <= lo <= hi < {L.n}, got [{lo}, {hi}]")
    if lo > hi:
        return []
    table = leader_table(L)
    if table is not None:
        candidates = (int(x) for x in table.leaders_in(lo, hi))
    else:
        first = lo if lo % 2 else lo + 1
        candidates = (x for x in range(first, hi + 1, 2) if is_coset_leader(x, L))
    return [coset_of(x, L) for x in candidates]


def top_leaders(L: CodeLength, count: int) -> list[CosetRecord]:
    """The ``count`` largest nonzero coset leaders, descending."""
    if count < 1:
        raise DomainError("count must be positive")
    found = []
    for x in range(L.n - 2, 0, -2):
        if is_coset_leader(x, L):
            found.append(coset_of(x, L))
            if len(found) == count:
                break
    return found


def _check_delta(L: CodeLength, delta: int, b: int) -> None:
    if b not in (0, 1):
        raise DomainError(f"b must be 0 or 1, got {b!r}")
    if not 2 <= delta <= L.n:
        raise DomainError(f"designed distance {delta} outside [2, {L.n}]")


def defining_set(L: CodeLength, delta: int, b: int) -> DefiningSet:
    """C_1 u ... u C_{delta-1}, plus C_0 when b = 0."""
    _check_delta(L, delta, b)
    table = leader_table(L)
    if table is not None:
        leaders = [int(x) for x in table.leaders_in(1, delta - 1)]
        size = table.defining_size(delta)
    else:
        records = enumerate_leaders(L, 1, delta - 1)
        leaders = [r.leader for r in records]
        size = sum(r.size for r in records)
    if b == 0:
        leaders.insert(0, 0)
        size += 1
    return DefiningSet(n=L.n, b=b, delta=delta, size=size, leaders=tuple(leaders))


def bose_distance(L: CodeLength, delta: int, b: int) -> int:
    """Largest designed distance giving the same defining set as ``delta``.

    Every residue below delta is already in the set, so this is the first
    nonzero leader >= delta (or n when the set holds all nonzero residues).
    C_0 never changes the answer.
    """
    _check_delta(L, delta, b)
    table = leader_table(L)
    if table is not None:
        nxt = table.next_leader(delta)
        return L.n if nxt is None else nxt
    first = delta if delta % 2 else delta + 1
    for x in range(first, L.n, 2):
        if is_coset_leader(x, L):
            return x
    return L.n
