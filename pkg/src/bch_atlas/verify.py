"""Closed form vs. brute force sweeps, one per check id."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .closed_form import (
    LeaderVerdict, classify_leader, coset_cardinality, delta_ladder, envelope, is_supported,
)
from .cosets import CodeLength, Family, coset_of, is_coset_leader, leader_table, top_leaders
from .params import dim_small_delta, dimension_brute, dimension_closed, dimension_rows

SAMPLE_SEED = 20170504
SAMPLE_SIZE = 10_000
EXHAUSTIVE_LIMIT = 10_000_000
CHUNK = 4096


class UsageError(ValueError):
    pass


@dataclass
class VerificationReport:
    theorem_id: str
    m: int
    cases_checked: int = 0
    mismatches: list[tuple] = field(default_factory=list)
    elapsed: float = 0.0  # milliseconds
    sampled: bool = False
    seed: int | None = None

    @property
    def status(self) -> str:
        return "PASS" if not self.mismatches and self.cases_checked > 0 else "FAIL"

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "m": self.m,
            "status": self.status,
            "cases_checked": self.cases_checked,
            "mismatches": [list(map(_jsonable, mm)) for mm in self.mismatches],
            "elapsed_ms": round(self.elapsed, 3),
            "sampled": self.sampled,
            "seed": self.seed,
        }


def _jsonable(v):
    if isinstance(v, tuple):
        return list(v)
    return v


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("ATLAS_WORKERS", "1")))
    except ValueError:
        return 1


def run_chunks(fn: Callable[[Sequence], list], items: Sequence, workers: int) -> list:
    """Apply ``fn`` to consecutive chunks of ``items`` and concatenate results in input order."""
    chunks = [items[i:i + CHUNK] for i in range(0, len(items), CHUNK)]
    if workers <= 1 or len(chunks) <= 1:
        parts = [fn(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, chunks))
    return [x for part in parts for x in part]


def _select(candidates: Sequence[int], sample: int | None, report: VerificationReport) -> Sequence[int]:
    if sample is None and len(candidates) <= EXHAUSTIVE_LIMIT:
        return candidates
    size = min(sample or SAMPLE_SIZE, len(candidates))
    rng = np.random.default_rng(SAMPLE_SEED)
    idx = np.sort(rng.choice(len(candidates), size=size, replace=False))
    report.sampled = True
    report.seed = SAMPLE_SEED
    return [candidates[int(i)] for i in idx]


def _odd_range(lo: int, hi: int) -> range:
    lo += 1 - lo % 2
    return range(lo, hi + 1, 2)


def _sweep(report, L, candidates, check, sample, workers):
    chosen = _select(candidates, sample, report)

    def work(chunk):
        return [mm for x in chunk if (mm := check(x)) is not None]

    report.mismatches.extend(run_chunks(work, chosen, workers))
    report.cases_checked += len(chosen)


def _classification(report, L, sample, workers):
    def check(x):
        verdict = classify_leader(x, L)
        truth = is_coset_leader(x, L)
        if verdict not in (LeaderVerdict.LEADER, LeaderVerdict.NOT_LEADER) or \
                (verdict is LeaderVerdict.LEADER) != truth:
            return (x, verdict.value, truth)
        return None

    _sweep(report, L, _odd_range(1, envelope(L)), check, sample, workers)


def _ladder(report, L, sample, workers):
    ladder = delta_ladder(L)
    brute = top_leaders(L, 5)
    for i, (d, size, rec) in enumerate(zip(ladder.deltas, ladder.coset_sizes, brute), start=1):
        if (d, size) != (rec.leader, rec.size):
            report.mismatches.append((f"delta{i}", (d, size), (rec.leader, rec.size)))
    deltas = set(ladder.deltas)

    def check(x):
        truth = is_coset_leader(x, L)
        if truth != (x in deltas):
            return (x, x in deltas, truth)
        return None

    _sweep(report, L, _odd_range(ladder.deltas[-1] + 1, L.n - 1), check, sample, workers)


def _cardinality(report, L, sample, workers):
    def check(x):
        closed = coset_cardinality(x, L)
        truth = coset_of(x, L).size
        return None if closed == truth else (x, closed, truth)

    candidates = list(range(1, envelope(L) + 1)) + list(delta_ladder(L).deltas)
    _sweep(report, L, candidates, check, sample, workers)


def _dimensions(report, L, sample, workers):
    cases = [(b, d) for b in (1, 0) for row in dimension_rows(L, b) for d in _odd_range(row.lo, row.hi)]

    def check(case):
        b, d = case
        c = dimension_closed(L, d, b)
        o = dimension_brute(L, d, b)
        if (c.dimension, c.bose) != (o.dimension, o.bose):
            return ((d, b), (c.dimension, c.bose), (o.dimension, o.bose))
        return None

    _sweep(report, L, cases, check, sample, workers)


def _band(report, L, sample, workers):
    cases = [(1, d) for d in range(2, (1 << ((L.m - 1) // 2 + 1)) + 1)]
    cases += [(0, d) for d in range(2, (1 << ((L.m - 1) // 2)) + 3)]

    def check(case):
        b, d = case
        closed = dim_small_delta(L, d, b)
        truth = dimension_brute(L, d, b).dimension
        return None if closed == truth else ((d, b), closed, truth)

    _sweep(report, L, cases, check, sample, workers)


CHECKS: dict[str, tuple[Family | None, Callable, str]] = {
    "3.1": (Family.ODD_M, _classification, "leader classification below the envelope, odd m"),
    "3.5": (Family.ODD_M, _ladder, "five largest leaders, odd m"),
    "3.6": (Family.ODD_M, _cardinality, "coset sizes, odd m"),
    "3.7": (Family.ODD_M, _dimensions, "dimension rows, odd m"),
    "4.1": (Family.FOUR_T_PLUS_2, _classification, "leader classification, m = 4t+2"),
    "4.5": (Family.FOUR_T_PLUS_2, _ladder, "five largest leaders, m = 4t+2"),
    "4.6": (Family.FOUR_T_PLUS_2, _cardinality, "coset sizes, m = 4t+2"),
    "4.7": (Family.FOUR_T_PLUS_2, _dimensions, "dimension rows, m = 4t+2"),
    "5.1": (Family.EIGHT_T_PLUS_4, _classification, "leader classification, m = 8t+4"),
    "5.2": (Family.EIGHT_T_PLUS_4, _ladder, "five largest leaders, m = 8t+4"),
    "5.3": (Family.EIGHT_T_PLUS_4, _cardinality, "coset sizes, m = 8t+4"),
    "5.4": (Family.EIGHT_T_PLUS_4, _dimensions, "dimension rows, m = 8t+4"),
    "2.4-band": (None, _band, "small-delta dimension formulas"),
}


def verify(theorem_id: str, m: int, sample: int | None = None, workers: int | None = None) -> VerificationReport:
    if theorem_id not in CHECKS:
        raise UsageError(f"unknown check id {theorem_id!r}; known: {', '.join(CHECKS)}")
    family, check, _ = CHECKS[theorem_id]
    try:
        L = CodeLength(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if family is not None and (L.family is not family or not is_supported(L)):
        raise UsageError(f"check {theorem_id} does not apply to m = {m} ({L.family.value}, t = {L.t})")
    if family is None and m < 3:
        raise UsageError("the small-delta band needs m >= 3")
    if sample is not None and sample < 1:
        raise UsageError("sample size must be positive")
    workers = default_workers() if workers is None else workers
    report = VerificationReport(theorem_id, m)
    start = time.perf_counter()
    leader_table(L)  # build before any fan-out
    check(report, L, sample, workers)
    report.elapsed = (time.perf_counter() - start) * 1000
    return report


def verify_all(ms: Iterable[int], workers: int | None = None) -> list[VerificationReport]:
    """Every applicable check for each m."""
    reports = []
    for m in ms:
        L = CodeLength(m)
        for tid, (family, _, _) in CHECKS.items():
            if family is None or (L.family is family and is_supported(L)):
                reports.append(verify(tid, m, workers=workers))
    return reports
