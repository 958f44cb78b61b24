"""Deterministic CSV / JSON tables."""

from __future__ import annotations

import csv
import io
import json
import sys

from .closed_form import delta_ladder, ia_partition, interval_locate
from .cosets import CodeLength, coset_of, enumerate_leaders
from .errors import DomainError, OutOfTheoremRange
from .gf2 import build_field, generator_polynomial, is_self_reciprocal
from .params import dimension_brute, dimension_closed
from .verify import default_workers, run_chunks

KINDS = ("leaders", "deltas", "dims", "partition", "genpoly")


def leaders_rows(m: int, lo: int | None = None, hi: int | None = None, workers: int = 1) -> list[dict]:
    L = CodeLength(m)
    lo = 1 if lo is None else lo
    hi = L.n - 1 if hi is None else hi
    if lo < 1 or hi >= L.n:
        raise DomainError(f"need 1 <= lo <= hi < {L.n}")
    starts = list(range(lo, hi + 1, 1 << 16))

    def work(chunk):
        out = []
        for s in chunk:
            out += enumerate_leaders(L, s, min(s + (1 << 16) - 1, hi))
        return out

    records = run_chunks(work, starts, workers) if starts else []
    return [{"leader": r.leader, "size": r.size} for r in records]


def deltas_rows(m: int) -> list[dict]:
    L = CodeLength(m)
    ladder = delta_ladder(L)
    return [{"i": i, "delta": d, "coset_size": coset_of(d, L).size}
            for i, d in enumerate(ladder.deltas, start=1)]


def _spec_row(spec, source: str) -> dict:
    return {
        "m": spec.length.m, "n": spec.n, "b": spec.b, "delta": spec.delta,
        "dimension": spec.dimension, "defining_size": spec.defining_size,
        "bose": spec.bose, "distance_bound": spec.distance_bound, "source": source,
    }


def dims_rows(m: int, delta: int, b: int, mode: str = "both") -> list[dict]:
    L = CodeLength(m)
    rows = []
    if mode in ("closed", "both"):
        try:
            rows.append(_spec_row(dimension_closed(L, delta, b), "closed"))
        except OutOfTheoremRange:
            if mode == "closed":
                raise
    if mode in ("brute", "both"):
        rows.append(_spec_row(dimension_brute(L, delta, b), "brute"))
    return rows


def partition_rows(scheme: str, t: int) -> list[dict]:
    part = ia_partition(scheme, t)
    rows = []
    for s, (a, b) in enumerate(part.intervals, start=1):
        i, lam = interval_locate(s, t, scheme)
        rows.append({"s": s, "a": a, "b": b, "i": i, "lambda": lam})
    return rows


def genpoly_rows(m: int, delta: int, b: int) -> list[dict]:
    L = CodeLength(m)
    F = build_field(L)
    g = generator_polynomial(F, L, delta, b)
    return [{
        "m": m, "n": L.n, "b": b, "delta": delta,
        "degree": g.degree, "dimension": L.n - g.degree,
        "modulus": F.modulus_polynomial.serialize(),
        "generator": g.serialize(),
        "self_reciprocal": is_self_reciprocal(g),
    }]


def build_rows(kind: str, params: dict) -> list[dict]:
    workers = params.get("workers") or default_workers()
    if kind == "leaders":
        return leaders_rows(params["m"], params.get("lo"), params.get("hi"), workers)
    if kind == "deltas":
        return deltas_rows(params["m"])
    if kind == "dims":
        return dims_rows(params["m"], params["delta"], params["b"], params.get("mode", "both"))
    if kind == "partition":
        return partition_rows(params["scheme"], params["t"])
    if kind == "genpoly":
        return genpoly_rows(params["m"], params["delta"], params["b"])
    raise DomainError(f"unknown table kind {kind!r}")


def render(kind: str, params: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        public = {k: v for k, v in params.items() if k != "workers" and v is not None}
        return json.dumps({"kind": kind, "params": public, "rows": rows}, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in row.items()})
        return buf.getvalue()
    raise DomainError(f"unknown format {fmt!r}")


def write(text: str, sink: str | None) -> None:
    if sink in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(sink, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def emit_table(kind: str, params: dict, format: str = "csv", sink: str | None = None) -> None:
    """Build the table and write it to ``sink`` (a path, or standard output for None / '-')."""
    rows = build_rows(kind, params)
    write(render(kind, params, rows, format), sink)
