"""Exhaustive zero census over all physical 3j symbols with a + b + c <= j_max.

Each physical symbol is one Regge magic square, so the census walks squares.
Work is sharded by first row (equivalently by the triple (a, b, c)); the
kernel in :mod:`threej_zeros.kernels` screens every square of a shard with
modular arithmetic, and only squares whose residues all vanish come back to
Python. Those are split into odd-J symmetry zeros and candidates for
polynomial zeros; candidates are reduced to canonical squares and verified
exactly once per orbit in the collector.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import OutOfRange
from .exact import HalfInt
from .kernels import inverse_factorial_tables, screen_rows
from .threej import (
    ReggeSquare,
    ThreeJ,
    _is_prime,
    canonical_entries,
    fixed_by_odd_symmetry,
    from_regge,
    iter_regge_squares,
    raynal_order,
    regge_value,
)
from .zeros import NON_ZERO, POLYNOMIAL_ZERO, TRIVIAL_ZERO, ZeroRecord

__all__ = [
    "CensusConfig",
    "CensusReport",
    "enumerate_symbols",
    "run_census",
    "verify_bryant_jahn",
    "bowick_counts",
    "shards",
    "write_report",
    "format_jsonl",
    "format_csv",
    "format_table",
    "BOWICK_FIGURE",
]

BOWICK_FIGURE = 39
OUTPUT_FORMATS = ("jsonl", "csv", "table")


def _as_range(r) -> tuple[int, int] | None:
    if r is None:
        return None
    lo, hi = r
    return int(lo), int(hi)


@dataclass(frozen=True)
class CensusConfig:
    j_max: HalfInt
    include_half_integer: bool = True
    degree_filter: tuple[int, int] | None = None  # inclusive
    order_filter: tuple[int, int] | None = None
    jobs: int = 1
    output_format: str = "jsonl"
    output_path: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.j_max, HalfInt):
            object.__setattr__(self, "j_max", HalfInt.of(self.j_max))
        object.__setattr__(self, "degree_filter", _as_range(self.degree_filter))
        object.__setattr__(self, "order_filter", _as_range(self.order_filter))
        if self.j_max.twice < 0:
            raise OutOfRange(f"j_max must be non-negative, got {self.j_max}")
        if self.jobs < 1:
            raise OutOfRange(f"jobs must be at least 1, got {self.jobs}")
        if self.output_format not in OUTPUT_FORMATS:
            raise OutOfRange(f"output_format must be one of {OUTPUT_FORMATS}")

    @property
    def J_max(self) -> int:
        # J = a + b + c is an integer for every physical symbol
        return self.j_max.twice // 2

    def keeps(self, rec: ZeroRecord) -> bool:
        for rng, v in ((self.degree_filter, rec.degree), (self.order_filter, rec.order)):
            if rng is not None and not rng[0] <= v <= rng[1]:
                return False
        return True


@dataclass
class CensusReport:
    config: CensusConfig
    total: int = 0
    counts: dict[str, int] = field(default_factory=lambda: {NON_ZERO: 0, TRIVIAL_ZERO: 0, POLYNOMIAL_ZERO: 0})
    records: list[ZeroRecord] = field(default_factory=list)
    zero_symbols: int = 0  # polynomial-zero symbols before deduplication

    @property
    def table(self) -> dict[int, dict[int, int]]:
        """counts[degree][order] over the canonical records."""
        out: dict[int, dict[int, int]] = {}
        for r in self.records:
            row = out.setdefault(r.degree, {})
            row[r.order] = row.get(r.order, 0) + 1
        return out


def _row_half_ok(row: Sequence[int], include_half_integer: bool) -> bool:
    # 2a = R12 + R13 etc.: the first row fixes whether (a, b, c) are integers
    return include_half_integer or (row[0] % 2 == row[1] % 2 == row[2] % 2)


def shards(J_max: int, include_half_integer: bool = True) -> list[tuple[int, int, int]]:
    """First rows (R11, R12, R13) of every square with J <= J_max, in census order."""
    out = []
    for J in range(J_max + 1):
        for r11 in range(J + 1):
            for r12 in range(J - r11 + 1):
                row = (r11, r12, J - r11 - r12)
                if _row_half_ok(row, include_half_integer):
                    out.append(row)
    return out


def enumerate_symbols(j_max, include_half_integer: bool = True) -> Iterator[ThreeJ]:
    """Every physical symbol with a + b + c <= j_max."""
    j = j_max if isinstance(j_max, HalfInt) else HalfInt.of(j_max)
    if j.twice < 0:
        raise OutOfRange(f"j_max must be non-negative, got {j}")
    for J in range(j.twice // 2 + 1):
        for e in iter_regge_squares(J):
            if _row_half_ok(e[:3], include_half_integer):
                yield from_regge(ReggeSquare(e))


# ---------------------------------------------------------------------------
# workers
# ---------------------------------------------------------------------------

_INV_CACHE: dict[int, object] = {}


def _invfact(n: int):
    if n not in _INV_CACHE:
        _INV_CACHE.clear()
        _INV_CACHE[n] = inverse_factorial_tables(n)
    return _INV_CACHE[n]


def _scan_batch(args: tuple[list[tuple[int, int, int]], int]) -> tuple[int, int, Counter]:
    """(scanned, odd-J symmetry zeros, Counter of canonical candidate squares)."""
    rows, J_max = args
    n, cand = screen_rows(rows, _invfact(J_max + 1))
    trivial = 0
    canon: Counter = Counter()
    for e in map(tuple, cand.tolist()):
        J = e[0] + e[1] + e[2]
        if J % 2 and fixed_by_odd_symmetry(e):
            trivial += 1
        else:
            canon[canonical_entries(e)[0]] += 1
    return n, trivial, canon


def _batches(rows: list[tuple[int, int, int]], target: int) -> list[list[tuple[int, int, int]]]:
    """Consecutive groups of shards holding roughly ``target`` squares each."""
    out: list[list[tuple[int, int, int]]] = []
    cur: list[tuple[int, int, int]] = []
    size = 0
    for r in rows:
        J = sum(r)
        cur.append(r)
        size += (J - r[0] + 1) * (J - r[1] + 1)
        if size >= target:
            out.append(cur)
            cur, size = [], 0
    if cur:
        out.append(cur)
    return out


def run_census(cfg: CensusConfig) -> CensusReport:
    rows = shards(cfg.J_max, cfg.include_half_integer)
    batches = [(b, cfg.J_max) for b in _batches(rows, 20000)]
    if cfg.jobs == 1 or len(batches) <= 1:
        parts = [_scan_batch(b) for b in batches]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_scan_batch, batches))

    rep = CensusReport(cfg)
    members: Counter = Counter()
    for n, trivial, canon in parts:
        rep.total += n
        rep.counts[TRIVIAL_ZERO] += trivial
        members.update(canon)

    records = []
    for sq in sorted(members):
        r = ReggeSquare(sq)
        # one exact check per orbit; zero-ness is orbit invariant
        if not regge_value(r).is_zero():
            continue
        rep.counts[POLYNOMIAL_ZERO] += members[sq]
        records.append(ZeroRecord(r, r.J, min(sq), raynal_order(from_regge(r)), "census"))
    rep.zero_symbols = rep.counts[POLYNOMIAL_ZERO]
    rep.counts[NON_ZERO] = rep.total - rep.counts[TRIVIAL_ZERO] - rep.counts[POLYNOMIAL_ZERO]
    rep.records = [x for x in records if cfg.keeps(x)]
    if cfg.output_path:
        write_report(rep, cfg.output_path, cfg.output_format)
    return rep


def verify_bryant_jahn(report: CensusReport) -> bool:
    """True iff no polynomial-zero record has prime J + 1."""
    return all(not _is_prime(r.J + 1) for r in report.records)


def bowick_counts(report: CensusReport) -> tuple[int, int]:
    """(all canonical polynomial zeros, those with degree >= 1 and every entry >= 1)."""
    allz = len(report.records)
    reduced = sum(1 for r in report.records if r.degree >= 1 and min(r.square.entries) >= 1)
    return allz, reduced


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

_COLUMNS = ("two_j", "two_m", "regge", "J", "degree", "order", "class", "generator")


def _record_dict(r: ZeroRecord) -> dict:
    s = r.symbol
    return {
        "two_j": [s.two_a, s.two_b, s.two_c],
        "two_m": [s.two_alpha, s.two_beta, s.two_gamma],
        "regge": list(r.square.entries),
        "J": r.J,
        "degree": r.degree,
        "order": r.order,
        "class": "polynomial",
        "generator": r.generator,
    }


def format_jsonl(report: CensusReport) -> str:
    return "".join(json.dumps(_record_dict(r), separators=(",", ":")) + "\n" for r in report.records)


def format_csv(report: CensusReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_COLUMNS)
    for r in report.records:
        d = _record_dict(r)
        w.writerow([" ".join(map(str, v)) if isinstance(v, list) else v for v in (d[c] for c in _COLUMNS)])
    return buf.getvalue()


def format_table(report: CensusReport) -> str:
    cfg = report.config
    lines = [
        f"census J <= {cfg.J_max}" + ("" if cfg.include_half_integer else " (integer j only)"),
        f"symbols scanned: {report.total}",
    ]
    for k in (NON_ZERO, TRIVIAL_ZERO, POLYNOMIAL_ZERO):
        lines.append(f"  {k}: {report.counts[k]}")
    lines.append(f"canonical polynomial zeros: {len(report.records)}")
    tab = report.table
    if tab:
        orders = sorted({o for row in tab.values() for o in row})
        lines.append("degree \\ order " + " ".join(f"{o:>5}" for o in orders))
        for d in sorted(tab):
            lines.append(f"{d:>14} " + " ".join(f"{tab[d].get(o, 0):>5}" for o in orders))
    for r in report.records:
        lines.append(f"{r.symbol}  J={r.J} degree={r.degree} order={r.order}")
    return "\n".join(lines) + "\n"


FORMATTERS = {"jsonl": format_jsonl, "csv": format_csv, "table": format_table}


def write_report(report: CensusReport, path: str, fmt: str = "jsonl") -> None:
    text = FORMATTERS[fmt](report)
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
