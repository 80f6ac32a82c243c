"""Brute-force enumeration of tournaments and lmax codes; the ground truth for every count."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator

from .errors import CapExceeded
from .forest import BiorderedCode, is_ascending_direct, parent_functions, type_of
from .tournament import Tournament, is_alt_acyclic, is_semiacyclic, num_pairs

DEFAULT_CAP = 8


def _check(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")


def enumerate_tournaments(n: int, cap: int = DEFAULT_CAP) -> Iterator[Tournament]:
    """All tournaments on {1..n} in ascending orientation-mask order."""
    _check(n, cap)
    for bits in range(1 << num_pairs(n)):
        yield Tournament(n, bits)


@dataclass
class CountReport:
    n: int
    total: int = 0
    alt_acyclic: int = 0
    ascending: int = 0
    semiacyclic: int = 0
    by_type: dict = field(default_factory=dict)

    def merge(self, other: CountReport) -> CountReport:
        by_type = Counter(self.by_type)
        by_type.update(other.by_type)
        return CountReport(
            self.n,
            self.total + other.total,
            self.alt_acyclic + other.alt_acyclic,
            self.ascending + other.ascending,
            self.semiacyclic + other.semiacyclic,
            dict(sorted(by_type.items())),
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "alt_acyclic": self.alt_acyclic,
            "ascending": self.ascending,
            "semiacyclic": self.semiacyclic,
            "by_type": [{"i": i, "j": j, "count": c} for (i, j), c in sorted(self.by_type.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> CountReport:
        by_type = {(row["i"], row["j"]): row["count"] for row in data["by_type"]}
        return cls(data["n"], data["total"], data["alt_acyclic"], data["ascending"], data["semiacyclic"], by_type)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "i", "j", "count"])
        for (i, j), c in sorted(self.by_type.items()):
            writer.writerow([self.n, i, j, c])
        return buf.getvalue()


def _count_range(args: tuple[int, int, int]) -> CountReport:
    n, lo, hi = args
    report = CountReport(n)
    by_type: Counter = Counter()
    for bits in range(lo, hi):
        t = Tournament(n, bits)
        report.total += 1
        if is_semiacyclic(t):
            report.semiacyclic += 1
        if not is_alt_acyclic(t):
            continue
        report.alt_acyclic += 1
        if is_ascending_direct(t):
            report.ascending += 1
        ty = type_of(t)
        by_type[ty.i, ty.j] += 1
    report.by_type = dict(by_type)
    return report


def _chunks(n: int, workers: int) -> list[tuple[int, int, int]]:
    # fix the high-order orientation bits; each chunk is a contiguous mask range
    m = num_pairs(n)
    high = 0
    while (1 << high) < 4 * workers and high < m:
        high += 1
    size = 1 << (m - high)
    return [(n, k * size, (k + 1) * size) for k in range(1 << high)]


def count_report(n: int, workers: int = 1, cap: int = DEFAULT_CAP) -> CountReport:
    _check(n, cap)
    chunks = _chunks(n, max(1, workers))
    if workers <= 1:
        parts = [_count_range(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_range, chunks))
    report = CountReport(n)
    for part in parts:
        report = report.merge(part)
    return report


def enumerate_lmax_codes(n: int, cap: int = DEFAULT_CAP) -> Iterator[BiorderedCode]:
    """Pairs ``(lam, p)`` whose descent bottoms all lie in the range of ``p``.

    Words not starting with 1 are skipped: 1 would be a descent bottom and is
    never a parent.
    """
    _check(n, cap)
    for rest in permutations(range(2, n + 1)):
        lam = (1,) + rest
        bottoms = {lam[k + 1] for k in range(n - 1) if lam[k] > lam[k + 1]}
        for p in parent_functions(n):
            if bottoms.issubset(p):
                yield BiorderedCode(lam, p)
