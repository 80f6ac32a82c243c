"""Cross-check suite behind ``altacyclic verify``.

Each check compares independently computed values and reports what it saw.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Callable

from . import arrangement, bijections, enumeration, forest, numbers, series
from .tournament import (
    Tournament,
    has_alternating_4cycle,
    has_alternating_closed_walk,
    is_alt_acyclic,
    is_semiacyclic,
    num_pairs,
    rawalk_order,
)

TABLE_1 = {
    2: {(1, 1): 1, (2, 0): 1},
    3: {(1, 2): 1, (1, 1): 1, (2, 1): 4, (3, 0): 1},
    4: {(1, 3): 1, (1, 2): 5, (2, 2): 11, (1, 1): 1, (2, 1): 5, (3, 1): 11, (4, 0): 1},
    5: {
        (1, 4): 1,
        (1, 3): 16, (2, 3): 26,
        (1, 2): 17, (2, 2): 58, (3, 2): 66,
        (1, 1): 1, (2, 1): 6, (3, 1): 16, (4, 1): 26,
        (5, 0): 1,
    },
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str
    elapsed: float


@dataclass
class VerifySuiteResult:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def tap_lines(self) -> list[str]:
        lines = [f"1..{len(self.checks)}"]
        for k, c in enumerate(self.checks, start=1):
            status = "ok" if c.passed else "not ok"
            lines.append(f"{status} {k} - {c.name} ({c.elapsed:.2f}s)")
            if not c.passed:
                lines.append(f"  # expected: {c.expected}")
                lines.append(f"  # actual:   {c.actual}")
        return lines

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "status": "pass" if c.passed else "fail",
                    "expected": c.expected,
                    "actual": c.actual,
                    "elapsed": round(c.elapsed, 3),
                }
                for c in self.checks
            ],
        }


def _run(name: str, fn: Callable[[], tuple[object, object]]) -> CheckResult:
    start = time.perf_counter()
    try:
        expected, actual = fn()
        ok = expected == actual
    except Exception as exc:  # a crash is a failed check, reported with its message
        expected, actual, ok = "no exception", f"{type(exc).__name__}: {exc}", False
    return CheckResult(name, ok, str(expected), str(actual), time.perf_counter() - start)


def alt_acyclic_counts(max_n: int, workers: int = 1):
    ns = range(1, max_n + 1)
    brute = [enumeration.count_report(n, workers).alt_acyclic for n in ns]
    hls = [numbers.median_genocchi(n) for n in ns]
    table = [numbers.type_table(n).total() for n in ns]
    regions = [arrangement.region_count(n) for n in ns]
    return [hls] * 3, [brute, table, regions]


def ascending_counts(max_n: int, workers: int = 1):
    ns = range(1, max_n + 1)
    brute = [enumeration.count_report(n, workers).ascending for n in ns]
    column = [numbers.genocchi_first(n) for n in ns]
    return [column, column], [brute, series.genocchi_first_series(max_n)]


def table_one(max_n: int, workers: int = 1):
    expected, actual = {}, {}
    for n in range(2, min(max_n, 5) + 1):
        t = numbers.type_table(n)
        expected[n] = TABLE_1[n]
        actual[n] = t.normalized_cells()
        report = enumeration.count_report(n, workers)
        expected[f"brute{n}"] = dict(sorted(t.cells.items()))
        actual[f"brute{n}"] = dict(sorted(report.by_type.items()))
    return expected, actual


def bijection_round_trips(max_n: int):
    bad = []
    for n in range(1, max(max_n, 7) + 1):
        for p in permutations(range(1, n + 1)):
            if bijections.ds_decode(bijections.ds_encode(p)) != p:
                bad.append(("ds", p))
    for n in range(1, min(max_n, 5) + 1):
        seen = set()
        for bits in range(1 << num_pairs(n)):
            t = Tournament(n, bits)
            if not is_alt_acyclic(t):
                continue
            order = rawalk_order(t)
            for pi in permutations(range(1, n + 1)):
                if order.is_linear_extension(pi):
                    code = forest.BiorderedCode(pi, forest.decode(t, pi))
                    if forest.induce_tournament(code) != t:
                        bad.append(("decode", t, pi))
            code = forest.largest_maximal_representation(t)
            if not forest.is_lmax_representation(code) or code in seen:
                bad.append(("lmax", t))
            seen.add(code)
        if seen != set(enumeration.enumerate_lmax_codes(n)):
            bad.append(("lmax-onto", n))
    return [], bad


def four_cycle_equivalence(max_n: int, samples: int, seed: int, sample_n: int = 8):
    bad = []
    for n in range(1, min(max_n, 6) + 1):
        for bits in range(1 << num_pairs(n)):
            t = Tournament(n, bits)
            if has_alternating_closed_walk(t) != has_alternating_4cycle(t):
                bad.append(t)
    rng = random.Random(seed)
    m = num_pairs(sample_n)
    for _ in range(samples):
        t = Tournament(sample_n, rng.getrandbits(m))
        if has_alternating_closed_walk(t) != has_alternating_4cycle(t):
            bad.append(t)
    return [], bad


def finite_field(max_n: int):
    expected, actual = {}, {}
    for n in range(1, min(max_n, 3) + 1):
        poly = arrangement.characteristic_polynomial(n)
        for q in (5, 7, 11, 13):
            expected[n, q] = poly(q)
            actual[n, q] = arrangement.direct_point_count(n, q)
    return expected, actual


def legendre_stirling_bridge(max_n: int):
    top = max(max_n, 10)
    expected, actual = {}, {}
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            expected[n, k] = (-1) ** (n - k) * factorial(k) ** 2 * numbers.legendre_stirling(n, k)
            actual[n, k] = arrangement.r_value(n, k)
    return expected, actual


def generating_functions(max_n: int):
    expected, actual = {}, {}
    for n in range(1, min(max_n, 6) + 1):
        t = numbers.type_table(n)
        for j in range(n):
            for i in range(1, n + 1):
                expected[n, i, j] = t.normalized(i, j)
                actual[n, i, j] = series.alpha_coefficient(n, i, j)
    order = max(8, max_n)
    expected["median"] = [numbers.median_genocchi(n) for n in range(1, order + 1)]
    actual["median"] = series.median_genocchi_series(order)
    expected["first"] = [numbers.genocchi_first(n) for n in range(1, order + 1)]
    actual["first"] = series.genocchi_first_series(order)
    return expected, actual


def genocchi_models(max_n: int):
    expected, actual = {}, {}
    for n in range(1, min(max_n, 4) + 1):
        t = numbers.type_table(n)
        expected["median", n] = numbers.median_genocchi(n)
        actual["median", n] = sum(1 for _ in bijections.median_excedant_model(n))
        for i in range(1, n + 1):
            expected["median-slice", n, i] = sum(t[i, j] for j in range(n))
            actual["median-slice", n, i] = sum(1 for _ in bijections.median_excedant_model(n, i))
    for n in range(1, min(max_n, 5) + 1):
        expected["pairvec", n] = numbers.median_genocchi(n)
        actual["pairvec", n] = sum(1 for _ in bijections.pair_vector_model(n))
        expected["nm", n] = numbers.normalized_median_genocchi(n)
        actual["nm", n] = sum(1 for _ in bijections.nm_model(n))
        # phi acts on pair vectors of length n; its orbits are the nm sequences of length n
        model = set(bijections.pair_vector_model(n + 1))
        orbits = set()
        free = True
        for pv in model:
            orb = bijections.orbit(pv)
            free &= len(orb) == 2**n and orb <= model
            orbits.add(bijections.orbit_representative(pv))
        expected["orbits", n] = (True, set(bijections.nm_model(n)))
        actual["orbits", n] = (free, orbits)
    return expected, actual


def region_labels(max_n: int):
    bad = []
    for n in range(1, min(max_n, 5) + 1):
        for bits in range(1 << num_pairs(n)):
            t = Tournament(n, bits)
            if is_alt_acyclic(t) and arrangement.tournament_of_point(arrangement.witness_point(t)) != t:
                bad.append(t)
    return [], bad


def semiacyclic_counts(max_n: int):
    ns = range(1, min(max_n, 6) + 1)
    brute, implied = [], True
    for n in ns:
        c = 0
        for bits in range(1 << num_pairs(n)):
            t = Tournament(n, bits)
            if is_semiacyclic(t):
                c += 1
                implied &= is_alt_acyclic(t)
        brute.append(c)
    return ([numbers.semiacyclic_formula(n) for n in ns], True), (brute, implied)


def run_suite(max_n: int = 6, samples: int = 10_000, seed: int = 0, workers: int = 1) -> VerifySuiteResult:
    checks = [
        ("alt-acyclic counts = H_{2n-1} = sum A(n,i,j) = regions", lambda: alt_acyclic_counts(max_n, workers)),
        ("ascending counts = |G_2n| = first-kind series", lambda: ascending_counts(max_n, workers)),
        ("type table matches published values and brute force", lambda: table_one(max_n, workers)),
        ("bijection round trips", lambda: bijection_round_trips(max_n)),
        ("closed alternating walk <=> alternating 4-cycle", lambda: four_cycle_equivalence(max_n, samples, seed)),
        ("finite-field point counts = characteristic polynomial", lambda: finite_field(max_n)),
        ("chi(n,k,-1) = (-1)^(n-k) (k!)^2 PS", lambda: legendre_stirling_bridge(max_n)),
        ("generating functions", lambda: generating_functions(max_n)),
        ("median / pair-vector / set-sequence models", lambda: genocchi_models(max_n)),
        ("region labels of witness points", lambda: region_labels(max_n)),
        ("semiacyclic counts and inclusion", lambda: semiacyclic_counts(max_n)),
    ]
    return VerifySuiteResult([_run(name, fn) for name, fn in checks])
