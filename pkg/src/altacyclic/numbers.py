"""Exact integer recurrences: type table, Legendre-Stirling, Genocchi, Eulerian."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import NonDivisible, NonIntegral, OutOfRange


@dataclass(frozen=True)
class TypeTable:
    """``cells[(i, j)] = A(n, i, j)`` for the nonzero cells."""

    n: int
    cells: dict

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.cells.get(key, 0)

    def normalized(self, i: int, j: int) -> int:
        a = self[i, j]
        q, r = divmod(a, factorial(j))
        if r:
            raise NonDivisible(f"A({self.n},{i},{j}) = {a} is not divisible by {j}!")
        return q

    def normalized_cells(self) -> dict:
        return {key: self.normalized(*key) for key in self.cells}

    def total(self) -> int:
        return sum(self.cells.values())

    def rows(self, normalized: bool = False) -> list[list[int]]:
        """``rows[j][i-1]`` for ``0 <= j <= n-1`` and ``1 <= i <= n``."""
        get = self.normalized if normalized else (lambda i, j: self[i, j])
        return [[get(i, j) for i in range(1, self.n + 1)] for j in range(self.n)]


@lru_cache(maxsize=None)
def _type_cells(n: int) -> tuple:
    if n < 1:
        raise OutOfRange("type tables start at n = 1")
    if n == 1:
        return (((1, 0), 1),)
    prev = dict(_type_cells(n - 1))
    cells = {}
    for i in range(1, n + 1):
        for j in range(0, n):
            total = (j + 1) * prev.get((i - 1, j), 0)
            if j >= 1:
                total += j * sum(comb(k, i - 1) * prev.get((k, j - 1), 0) for k in range(i, n))
            if total:
                cells[i, j] = total
    return tuple(sorted(cells.items()))


def type_table(n: int) -> TypeTable:
    return TypeTable(n, dict(_type_cells(n)))


@lru_cache(maxsize=None)
def legendre_stirling(n: int, k: int) -> int:
    if n < 1 or not 1 <= k <= n:
        raise OutOfRange(f"Legendre-Stirling index ({n}, {k}) out of range")
    if n == 1:
        return 1
    total = legendre_stirling(n - 1, k - 1) if k >= 2 else 0
    if k <= n - 1:
        total += k * (k + 1) * legendre_stirling(n - 1, k)
    return total


def median_genocchi(n: int) -> int:
    """``H_{2n-1}`` as the signed sum of squared factorials times Legendre-Stirling numbers."""
    if n < 1:
        raise OutOfRange("median Genocchi numbers are indexed from n = 1")
    return sum((-1) ** (n - k) * factorial(k) ** 2 * legendre_stirling(n, k) for k in range(1, n + 1))


def genocchi_first(n: int) -> int:
    """``|G_{2n}|`` as the first column of the type table."""
    table = type_table(n)
    return sum(table[1, j] for j in range(n))


@lru_cache(maxsize=None)
def eulerian(n: int, j: int) -> int:
    """Permutations of {1..n} with exactly ``j`` descents."""
    if n < 1 or not 0 <= j < n:
        raise OutOfRange(f"Eulerian index ({n}, {j}) out of range")
    if n == 1:
        return 1
    total = 0
    if j <= n - 2:
        total += (j + 1) * eulerian(n - 1, j)
    if j >= 1:
        total += (n - j) * eulerian(n - 1, j - 1)
    return total


def semiacyclic_formula(n: int) -> int:
    if n < 1:
        raise OutOfRange("n must be positive")
    s = sum(comb(n, k) * (k + 1) ** (n - 1) for k in range(n + 1))
    q, r = divmod(s, 2**n)
    if r:
        raise NonIntegral(f"2^-{n} * {s} is not an integer")
    return q


def normalized_median_genocchi(n: int) -> int:
    """``h_n = H_{2n+1} / 2^n``."""
    if n < 0:
        raise OutOfRange("n must be nonnegative")
    h = median_genocchi(n + 1)
    q, r = divmod(h, 2**n)
    if r:
        raise NonDivisible(f"H_{2 * n + 1} = {h} is not divisible by 2^{n}")
    return q


SEQUENCES = {
    "median": median_genocchi,
    "first": genocchi_first,
    "normalized": normalized_median_genocchi,
    "semiacyclic": semiacyclic_formula,
}
