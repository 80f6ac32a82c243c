"""The homogenized Linial arrangement: characteristic polynomial, regions, point counts.

Hyperplanes live in the ``2n``-space with coordinates ``x_1..x_n, y_1..y_n``
and are ``x_i - x_j = y_i`` for ``i < j``; a point with ``x_i - y_i > x_j``
sits on the side labelled ``i -> j``.  ``y_n`` takes part in no hyperplane.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest

import numpy as np

from .errors import CapExceeded, NotPrime, OnHyperplane
from .forest import INF, largest_maximal_representation
from .tournament import Tournament, _pair_bits

DEFAULT_POINT_CAP = 10**8


class IntPolynomial:
    """Dense integer polynomial in ``q``, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def linear(cls, const: int, slope: int = 1) -> IntPolynomial:
        return cls([const, slope])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, q):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * q + a
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


@lru_cache(maxsize=None)
def _chi_row(n: int) -> tuple[IntPolynomial, ...]:
    # index k-1 holds chi(n, k, q)
    if n == 1:
        return (IntPolynomial.monomial(2),)
    prev = _chi_row(n - 1)
    row = []
    for k in range(1, n + 1):
        term = IntPolynomial()
        if k <= n - 1:
            term = term + IntPolynomial.linear(-k) * k * prev[k - 1]
        if k >= 2:
            shift = IntPolynomial.linear(1 - k)
            term = term + shift * shift * prev[k - 2]
        row.append(term)
    return tuple(row)


def chi_table(n: int) -> dict[int, IntPolynomial]:
    """``{k: chi(n, k, q)}``, points off the arrangement whose values ``x_i - y_i`` take ``k`` values."""
    if n < 1:
        raise ValueError("n must be positive")
    return {k: poly for k, poly in enumerate(_chi_row(n), start=1)}


def characteristic_polynomial(n: int) -> IntPolynomial:
    total = IntPolynomial()
    for poly in chi_table(n).values():
        total = total + poly
    return total


def region_count(n: int) -> int:
    # the ambient dimension is 2n, so the Zaslavsky sign is +1
    return (-1) ** (2 * n) * characteristic_polynomial(n)(-1)


def r_value(n: int, k: int) -> int:
    """``chi(n, k, -1)``."""
    return chi_table(n)[k](-1)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _grid(q: int, n: int) -> np.ndarray:
    return np.indices((q,) * n).reshape(n, -1).T.astype(np.int64)


def _count_block(args) -> int:
    n, q, lo, hi, y_on_larger = args
    xs = _grid(q, n)[lo:hi]
    ys = _grid(q, n)
    count = 0
    for x in xs:
        bad = np.zeros(len(ys), dtype=bool)
        for i in range(n):
            for j in range(i + 1, n):
                col = j if y_on_larger else i
                bad |= (x[i] - x[j] - ys[:, col]) % q == 0
        count += int(len(ys) - bad.sum())
    return count


def direct_point_count(
    n: int, q: int, cap: int = DEFAULT_POINT_CAP, workers: int = 1, y_on_larger: bool = False
) -> int:
    """Count points of ``F_q^{2n}`` on no hyperplane by checking every point.

    ``y_on_larger`` switches to the hyperplanes ``x_i - x_j = y_j``; the count
    is the same (reverse the indices and negate ``x``).
    """
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q ** (2 * n) > cap:
        raise CapExceeded(f"{q}^{2 * n} points exceed the cap {cap}")
    size = q**n
    workers = max(1, workers)
    step = -(-size // workers)
    blocks = [(n, q, lo, min(size, lo + step), y_on_larger) for lo in range(0, size, step)]
    if workers == 1:
        return sum(_count_block(b) for b in blocks)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_block, blocks))


@dataclass(frozen=True)
class RationalPoint:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.x)

    def to_dict(self) -> dict:
        return {"x": [str(v) for v in self.x], "y": [str(v) for v in self.y]}


def witness_point(t: Tournament) -> RationalPoint:
    """A point of the region labelled ``t``, read off the lmax code ``(lam, p)``.

    ``x_i = (n+1)/2 - pos(i)``; ``y_i = pos(p(i)) - pos(i) - 1/2`` for finite
    parents and ``y_i = n + 1 - pos(i)`` for roots, which puts ``x_i - y_i``
    at ``-(n+1)/2``, below every ``x_j``.
    """
    code = largest_maximal_representation(t)
    n, pos = code.n, code.pos
    half = Fraction(1, 2)
    x = tuple(Fraction(n + 1, 2) - pos[i] for i in range(1, n + 1))
    y = []
    for i in range(1, n + 1):
        parent = code.p[i - 1]
        if parent == INF:
            y.append(Fraction(n + 1 - pos[i]))
        else:
            y.append(pos[parent] - pos[i] - half)
    return RationalPoint(x, tuple(y))


def tournament_of_point(pt: RationalPoint) -> Tournament:
    n = pt.n
    bits = 0
    for i, j, b in _pair_bits(n):
        lhs = pt.x[i - 1] - pt.y[i - 1]
        rhs = pt.x[j - 1]
        if lhs == rhs:
            raise OnHyperplane(i, j)
        if lhs > rhs:
            bits |= b
    return Tournament(n, bits)
