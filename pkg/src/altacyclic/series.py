"""Truncated power series in ``t`` whose coefficients are rational polynomials in ``x``.

Everything is exact (``fractions.Fraction``).  The generating function of the
type table is a sum over ``j`` of

    y^j / j! * sum_k C(j,k)/(k+1) * sum_{i<=k} (-1)^(k-i) * prod_{l<=i} g((x+l)(k+1-l))

with ``g(c) = c t / (1 - c t)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import comb, factorial
from typing import Callable

from .errors import OrderMismatch, SeriesMismatch, ZeroTailViolation

DEFAULT_ORDER = 8


class PolyX:
    """Dense polynomial in ``x`` over the rationals, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, value) -> PolyX:
        return cls([value])

    @classmethod
    def x_plus(cls, shift) -> PolyX:
        return cls([shift, 1])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: PolyX) -> PolyX:
        return PolyX(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: PolyX) -> PolyX:
        return PolyX(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> PolyX:
        return PolyX(-a for a in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, PolyX):
            return PolyX(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return PolyX()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyX(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def shift(self, s) -> PolyX:
        """``p(x + s)``."""
        out = PolyX()
        base = PolyX.x_plus(s)
        for a in reversed(self.coeffs):
            out = out * base + PolyX.const(a)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyX) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyX({[str(c) for c in self.coeffs]})"


class SeriesT:
    """``c_0 + c_1 t + ... + c_N t^N`` with ``PolyX`` coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        c = list(coeffs)[: order + 1]
        c += [PolyX()] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(v if isinstance(v, PolyX) else PolyX.const(v) for v in c)

    @classmethod
    def zero(cls, order: int) -> SeriesT:
        return cls(order)

    @classmethod
    def one(cls, order: int) -> SeriesT:
        return cls(order, [PolyX.const(1)])

    @classmethod
    def t(cls, order: int, coeff: PolyX | int = 1) -> SeriesT:
        return cls(order, [PolyX(), coeff])

    def _check(self, other: SeriesT) -> None:
        if self.order != other.order:
            raise OrderMismatch(f"truncation orders {self.order} and {other.order} differ")

    def __add__(self, other: SeriesT) -> SeriesT:
        self._check(other)
        return SeriesT(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: SeriesT) -> SeriesT:
        self._check(other)
        return SeriesT(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> SeriesT:
        return SeriesT(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, SeriesT):
            return SeriesT(self.order, [a * other for a in self.coeffs])
        self._check(other)
        N = self.order
        out = [PolyX()] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(N + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return SeriesT(N, out)

    __rmul__ = __mul__

    def coefficient(self, n: int) -> PolyX:
        return self.coeffs[n]

    def map_coeffs(self, fn: Callable[[PolyX], PolyX]) -> SeriesT:
        return SeriesT(self.order, [fn(c) for c in self.coeffs])

    def shift_x(self, s) -> SeriesT:
        """Substitute ``x -> x + s`` in every coefficient."""
        return self.map_coeffs(lambda c: c.shift(s))

    def at_x(self, x) -> list[Fraction]:
        return [c(x) for c in self.coeffs]

    def __eq__(self, other) -> bool:
        return isinstance(other, SeriesT) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"SeriesT(order={self.order}, coeffs={list(self.coeffs)!r})"


def geom_inverse(c: PolyX, order: int) -> SeriesT:
    """``1 / (1 - c t) = sum_m c^m t^m`` up to ``t^order``."""
    out = [PolyX.const(1)]
    for _ in range(order):
        out.append(out[-1] * c)
    return SeriesT(order, out)


def _g(c: PolyX, order: int) -> SeriesT:
    # c t / (1 - c t)
    return geom_inverse(c, order) - SeriesT.one(order)


# -- gamma_k -------------------------------------------------------------------


def gamma_series_recurrence(k: int, order: int = DEFAULT_ORDER) -> SeriesT:
    """``gamma_0 = xt/(1-xt)``, ``gamma_k = (x-k)t/(1-(x-k)(k+1)t) * ((-1)^k/k! + gamma_{k-1})``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    gamma = _g(PolyX.x_plus(0), order)
    for m in range(1, k + 1):
        base = PolyX.x_plus(-m)
        lead = SeriesT.t(order, base) * geom_inverse(base * (m + 1), order)
        gamma = lead * (SeriesT(order, [Fraction((-1) ** m, factorial(m))]) + gamma)
    return gamma


def gamma_series_closed(k: int, order: int = DEFAULT_ORDER) -> SeriesT:
    """``sum_i (-1)^(k-i)/(k-i)! prod_{l<=i} (x-k+l)t / (1-(x-k+l)(k+1-l)t)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = SeriesT.zero(order)
    prod = SeriesT.one(order)
    for i in range(k + 1):
        base = PolyX.x_plus(i - k)
        prod = prod * SeriesT.t(order, base) * geom_inverse(base * (k + 1 - i), order)
        total = total + prod * Fraction((-1) ** (k - i), factorial(k - i))
    return total


def gamma_series(k: int, order: int = DEFAULT_ORDER) -> SeriesT:
    """``gamma_k(x, t)``; the recurrence and the closed form must agree coefficientwise."""
    rec = gamma_series_recurrence(k, order)
    closed = gamma_series_closed(k, order)
    if rec != closed:
        raise SeriesMismatch(f"gamma_{k}: recurrence and closed form disagree")
    return rec


def beta_tilde_series(k: int, order: int = DEFAULT_ORDER) -> SeriesT:
    """``sum_i (-1)^(k-i)/(k-i)! prod_{l<=i} (x+l)t / (1-(x+l)(k+1-l)t)``; equals ``gamma_k(x+k, t)``."""
    total = SeriesT.zero(order)
    prod = SeriesT.one(order)
    for i in range(k + 1):
        base = PolyX.x_plus(i)
        prod = prod * SeriesT.t(order, base) * geom_inverse(base * (k + 1 - i), order)
        total = total + prod * Fraction((-1) ** (k - i), factorial(k - i))
    return total


# -- the type-table generating function -----------------------------------------


@lru_cache(maxsize=None)
def _inner(k: int, order: int, x_symbolic: bool) -> SeriesT:
    # sum_{i<=k} (-1)^(k-i) prod_{l<=i} g((x+l)(k+1-l)), with x = 1 when not symbolic
    total = SeriesT.zero(order)
    prod = SeriesT.one(order)
    for i in range(k + 1):
        base = PolyX.x_plus(i) if x_symbolic else PolyX.const(1 + i)
        prod = prod * _g(base * (k + 1 - i), order)
        total = total + prod * (-1) ** (k - i)
    return total


@lru_cache(maxsize=None)
def _y_term(j: int, order: int, x_symbolic: bool = True) -> SeriesT:
    """``sum_k C(j,k)/(k+1) * inner_k``: the coefficient of ``y^j/j!``."""
    total = SeriesT.zero(order)
    for k in range(j + 1):
        total = total + _inner(k, order, x_symbolic) * Fraction(comb(j, k), k + 1)
    return total


def alpha_coefficient(n: int, i: int, j: int) -> Fraction:
    """Coefficient of ``x^i y^j t^n`` in the generating function; equals ``A(n,i,j)/j!``."""
    if n < 1 or i < 1 or j < 0:
        raise ValueError("need n >= 1, i >= 1, j >= 0")
    return _y_term(j, n).coefficient(n).coefficient(i) / factorial(j)


def alpha_table(n: int) -> dict[tuple[int, int], Fraction]:
    """``{(i, j): A(n,i,j)/j!}`` over ``1 <= i <= n``, ``0 <= j <= n-1``."""
    return {(i, j): alpha_coefficient(n, i, j) for j in range(n) for i in range(1, n + 1)}


TAIL = 3


def _check_tail(n: int, values: Callable[[int], Fraction]) -> None:
    for j in range(n, n + TAIL):
        v = values(j)
        if v != 0:
            raise ZeroTailViolation(f"j={j} contributes {v} to the t^{n} coefficient")


def median_genocchi_series(order: int = DEFAULT_ORDER) -> list[int]:
    """``H_1, H_3, ..., H_{2N-1}`` from the ``x = 1``, ``y^j -> j!`` specialization."""
    if order < 1:
        raise ValueError("order must be at least 1")
    out = []
    for n in range(1, order + 1):
        term = lambda j: _y_term(j, order, False).coefficient(n).coefficient(0)  # noqa: E731
        _check_tail(n, term)
        total = sum(term(j) for j in range(n))
        if total.denominator != 1:
            raise ZeroTailViolation(f"t^{n} coefficient {total} is not an integer")
        out.append(int(total))
    return out


@lru_cache(maxsize=None)
def _first_kind_term(j: int, order: int) -> SeriesT:
    # t * sum_k C(j,k) sum_i (-1)^(k-i) prod_{1<=l<=i} l(k+1-l)t / (1 - l(k+1-l)t)
    total = SeriesT.zero(order)
    for k in range(j + 1):
        inner = SeriesT.zero(order)
        prod = SeriesT.one(order)
        for i in range(k + 1):
            if i >= 1:
                prod = prod * _g(PolyX.const(i * (k + 1 - i)), order)
            inner = inner + prod * (-1) ** (k - i)
        total = total + inner * comb(j, k)
    return SeriesT.t(order) * total


def genocchi_first_series(order: int = DEFAULT_ORDER) -> list[int]:
    """``|G_2|, |G_4|, ..., |G_{2N}|`` from the coefficient of ``x`` with ``y^j -> j!``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    out = []
    for n in range(1, order + 1):
        term = lambda j: _first_kind_term(j, order).coefficient(n).coefficient(0)  # noqa: E731
        _check_tail(n, term)
        total = sum(term(j) for j in range(n))
        if total.denominator != 1:
            raise ZeroTailViolation(f"t^{n} coefficient {total} is not an integer")
        out.append(int(total))
    return out
