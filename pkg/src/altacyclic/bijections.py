"""Excedant-function codings and the Genocchi models built on them.

Functions on ``{1..m}`` are tuples with ``f[i-1] = f(i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

from .errors import DomainViolation, NotAscending, NotLmax, OutOfRange
from .forest import INF, BiorderedCode, check_permutation, is_lmax_representation


def is_excedant(f: Sequence[int], offset: int = 1) -> bool:
    return all(v >= i for i, v in enumerate(f, start=offset))


# -- descent-sensitive code ---------------------------------------------------


def ds_encode(pi: Sequence[int]) -> tuple[int, ...]:
    """Insert ``n, n-1, ..., 1`` into ``0 (n+1)`` following ``pi`` and record ``f``.

    Inserting ``i`` between ``u`` and ``v``: ``f(i) = v`` when ``u > v``, the
    head of the decreasing run ending at ``u`` when ``0 < u < v``, and ``i``
    when ``u = 0``.
    """
    pi = check_permutation(pi)
    n = len(pi)
    pos = {v: k for k, v in enumerate(pi)}
    word = [0, n + 1]
    f = [0] * n
    for i in range(n, 0, -1):
        # left neighbour: the last current letter placed before i in pi
        at = 1
        while at < len(word) - 1 and pos[word[at]] < pos[i]:
            at += 1
        u, v = word[at - 1], word[at]
        if u == 0:
            f[i - 1] = i
        elif u > v:
            f[i - 1] = v
        else:
            k = at - 1
            while word[k - 1] > word[k]:
                k -= 1
            f[i - 1] = word[k]
        word.insert(at, i)
    return tuple(f)


def ds_decode(f: Sequence[int]) -> tuple[int, ...]:
    """Rebuild the permutation whose descent-sensitive code is ``f``."""
    n = len(f)
    if not all(i <= v <= n for i, v in enumerate(f, start=1)):
        raise DomainViolation(f"{list(f)} is not an excedant function on 1..{n}")
    word = [0, n + 1]
    for i in range(n, 0, -1):
        w = f[i - 1]
        if w == i:
            word.insert(1, i)
            continue
        at = word.index(w)
        if word[at - 1] > w:
            word.insert(at, i)
        else:
            k = at
            while word[k + 1] < word[k]:
                k += 1
            word.insert(k + 1, i)
    return tuple(word[1:-1])


def descent_bottoms(pi: Sequence[int]) -> set[int]:
    return {pi[k + 1] for k in range(len(pi) - 1) if pi[k] > pi[k + 1]}


def excedant_functions(n: int) -> Iterator[tuple[int, ...]]:
    return product(*(range(i, n + 1) for i in range(1, n + 1)))


# -- Dumont functions and the ascending-tournament bijection ------------------


def fhat_encode(p_tilde: Sequence[int], f_tilde: Sequence[int]) -> tuple[int, ...]:
    """Interleave ``p~`` on {1..n-1} and ``f~`` on {2..n} into ``f^`` on {1..2n-2}.

    ``f^(2j-1) = 2 p~(j) - 2`` and ``f^(2j-2) = 2 f~(j) - 2``.
    """
    n = len(p_tilde) + 1
    if len(f_tilde) != n - 1:
        raise DomainViolation("p~ and f~ must have the same length")
    for j, v in enumerate(p_tilde, start=1):
        if not j + 1 <= v <= n:
            raise DomainViolation(f"p~({j}) = {v} outside {j + 1}..{n}")
    for j, v in enumerate(f_tilde, start=2):
        if not j <= v <= n:
            raise DomainViolation(f"f~({j}) = {v} outside {j}..{n}")
    out = [0] * (2 * n - 2)
    for j, v in enumerate(p_tilde, start=1):
        out[2 * j - 2] = 2 * v - 2
    for j, v in enumerate(f_tilde, start=2):
        out[2 * j - 3] = 2 * v - 2
    return tuple(out)


def fhat_decode(fhat: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse of :func:`fhat_encode`: ``p~(j) = f^(2j-1)/2 + 1``, ``f~(j) = f^(2j-2)/2 + 1``."""
    if len(fhat) % 2 or any(v % 2 for v in fhat):
        raise DomainViolation("f^ must have even length and even values")
    n = len(fhat) // 2 + 1
    p_tilde = tuple(fhat[2 * j - 2] // 2 + 1 for j in range(1, n))
    f_tilde = tuple(fhat[2 * j - 3] // 2 + 1 for j in range(2, n + 1))
    return p_tilde, f_tilde


def dumont_functions(n: int) -> Iterator[tuple[int, ...]]:
    """Excedant ``f`` on {1..2n-2} with image exactly {2, 4, ..., 2n-2}."""
    m = 2 * n - 2
    evens = set(range(2, m + 1, 2))
    choices = [[v for v in range(2, m + 1, 2) if v >= i] for i in range(1, m + 1)]
    for f in product(*choices):
        if set(f) == evens:
            yield f


def ascending_code_to_dumont(code: BiorderedCode) -> tuple[int, ...]:
    n = code.n
    if not is_lmax_representation(code):
        raise NotLmax("input is not a largest maximal representation")
    if INF in code.p[:-1]:
        raise NotAscending("some vertex below n starts no ascent")
    f = ds_encode(code.pi)
    if f[0] != 1:
        raise NotLmax("descent-sensitive code of the order must fix 1")
    return fhat_encode(code.p[: n - 1], f[1:])


def dumont_to_ascending_code(fhat: Sequence[int]) -> BiorderedCode:
    p_tilde, f_tilde = fhat_decode(fhat)
    lam = ds_decode((1,) + f_tilde)
    return BiorderedCode(lam, p_tilde + (INF,))


def dumont_pairs(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs ``(a, b)`` of length-``n`` vectors, ``1 <= a_i, b_i <= i``, values exactly {1..n}."""
    target = set(range(1, n + 1))
    ranges = [range(1, i + 1) for i in range(1, n + 1)]
    for a in product(*ranges):
        for b in product(*ranges):
            if set(a) | set(b) == target:
                yield a, b


def dumont_pair_of(f: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(a_i, b_i) = (n + 1 - f(2n+1-2i)/2, n + 1 - f(2n+2-2i)/2)`` for ``f`` on {1..2n}."""
    n = len(f) // 2
    a = tuple(n + 1 - f[2 * n - 2 * i] // 2 for i in range(1, n + 1))
    b = tuple(n + 1 - f[2 * n + 1 - 2 * i] // 2 for i in range(1, n + 1))
    return a, b


# -- median Genocchi models -----------------------------------------------------


def median_excedant_model(n: int, fix_i: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Excedant ``f`` on {1..2n-1} with ``f(2k) <= 2n-2`` and image {2,4,...,2n-2, 2n-1}.

    With ``fix_i``, only functions taking the value ``2n-1`` exactly ``fix_i`` times.
    """
    top = 2 * n - 1
    target = set(range(2, top, 2)) | {top}
    choices = []
    for i in range(1, top + 1):
        vals = [v for v in range(2, top, 2) if v >= i]
        if i % 2:
            vals.append(top)
        choices.append(vals)
    for f in product(*choices):
        if set(f) == target and (fix_i is None or f.count(top) == fix_i):
            yield f


def lmax_code_to_median_excedant(code: BiorderedCode) -> tuple[int, ...]:
    """Roots go to ``2n-1`` at odd positions; everything else as in :func:`fhat_encode`."""
    n = code.n
    f = ds_encode(code.pi)
    out = []
    for i in range(1, 2 * n):
        if i % 2:
            parent = code.p[(i + 1) // 2 - 1]
            out.append(2 * n - 1 if parent == INF else 2 * parent - 2)
        else:
            out.append(2 * f[i // 2] - 2)
    return tuple(out)


@dataclass(frozen=True)
class PairVectors:
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.a)

    def covers(self) -> bool:
        return set(range(1, self.length + 1)) <= set(self.a) | set(self.b)

    def in_bounds(self) -> bool:
        return all(0 <= a <= k and 1 <= b <= k for k, (a, b) in enumerate(zip(self.a, self.b), start=1))

    def zeros(self) -> int:
        return self.a.count(0)


def pair_vector_model(n: int, fix_i: Optional[int] = None) -> Iterator[PairVectors]:
    """Vectors ``a, b`` of length ``n-1`` with ``0 <= a_k <= k``, ``1 <= b_k <= k`` covering {1..n-1}.

    ``fix_i`` selects the tournament type coordinate ``i``: since ``p(n)`` is
    always a root, that is ``fix_i - 1`` zeros in ``a``.
    """
    m = n - 1
    target = set(range(1, m + 1))
    for a in product(*(range(0, k + 1) for k in range(1, m + 1))):
        if fix_i is not None and a.count(0) != fix_i - 1:
            continue
        for b in product(*(range(1, k + 1) for k in range(1, m + 1))):
            if target <= set(a) | set(b):
                yield PairVectors(a, b)


def pair_vector_of_code(code: BiorderedCode) -> PairVectors:
    """``a_k = n+1-p(n-k)`` (0 for a root) and ``b_k = n+1-f(n+1-k)``, ``f`` the ds code of ``lam``."""
    n = code.n
    f = ds_encode(code.pi)
    a = tuple(0 if code.p[n - k - 1] == INF else n + 1 - code.p[n - k - 1] for k in range(1, n))
    b = tuple(n + 1 - f[n - k] for k in range(1, n))
    return PairVectors(a, b)


def code_of_pair_vector(pv: PairVectors) -> BiorderedCode:
    n = pv.length + 1
    p = [INF] * n
    f = [1] * n
    for k in range(1, n):
        p[n - k - 1] = INF if pv.a[k - 1] == 0 else n + 1 - pv.a[k - 1]
        f[n - k] = n + 1 - pv.b[k - 1]
    return BiorderedCode(ds_decode(f), tuple(p))


def phi(k: int, pv: PairVectors) -> PairVectors:
    """Involution on the ``k``-th coordinates: swap a two-element pair, else toggle ``(b, b) <-> (0, b)``."""
    if not 1 <= k <= pv.length:
        raise OutOfRange(f"phi index {k} outside 1..{pv.length}")
    a, b = pv.a[k - 1], pv.b[k - 1]
    if a == 0:
        new = (b, b)
    elif a == b:
        new = (0, b)
    else:
        new = (b, a)
    av, bv = list(pv.a), list(pv.b)
    av[k - 1], bv[k - 1] = new
    return PairVectors(tuple(av), tuple(bv))


def orbit(pv: PairVectors) -> set[PairVectors]:
    seen = {pv}
    frontier = [pv]
    while frontier:
        cur = frontier.pop()
        for k in range(1, pv.length + 1):
            nxt = phi(k, cur)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def orbit_representative(pv: PairVectors) -> tuple[tuple[int, ...], ...]:
    """``S_k = {a_k, b_k} & {1..k}``."""
    return tuple(tuple(sorted({a, b} - {0})) for a, b in zip(pv.a, pv.b))


def nm_model(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Sequences ``S_1..S_n`` of 1- or 2-subsets ``S_k`` of {1..k} whose union is {1..n}."""
    target = set(range(1, n + 1))
    options = []
    for k in range(1, n + 1):
        opts = [(u,) for u in range(1, k + 1)] + [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)]
        options.append(sorted(opts))
    for seq in product(*options):
        if set().union(*seq) == target:
            yield seq
