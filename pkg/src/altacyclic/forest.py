"""Biordered-forest codes ``(pi, p)`` of alternation acyclic tournaments.

A parent function is a tuple ``p`` of length ``n`` with ``p[i-1]`` the parent
of ``i``; the value :data:`INF` (``0``) marks a root.  Finite parents satisfy
``p(i) > i``, so ``p(n)`` is always ``INF``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import NotAltAcyclic, NotLinearExtension, NotLmax, SizeOne
from .tournament import Tournament, _pair_bits, is_alt_acyclic, rawalk_order

INF = 0


def check_parent_function(p: Sequence[int]) -> tuple[int, ...]:
    n = len(p)
    for i, v in enumerate(p, start=1):
        if v != INF and not i < v <= n:
            raise ValueError(f"parent of {i} must exceed {i} and be at most {n}, got {v}")
    return tuple(p)


def check_permutation(word: Sequence[int]) -> tuple[int, ...]:
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"{list(word)} is not a permutation of 1..{len(word)}")
    return tuple(word)


def inverse(word: Sequence[int]) -> tuple[int, ...]:
    """Positions (1-based) of each value, indexed by value; slot 0 is unused."""
    pos = [0] * (len(word) + 1)
    for k, v in enumerate(word, start=1):
        pos[v] = k
    return tuple(pos)


def parent_functions(n: int) -> Iterator[tuple[int, ...]]:
    """Every parent function on {1..n}, lexicographic with INF (0) first."""
    choices = [(INF,) + tuple(range(i + 1, n + 1)) for i in range(1, n + 1)]

    def rec(i, acc):
        if i == n:
            yield tuple(acc)
            return
        for v in choices[i]:
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@dataclass(frozen=True)
class BiorderedCode:
    pi: tuple[int, ...]
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pi", check_permutation(self.pi))
        object.__setattr__(self, "p", check_parent_function(self.p))
        if len(self.pi) != len(self.p):
            raise ValueError("permutation and parent function differ in size")

    @property
    def n(self) -> int:
        return len(self.pi)

    @cached_property
    def pos(self) -> tuple[int, ...]:
        return inverse(self.pi)

    def parent_range(self) -> set[int]:
        return {v for v in self.p if v != INF}

    def to_dict(self) -> dict:
        return {"n": self.n, "pi": list(self.pi), "p": list(self.p)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> BiorderedCode:
        p = [INF if v in ("inf", None) else int(v) for v in data["p"]]
        code = cls(tuple(data["pi"]), tuple(p))
        if "n" in data and int(data["n"]) != code.n:
            raise ValueError("declared n does not match the arrays")
        return code

    @classmethod
    def from_json(cls, text: str) -> BiorderedCode:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class TypeTriple:
    n: int
    i: int
    j: int


def induce_tournament(code: BiorderedCode) -> Tournament:
    """``u -> v`` (``u < v``) iff ``p(u)`` is finite and ``v`` sits at or right of ``p(u)`` in ``pi``."""
    pos, p = code.pos, code.p
    bits = 0
    for u, v, b in _pair_bits(code.n):
        pu = p[u - 1]
        if pu != INF and pos[v] >= pos[pu]:
            bits |= b
    return Tournament(code.n, bits)


def decode(t: Tournament, pi: Sequence[int]) -> tuple[int, ...]:
    """The unique parent function ``p`` with ``induce_tournament((pi, p)) == t``.

    ``p(u)`` is the leftmost vertex of ``pi`` reached from ``u`` by an ascent.
    """
    pi = check_permutation(pi)
    if len(pi) != t.n:
        raise ValueError("permutation size does not match the tournament")
    if not is_alt_acyclic(t):
        raise NotAltAcyclic("decode needs an alternation acyclic tournament")
    if not rawalk_order(t).is_linear_extension(pi):
        raise NotLinearExtension(f"{list(pi)} is not a linear extension of the walk order")
    asc = t.ascents_from
    p = []
    for u in range(1, t.n + 1):
        parent = INF
        if asc[u]:
            for v in pi:
                if asc[u] >> v & 1:
                    parent = v
                    break
        p.append(parent)
    return tuple(p)


def largest_maximal_order(t: Tournament) -> tuple[int, ...]:
    """Fill positions ``n, n-1, ..., 1`` with the largest maximal element of what is left.

    Maximality is judged in the walk order of the whole tournament restricted
    to the remaining vertices.
    """
    order = rawalk_order(t)
    remaining = (1 << (t.n + 1)) - 2
    word = [0] * t.n
    for k in range(t.n - 1, -1, -1):
        top = order.maximal_in(remaining).bit_length() - 1
        word[k] = top
        remaining &= ~(1 << top)
    return tuple(word)


def largest_maximal_representation(t: Tournament) -> BiorderedCode:
    lam = largest_maximal_order(t)
    return BiorderedCode(lam, decode(t, lam))


def is_lmax_representation(code: BiorderedCode) -> bool:
    """Every descent bottom of the word must be some vertex's parent."""
    rng = code.parent_range()
    pi = code.pi
    return all(pi[k + 1] in rng for k in range(code.n - 1) if pi[k] > pi[k + 1])


def reduce(code: BiorderedCode) -> BiorderedCode:
    """Delete the letter ``n`` and send arrows into ``n`` to INF."""
    n = code.n
    if n < 2:
        raise SizeOne("cannot reduce a code on one element")
    if not is_lmax_representation(code):
        raise NotLmax("reduction is defined on largest maximal representations")
    pi = tuple(v for v in code.pi if v != n)
    p = tuple(INF if v == n else v for v in code.p[:-1])
    return BiorderedCode(pi, p)


def code_type(code: BiorderedCode) -> TypeTriple:
    i = sum(1 for v in code.p if v == INF)
    return TypeTriple(code.n, i, len(code.parent_range()))


def type_of(t: Tournament) -> TypeTriple:
    return code_type(largest_maximal_representation(t))


def is_ascending_direct(t: Tournament) -> bool:
    """Every ``u < n`` starts at least one ascent."""
    return all(t.ascents_from[u] for u in range(1, t.n))


def is_ascending(t: Tournament) -> bool:
    if not is_alt_acyclic(t):
        raise NotAltAcyclic("ascending is defined for alternation acyclic tournaments")
    return type_of(t).i == 1
