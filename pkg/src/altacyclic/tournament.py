"""Tournaments on {1..n}, their ascent/descent structure and alternating walks.

A tournament is stored as one orientation bit per pair ``i < j``.  Pairs are
ranked lexicographically, ``(1,2), (1,3), ..., (n-1,n)``, and the pair of rank
``r`` lives at bit ``m - 1 - r`` (``m`` the number of pairs), so the most
significant bit is the pair ``(1,2)``.  A set bit means the ascent ``i -> j``.

Vertex sets are handled as integer bitmasks in which vertex ``v`` is bit ``v``
(bit 0 is never used).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import NotAltAcyclic


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs ``(i, j)`` with ``1 <= i < j <= n`` in lexicographic order."""
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def _pair_bits(n: int) -> tuple[tuple[int, int, int], ...]:
    pairs = pair_list(n)
    m = len(pairs)
    return tuple((i, j, 1 << (m - 1 - r)) for r, (i, j) in enumerate(pairs))


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _below(v: int) -> int:
    # vertices 1..v-1
    return (1 << v) - 2


@dataclass(frozen=True)
class Tournament:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a tournament needs at least one vertex")
        if not 0 <= self.bits < (1 << num_pairs(self.n)):
            raise ValueError(f"orientation mask {self.bits:#x} out of range for n={self.n}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_ascents(cls, n: int, ascents: Iterable[Sequence[int]]) -> Tournament:
        lookup = {(i, j): b for i, j, b in _pair_bits(n)}
        bits = 0
        for i, j in ascents:
            if (i, j) not in lookup:
                raise ValueError(f"({i}, {j}) is not a pair i<j of 1..{n}")
            bits |= lookup[(i, j)]
        return cls(n, bits)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Tournament:
        """Build from directed edges ``(u, v)``; every pair must appear exactly once."""
        seen = set()
        ascents = []
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen or u == v:
                raise ValueError(f"edge ({u}, {v}) repeats a pair")
            seen.add(key)
            if u < v:
                ascents.append((u, v))
        if len(seen) != num_pairs(n):
            raise ValueError("edge list does not orient every pair")
        return cls.from_ascents(n, ascents)

    @classmethod
    def from_beats(cls, n: int, beats: Sequence[int]) -> Tournament:
        """Build from out-neighbour masks indexed by vertex (index 0 ignored)."""
        bits = 0
        for i, j, b in _pair_bits(n):
            if beats[i] >> j & 1:
                bits |= b
        return cls(n, bits)

    @classmethod
    def transitive(cls, n: int) -> Tournament:
        """``i -> j`` for every ``i < j``."""
        return cls(n, (1 << num_pairs(n)) - 1)

    @classmethod
    def all_descents(cls, n: int) -> Tournament:
        """``j -> i`` for every ``i < j``."""
        return cls(n, 0)

    # -- adjacency ----------------------------------------------------------

    @cached_property
    def beats(self) -> tuple[int, ...]:
        """``beats[u]`` is the mask of vertices ``v`` with ``u -> v``."""
        out = [0] * (self.n + 1)
        bits = self.bits
        for i, j, b in _pair_bits(self.n):
            if bits & b:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def ascents_from(self) -> tuple[int, ...]:
        """``ascents_from[u]``: vertices ``v > u`` with ``u -> v``."""
        return tuple(b & ~((1 << (u + 1)) - 1) for u, b in enumerate(self.beats))

    @cached_property
    def descents_from(self) -> tuple[int, ...]:
        """``descents_from[u]``: vertices ``v < u`` with ``u -> v``."""
        return tuple(b & _below(u) for u, b in enumerate(self.beats))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.beats[u] >> v & 1)

    def ascents(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, b in _pair_bits(self.n) if self.bits & b]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) if self.bits & b else (j, i) for i, j, b in _pair_bits(self.n)]

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "ascents": [list(e) for e in self.ascents()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Tournament:
        extra = set(data) - {"n", "ascents"}
        if extra or "ascents" not in data:
            raise ValueError(f"tournament JSON needs exactly the keys n and ascents, got {sorted(data)}")
        return cls.from_ascents(int(data["n"]), data["ascents"])

    @classmethod
    def from_json(cls, text: str) -> Tournament:
        return cls.from_dict(json.loads(text))

    def to_hex(self) -> str:
        width = max(1, (num_pairs(self.n) + 3) // 4)
        return format(self.bits, f"0{width}x")

    @classmethod
    def from_hex(cls, n: int, text: str) -> Tournament:
        return cls(n, int(text, 16) if text else 0)

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, hex={self.to_hex()!r})"


@dataclass(frozen=True)
class StepDigraph:
    """Descent-then-ascent steps: ``u => v`` iff ``u -> w -> v`` with ``w < u`` and ``w < v``."""

    n: int
    succ: tuple[int, ...]

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {(u, v) for u in range(1, self.n + 1) for v in iter_bits(self.succ[u])}


@dataclass(frozen=True)
class PartialOrder:
    """A relation on {1..n} stored as up-sets: ``up[u]`` is the mask of all ``v`` with ``u <= v``."""

    n: int
    up: tuple[int, ...]

    def leq(self, u: int, v: int) -> bool:
        return bool(self.up[u] >> v & 1)

    def less(self, u: int, v: int) -> bool:
        return u != v and self.leq(u, v)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(u, v) for v in range(1, self.n + 1)] for u in range(1, self.n + 1)]

    def is_reflexive(self) -> bool:
        return all(self.up[u] >> u & 1 for u in range(1, self.n + 1))

    def is_transitive(self) -> bool:
        for u in range(1, self.n + 1):
            for v in iter_bits(self.up[u]):
                if self.up[v] & ~self.up[u]:
                    return False
        return True

    def is_antisymmetric(self) -> bool:
        for u in range(1, self.n + 1):
            for v in iter_bits(self.up[u] & ~(1 << u)):
                if self.up[v] >> u & 1:
                    return False
        return True

    def dual(self) -> PartialOrder:
        down = [0] * (self.n + 1)
        for u in range(1, self.n + 1):
            for v in iter_bits(self.up[u]):
                down[v] |= 1 << u
        return PartialOrder(self.n, tuple(down))

    def relabel(self, sigma) -> PartialOrder:
        """Image under the vertex bijection ``sigma`` (a callable on 1..n)."""
        up = [0] * (self.n + 1)
        for u in range(1, self.n + 1):
            for v in iter_bits(self.up[u]):
                up[sigma(u)] |= 1 << sigma(v)
        return PartialOrder(self.n, tuple(up))

    def maximal_in(self, subset: int) -> int:
        """Mask of elements of ``subset`` with nothing strictly above them inside ``subset``."""
        out = 0
        for u in iter_bits(subset):
            if not (self.up[u] & subset & ~(1 << u)):
                out |= 1 << u
        return out

    def is_linear_extension(self, word: Sequence[int]) -> bool:
        """True when ``u <= v`` forces ``u`` to appear no later than ``v`` in ``word``."""
        if sorted(word) != list(range(1, self.n + 1)):
            return False
        placed = 0
        for v in word:
            # everything strictly above v must still be unplaced
            if self.up[v] & placed:
                return False
            placed |= 1 << v
        return True


def _closure(n: int, succ: Sequence[int]) -> list[int]:
    """Transitive (non-reflexive) closure of a digraph given by successor masks."""
    reach = list(succ)
    for k in range(1, n + 1):
        bit = 1 << k
        rk = reach[k]
        for i in range(1, n + 1):
            if reach[i] & bit:
                reach[i] |= rk
    return reach


def step_digraph(t: Tournament) -> StepDigraph:
    asc = t.ascents_from
    succ = [0] * (t.n + 1)
    for u in range(1, t.n + 1):
        s = 0
        for w in iter_bits(t.descents_from[u]):
            s |= asc[w]
        succ[u] = s
    return StepDigraph(t.n, tuple(succ))


def left_step_digraph(t: Tournament) -> StepDigraph:
    """Ascent-then-descent steps, the generator of the left-alternating walk order."""
    desc = t.descents_from
    succ = [0] * (t.n + 1)
    for u in range(1, t.n + 1):
        s = 0
        for w in iter_bits(t.ascents_from[u]):
            s |= desc[w]
        succ[u] = s
    return StepDigraph(t.n, tuple(succ))


def has_alternating_4cycle(t: Tournament) -> bool:
    """Look for ``u1 -> u2 -> u3 -> u4 -> u1`` with ascent, descent, ascent, descent."""
    asc, desc = t.ascents_from, t.descents_from
    n = t.n
    if n < 4:
        return False
    # into_desc[u]: vertices x > u with x -> u
    into_desc = [0] * (n + 1)
    for x in range(1, n + 1):
        for u in iter_bits(desc[x]):
            into_desc[u] |= 1 << x
    for u1 in range(1, n + 1):
        closers = into_desc[u1]
        if not closers:
            continue
        for u2 in iter_bits(asc[u1]):
            for u3 in iter_bits(desc[u2]):
                if asc[u3] & closers:
                    return True
    return False


def has_alternating_closed_walk(t: Tournament) -> bool:
    """True iff the step digraph has a directed cycle."""
    reach = _closure(t.n, step_digraph(t).succ)
    return any(reach[u] >> u & 1 for u in range(1, t.n + 1))


def is_alt_acyclic(t: Tournament) -> bool:
    return not has_alternating_4cycle(t)


def _cycle_descents(cycle: Sequence[int]) -> int:
    return sum(1 for a, b in zip(cycle, cycle[1:] + cycle[:1]) if a > b)


def is_semiacyclic(t: Tournament) -> bool:
    """No directed 3-cycle with one descent, no directed 4-cycle with at most two."""
    beats = t.beats
    n = t.n
    for a, b, c in combinations(range(1, n + 1), 3):
        # a<b<c: the only ascending orientation is a->b->c->a
        if beats[a] >> b & 1 and beats[b] >> c & 1 and beats[c] >> a & 1:
            return False
    for a, b, c, d in combinations(range(1, n + 1), 4):
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            for order in (cyc, cyc[::-1]):
                if all(beats[x] >> y & 1 for x, y in zip(order, order[1:] + order[:1])):
                    if _cycle_descents(order) <= 2:
                        return False
    return True


def rawalk_relation(t: Tournament) -> PartialOrder:
    """Reflexive-transitive closure of the step digraph, whether or not it is antisymmetric."""
    reach = _closure(t.n, step_digraph(t).succ)
    return PartialOrder(t.n, (0,) + tuple(reach[u] | 1 << u for u in range(1, t.n + 1)))


def rawalk_order(t: Tournament) -> PartialOrder:
    """Right-alternating walk order (walks open with a descent and close with an ascent)."""
    rel = rawalk_relation(t)
    if not rel.is_antisymmetric():
        raise NotAltAcyclic("tournament contains an alternating cycle")
    return rel


def lawalk_order(t: Tournament) -> PartialOrder:
    """Left-alternating walk order (walks open with an ascent and close with a descent)."""
    reach = _closure(t.n, left_step_digraph(t).succ)
    rel = PartialOrder(t.n, (0,) + tuple(reach[u] | 1 << u for u in range(1, t.n + 1)))
    if not rel.is_antisymmetric():
        raise NotAltAcyclic("tournament contains an alternating cycle")
    return rel


def reverse_all_edges(t: Tournament) -> Tournament:
    return Tournament(t.n, t.bits ^ ((1 << num_pairs(t.n)) - 1))


def complement_relabel(t: Tournament) -> Tournament:
    """Rename vertex ``i`` to ``n + 1 - i`` keeping every arrow."""
    n = t.n
    return Tournament.from_edges(n, [(n + 1 - u, n + 1 - v) for u, v in t.edges()])
