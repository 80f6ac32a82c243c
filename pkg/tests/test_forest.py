import json
from collections import Counter
from itertools import permutations
from math import comb

import pytest

from altacyclic.enumeration import enumerate_lmax_codes, enumerate_tournaments
from altacyclic.errors import NotAltAcyclic, NotLinearExtension, NotLmax, SizeOne
from altacyclic.forest import (
    INF,
    BiorderedCode,
    TypeTriple,
    code_type,
    decode,
    induce_tournament,
    is_ascending,
    is_ascending_direct,
    is_lmax_representation,
    largest_maximal_order,
    largest_maximal_representation,
    parent_functions,
    reduce,
    type_of,
)
from altacyclic.numbers import type_table
from altacyclic.tournament import Tournament, is_alt_acyclic, rawalk_order

from oracles import all_codes, induce_literal

FIG1 = BiorderedCode((5, 3, 1, 2, 4, 6), (INF, 3, 6, INF, 6, INF))


def chain(n):
    return BiorderedCode(tuple(range(1, n + 1)), tuple(range(2, n + 1)) + (INF,))


def test_code_validation():
    with pytest.raises(ValueError):
        BiorderedCode((1, 2), (1, INF))  # p(1) must exceed 1
    with pytest.raises(ValueError):
        BiorderedCode((1, 1), (2, INF))
    with pytest.raises(ValueError):
        BiorderedCode((1, 2, 3), (2, INF))


def test_parent_function_count():
    # p(i) ranges over INF and i+1..n
    for n in range(1, 6):
        expected = 1
        for i in range(1, n + 1):
            expected *= n - i + 1
        assert sum(1 for _ in parent_functions(n)) == expected


def test_code_json_round_trip():
    assert json.loads(FIG1.to_json()) == {"n": 6, "pi": [5, 3, 1, 2, 4, 6], "p": [0, 3, 6, 0, 6, 0]}
    assert BiorderedCode.from_json(FIG1.to_json()) == FIG1
    assert BiorderedCode.from_dict({"pi": [1, 2], "p": [2, "inf"]}) == chain(2)


# -- inducing ---------------------------------------------------------------------


def test_figure_one_induced_arcs():
    t = induce_tournament(FIG1)
    for u, v in [(5, 2), (2, 3), (2, 4), (2, 6), (3, 6)]:
        assert t.has_edge(u, v)
    assert [v for v in range(4, 7) if t.has_edge(3, v)] == [6]


def test_all_infinite_parents_give_all_descents():
    for pi in permutations(range(1, 5)):
        assert induce_tournament(BiorderedCode(pi, (INF,) * 4)) == Tournament.all_descents(4)


def test_chain_gives_transitive():
    for n in range(1, 7):
        assert induce_tournament(chain(n)) == Tournament.transitive(n)


def test_induce_matches_literal_rule():
    for n in range(1, 5):
        for pi, p in all_codes(n):
            t = induce_tournament(BiorderedCode(pi, p))
            assert set(t.edges()) == induce_literal(n, pi, p)


def test_soundness_exhaustive():
    for n in range(1, 5):
        for pi, p in all_codes(n):
            t = induce_tournament(BiorderedCode(pi, p))
            assert is_alt_acyclic(t)
            assert rawalk_order(t).is_linear_extension(pi)


# -- decoding -----------------------------------------------------------------------


def test_decode_examples():
    assert decode(Tournament.transitive(5), (1, 2, 3, 4, 5)) == (2, 3, 4, 5, INF)
    t = induce_tournament(FIG1)
    assert decode(t, FIG1.pi) == FIG1.p
    fig2 = BiorderedCode((1, 2, 5, 3, 4, 6), decode(t, (1, 2, 5, 3, 4, 6)))
    assert induce_tournament(fig2) == t


def test_decode_round_trip_every_extension():
    for n in range(1, 6):
        for t in enumerate_tournaments(n):
            if not is_alt_acyclic(t):
                continue
            order = rawalk_order(t)
            for pi in permutations(range(1, n + 1)):
                if order.is_linear_extension(pi):
                    assert induce_tournament(BiorderedCode(pi, decode(t, pi))) == t


def test_decode_errors():
    bad = next(t for t in enumerate_tournaments(4) if not is_alt_acyclic(t))
    with pytest.raises(NotAltAcyclic):
        decode(bad, (1, 2, 3, 4))
    t = induce_tournament(FIG1)  # 5 must precede 3
    with pytest.raises(NotLinearExtension):
        decode(t, (1, 2, 3, 4, 5, 6))


# -- largest maximal representation ----------------------------------------------------


def test_figure_two_lmax():
    t = induce_tournament(FIG1)
    assert largest_maximal_order(t) == (1, 2, 5, 3, 4, 6)
    code = largest_maximal_representation(t)
    assert code.pi == (1, 2, 5, 3, 4, 6)
    assert induce_tournament(code) == t
    assert is_lmax_representation(code)
    assert 3 in code.parent_range()


def test_figure_three_discarded_element():
    # only p(3) = 4 and the lmax condition are fixed by the picture; check every completion
    lam = (1, 2, 5, 4, 3)
    found = 0
    for p in parent_functions(5):
        code = BiorderedCode(lam, p)
        if p[2] != 4 or not is_lmax_representation(code):
            continue
        found += 1
        t = induce_tournament(code)
        assert largest_maximal_order(t) == lam
        assert largest_maximal_representation(t) == code
        assert t.has_edge(5, 3) and t.has_edge(3, 4)
        assert rawalk_order(t).less(5, 4)
    assert found > 0


def test_transitive_lmax():
    for n in range(1, 7):
        t = Tournament.transitive(n)
        assert largest_maximal_order(t) == tuple(range(1, n + 1))
        assert largest_maximal_representation(t) == chain(n)


def test_lmax_characterization_examples():
    assert is_lmax_representation(chain(4))
    assert is_lmax_representation(BiorderedCode((1, 2, 3), (INF, INF, INF)))
    assert not is_lmax_representation(BiorderedCode((2, 1), (INF, INF)))


def test_lmax_is_bijection():
    for n in range(1, 6):
        codes = {}
        for t in enumerate_tournaments(n):
            if is_alt_acyclic(t):
                code = largest_maximal_representation(t)
                assert is_lmax_representation(code)
                assert code.pi[0] == 1
                assert induce_tournament(code) == t
                codes[code] = t
        assert set(codes) == set(enumerate_lmax_codes(n))
    assert len(codes) == 608


def test_lmax_is_largest_maximal_by_definition():
    # independent reading: lam(k) is the largest u in {lam(1..k)} with no v in the set strictly above u
    for n in range(1, 6):
        for t in enumerate_tournaments(n):
            if not is_alt_acyclic(t):
                continue
            order = rawalk_order(t)
            lam = largest_maximal_order(t)
            for k in range(n):
                pool = lam[: k + 1]
                maximal = [u for u in pool if not any(order.less(u, v) for v in pool)]
                assert lam[k] == max(maximal)


def test_lmax_errors():
    bad = next(t for t in enumerate_tournaments(4) if not is_alt_acyclic(t))
    with pytest.raises(NotAltAcyclic):
        largest_maximal_representation(bad)
    with pytest.raises(NotAltAcyclic):
        type_of(bad)


# -- reduction ----------------------------------------------------------------------------


def test_reduce_chain():
    assert reduce(chain(5)) == chain(4)


def test_reduce_figure_two():
    code = largest_maximal_representation(induce_tournament(FIG1))
    small = reduce(code)
    assert small.n == 5
    assert is_lmax_representation(small)


def test_reduce_errors():
    with pytest.raises(SizeOne):
        reduce(BiorderedCode((1,), (INF,)))
    with pytest.raises(NotLmax):
        reduce(BiorderedCode((2, 1), (INF, INF)))


def test_reduce_fibres():
    # preimages of a code with k roots and j' parents: n either adopts k - i + 1 of the
    # roots (C(k, i-1) choices times j placements) or adopts nothing (j + 1 placements)
    for n in range(2, 6):
        fibres = Counter()
        for code in enumerate_lmax_codes(n):
            small = reduce(code)
            assert is_lmax_representation(small)
            big = code_type(code)
            fibres[small, big.i, big.j] += 1
        for (small, i, j), size in fibres.items():
            st = code_type(small)
            if j == st.j + 1:
                assert size == comb(st.i, i - 1) * j
            else:
                assert (i, j) == (st.i + 1, st.j)
                assert size == j + 1
        assert {key[0] for key in fibres} == set(enumerate_lmax_codes(n - 1))


# -- types ----------------------------------------------------------------------------------


def test_type_examples():
    for n in range(1, 7):
        assert type_of(Tournament.transitive(n)) == TypeTriple(n, 1, n - 1)
        assert type_of(Tournament.all_descents(n)) == TypeTriple(n, n, 0)


def test_type_tally_matches_table():
    for n in range(1, 6):
        tally = Counter()
        for t in enumerate_tournaments(n):
            if is_alt_acyclic(t):
                tt = type_of(t)
                assert 1 <= tt.i <= n and 0 <= tt.j <= n - 1 and tt.i + tt.j <= n
                assert tt.j > 0 or tt.i == n
                tally[tt.i, tt.j] += 1
        assert dict(tally) == type_table(n).cells


def test_ascending():
    for n in range(1, 7):
        assert is_ascending(Tournament.transitive(n))
        assert is_ascending(Tournament.all_descents(n)) == (n == 1)
    counts = []
    for n in range(1, 6):
        c = 0
        for t in enumerate_tournaments(n):
            if is_alt_acyclic(t):
                assert is_ascending(t) == is_ascending_direct(t)
                c += is_ascending(t)
        counts.append(c)
    assert counts == [1, 1, 3, 17, 155]
