from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altacyclic.bijections import (
    PairVectors,
    ascending_code_to_dumont,
    code_of_pair_vector,
    descent_bottoms,
    ds_decode,
    ds_encode,
    dumont_functions,
    dumont_pair_of,
    dumont_pairs,
    dumont_to_ascending_code,
    excedant_functions,
    fhat_decode,
    fhat_encode,
    is_excedant,
    lmax_code_to_median_excedant,
    median_excedant_model,
    nm_model,
    orbit,
    orbit_representative,
    pair_vector_model,
    pair_vector_of_code,
    phi,
)
from altacyclic.enumeration import enumerate_lmax_codes
from altacyclic.errors import DomainViolation, NotAscending, NotLmax, OutOfRange
from altacyclic.forest import INF, BiorderedCode, code_type, induce_tournament, is_ascending
from altacyclic.numbers import genocchi_first, median_genocchi, normalized_median_genocchi, type_table

FIRST = [1, 1, 3, 17, 155]
MEDIAN = [1, 2, 8, 56, 608]


def count(it):
    return sum(1 for _ in it)


# -- descent-sensitive code ---------------------------------------------------------


def test_ds_worked_example():
    assert ds_encode((6, 1, 5, 3, 4, 2)) == (5, 4, 4, 6, 6, 6)
    assert ds_decode((5, 4, 4, 6, 6, 6)) == (6, 1, 5, 3, 4, 2)


def test_ds_identity_and_decreasing():
    for n in range(1, 8):
        ident = tuple(range(1, n + 1))
        assert ds_encode(ident) == ident
        assert ds_decode(ident) == ident
        assert ds_encode(ident[::-1]) == (n,) * n


def test_ds_bijection_exhaustive():
    for n in range(1, 8):
        perms = list(permutations(range(1, n + 1)))
        codes = {ds_encode(p) for p in perms}
        assert len(codes) == len(perms)
        for p in perms:
            f = ds_encode(p)
            assert is_excedant(f) and max(f) <= n
            assert ds_decode(f) == p
            assert set(range(1, n + 1)) - set(f) == descent_bottoms(p)
        for f in excedant_functions(n):
            assert ds_encode(ds_decode(f)) == f


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 10))))
def test_ds_round_trip_property(perm):
    assert ds_decode(ds_encode(perm)) == tuple(perm)


def test_ds_decode_rejects_non_excedant():
    with pytest.raises(DomainViolation):
        ds_decode((1, 1))
    with pytest.raises(DomainViolation):
        ds_decode((3, 2))


# -- Dumont side ------------------------------------------------------------------------


def test_fhat_example_and_round_trip():
    assert fhat_encode((2,), (2,)) == (2, 2)
    for n in range(2, 6):
        for pt in product(*(range(j + 1, n + 1) for j in range(1, n))):
            for ft in product(*(range(j, n + 1) for j in range(2, n + 1))):
                fh = fhat_encode(pt, ft)
                assert is_excedant(fh) and all(v % 2 == 0 and v <= 2 * n - 2 for v in fh)
                assert fhat_decode(fh) == (pt, ft)


def test_fhat_domain():
    with pytest.raises(DomainViolation):
        fhat_encode((1,), (2,))
    with pytest.raises(DomainViolation):
        fhat_encode((2, 3), (2,))
    with pytest.raises(DomainViolation):
        fhat_decode((1, 2))


def test_dumont_function_counts():
    assert [count(dumont_functions(n)) for n in range(1, 6)] == FIRST


def test_ascending_to_dumont_bijection():
    for n in range(2, 6):
        image = {}
        for code in enumerate_lmax_codes(n):
            t = induce_tournament(code)
            if not is_ascending(t):
                with pytest.raises(NotAscending):
                    ascending_code_to_dumont(code)
                continue
            fh = ascending_code_to_dumont(code)
            assert fh not in image
            image[fh] = code
            assert dumont_to_ascending_code(fh) == code
        assert set(image) == set(dumont_functions(n))
    # n = 2: the transitive tournament and the unique Dumont function (2, 2)
    assert ascending_code_to_dumont(BiorderedCode((1, 2), (2, INF))) == (2, 2)


def test_ascending_to_dumont_needs_lmax():
    with pytest.raises(NotLmax):
        ascending_code_to_dumont(BiorderedCode((2, 1, 3), (3, 3, INF)))


def test_dumont_pairs():
    assert list(dumont_pairs(1)) == [((1,), (1,))]
    assert set(dumont_pairs(2)) == {((1, 1), (1, 2)), ((1, 2), (1, 1)), ((1, 2), (1, 2))}
    assert [count(dumont_pairs(n)) for n in range(1, 5)] == [1, 3, 17, 155]
    for n in range(1, 5):
        pairs = {dumont_pair_of(f) for f in dumont_functions(n + 1)}
        assert pairs == set(dumont_pairs(n))


# -- median models ------------------------------------------------------------------------


def slice_sums(n):
    t = type_table(n)
    return [sum(t[i, j] for j in range(n)) for i in range(1, n + 1)]


def test_median_excedant_model():
    assert list(median_excedant_model(1)) == [(1,)]
    assert count(median_excedant_model(3)) == 8
    assert count(median_excedant_model(4, fix_i=1)) == 17
    for n in range(1, 6):
        assert count(median_excedant_model(n)) == MEDIAN[n - 1]
        assert [count(median_excedant_model(n, i)) for i in range(1, n + 1)] == slice_sums(n)


def test_lmax_code_to_median_excedant():
    for n in range(1, 5):
        image = set()
        model = set(median_excedant_model(n))
        for code in enumerate_lmax_codes(n):
            f = lmax_code_to_median_excedant(code)
            assert f in model
            assert f.count(2 * n - 1) == code_type(code).i
            image.add(f)
        assert image == model


def test_pair_vector_model():
    assert set(pair_vector_model(2)) == {PairVectors((0,), (1,)), PairVectors((1,), (1,))}
    assert count(pair_vector_model(4)) == 56
    for n in range(1, 6):
        assert count(pair_vector_model(n)) == MEDIAN[n - 1]
        assert [count(pair_vector_model(n, i)) for i in range(1, n + 1)] == slice_sums(n)
    assert slice_sums(5) == [155, 278, 148, 26, 1]


def test_pair_vector_structure():
    for pv in pair_vector_model(4):
        assert pv.in_bounds() and pv.covers()


def test_pair_vector_map_is_bijection():
    for n in range(1, 6):
        model = set(pair_vector_model(n))
        image = set()
        for code in enumerate_lmax_codes(n):
            pv = pair_vector_of_code(code)
            assert pv in model
            assert pv.zeros() == code_type(code).i - 1
            assert code_of_pair_vector(pv) == code
            image.add(pv)
        assert image == model


# -- group action -----------------------------------------------------------------------------


def test_phi_examples():
    pv = PairVectors((1, 2), (1, 2))
    assert phi(2, pv) == PairVectors((1, 0), (1, 2))
    assert phi(2, phi(2, pv)) == pv
    assert phi(1, PairVectors((0, 1), (1, 2))) == PairVectors((1, 1), (1, 2))
    assert phi(2, PairVectors((1, 1), (1, 2))) == PairVectors((1, 2), (1, 1))
    with pytest.raises(OutOfRange):
        phi(3, pv)
    with pytest.raises(OutOfRange):
        phi(0, pv)


def test_phi_action():
    for n in range(2, 6):
        model = set(pair_vector_model(n))
        m = n - 1
        reps = set()
        for pv in model:
            for k in range(1, m + 1):
                img = phi(k, pv)
                assert img in model
                assert phi(k, img) == pv
                for l in range(1, m + 1):
                    assert phi(k, phi(l, pv)) == phi(l, phi(k, pv))
            orb = orbit(pv)
            assert len(orb) == 2**m
            assert {orbit_representative(x) for x in orb} == {orbit_representative(pv)}
            reps.add(orbit_representative(pv))
        assert reps == set(nm_model(m))
        assert len(reps) == len(model) // 2**m == normalized_median_genocchi(m)


def test_nm_model():
    assert list(nm_model(1)) == [((1,),)]
    assert set(nm_model(2)) == {((1,), (2,)), ((1,), (1, 2))}
    assert count(nm_model(4)) == 38
    assert [count(nm_model(n)) for n in range(1, 6)] == [1, 2, 7, 38, 295]


def test_models_are_lexicographic():
    for gen in (dumont_functions(4), median_excedant_model(3)):
        items = list(gen)
        assert items == sorted(items)
