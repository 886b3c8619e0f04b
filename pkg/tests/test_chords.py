from itertools import chain, combinations

import pytest
from hypothesis import given, strategies as st

from dihedral_dilog.chords import (
    Chord,
    block_chords,
    crosses,
    crossing_set,
    enumerate_chords,
    forget,
    is_chord,
    pullback,
)
from dihedral_dilog.errors import InvalidArgumentError, InvalidSizeError, TargetTooSmallError

from oracles import brute_blocks, brute_chords, brute_crosses


def pairs(chords):
    return [(c.i, c.j) for c in chords]


def subsets(xs):
    xs = list(xs)
    return chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))


# -- enumeration ----------------------------------------------------------------

def test_enumerate_small():
    assert pairs(enumerate_chords(4)) == [(1, 3), (2, 4)]
    assert pairs(enumerate_chords(5)) == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    assert pairs(enumerate_chords(6)) == [
        (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)
    ]


@pytest.mark.parametrize("n", range(4, 31))
def test_enumerate_count_and_order(n):
    chords = enumerate_chords(n)
    assert len(chords) == n * (n - 3) // 2
    assert pairs(chords) == brute_chords(n)
    assert chords == sorted(chords)


@pytest.mark.parametrize("n", [-1, 0, 3])
def test_enumerate_rejects_small(n):
    with pytest.raises(InvalidSizeError):
        enumerate_chords(n)


def test_chord_normalises_and_validates():
    assert Chord(4, 1, 6) == Chord(1, 4, 6)
    assert Chord(7, 9, 6) == Chord(1, 3, 6)  # indices taken mod n
    with pytest.raises(InvalidArgumentError):
        Chord(1, 2, 6)
    with pytest.raises(InvalidArgumentError):
        Chord(1, 6, 6)
    with pytest.raises(InvalidSizeError):
        Chord(1, 2, 3)


@given(st.integers(4, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n), st.integers(1, n))))
def test_chord_symmetric_construction(args):
    n, i, j = args
    if is_chord(i, j, n):
        assert Chord(i, j, n) == Chord(j, i, n)
        assert Chord(i, j, n).i < Chord(i, j, n).j
    else:
        with pytest.raises(InvalidArgumentError):
            Chord(i, j, n)


# -- crossings ------------------------------------------------------------------

def test_crosses_examples():
    assert crosses(Chord(1, 3, 5), Chord(2, 4, 5))
    assert not crosses(Chord(1, 3, 5), Chord(1, 4, 5))
    with pytest.raises(InvalidArgumentError):
        crosses(Chord(1, 3, 5), Chord(1, 3, 6))


def test_crossing_set_examples():
    assert pairs(sorted(crossing_set(Chord(1, 3, 4)))) == [(2, 4)]
    assert pairs(sorted(crossing_set(Chord(1, 3, 5)))) == [(2, 4), (2, 5)]
    assert pairs(sorted(crossing_set(Chord(1, 4, 6)))) == [(2, 5), (2, 6), (3, 5), (3, 6)]


@pytest.mark.parametrize("n", range(4, 13))
def test_crosses_matches_cyclic_interval_brute_force(n):
    chords = enumerate_chords(n)
    for c1 in chords:
        for c2 in chords:
            expected = brute_crosses((c1.i, c1.j), (c2.i, c2.j), n)
            assert crosses(c1, c2) == expected
            assert crosses(c1, c2) == crosses(c2, c1)
            assert (c2 in crossing_set(c1)) == expected
            assert (c2 in crossing_set(c1)) == (c1 in crossing_set(c2))
        assert crossing_set(c1)


# -- forgetful maps -------------------------------------------------------------

def test_forget_examples():
    assert forget(6, {2}).blocks == ((1, 2), (3,), (4,), (5,), (6,))
    assert forget(8, {3, 4, 7}).blocks == ((1,), (2, 3, 4), (5,), (6, 7), (8,))
    assert forget(10, {4, 6, 10}).blocks == ((1,), (2,), (3, 4), (5, 6), (7,), (8,), (9, 10))


def test_forget_wraps_around_vertex_n():
    assert forget(6, {1}).blocks == ((2,), (3,), (4,), (5,), (6, 1))
    assert forget(7, {1, 2}).blocks == ((3,), (4,), (5,), (6,), (7, 1, 2))


def test_forget_errors():
    with pytest.raises(TargetTooSmallError):
        forget(6, {2, 4, 6})
    with pytest.raises(InvalidArgumentError):
        forget(6, {7})


@pytest.mark.parametrize("n", range(4, 11))
def test_forget_matches_brute_force(n):
    for J in subsets(range(1, n + 1)):
        if n - len(J) < 4:
            continue
        p = forget(n, J)
        assert list(p.blocks) == brute_blocks(n, J)
        assert p.m == n - len(J)
        assert sorted(chain.from_iterable(p.blocks)) == list(range(1, n + 1))
        # retained points label the sides in their original order
        assert list(p.leaders()) == [v for v in range(1, n + 1) if v not in J]


@pytest.mark.parametrize("n", range(6, 11))
def test_forget_in_two_stages_commutes(n):
    evens = range(2, n + 1, 2)
    for J in subsets(evens):
        if n - len(J) < 4:
            continue
        for r in range(len(J) + 1):
            for J1 in combinations(J, r):
                J2 = set(J) - set(J1)
                assert forget(n, J1).forget(J2).blocks == forget(n, J).blocks
                assert forget(n, J2).forget(J1).blocks == forget(n, J).blocks


# -- block chords and pullbacks -------------------------------------------------

def test_block_chords_pentagon():
    p = forget(6, {2})
    bcs = block_chords(p)
    assert len(bcs) == 5
    assert ((1, 2), (5,)) in [(bc.a, bc.b) for bc in bcs]


@pytest.mark.parametrize("n,J", [(8, {2, 4}), (8, {2, 4, 6, 8}), (10, {2, 6}), (12, {2, 4, 6})])
def test_block_chord_count(n, J):
    p = forget(n, J)
    assert len(block_chords(p)) == p.m * (p.m - 3) // 2


def test_pullback_examples():
    bcs = {(bc.a, bc.b): bc for bc in block_chords(forget(6, {2}))}
    assert pairs(sorted(pullback(bcs[(1, 2), (5,)]))) == [(1, 5), (2, 5)]
    assert pairs(sorted(pullback(bcs[(1, 2), (4,)]))) == [(1, 4), (2, 4)]
    assert pairs(pullback(bcs[(3,), (5,)])) == [(3, 5)]


def test_pullback_depends_only_on_blocks():
    # ((1,2),(5,6)) appears for J = {2,6} and for J = {2,4,6}
    a = {(bc.a, bc.b): pullback(bc) for bc in block_chords(forget(8, {2, 6}))}
    b = {(bc.a, bc.b): pullback(bc) for bc in block_chords(forget(8, {2, 4, 6}))}
    assert a[(1, 2), (5, 6)] == b[(1, 2), (5, 6)]


@pytest.mark.parametrize("n", range(4, 11))
def test_pullbacks_are_strict_chords(n):
    for J in subsets(range(2, n + 1, 2)):
        if n - len(J) < 4:
            continue
        for bc in block_chords(forget(n, J)):
            pb = pullback(bc)
            assert len(pb) == len(bc.a) * len(bc.b)
            assert all(is_chord(c.i, c.j, n) for c in pb)
