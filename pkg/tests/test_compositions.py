from math import comb

import pytest

from emc_young.compositions import (
    Composition,
    CompositionError,
    YoungDiagram,
    composition_of,
    conjugate,
    corners,
    diagram_of,
    enumerate_compositions,
    enumerate_diagrams,
    join,
    meet,
    parse_tuple,
    word_of,
)
from emc_young.emc import emc

from oracles import removable_cells


def C(*entries):
    return Composition(entries)


def Y(rows, s, cols):
    return YoungDiagram(tuple(rows), s, cols)


@pytest.mark.parametrize(
    "comp, word",
    [
        (C(3, 2, 0, 3, 1), (0, 0, 0, 1, 1, 3, 3, 3, 4)),
        (C(4, 0, 0), (0, 0, 0, 0)),
        (C(4, 1, 1, 0, 0), (0, 0, 0, 0, 1, 2)),
    ],
)
def test_word_of(comp, word):
    assert word_of(comp) == word


@pytest.mark.parametrize(
    "comp, rows",
    [
        (C(3, 2, 0, 3, 1), (4, 3, 3, 3, 1, 1)),
        (C(0, 0, 0, 3), (3, 3, 3)),
        (C(2, 0, 2, 4, 0, 0, 0, 1), (7, 3, 3, 3, 3, 2, 2)),
        (C(0, 5, 1, 0, 2, 1, 0, 0), (5, 4, 4, 2, 1, 1, 1, 1, 1)),
    ],
)
def test_diagram_of(comp, rows):
    d = diagram_of(comp)
    assert d.rows == rows
    assert d.box == (comp.s, comp.n - 1)
    # reading padded rows bottom-up gives back the word
    assert tuple(reversed(d.padded_rows())) == word_of(comp)


def test_composition_of_examples():
    assert composition_of(Y((4, 3, 3, 3, 1, 1), 9, 4), 9, 5) == C(3, 2, 0, 3, 1)
    assert composition_of(Y((), 3, 3), 3, 4) == C(3, 0, 0, 0)
    assert composition_of(Y((2, 1), 6, 4), 6, 5) == C(4, 1, 1, 0, 0)


def test_composition_of_rejects_oversized():
    with pytest.raises(CompositionError):
        composition_of(Y((3,), 2, 3), 2, 3)
    with pytest.raises(CompositionError):
        composition_of(Y((1, 1, 1), 3, 1), 2, 2)


def test_round_trip_exhaustive():
    for s in range(7):
        for n in range(1, 7):
            for c in enumerate_compositions(s, n):
                d = diagram_of(c)
                assert composition_of(d, s, n) == c
                assert d.size == sum(i * a for i, a in enumerate(c))


def test_conjugate_examples():
    assert conjugate(Y((4, 3, 3, 3, 1, 1), 9, 4)).rows == (6, 4, 4, 1)
    assert conjugate(Y((), 3, 2)).rows == ()
    assert conjugate(Y((5,), 1, 5)).rows == (1,) * 5


def test_conjugation_is_a_bijection_between_boxes():
    for s in range(6):
        for n in range(1, 6):
            source = list(enumerate_diagrams(s, n - 1))
            images = [conjugate(d) for d in source]
            target = set(enumerate_diagrams(n - 1, s))
            assert set(images) == target
            assert len(set(images)) == len(source)
            assert all(conjugate(e) == d for d, e in zip(source, images))


def test_corners_examples():
    assert corners(Y((4, 3, 3, 3, 1, 1), 9, 4)) == 3
    assert corners(Y((), 2, 2)) == 0
    assert corners(Y((5, 5, 5), 3, 5)) == 1


def test_corners_match_removable_cells():
    for s in range(6):
        for n in range(1, 6):
            for d in enumerate_diagrams(s, n - 1):
                assert corners(d) == removable_cells(d)


@pytest.mark.parametrize("s, n, count", [(1, 2, 2), (2, 3, 6), (6, 5, 210), (0, 4, 1), (5, 1, 1)])
def test_enumerate_counts(s, n, count):
    comps = list(enumerate_compositions(s, n))
    assert len(comps) == count == comb(s + n - 1, s)
    assert len(set(comps)) == count
    assert [c.entries for c in comps] == sorted(c.entries for c in comps)


def test_enumerate_small_listing():
    assert [c.entries for c in enumerate_compositions(1, 2)] == [(0, 1), (1, 0)]


def test_join_meet():
    a, b = Y((2, 1), 3, 2), Y((1, 1, 1), 3, 2)
    assert join(a, b).rows == (2, 1, 1)
    assert meet(a, b).rows == (1, 1)
    assert join(a, a) == meet(a, a) == a
    empty = Y((), 3, 2)
    assert join(empty, b) == b
    assert meet(empty, b) == empty


def test_join_meet_reject_mismatched_boxes():
    with pytest.raises(CompositionError):
        join(Y((1,), 2, 2), Y((1,), 3, 2))


def test_lattice_rank_identity():
    for s in range(5):
        for n in range(1, 5):
            comps = list(enumerate_compositions(s, n))
            for a in comps:
                for b in comps:
                    da, db = diagram_of(a), diagram_of(b)
                    j, m = join(da, db), meet(da, db)
                    assert j.size + m.size == da.size + db.size
                    assert emc((a, b)) == j.size - m.size


def test_invalid_objects():
    with pytest.raises(CompositionError):
        Composition((1, -1))
    with pytest.raises(CompositionError):
        Composition(())
    with pytest.raises(CompositionError):
        YoungDiagram((1, 2), 3, 3)
    with pytest.raises(CompositionError):
        YoungDiagram((1, 1, 1), 2, 3)


def test_parse_tuple():
    assert parse_tuple(" 4, 1,1,0,0 ; 3,0,0,0,3") == (C(4, 1, 1, 0, 0), C(3, 0, 0, 0, 3))
    with pytest.raises(CompositionError):
        parse_tuple("1,a")
    with pytest.raises(CompositionError):
        parse_tuple(" ; ")
