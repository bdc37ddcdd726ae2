import itertools
from math import comb

import pytest

from quiddity.errors import BoundExceeded, IndexOutOfRange, NotATriangulationQuiddity, ValidationError
from quiddity.polygon import (
    Dissection,
    enumerate_dissections,
    glue_bullet,
    glue_circ,
    ovsienko_index,
    quiddity_of,
    triangulation_of,
)
from quiddity.sequences import MonodromyClass, bullet, circ, monodromy

from .conftest import QS_LISTED


# --------------------------------------------------------------------------- brute-force oracle


def traced_faces(n, diagonals):
    """Faces by walking the planar graph; shares no code with the library."""
    nbrs = {v: {v % n + 1, (v - 2) % n + 1} for v in range(1, n + 1)}
    for a, b in diagonals:
        nbrs[a].add(b)
        nbrs[b].add(a)
    todo = {(v, v % n + 1) for v in range(1, n + 1)}
    todo |= {(a, b) for a, b in diagonals} | {(b, a) for a, b in diagonals}
    faces = []
    while todo:
        start = u, v = min(todo)
        face = []
        while True:
            todo.discard((u, v))
            face.append(u)
            back = (u - v) % n
            w = max((x for x in nbrs[v] if (x - v) % n < back), key=lambda x: (x - v) % n)
            u, v = v, w
            if (u, v) == start:
                break
        faces.append(face)
    return faces


def brute_force(n, kind):
    all_diags = [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1) if (i, j) != (1, n)]
    out = set()
    for r in range(len(all_diags) + 1):
        if kind == "tri" and r != n - 3:
            continue
        for subset in itertools.combinations(all_diags, r):
            if any(i < k < j < l or k < i < l < j for (i, j), (k, l) in itertools.combinations(subset, 2)):
                continue
            sizes = [len(f) for f in traced_faces(n, subset)]
            if kind == "tri" and any(s != 3 for s in sizes):
                continue
            if kind == "3d" and any(s % 3 for s in sizes):
                continue
            out.add(tuple(sorted(subset)))
    return out


def catalan(k):
    return comb(2 * k, k) // (k + 1)


# --------------------------------------------------------------------------- quiddity_of / triangulation_of


def test_quiddity_examples():
    assert quiddity_of(Dissection(5, [(1, 4), (2, 4)])) == (2, 2, 1, 3, 1)
    assert quiddity_of(Dissection(3)) == (1, 1, 1)
    assert quiddity_of(Dissection(6)) == (1,) * 6


def test_pentagon_example_is_the_unique_match():
    hits = [d for d in enumerate_dissections("tri", 5) if quiddity_of(d) == (2, 2, 1, 3, 1)]
    assert [d.diagonals for d in hits] == [((1, 4), (2, 4))]


@pytest.mark.parametrize("q", [(2, 2, 1, 3, 1), (1, 1, 1), (1, 2, 1, 2), (3, 1, 3, 1, 3, 1)])
def test_triangulation_of_round_trips(q):
    d = triangulation_of(q)
    assert d.is_triangulation() and quiddity_of(d) == q


def test_triangulation_of_small_cases():
    assert triangulation_of((1, 1, 1)).diagonals == ()
    assert len(triangulation_of((1, 2, 1, 2)).diagonals) == 1


@pytest.mark.parametrize("q", [(1, 1, 1, 1), (2, 2, 2), (2, 1, 2, 2, 1), (0, 1, 1), ("1/2", 1, 1), (3, 3, 3, 3)])
def test_triangulation_of_rejects(q):
    with pytest.raises(NotATriangulationQuiddity):
        triangulation_of(q)


def test_conway_coxeter_round_trip_up_to_ten():
    for n in range(3, 11):
        for d in enumerate_dissections("tri", n):
            q = quiddity_of(d)
            assert quiddity_of(triangulation_of(q)) == q
            assert sum(q.as_ints()) == 3 * n - 6


# --------------------------------------------------------------------------- validation


def test_dissection_validation():
    with pytest.raises(ValidationError):
        Dissection(2)
    with pytest.raises(ValidationError):
        Dissection(5, [(1, 2)])  # a side
    with pytest.raises(ValidationError):
        Dissection(5, [(1, 5)])
    with pytest.raises(ValidationError):
        Dissection(6, [(1, 4), (2, 5)])  # crossing
    assert Dissection(5, [(4, 1), (2, 4)]).diagonals == ((1, 4), (2, 4))


def test_faces_match_independent_tracer():
    for n in range(3, 9):
        for d in enumerate_dissections("3d", n):
            ours = sorted(tuple(sorted(f)) for f in d.faces())
            theirs = sorted(tuple(sorted(f)) for f in traced_faces(n, d.diagonals))
            assert ours == theirs


# --------------------------------------------------------------------------- enumeration


def test_enumeration_listed_sets():
    for n in (3, 4, 5):
        got = {quiddity_of(d).as_ints() for d in enumerate_dissections("tri", n)}
        assert got == QS_LISTED[n]


@pytest.mark.parametrize("n", range(3, 12))
def test_triangulation_counts_are_catalan(n):
    assert len(enumerate_dissections("tri", n)) == catalan(n - 2)


def test_hexagon_3d_count():
    items = enumerate_dissections("3d", 6)
    assert len(items) == 15
    assert sum(1 for d in items if not d.diagonals) == 1


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("kind", ["tri", "3d"])
def test_enumeration_matches_brute_force(kind, n):
    ours = [d.diagonals for d in enumerate_dissections(kind, n)]
    assert len(ours) == len(set(ours))
    assert set(ours) == brute_force(n, kind)
    assert ours == sorted(ours)


def test_enumeration_errors():
    with pytest.raises(BoundExceeded):
        enumerate_dissections("tri", 15)
    with pytest.raises(ValidationError):
        enumerate_dissections("pent", 5)
    with pytest.raises(ValidationError):
        enumerate_dissections("tri", 2)


# --------------------------------------------------------------------------- Ovsienko index and gluing


def test_ovsienko_examples():
    assert all(ovsienko_index(d) == 0 for d in enumerate_dissections("tri", 7))
    hexagon = Dissection(6)
    assert ovsienko_index(hexagon) == 1
    assert ovsienko_index(glue_circ(hexagon, 1, hexagon)) == 2


def test_glue_examples():
    pent = Dissection(5, [(1, 4), (2, 4)])
    hexa = triangulation_of((3, 1, 3, 1, 3, 1))
    assert quiddity_of(glue_circ(pent, 2, hexa)) == (2, 6, 1, 3, 1, 3, 2, 2, 3, 1)
    tri = Dissection(3)
    assert quiddity_of(glue_circ(tri, 1, tri)) == (3, 1, 2, 2, 1)
    h = Dissection(6)
    g = glue_circ(h, 1, h)
    assert g.n == 11 and quiddity_of(g) == (3, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1)
    assert sorted(len(f) for f in g.faces()) == [3, 6, 6]


def test_glue_index_errors():
    t = Dissection(3)
    for glue in (glue_circ, glue_bullet):
        with pytest.raises(IndexOutOfRange):
            glue(t, 4, t)
        with pytest.raises(IndexOutOfRange):
            glue(t, 0, t)


def test_glue_commutes_with_sequence_products():
    for n in range(3, 7):
        for m in range(3, 6):
            for A in enumerate_dissections("3d", n):
                for B in enumerate_dissections("3d", m):
                    qa, qb = quiddity_of(A), quiddity_of(B)
                    for i in range(1, n + 1):
                        gc, gb = glue_circ(A, i, B), glue_bullet(A, i, B)
                        assert quiddity_of(gc) == circ(qa, i, qb)
                        assert quiddity_of(gb) == bullet(qa, i, qb)
                        # one new triangle on top of the old faces
                        assert gc.face_sizes() == sorted(A.face_sizes() + B.face_sizes() + [3])
                        assert gb.face_sizes() == sorted(A.face_sizes() + B.face_sizes() + [3])


def test_odd_3d_dissections_have_plus_id():
    # not claimed anywhere; recorded as an observation
    for n in range(3, 10):
        for d in enumerate_dissections("3d", n):
            kind = monodromy(quiddity_of(d)).kind
            expected = MonodromyClass.MINUS_ID if ovsienko_index(d) % 2 == 0 else MonodromyClass.PLUS_ID
            assert kind is expected
