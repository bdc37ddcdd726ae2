"""Dissections of a labelled convex n-gon (vertices 1..n counterclockwise).

Covers triangulations and 3d-dissections (every face has a multiple of 3
vertices), their quiddity sequences, the Ovsienko index, exhaustive
enumeration and the two triangle gluings.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceeded, IndexOutOfRange, NotATriangulationQuiddity, ValidationError
from .sequences import QuidditySeq

__all__ = [
    "Dissection",
    "quiddity_of",
    "triangulation_of",
    "enumerate_dissections",
    "ovsienko_index",
    "glue_circ",
    "glue_bullet",
    "DEFAULT_BOUND",
]

DEFAULT_BOUND = 14


def _crosses(d, e) -> bool:
    (i, j), (k, l) = d, e
    return i < k < j < l or k < i < l < j


@dataclass(frozen=True)
class Dissection:
    n: int
    diagonals: tuple

    def __init__(self, n: int, diagonals=()):
        if n < 3:
            raise ValidationError("a polygon needs at least 3 vertices")
        canon = set()
        for d in diagonals:
            i, j = sorted(int(v) for v in d)
            if not (1 <= i and j <= n) or j - i < 2 or (i, j) == (1, n):
                raise ValidationError(f"({i},{j}) is not a diagonal of the {n}-gon")
            canon.add((i, j))
        diags = tuple(sorted(canon))
        for a in range(len(diags)):
            for b in range(a + 1, len(diags)):
                if _crosses(diags[a], diags[b]):
                    raise ValidationError(f"diagonals {diags[a]} and {diags[b]} cross")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diagonals", diags)

    # faces are computed on demand and cached on the instance
    def faces(self) -> tuple:
        cached = self.__dict__.get("_faces")
        if cached is None:
            cached = _faces(self.n, self.diagonals)
            object.__setattr__(self, "_faces", cached)
        return cached

    def face_sizes(self) -> list:
        return sorted(len(f) for f in self.faces())

    def is_triangulation(self) -> bool:
        return len(self.diagonals) == self.n - 3

    def is_3d(self) -> bool:
        return all(len(f) % 3 == 0 for f in self.faces())

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json(cls, obj) -> "Dissection":
        return cls(int(obj["n"]), [tuple(d) for d in obj.get("diagonals", [])])


def _faces(n, diagonals):
    faces = [tuple(range(1, n + 1))]
    for i, j in diagonals:
        for idx, f in enumerate(faces):
            if i in f and j in f:
                a, b = f.index(i), f.index(j)
                if a > b:
                    a, b = b, a
                if b - a < 2 or (a == 0 and b == len(f) - 1):
                    continue  # (i, j) is an edge of this face, not a chord
                faces[idx : idx + 1] = [f[a : b + 1], f[b:] + f[: a + 1]]
                break
    return tuple(sorted(faces))


def quiddity_of(d: Dissection) -> QuidditySeq:
    """Entry v counts faces incident to vertex v."""
    count = [0] * (d.n + 1)
    for f in d.faces():
        for v in f:
            count[v] += 1
    return QuidditySeq(count[1:])


def ovsienko_index(d: Dissection) -> int:
    """Number of faces with an even vertex count."""
    return sum(1 for f in d.faces() if len(f) % 2 == 0)


def triangulation_of(q) -> Dissection:
    """Conway-Coxeter inverse by repeated ear cutting at an entry equal to 1."""
    q = QuidditySeq(q)
    if not q.is_integral() or any(x.re < 1 for x in q) or len(q) < 3:
        raise NotATriangulationQuiddity("entries must be positive integers, length >= 3")
    vals = list(q.as_ints())
    labels = list(range(1, len(vals) + 1))
    diags = []
    while len(vals) > 3:
        k = len(vals)
        try:
            e = vals.index(1)
        except ValueError:
            raise NotATriangulationQuiddity(f"no ear available in {tuple(vals)}") from None
        left, right = (e - 1) % k, (e + 1) % k
        vals[left] -= 1
        vals[right] -= 1
        if vals[left] < 1 or vals[right] < 1:
            raise NotATriangulationQuiddity("ear cutting produced a non-positive entry")
        diags.append((labels[left], labels[right]))
        del vals[e]
        del labels[e]
    if vals != [1, 1, 1]:
        raise NotATriangulationQuiddity(f"residual triangle is {tuple(vals)}, expected (1,1,1)")
    d = Dissection(len(q), diags)
    if quiddity_of(d) != q:  # defensive; ear cutting should already guarantee this
        raise NotATriangulationQuiddity("round trip failed")
    return d


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _structures(k: int, kind: str):
    """All dissections of the k-gon 1..k, as tuples of diagonals (side (1,k) is the base).

    The face on the base is chosen first; each gap between consecutive
    face vertices is a smaller polygon solved recursively.
    """
    if k == 2:
        return ((),)
    out = []
    inner = list(range(2, k))
    for size in range(3, k + 1):
        if (kind == "tri" and size != 3) or size % 3:
            continue
        for chosen in _combinations(inner, size - 2):
            verts = (1,) + chosen + (k,)
            parts = [((),)]
            for a, b in zip(verts, verts[1:]):
                sub = _structures(b - a + 1, kind)
                shift = a - 1
                chord = ((a, b),) if b - a >= 2 else ()
                parts.append(tuple(chord + tuple((x + shift, y + shift) for x, y in s) for s in sub))
            for combo in _product(parts):
                out.append(tuple(sorted(d for piece in combo for d in piece)))
    return tuple(out)


def _combinations(pool, r):
    from itertools import combinations

    return combinations(pool, r)


def _product(parts):
    from itertools import product

    return product(*parts)


def enumerate_dissections(kind: str, n: int, bound: int = DEFAULT_BOUND) -> list:
    """Every triangulation (kind 'tri') or 3d-dissection (kind '3d') of the n-gon.

    Canonically ordered by diagonal tuple; duplicate-free by construction.
    """
    kind = {"triangulation": "tri"}.get(kind, kind)
    if kind not in ("tri", "3d"):
        raise ValidationError(f"unknown kind {kind!r}")
    if n < 3:
        raise ValidationError("n must be at least 3")
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds bound {bound}")
    raw = sorted(set(_structures(n, kind)))
    # diagonals touching the base side (1, n) are real diagonals unless the side itself
    return [Dissection(n, [d for d in diags if d != (1, n)]) for diags in raw]


# ---------------------------------------------------------------------------
# gluing


def _vertex_maps_circ(n, m, i):
    def t(v):
        return v if v <= i else v + m - 1

    def s(w):
        return i + w - 1

    return t, s


def glue_circ(d1: Dissection, i: int, d2: Dissection) -> Dissection:
    """Overlap vertex i of d1 with vertex 1 of d2 and close the gap by a triangle.

    The new triangle joins vertex i+1 of d1 (wrapping to 1) with vertex m of d2.
    """
    n, m = d1.n, d2.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"vertex {i} outside [1, {n}]")
    t, s = _vertex_maps_circ(n, m, i)
    nxt = i % n + 1
    diags = [(t(a), t(b)) for a, b in d1.diagonals]
    diags += [(s(a), s(b)) for a, b in d2.diagonals]
    diags.append((t(i), t(nxt)))  # old side of d1
    diags.append((s(1), s(m)))  # old side of d2
    return Dissection(n + m - 1, diags)


def glue_bullet(d1: Dissection, i: int, d2: Dissection) -> Dissection:
    """Overlap vertex i of d1 with vertex 1 of d2; the new triangle joins
    vertex i-1 of d1 (wrapping to n) with vertex 2 of d2."""
    n, m = d1.n, d2.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"vertex {i} outside [1, {n}]")
    if i >= 2:
        def t(v):
            return v if v < i else v + m - 1

        def s(w):
            return i + m - 1 if w == 1 else i + w - 2
    else:
        def t(v):
            return v

        def s(w):
            return 1 if w == 1 else n + w - 1
    prv = n if i == 1 else i - 1
    diags = [(t(a), t(b)) for a, b in d1.diagonals]
    diags += [(s(a), s(b)) for a, b in d2.diagonals]
    diags.append((t(prv), t(i)))
    diags.append((s(1), s(2)))
    return Dissection(n + m - 1, diags)
