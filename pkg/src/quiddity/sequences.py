"""Scalar quiddity sequences: monodromy, the four products, operad checks.

Indices in the public API are 1-based with wraparound (for i = n the
"next" vertex is 1), matching the polygon labels.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .errors import IndexOutOfRange, NotQuiddity, ValidationError
from .gaussian import gq
from .matrix import Matrix

__all__ = [
    "QuidditySeq",
    "MonodromyClass",
    "Monodromy",
    "monodromy",
    "classify",
    "circ",
    "bullet",
    "boxplus",
    "id_circ",
    "rotate",
    "UNIT",
    "SEGMENT",
    "OperadReport",
    "check_operad_axioms",
    "check_exclusion",
]


class QuidditySeq(tuple):
    """Tuple of GaussRational; compares equal to plain tuples of ints."""

    def __new__(cls, entries):
        if isinstance(entries, QuidditySeq):
            return entries
        vals = tuple(gq(x) for x in entries)
        if not vals:
            raise ValidationError("a quiddity sequence needs at least one entry")
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def is_unit(self) -> bool:
        return len(self) == 1 and not self[0]

    def is_segment(self) -> bool:
        return len(self) == 2 and not self[0] and not self[1]

    def is_integral(self) -> bool:
        return all(x.is_integer() for x in self)

    def as_ints(self) -> tuple:
        if not self.is_integral():
            raise ValidationError("sequence has non-integer entries")
        return tuple(int(x.re) for x in self)

    def to_json(self) -> dict:
        return {"entries": [str(x) for x in self]}

    @classmethod
    def from_json(cls, obj) -> "QuidditySeq":
        if isinstance(obj, dict):
            obj = obj["entries"]
        return cls(obj)

    def __repr__(self):
        return "QuidditySeq(" + ", ".join(str(x) for x in self) + ")"


UNIT = QuidditySeq([0])
SEGMENT = QuidditySeq([0, 0])


class MonodromyClass(str, enum.Enum):
    MINUS_ID = "MinusId"
    PLUS_ID = "PlusId"
    OTHER = "Other"


class Monodromy(NamedTuple):
    matrix: Matrix
    kind: MonodromyClass


def classify(M: Matrix) -> MonodromyClass:
    c = M.is_scalar()
    if c == -1:
        return MonodromyClass.MINUS_ID
    if c == 1:
        return MonodromyClass.PLUS_ID
    return MonodromyClass.OTHER


def _product_ints(vals):
    # [[x, y], [z, w]] accumulated as M(a_k) * acc
    x, y, z, w = 1, 0, 0, 1
    for a in vals:
        x, y, z, w = a * x - z, a * y - w, x, y
    return x, y, z, w


def monodromy(q) -> Monodromy:
    """M(a_n)...M(a_1) with M(a) = [[a, -1], [1, 0]], exact."""
    q = QuidditySeq(q)
    if q.is_integral():
        ents = _product_ints(q.as_ints())
    else:
        ents = _product_ints(q)
    M = Matrix([[ents[0], ents[1]], [ents[2], ents[3]]])
    return Monodromy(M, classify(M))


def rotate(q, k: int = 1) -> QuidditySeq:
    """Cyclic left shift by k places."""
    q = QuidditySeq(q)
    k %= len(q)
    return QuidditySeq(q[k:] + q[:k])


def _index(i: int, n: int):
    if not isinstance(i, int) or not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside [1, {n}]")


def _operand(q) -> QuidditySeq:
    q = QuidditySeq(q)
    if len(q) == 1 and not q.is_unit():
        raise ValidationError("a length-1 operand must be the unit (0)")
    if len(q) == 2 and not q.is_segment():
        raise ValidationError("a length-2 operand must be (0,0)")
    return q


def _circ_general(t, i, s):
    # both operands of length >= 2; this is the full formula, wraparound at i = n
    n, m = len(t), len(s)
    t, s = list(t), list(s)
    if i < n:
        return t[: i - 1] + [t[i - 1] + s[0] + 1] + s[1 : m - 1] + [s[m - 1] + 1, t[i] + 1] + t[i + 1 :]
    return [t[0] + 1] + t[1 : n - 1] + [t[n - 1] + s[0] + 1] + s[1 : m - 1] + [s[m - 1] + 1]


def circ(T, i: int, S) -> QuidditySeq:
    """Partial composition T o_i S.

    Sentinels: the unit (0) is a two-sided identity, and (0,0) (the bare
    segment) is fed to the general gluing formula, which reproduces the
    displayed segment rules.
    """
    T, S = _operand(T), _operand(S)
    _index(i, len(T))
    if S.is_unit():
        return T
    if T.is_unit():
        return S
    return QuidditySeq(_circ_general(T, i, S))


def bullet(T, i: int, S) -> QuidditySeq:
    """The second gluing product T (bullet)_i S; both lengths >= 3."""
    T, S = QuidditySeq(T), QuidditySeq(S)
    if len(T) < 3 or len(S) < 3:
        raise ValidationError("bullet is defined only for lengths >= 3")
    n = len(T)
    _index(i, n)
    t, s = list(T), list(S)
    if i >= 2:
        out = t[: i - 2] + [t[i - 2] + 1, s[1] + 1] + s[2:] + [t[i - 1] + s[0] + 1] + t[i:]
    else:
        out = [t[0] + s[0] + 1] + t[1 : n - 1] + [t[n - 1] + 1, s[1] + 1] + s[2:]
    return QuidditySeq(out)


def _require(q, kind: MonodromyClass, what: str):
    if monodromy(q).kind is not kind:
        raise NotQuiddity(f"{what} does not have monodromy {kind.value}")


def boxplus(A, i: int, B) -> QuidditySeq:
    """Side-gluing of two generalized quiddity sequences; length n+m-2."""
    A, B = QuidditySeq(A), QuidditySeq(B)
    if len(A) < 3 or len(B) < 3:
        raise ValidationError("boxplus needs lengths >= 3")
    n, m = len(A), len(B)
    _index(i, n)
    _require(A, MonodromyClass.MINUS_ID, "left operand")
    _require(B, MonodromyClass.MINUS_ID, "right operand")
    a, b = list(A), list(B)
    if i < n:
        out = a[: i - 1] + [a[i - 1] + b[0]] + b[1 : m - 1] + [b[m - 1] + a[i]] + a[i + 1 :]
    else:
        out = [a[0] + b[m - 1]] + a[1 : n - 1] + [a[n - 1] + b[0]] + b[1 : m - 1]
    return QuidditySeq(out)


def id_circ(A, k: int, B) -> QuidditySeq:
    """Product of two sequences with monodromy +Id; result again has +Id."""
    A, B = QuidditySeq(A), QuidditySeq(B)
    if len(A) < 2 or len(B) < 2:
        raise ValidationError("id_circ needs lengths >= 2")
    n, m = len(A), len(B)
    _index(k, n)
    _require(A, MonodromyClass.PLUS_ID, "left operand")
    _require(B, MonodromyClass.PLUS_ID, "right operand")
    a, b = list(A), list(B)
    if k < n:
        out = a[: k - 1] + [a[k - 1] + b[0] - 1] + b[1 : m - 1] + [b[m - 1] - 1, a[k] - 1] + a[k + 1 :]
    else:
        out = [a[0] - 1] + a[1 : n - 1] + [a[n - 1] + b[0] - 1] + b[1 : m - 1] + [b[m - 1] - 1]
    return QuidditySeq(out)


# ---------------------------------------------------------------------------
# operad axiom checking


@dataclass
class OperadReport:
    checked: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _tick(self, name):
        self.checked[name] = self.checked.get(name, 0) + 1

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": dict(self.checked),
            "violations": [
                {"axiom": v[0], "operands": [[str(x) for x in s] for s in v[1]], "indices": list(v[2])}
                for v in self.violations
            ],
        }


Product = Callable[[QuidditySeq, int, QuidditySeq], QuidditySeq]


def check_operad_axioms(universe, product: Product = circ, limit: int = 50) -> OperadReport:
    """Sequential, parallel and unit axioms over every triple of the universe.

    At most ``limit`` violations are recorded; counting continues.
    """
    U = [QuidditySeq(u) for u in universe]
    rep = OperadReport()

    def fail(name, ops, idx):
        if len(rep.violations) < limit:
            rep.violations.append((name, ops, idx))
        rep.checked[name + ":failed"] = rep.checked.get(name + ":failed", 0) + 1

    def safe(f, *a):
        try:
            return f(*a)
        except (ValidationError, NotQuiddity):
            return None

    for x in U:
        rep._tick("unit")
        if safe(product, UNIT, 1, x) != x:
            fail("unit-left", (x,), (1,))
        for i in range(1, len(x) + 1):
            if safe(product, x, i, UNIT) != x:
                fail("unit-right", (x,), (i,))

    for x, y, z in itertools.product(U, repeat=3):
        n, m = len(x), len(y)
        for i in range(1, n + 1):
            xy = safe(product, x, i, y)
            # sequential: (x o_i y) o_{i+j-1} z = x o_i (y o_j z), j in [m-1]
            for j in range(1, m):
                rep._tick("sequential")
                lhs = safe(product, xy, i + j - 1, z) if xy is not None else None
                yz = safe(product, y, j, z)
                rhs = safe(product, x, i, yz) if yz is not None else None
                if lhs is None or lhs != rhs:
                    fail("sequential", (x, y, z), (i, j))
            # parallel: (x o_i y) o_{j+m-1} z = (x o_j z) o_i y, i < j
            for j in range(i + 1, n + 1):
                rep._tick("parallel")
                lhs = safe(product, xy, j + m - 1, z) if xy is not None else None
                xz = safe(product, x, j, z)
                rhs = safe(product, xz, i, y) if xz is not None else None
                if lhs is None or lhs != rhs:
                    fail("parallel", (x, y, z), (i, j))
    return rep


def check_exclusion(seqs_by_len, product: Product = circ):
    """Count triples with (T o_i S) o_{i+m-1} R == T o_i (S o_m R).

    The sequential axiom deliberately stops at j = m-1; this checks that
    j = m really fails. Returns (number checked, list of equalities).
    """
    checked, equal = 0, []
    pools = [[QuidditySeq(q) for q in seqs_by_len[k]] for k in sorted(seqs_by_len)]
    flat = [q for pool in pools for q in pool]
    for T, S, R in itertools.product(flat, repeat=3):
        m = len(S)
        for i in range(1, len(T) + 1):
            checked += 1
            lhs = product(product(T, i, S), i + m - 1, R)
            rhs = product(T, i, product(S, m, R))
            if lhs == rhs:
                equal.append((T, S, R, i))
    return checked, equal
