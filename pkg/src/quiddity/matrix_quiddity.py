"""Matrix quiddity sequences and bi-sequences.

A left sequence (a_1..a_n) is a solution of M(a_n)...M(a_1) = -Id with
M(a) = [[a, -I], [I, O]]; a right sequence solves N(b_1)...N(b_n) = -Id
with N(b) = [[O, -I], [I, b]]. A bi-sequence (p; q) uses the factors
[[p, q], [I, O]], so a left sequence is the bi-sequence with q = -I.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    IndexOutOfRange,
    NonCommuting,
    NotQuiddity,
    OrderMismatch,
    OutsideDomain,
    SingularMatrix,
    ValidationError,
)
from .matrix import Block2x2, Matrix, commutator
from .sequences import MonodromyClass

__all__ = [
    "Side",
    "MatrixSeq",
    "BiSequence",
    "AffinePair",
    "BlockMonodromy",
    "left_factor",
    "right_factor",
    "bi_factor",
    "block_monodromy",
    "classify_block",
    "conj_swap",
    "insert_ear",
    "bi_insert",
    "bi_circ",
    "bi_bullet",
    "family_length4",
    "family_length5",
    "basic_seq",
    "period5_seq",
    "gauss_seq",
    "commuting_frieze_seq",
    "gauss_map",
    "gauss_orbit",
    "simulate_recurrence",
    "is_antiperiodic",
    "is_twisted_periodic",
    "mv_frame",
    "normalized_invariants",
    "maurer_cartan",
    "act",
]


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def flip(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


def _common_order(mats, what="entries"):
    mats = list(mats)
    if not mats:
        raise ValidationError(f"{what} must be non-empty")
    l = mats[0].l
    if any(m.l != l for m in mats):
        raise OrderMismatch(f"{what} have different orders")
    return l


@dataclass(frozen=True)
class MatrixSeq:
    entries: tuple
    side: Side = Side.LEFT

    def __init__(self, entries, side=Side.LEFT):
        ents = tuple(e if isinstance(e, Matrix) else Matrix.from_json(e) for e in entries)
        _common_order(ents)
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "side", Side(side))

    @property
    def l(self) -> int:
        return self.entries[0].l

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def rotate(self, k: int = 1) -> "MatrixSeq":
        k %= len(self)
        return MatrixSeq(self.entries[k:] + self.entries[:k], self.side)

    def as_bisequence(self) -> "BiSequence":
        if self.side is not Side.LEFT:
            raise ValidationError("only left sequences embed as bi-sequences")
        mI = -Matrix.identity(self.l)
        return BiSequence(self.entries, [mI] * len(self))

    def to_json(self) -> dict:
        return {"side": self.side.value, "l": self.l, "entries": [m.to_json() for m in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "MatrixSeq":
        """A dict with "entries" (and optional "side"), or a bare list of entries."""
        if isinstance(obj, list):
            obj = {"entries": obj}
        return cls([Matrix.from_json(e) for e in obj["entries"]], obj.get("side", "left"))


@dataclass(frozen=True)
class BiSequence:
    p: tuple
    q: tuple

    def __init__(self, p, q):
        p = tuple(x if isinstance(x, Matrix) else Matrix.from_json(x) for x in p)
        q = tuple(x if isinstance(x, Matrix) else Matrix.from_json(x) for x in q)
        if len(p) != len(q):
            raise ValidationError("p and q parts must have equal lengths")
        _common_order(p + q)
        for k, qk in enumerate(q, 1):
            if not qk.is_invertible():
                raise SingularMatrix(f"q_{k} is singular")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def l(self) -> int:
        return self.p[0].l

    def __len__(self):
        return len(self.p)

    def to_json(self) -> dict:
        return {"l": self.l, "p": [m.to_json() for m in self.p], "q": [m.to_json() for m in self.q]}

    @classmethod
    def from_json(cls, obj) -> "BiSequence":
        return cls([Matrix.from_json(e) for e in obj["p"]], [Matrix.from_json(e) for e in obj["q"]])


class BlockMonodromy(NamedTuple):
    block: Block2x2
    kind: MonodromyClass


def left_factor(a: Matrix) -> Block2x2:
    I, O = Matrix.identity(a.l), Matrix.zero(a.l)
    return Block2x2(a, -I, I, O)


def right_factor(b: Matrix) -> Block2x2:
    I, O = Matrix.identity(b.l), Matrix.zero(b.l)
    return Block2x2(O, -I, I, b)


def bi_factor(p: Matrix, q: Matrix) -> Block2x2:
    I, O = Matrix.identity(p.l), Matrix.zero(p.l)
    return Block2x2(p, q, I, O)


def classify_block(B: Block2x2) -> MonodromyClass:
    if B.is_scalar_identity(-1):
        return MonodromyClass.MINUS_ID
    if B.is_scalar_identity(1):
        return MonodromyClass.PLUS_ID
    return MonodromyClass.OTHER


def block_monodromy(s) -> BlockMonodromy:
    """Exact block product for a MatrixSeq (either side) or a BiSequence."""
    if isinstance(s, BiSequence):
        acc = Block2x2.identity(s.l)
        for p, q in zip(s.p, s.q):
            acc = bi_factor(p, q) * acc
    elif s.side is Side.LEFT:
        acc = Block2x2.identity(s.l)
        for a in s.entries:
            acc = left_factor(a) * acc
    else:
        acc = Block2x2.identity(s.l)
        for b in s.entries:
            acc = acc * right_factor(b)
    return BlockMonodromy(acc, classify_block(acc))


def _require_minus_id(s, what="input"):
    if block_monodromy(s).kind is not MonodromyClass.MINUS_ID:
        raise NotQuiddity(f"{what} does not have block monodromy -Id")


def conj_swap(s: MatrixSeq) -> MatrixSeq:
    """Complex-conjugate every entry (no transpose) and flip the side.

    Why this lands on the other side: N(a) = D M(a)^-1 D with
    D = diag(I, -I), so N(a_1)...N(a_n) = D (M(a_n)...M(a_1))^-1 D and the
    two sides share their solution sets; conjugation fixes -Id.
    """
    _require_minus_id(s)
    return MatrixSeq([a.conj() for a in s.entries], s.side.flip())


# ---------------------------------------------------------------------------
# constructions that preserve -Id


def insert_ear(s: MatrixSeq, i: int) -> MatrixSeq:
    """(.., a_i + I, I, a_{i+1} + I, ..) for 1 <= i <= n-1."""
    if s.side is not Side.LEFT:
        raise ValidationError("insert_ear acts on left sequences")
    n = len(s)
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"index {i} outside [1, {n - 1}]")
    _require_minus_id(s)
    I = Matrix.identity(s.l)
    a = list(s.entries)
    return MatrixSeq(a[: i - 1] + [a[i - 1] + I, I, a[i] + I] + a[i + 1 :], Side.LEFT)


def bi_insert(b: BiSequence, k: int) -> BiSequence:
    """(.., p_k + I, I, p_{k+1} - q_{k+1}, ..; .., q_k, -I, q_{k+1}, ..)."""
    n = len(b)
    if not 1 <= k <= n - 1:
        raise IndexOutOfRange(f"index {k} outside [1, {n - 1}]")
    _require_minus_id(b)
    I = Matrix.identity(b.l)
    p, q = list(b.p), list(b.q)
    newp = p[: k - 1] + [p[k - 1] + I, I, p[k] - q[k]] + p[k + 1 :]
    newq = q[: k - 1] + [q[k - 1], -I, q[k]] + q[k + 1 :]
    return BiSequence(newp, newq)


def bi_circ(b1: BiSequence, k: int, b2: BiSequence) -> BiSequence:
    """Gluing product of two bi-sequences; length n+m-1.

    With q = -I everywhere it reduces to the scalar/left circ product.
    """
    n, m = len(b1), len(b2)
    if b1.l != b2.l:
        raise OrderMismatch("operands have different orders")
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"index {k} outside [1, {n}]")
    if m < 2:
        raise ValidationError("right operand needs length >= 2")
    _require_minus_id(b1, "left operand")
    _require_minus_id(b2, "right operand")
    I = Matrix.identity(b1.l)
    p, q, L, S = list(b1.p), list(b1.q), list(b2.p), list(b2.q)
    if k < n:
        newp = p[: k - 1] + [L[0] - S[0] * (p[k - 1] + I)] + L[1 : m - 1] + [L[m - 1] + I, p[k] - q[k]] + p[k + 1 :]
        newq = q[: k - 1] + [-(S[0] * q[k - 1])] + S[1:] + q[k:]
    else:
        newp = [p[0] - q[0]] + p[1 : n - 1] + [L[0] - S[0] * (p[n - 1] + I)] + L[1 : m - 1] + [L[m - 1] + I]
        newq = q[: n - 1] + [-(S[0] * q[n - 1])] + S[1:]
    return BiSequence(newp, newq)


def bi_bullet(b1: BiSequence, k: int, b2: BiSequence) -> BiSequence:
    """Second gluing product of bi-sequences; length n+m-1."""
    n, m = len(b1), len(b2)
    if b1.l != b2.l:
        raise OrderMismatch("operands have different orders")
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"index {k} outside [1, {n}]")
    if m < 2:
        raise ValidationError("right operand needs length >= 2")
    _require_minus_id(b1, "left operand")
    _require_minus_id(b2, "right operand")
    I = Matrix.identity(b1.l)
    p, q, L, S = list(b1.p), list(b1.q), list(b2.p), list(b2.q)
    if k >= 2:
        newp = p[: k - 2] + [p[k - 2] + I, L[1] - S[1]] + L[2:] + [(p[k - 1] - q[k - 1]) - q[k - 1] * L[0]] + p[k:]
        newq = q[: k - 1] + S[1:] + [-(q[k - 1] * S[0])] + q[k:]
    else:
        newp = [(p[0] - q[0]) - q[0] * L[0]] + p[1 : n - 1] + [p[n - 1] + I, L[1] - S[1]] + L[2:]
        newq = [-(q[0] * S[0])] + q[1:] + S[1:]
    return BiSequence(newp, newq)


def _inv(a: Matrix, what: str) -> Matrix:
    try:
        return a.inv()
    except SingularMatrix as exc:
        raise SingularMatrix(f"{what} is singular") from exc


def _commuting(c: Matrix, d: Matrix):
    if c.l != d.l:
        raise OrderMismatch("orders differ")
    if not commutator(c, d).is_zero():
        raise NonCommuting("the two matrices do not commute")


def family_length4(m: Matrix) -> MatrixSeq:
    """(2m^-1, m, 2m^-1, m)."""
    t = 2 * _inv(m, "m")
    return MatrixSeq([t, m, t, m])


def basic_seq(m: Matrix) -> MatrixSeq:
    """(m, 2m^-1, m, 2m^-1): the basic period-4 frieze sequence."""
    t = 2 * _inv(m, "m")
    return MatrixSeq([m, t, m, t])


def period5_seq(m: Matrix) -> MatrixSeq:
    """(I, m+I, 2m^-1, m, 2m^-1+I)."""
    I = Matrix.identity(m.l)
    t = 2 * _inv(m, "m")
    return MatrixSeq([I, m + I, t, m, t + I])


def family_length5(c: Matrix, d: Matrix) -> MatrixSeq:
    """Length-5 left sequence from a commuting pair (c, d)."""
    _commuting(c, d)
    I = Matrix.identity(c.l)
    ci, di = _inv(c, "c"), _inv(d, "d")
    cIi = _inv(c + I, "c + I")
    return MatrixSeq([c, ci * (I + (c + I) * di), d, (c + I) * di, (ci + I) * cIi * (d + I)])


def gauss_seq(c: Matrix, e: Matrix) -> MatrixSeq:
    """(c, (I+e)c^-1, (I+c)e^-1, e, c^-1(I+c+e)e^-1)."""
    _commuting(c, e)
    I = Matrix.identity(c.l)
    ci, ei = _inv(c, "c"), _inv(e, "e")
    return MatrixSeq([c, (I + e) * ci, (I + c) * ei, e, ci * (I + c + e) * ei])


def commuting_frieze_seq(A: Matrix, B: Matrix) -> MatrixSeq:
    """(A, A^-1(I+B), (I+A)B^-1, B, B^-1(I+A+B)A^-1): the period-5 frieze sequence."""
    _commuting(A, B)
    I = Matrix.identity(A.l)
    Ai, Bi = _inv(A, "A"), _inv(B, "B")
    return MatrixSeq([A, Ai * (I + B), (I + A) * Bi, B, Bi * (I + A + B) * Ai])


def gauss_map(A: Matrix, B: Matrix):
    """(A, B) -> (B, A^-1 (B + I))."""
    _commuting(A, B)
    I = Matrix.identity(A.l)
    return B, _inv(A, "A") * (B + I)


def gauss_orbit(A: Matrix, B: Matrix, k: int = 5) -> list:
    """[(A, B), G(A, B), ..., G^k(A, B)]."""
    orbit = [(A, B)]
    for _ in range(k):
        orbit.append(gauss_map(*orbit[-1]))
    return orbit


# ---------------------------------------------------------------------------
# periodic recurrences


def simulate_recurrence(coeffs, y0: Matrix, y1: Matrix, steps: int) -> list:
    """Trajectory [u_0, u_1, ..., u_steps] of the periodic recurrence.

    Left:  u_{k+1} = c_k u_k - u_{k-1}
    Right: u_{k+1} = u_k c_k - u_{k-1}
    Bi:    u_{k+1} = p_k u_k + q_k u_{k-1}
    Coefficients are indexed from 1 and repeat with period n.
    """
    n = len(coeffs)
    if steps < n:
        raise ValidationError("steps must be at least the period")
    traj = [y0, y1]
    for k in range(1, steps):
        j = (k - 1) % n
        prev, cur = traj[-2], traj[-1]
        if isinstance(coeffs, BiSequence):
            nxt = coeffs.p[j] * cur + coeffs.q[j] * prev
        elif coeffs.side is Side.LEFT:
            nxt = coeffs.entries[j] * cur - prev
        else:
            nxt = cur * coeffs.entries[j] - prev
        traj.append(nxt)
    return traj


def is_twisted_periodic(traj, n: int, m: Matrix, side: Side = Side.LEFT) -> bool:
    """u_{k+n} = m u_k (or u_k m on the right) over the whole window."""
    if len(traj) <= n:
        return False
    if side is Side.LEFT:
        return all(traj[k + n] == m * traj[k] for k in range(len(traj) - n))
    return all(traj[k + n] == traj[k] * m for k in range(len(traj) - n))


def is_antiperiodic(traj, n: int) -> bool:
    """u_{k+n} = -u_k over the whole window."""
    return len(traj) > n and all(traj[k + n] == -traj[k] for k in range(len(traj) - n))


# ---------------------------------------------------------------------------
# moving frames for GL_l acting on M_l by affine maps


@dataclass(frozen=True)
class AffinePair:
    """Element (z, w) of GL_l x M_l acting by r -> z r + w."""

    z: Matrix
    w: Matrix

    def __post_init__(self):
        if self.z.l != self.w.l:
            raise OrderMismatch("z and w have different orders")
        if not self.z.is_invertible():
            raise SingularMatrix("z must be invertible")

    def __mul__(self, other: "AffinePair") -> "AffinePair":
        return AffinePair(self.z * other.z, self.z * other.w + self.w)

    def inverse(self) -> "AffinePair":
        zi = self.z.inv()
        return AffinePair(zi, -(zi * self.w))

    @classmethod
    def identity(cls, l: int) -> "AffinePair":
        return cls(Matrix.identity(l), Matrix.zero(l))

    def is_identity(self) -> bool:
        return self.z.is_identity() and self.w.is_zero()

    def __call__(self, r: Matrix) -> Matrix:
        return self.z * r + self.w


def act(g: AffinePair, X) -> list:
    """Diagonal action on a configuration."""
    return [g(r) for r in X]


def mv_frame(X) -> AffinePair:
    """rho(X) = ((r2 - r1)^-1, -(r2 - r1)^-1 r1); needs r2 - r1 invertible."""
    X = list(X)
    if len(X) < 2:
        raise ValidationError("a configuration needs at least two points")
    diff = X[1] - X[0]
    if not diff.is_invertible():
        raise OutsideDomain("r2 - r1 is singular")
    di = diff.inv()
    return AffinePair(di, -(di * X[0]))


def normalized_invariants(X) -> list:
    """I_k = (r2 - r1)^-1 (r_k - r1), i.e. rho(X) applied to each point."""
    rho = mv_frame(X)
    return [rho(r) for r in X]


def maurer_cartan(gon, k: int) -> AffinePair:
    """K_k = rho_{k+1} rho_k^-1 with rho_k built from (gon[k], gon[k+1]).

    ``k`` is a 0-based position in the supplied list; needs gon[k+2].
    """
    gon = list(gon)
    if not 0 <= k <= len(gon) - 3:
        raise IndexOutOfRange("maurer_cartan needs gon[k], gon[k+1] and gon[k+2]")
    rk = mv_frame(gon[k : k + 2])
    rk1 = mv_frame(gon[k + 1 : k + 3])
    return rk1 * rk.inverse()
