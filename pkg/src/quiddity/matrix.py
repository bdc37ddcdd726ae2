"""Square matrices over Q(i) and 2x2 block structure."""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import OrderMismatch, SingularMatrix, ValidationError
from .gaussian import ONE, ZERO, GaussRational, gq

__all__ = [
    "Matrix",
    "Block2x2",
    "mat_det",
    "mat_inv",
    "schur_complement",
    "commutator",
]


class Matrix:
    """Immutable l x l matrix of GaussRational entries."""

    __slots__ = ("rows", "l", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(gq(x) for x in r) for r in rows)
        l = len(rows)
        if l == 0 or any(len(r) != l for r in rows):
            raise ValidationError("matrix must be a non-empty square grid")
        self.rows = rows
        self.l = l
        self._hash = None

    @classmethod
    def _wrap(cls, rows):
        m = object.__new__(cls)
        m.rows, m.l, m._hash = rows, len(rows), None
        return m

    # -- constructors ----------------------------------------------------
    @classmethod
    def identity(cls, l: int) -> "Matrix":
        return cls.scalar(l, ONE)

    @classmethod
    def zero(cls, l: int) -> "Matrix":
        return cls.scalar(l, ZERO)

    @classmethod
    def scalar(cls, l: int, c) -> "Matrix":
        c = gq(c)
        return cls._wrap(tuple(tuple(c if i == j else ZERO for j in range(l)) for i in range(l)))

    @classmethod
    def diag(cls, values) -> "Matrix":
        vals = [gq(v) for v in values]
        n = len(vals)
        return cls._wrap(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    # -- elementwise -----------------------------------------------------
    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.l != self.l:
            raise OrderMismatch(f"orders {self.l} and {other.l} differ")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix._wrap(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix._wrap(
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return Matrix._wrap(tuple(tuple(-x for x in r) for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = ZERO
                    for x, y in zip(r, c):
                        if x and y:
                            acc = acc + x * y
                    row.append(acc)
                out.append(tuple(row))
            return Matrix._wrap(tuple(out))
        try:
            c = gq(other)
        except TypeError:
            return NotImplemented
        return Matrix._wrap(tuple(tuple(c * x for x in r) for r in self.rows))

    def __rmul__(self, other):
        try:
            c = gq(other)
        except TypeError:
            return NotImplemented
        return Matrix._wrap(tuple(tuple(c * x for x in r) for r in self.rows))

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out, base = Matrix.identity(self.l), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply(self, x):
        """Matrix times column vector (a sequence of scalars)."""
        x = [gq(v) for v in x]
        if len(x) != self.l:
            raise OrderMismatch("vector length differs from matrix order")
        return tuple(sum((a * b for a, b in zip(r, x)), ZERO) for r in self.rows)

    # -- structure -------------------------------------------------------
    def transpose(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self.rows)))

    def conj(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(x.conjugate() for x in r) for r in self.rows))

    def adjoint(self) -> "Matrix":
        """Conjugate transpose."""
        return self.conj().transpose()

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.l)

    def is_scalar(self):
        """Return c when the matrix equals c*I, else None."""
        c = self.rows[0][0]
        return c if self == Matrix.scalar(self.l, c) else None

    def det(self) -> GaussRational:
        return mat_det(self)

    def inv(self) -> "Matrix":
        return mat_inv(self)

    def is_invertible(self) -> bool:
        return bool(mat_det(self))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"

    # -- wire format -----------------------------------------------------
    def to_json(self) -> dict:
        return {"l": self.l, "entries": [[str(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "Matrix":
        if isinstance(obj, dict):
            m = cls(obj["entries"])
            if "l" in obj and int(obj["l"]) != m.l:
                raise ValidationError(f"declared order {obj['l']} but grid is {m.l}x{m.l}")
            return m
        if isinstance(obj, list):
            return cls(obj)
        # a bare scalar is read as a 1x1 matrix
        return cls([[obj]])


# ---------------------------------------------------------------------------
# determinant: Bareiss elimination over Gaussian integers


def _gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gi_exact_div(x, y):
    n = y[0] * y[0] + y[1] * y[1]
    re = x[0] * y[0] + x[1] * y[1]
    im = x[1] * y[0] - x[0] * y[1]
    q_re, r_re = divmod(re, n)
    q_im, r_im = divmod(im, n)
    assert r_re == 0 and r_im == 0, "Bareiss division must be exact"
    return (q_re, q_im)


def mat_det(A: Matrix) -> GaussRational:
    """Exact determinant by fraction-free elimination.

    Each row is first scaled by the lcm of its denominators so the working
    matrix has Gaussian-integer entries; Bareiss then keeps every
    intermediate value integral.
    """
    scale = 1
    work = []
    for r in A.rows:
        m = lcm(*(x._d for x in r))
        scale *= m
        work.append([(x._a * (m // x._d), x._b * (m // x._d)) for x in r])
    n = A.l
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if work[k][k] == (0, 0):
            for r in range(k + 1, n):
                if work[r][k] != (0, 0):
                    work[k], work[r] = work[r], work[k]
                    sign = -sign
                    break
            else:
                return GaussRational(0)
        pivot = work[k][k]
        for i in range(k + 1, n):
            wi, wk = work[i], work[k]
            lead = wi[k]
            for j in range(k + 1, n):
                t1 = _gi_mul(wi[j], pivot)
                t2 = _gi_mul(lead, wk[j])
                wi[j] = _gi_exact_div((t1[0] - t2[0], t1[1] - t2[1]), prev)
            wi[k] = (0, 0)
        prev = pivot
    a, b = work[n - 1][n - 1]
    return GaussRational._raw(sign * a, sign * b, scale)


def mat_inv(A: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises SingularMatrix when det(A) = 0."""
    n = A.l
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(A.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = aug[col][col].inverse()
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                rc = aug[col]
                aug[r] = [x - f * y for x, y in zip(aug[r], rc)]
    return Matrix._wrap(tuple(tuple(r[n:]) for r in aug))


def commutator(A: Matrix, B: Matrix) -> Matrix:
    """AB - BA."""
    A._check(B)
    return A * B - B * A


# ---------------------------------------------------------------------------
# block structure


@dataclass(frozen=True)
class Block2x2:
    m11: Matrix
    m12: Matrix
    m21: Matrix
    m22: Matrix

    def __post_init__(self):
        l = self.m11.l
        if any(b.l != l for b in (self.m12, self.m21, self.m22)):
            raise OrderMismatch("blocks must share a common order")

    @property
    def l(self) -> int:
        return self.m11.l

    @classmethod
    def identity(cls, l: int) -> "Block2x2":
        I, O = Matrix.identity(l), Matrix.zero(l)
        return cls(I, O, O, I)

    @classmethod
    def diag(cls, a: Matrix, b: Matrix) -> "Block2x2":
        O = Matrix.zero(a.l)
        return cls(a, O, O, b)

    def __mul__(self, other: "Block2x2") -> "Block2x2":
        a, b, c, d = self.m11, self.m12, self.m21, self.m22
        e, f, g, h = other.m11, other.m12, other.m21, other.m22
        return Block2x2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self):
        return Block2x2(-self.m11, -self.m12, -self.m21, -self.m22)

    def flatten(self) -> Matrix:
        top = [r1 + r2 for r1, r2 in zip(self.m11.rows, self.m12.rows)]
        bot = [r1 + r2 for r1, r2 in zip(self.m21.rows, self.m22.rows)]
        return Matrix._wrap(tuple(top + bot))

    @classmethod
    def partition(cls, M: Matrix) -> "Block2x2":
        if M.l % 2:
            raise OrderMismatch("odd order cannot be split into 2x2 blocks")
        h = M.l // 2

        def part(r0, c0):
            return Matrix._wrap(tuple(tuple(M.rows[r0 + i][c0 : c0 + h]) for i in range(h)))

        return cls(part(0, 0), part(0, h), part(h, 0), part(h, h))

    def is_scalar_identity(self, c) -> bool:
        c = gq(c)
        S, O = Matrix.scalar(self.l, c), Matrix.zero(self.l)
        return self.m11 == S and self.m22 == S and self.m12 == O and self.m21 == O

    def to_json(self) -> dict:
        return self.flatten().to_json()


def schur_complement(N: Block2x2) -> Matrix:
    """N/P = S - R P^{-1} Q for N = [[P, Q], [R, S]]."""
    try:
        Pinv = N.m11.inv()
    except SingularMatrix as exc:
        raise SingularMatrix("top-left block is singular") from exc
    return N.m22 - N.m21 * Pinv * N.m12
