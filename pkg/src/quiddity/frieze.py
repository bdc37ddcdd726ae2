"""Scalar and matrix-valued frieze patterns.

Row r (0-based) of a frieze with quiddity (t_1..t_n) holds, at offset j,
the continuant p_{r-1}(t_j, ..., t_{j+r-2}) with indices taken cyclically.
Row 0 is all zeros, row 1 all ones, row 2 is the quiddity itself, and
for a genuine quiddity row n-1 is all ones and row n all zeros again.

Entry (r, j) sits at horizontal position 2j + r, so the diamond around
(r, j) is: left (r, j), right (r, j+1), top (r-1, j+1), bottom (r+1, j).
The scalar rule is left * right - top * bottom = 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    NonCommutingEntries,
    NotJointEigenvector,
    NotQuiddity,
    RuleViolation,
    SingularEntry,
    SingularMatrix,
    ValidationError,
)
from .gaussian import ONE, ZERO, gq
from .matrix import Matrix, commutator
from .matrix_quiddity import MatrixSeq, Side, block_monodromy
from .sequences import MonodromyClass, QuidditySeq, monodromy

__all__ = [
    "ScalarFrieze",
    "MatrixFrieze",
    "FriezeSide",
    "build_scalar_frieze",
    "build_scalar_frieze_diamond",
    "build_matrix_frieze",
    "matrix_rule_holds",
    "transpose_frieze",
    "scalarize",
    "render_ascii",
]


def _width(n: int) -> int:
    return 2 * n + 2


@dataclass(frozen=True)
class ScalarFrieze:
    n: int
    rows: tuple  # rows[r][j], r = 0..n, j = 0..width-1

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def entry(self, r: int, j: int):
        return self.rows[r][j % self.n]

    def diamond_violations(self) -> list:
        bad = []
        for r in range(1, self.n):
            for j in range(self.width - 1):
                left, right = self.rows[r][j], self.rows[r][j + 1]
                top, bottom = self.rows[r - 1][j + 1], self.rows[r + 1][j]
                if left * right - top * bottom != 1:
                    bad.append((r, j))
        return bad

    def is_periodic(self) -> bool:
        return all(row[j] == row[j + self.n] for row in self.rows for j in range(self.width - self.n))

    def quiddity(self) -> QuidditySeq:
        return QuidditySeq(self.rows[2][: self.n])

    def to_json(self) -> dict:
        return {
            "kind": "scalar",
            "period": self.n,
            "rows": [[str(x) for x in row] for row in self.rows],
        }


def build_scalar_frieze(q) -> ScalarFrieze:
    """Continuant construction; division-free."""
    q = QuidditySeq(q)
    if monodromy(q).kind is not MonodromyClass.MINUS_ID:
        raise NotQuiddity("monodromy is not -Id, the frieze would not close")
    n = len(q)
    w = _width(n)
    rows = [tuple(ZERO for _ in range(w))]
    for r in range(1, n + 1):
        row = []
        for j in range(w):
            # p_{r-1}(t_j, ..., t_{j+r-2})
            a, b = ZERO, ONE
            for k in range(r - 1):
                a, b = b, q[(j + k) % n] * b - a
            row.append(b)
        rows.append(tuple(row))
    f = ScalarFrieze(n, tuple(rows))
    if f.diamond_violations():
        raise RuleViolation("diamond rule failed on a continuant frieze")
    return f


def build_scalar_frieze_diamond(q) -> ScalarFrieze:
    """Row-by-row construction bottom = (left * right - 1) / top.

    Only a cross-check: it raises SingularEntry when a top entry is zero,
    which happens for some non-positive quiddities.
    """
    q = QuidditySeq(q)
    n = len(q)
    w = _width(n)
    rows = [[ZERO] * (w + n), [ONE] * (w + n), [q[j % n] for j in range(w + n)]]
    for r in range(2, n):
        prev, cur = rows[r - 1], rows[r]
        nxt = []
        for j in range(len(cur) - 1):
            top = prev[j + 1]
            if not top:
                raise SingularEntry(f"zero entry at row {r - 1}, offset {j + 1}")
            nxt.append((cur[j] * cur[j + 1] - 1) / top)
        rows.append(nxt)
    return ScalarFrieze(n, tuple(tuple(r[:w]) for r in rows))


# ---------------------------------------------------------------------------
# matrix friezes


class FriezeSide(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"
    NONE = "none"


def matrix_rule_holds(rows, side: str) -> bool:
    """Check every diamond of a matrix frieze.

    Left:  left * right - bottom * top = I
    Right: right * left - top * bottom = I
    """
    I = Matrix.identity(rows[0][0].l)
    for r in range(1, len(rows) - 1):
        for j in range(len(rows[r]) - 1):
            left, right = rows[r][j], rows[r][j + 1]
            top, bottom = rows[r - 1][j + 1], rows[r + 1][j]
            if side == "left":
                val = left * right - bottom * top
            else:
                val = right * left - top * bottom
            if val != I:
                return False
    return True


def _classify(rows) -> FriezeSide:
    lft, rgt = matrix_rule_holds(rows, "left"), matrix_rule_holds(rows, "right")
    if lft and rgt:
        return FriezeSide.TWO_SIDED
    if lft:
        return FriezeSide.LEFT
    if rgt:
        return FriezeSide.RIGHT
    return FriezeSide.NONE


@dataclass(frozen=True)
class MatrixFrieze:
    l: int
    p: int
    rows: tuple
    side: FriezeSide

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def is_periodic(self) -> bool:
        return all(row[j] == row[j + self.p] for row in self.rows for j in range(self.width - self.p))

    def to_json(self) -> dict:
        return {
            "kind": "matrix",
            "l": self.l,
            "period": self.p,
            "side": self.side.value,
            "rows": [[m.to_json()["entries"] for m in row] for row in self.rows],
        }


def build_matrix_frieze(q: MatrixSeq, side: str = "left") -> MatrixFrieze:
    """Build rows with the left-rule solve, then verify the requested side.

    bottom = (left * right - I) * top^-1, one row at a time; the last two
    rows must come out as I and O.
    """
    if q.side is not Side.LEFT:
        raise ValidationError("matrix friezes are built from left sequences")
    if block_monodromy(q).kind is not MonodromyClass.MINUS_ID:
        raise NotQuiddity("block monodromy is not -Id")
    side = FriezeSide(side)
    p, l = len(q), q.l
    I, O = Matrix.identity(l), Matrix.zero(l)
    w = _width(p)
    extra = w + p  # solve on a wider strip, then trim, so every row has w entries
    rows = [[O] * extra, [I] * extra, [q[j % p] for j in range(extra)]]
    for r in range(2, p):
        prev, cur = rows[r - 1], rows[r]
        nxt = []
        for j in range(len(cur) - 1):
            try:
                tinv = prev[j + 1].inv()
            except SingularMatrix:
                raise SingularEntry(f"singular entry at row {r - 1}, offset {j + 1}") from None
            nxt.append((cur[j] * cur[j + 1] - I) * tinv)
        rows.append(nxt)
    rows = tuple(tuple(r[:w]) for r in rows)
    if any(x != I for x in rows[p - 1]) or any(not x.is_zero() for x in rows[p]):
        raise RuleViolation("closing rows are not I and O")
    cls = _classify(rows)
    f = MatrixFrieze(l, p, rows, cls)
    if side is FriezeSide.LEFT and cls not in (FriezeSide.LEFT, FriezeSide.TWO_SIDED):
        raise RuleViolation("left diamond rule fails")
    if side is FriezeSide.RIGHT and cls not in (FriezeSide.RIGHT, FriezeSide.TWO_SIDED):
        raise RuleViolation("right diamond rule fails")
    if side is FriezeSide.TWO_SIDED and cls is not FriezeSide.TWO_SIDED:
        raise RuleViolation("frieze is not two-sided")
    return f


def transpose_frieze(f: MatrixFrieze) -> MatrixFrieze:
    """Transpose every entry; left and right swap."""
    rows = tuple(tuple(m.transpose() for m in row) for row in f.rows)
    swap = {FriezeSide.LEFT: FriezeSide.RIGHT, FriezeSide.RIGHT: FriezeSide.LEFT}
    return MatrixFrieze(f.l, f.p, rows, swap.get(f.side, f.side))


def scalarize(f: MatrixFrieze, x) -> ScalarFrieze:
    """Replace each entry by its eigenvalue on the common eigenvector x."""
    x = tuple(gq(v) for v in x)
    if len(x) != f.l:
        raise ValidationError("vector length differs from the frieze order")
    if not any(x):
        raise NotJointEigenvector("x must be non-zero")
    k = next(i for i, v in enumerate(x) if v)
    distinct = list(dict.fromkeys(m for row in f.rows for m in row))
    for a in range(len(distinct)):
        for b in range(a + 1, len(distinct)):
            if not commutator(distinct[a], distinct[b]).is_zero():
                raise NonCommutingEntries("frieze entries do not pairwise commute")
    lam = {}
    for m in distinct:
        y = m.apply(x)
        val = y[k] / x[k]
        if any(yi != val * xi for yi, xi in zip(y, x)):
            raise NotJointEigenvector(f"x is not an eigenvector of {m!r}")
        lam[m] = val
    rows = tuple(tuple(lam[m] for m in row) for row in f.rows)
    out = ScalarFrieze(f.p, rows)
    if out.diamond_violations():
        raise RuleViolation("scalarized frieze breaks the diamond rule")
    return out


# ---------------------------------------------------------------------------
# rendering


def _matrix_labels(f: MatrixFrieze):
    I, O = Matrix.identity(f.l), Matrix.zero(f.l)
    labels = {O: "O", I: "I"}
    legend = []
    for row in f.rows:
        for m in row[: f.p]:
            if m not in labels:
                name = f"M{len(legend) + 1}"
                labels[m] = name
                legend.append((name, m))
    return labels, legend


def render_ascii(f, periods: int = 1, margin: int = 1) -> str:
    """Staggered layout: one period plus a margin on each side of each row.

    Matrix entries are replaced by short labels explained in a legend.
    """
    if isinstance(f, MatrixFrieze):
        labels, legend = _matrix_labels(f)

        def txt(v):
            return labels[v]

        n = f.p
    else:
        legend = []

        def txt(v):
            return str(v)

        n = f.n
    count = periods * n + margin
    cells = [[txt(row[j]) for j in range(count)] for row in f.rows]
    cw = max(len(c) for row in cells for c in row)
    # an even pitch lets row r+1 sit exactly halfway between entries of row r
    pitch = cw + 1 + (cw + 1) % 2
    half = pitch // 2
    lines = []
    for r, row in enumerate(cells):
        line = " " * (half * r) + "".join(c.rjust(cw).ljust(pitch) for c in row)
        lines.append(line.rstrip())
    if legend:
        lines.append("")
        for name, m in legend:
            body = "; ".join(" ".join(str(x) for x in r) for r in m.rows)
            lines.append(f"{name} = [{body}]")
    return "\n".join(lines) + "\n"
