"""Noncommutative signed Chebyshev polynomials (matrix continuants).

p_{-1} = O, p_0 = I, p_m = a_m p_{m-1} - p_{m-2}; pairs use
p_n = l_n p_{n-1} + s_n p_{n-2} and the same rule for q with q_0 = O, q_{-1} = I.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderMismatch, SingularMatrix, ValidationError
from .matrix import Block2x2, Matrix
from .matrix_quiddity import left_factor

__all__ = [
    "ChebResult",
    "ChebPair",
    "cheb_left",
    "cheb_poly",
    "continuant_block",
    "tridiagonal",
    "det_identity",
    "corner_inverse",
    "solve_second_order",
    "monodromy_multiplier",
    "cheb_pair",
]


def _coeffs(a) -> tuple:
    a = tuple(x if isinstance(x, Matrix) else Matrix([[x]]) for x in a)
    if a and any(x.l != a[0].l for x in a):
        raise OrderMismatch("coefficients have different orders")
    return a


@dataclass(frozen=True)
class ChebResult:
    coeffs: tuple
    p: tuple  # p[0] is p_{-1}, p[k+1] is p_k

    def __getitem__(self, m: int) -> Matrix:
        """p_m for -1 <= m <= len(coeffs)."""
        return self.p[m + 1]

    @property
    def top(self) -> Matrix:
        return self.p[-1]


def cheb_left(a, l: int | None = None) -> ChebResult:
    a = _coeffs(a)
    if not a and l is None:
        raise ValidationError("empty coefficient list needs an explicit order")
    l = a[0].l if a else l
    ps = [Matrix.zero(l), Matrix.identity(l)]
    for x in a:
        ps.append(x * ps[-1] - ps[-2])
    return ChebResult(a, tuple(ps))


def cheb_poly(a, l: int | None = None) -> Matrix:
    """p_m(a_1..a_m); the empty list gives I and is valid given an order."""
    return cheb_left(a, l).top


def continuant_block(a) -> Block2x2:
    """M(a_m)...M(a_1), checked against its continuant form.

    [[p_m(a_1..a_m),      -p_{m-1}(a_2..a_m)    ],
     [p_{m-1}(a_1..a_{m-1}), -p_{m-2}(a_2..a_{m-1})]]
    """
    a = _coeffs(a)
    if not a:
        raise ValidationError("need at least one coefficient")
    l = a[0].l
    prod = Block2x2.identity(l)
    for x in a:
        prod = left_factor(x) * prod
    m = len(a)

    def P(seq, k):
        # p_k of the given list, with p_{-1} = O
        return Matrix.zero(l) if k == -1 else cheb_poly(seq[:k], l)

    expected = Block2x2(
        P(a, m),
        -P(a[1:], m - 1),
        P(a, m - 1),
        -P(a[1:], m - 2),
    )
    _verify(prod == expected, "continuant block identity failed")
    return prod


def tridiagonal(a) -> Matrix:
    """Flattened Q_m: a_m, ..., a_1 down the block diagonal, I beside it."""
    a = _coeffs(a)
    m, l = len(a), a[0].l
    N = m * l
    rows = [[0] * N for _ in range(N)]
    for b in range(m):
        blk = a[m - 1 - b]
        for i in range(l):
            for j in range(l):
                rows[b * l + i][b * l + j] = blk.rows[i][j]
            if b + 1 < m:
                rows[b * l + i][(b + 1) * l + i] = 1
                rows[(b + 1) * l + i][b * l + i] = 1
    return Matrix(rows)


def det_identity(a):
    """(det Q_m, det p_m); the two must agree."""
    a = _coeffs(a)
    dq = tridiagonal(a).det()
    dp = cheb_poly(a).det()
    _verify(dq == dp, "determinant identity failed")
    return dq, dp


def corner_inverse(a) -> Matrix:
    """(-1)^{m-1} ((Q_m^-1)_{m1})^-1, which equals p_m(a_1..a_m)."""
    a = _coeffs(a)
    m, l = len(a), a[0].l
    R = tridiagonal(a).inv()  # SingularMatrix propagates
    r0 = (m - 1) * l
    corner = Matrix([R.rows[r0 + i][:l] for i in range(l)])
    try:
        P = corner.inv()
    except SingularMatrix as exc:
        raise SingularMatrix("corner block of the inverse is singular") from exc
    if (m - 1) % 2:
        P = -P
    _verify(P == cheb_poly(a), "corner-inverse identity failed")
    return P


def _verify(cond, msg):
    # explicit so the checks survive python -O
    if not cond:
        raise AssertionError(msg)


def _periodic(a, k):
    """a_k for k >= 1, extended with period len(a)."""
    return a[(k - 1) % len(a)]


def solve_second_order(a, y0: Matrix, y1: Matrix, horizon: int) -> list:
    """y_0..y_horizon for y_{n+1} = a_n y_n - y_{n-1}, a periodic.

    Every step is compared with y_{n+1} = p_n(a_1..a_n) y_1 - p_{n-1}(a_2..a_n) y_0.
    """
    a = _coeffs(a)
    if horizon < 1:
        raise ValidationError("horizon must be at least 1")
    l = a[0].l
    ys = [y0, y1]
    # running continuants of a_1..a_n and of a_2..a_n
    full = [Matrix.zero(l), Matrix.identity(l)]
    tail = [Matrix.zero(l), Matrix.identity(l)]  # tail[-1] = p_{n-1}(a_2..a_n)
    for n in range(1, horizon):
        an = _periodic(a, n)
        ys.append(an * ys[-1] - ys[-2])
        full.append(an * full[-1] - full[-2])
        if n >= 2:
            tail.append(an * tail[-1] - tail[-2])
        _verify(ys[-1] == full[-1] * y1 - tail[-1] * y0, f"trajectory formula failed at step {n}")
    return ys


def monodromy_multiplier(a):
    """The matrix m when M(a_1..a_N) = diag(m, m) with m commuting with every a_k.

    Checks p_{N-1}(a_1..a_{N-1}) = O, p_{N-1}(a_2..a_N) = O,
    p_N = m and -p_{N-2}(a_2..a_{N-1}) = m. Returns None when they fail.
    """
    B = continuant_block(_coeffs(a))
    if not (B.m12.is_zero() and B.m21.is_zero() and B.m11 == B.m22):
        return None
    m = B.m11
    if any(not (m * x - x * m).is_zero() for x in _coeffs(a)):
        return None
    return m


@dataclass(frozen=True)
class ChebPair:
    l_coeffs: tuple
    s_coeffs: tuple
    p: tuple  # p[0] = p_{-1}
    q: tuple  # q[0] = q_{-1}

    def P(self, n: int) -> Matrix:
        return self.p[n + 1]

    def Q(self, n: int) -> Matrix:
        return self.q[n + 1]


def cheb_pair(lc, sc) -> ChebPair:
    """Both families, checked against the block product and the trajectory identity."""
    lc, sc = _coeffs(lc), _coeffs(sc)
    if len(lc) != len(sc) or not lc:
        raise ValidationError("l and s lists must be non-empty and of equal length")
    if lc[0].l != sc[0].l:
        raise OrderMismatch("l and s have different orders")
    l = lc[0].l
    I, O = Matrix.identity(l), Matrix.zero(l)
    p, q = [O, I], [I, O]
    for a, b in zip(lc, sc):
        p.append(a * p[-1] + b * p[-2])
        q.append(a * q[-1] + b * q[-2])
    prod = Block2x2.identity(l)
    for a, b in zip(lc, sc):
        prod = Block2x2(a, b, I, O) * prod
    _verify(prod == Block2x2(p[-1], q[-1], p[-2], q[-2]), "pair block identity failed")
    # Y_{k+1} = l_k Y_k + s_k Y_{k-1} equals p_k Y_1 + q_k Y_0, checked on both basis seeds
    for y0, y1 in ((I, O), (O, I)):
        ys = [y0, y1]
        for k, (a, b) in enumerate(zip(lc, sc), 1):
            ys.append(a * ys[-1] + b * ys[-2])
            _verify(ys[-1] == p[k + 1] * y1 + q[k + 1] * y0, "pair trajectory identity failed")
    return ChebPair(lc, sc, tuple(p), tuple(q))
