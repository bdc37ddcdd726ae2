"""
Continuants and periodic recurrences
====================================

The signed Chebyshev polynomials p_m = a_m p_{m-1} - p_{m-2} fill the
blocks of the monodromy product and control y_{n+1} = a_n y_n - y_{n-1}.
"""

import random

from quiddity import Matrix
from quiddity.chebyshev import cheb_poly, continuant_block, corner_inverse, det_identity, solve_second_order
from quiddity.sampling import rand_matrix

rng = random.Random(1)
a = [rand_matrix(rng, 2, bound=3, complex_prob=0) for _ in range(4)]

# The block product equals its continuant form (checked inside).
B = continuant_block(a)
print("top-left block is p_4:", B.m11 == cheb_poly(a))

# det of the block tridiagonal matrix equals det p_m.
print("determinants:", [str(x) for x in det_identity(a)])

# A corner of the inverse of the tridiagonal matrix recovers p_m.
print("corner inverse:", corner_inverse([2, 3]))

# A quiddity makes every trajectory antiperiodic.
ys = solve_second_order([1, 1, 1], Matrix([[2]]), Matrix([[7]]), 9)
print([str(y.rows[0][0]) for y in ys])

# With coefficients commuting with an involution A, the period twists by A.
S = Matrix([[1, 2], [1, 3]])
A = S * Matrix.diag([1, -1]) * S.inv()
half = Matrix.scalar(2, "1/2")
coeffs = [half * (Matrix.scalar(2, u + v) + (u - v) * A) for u, v in zip((1,) * 6, (3, 1, 3, 1, 3, 1))]
ys = solve_second_order(coeffs, Matrix.identity(2), A, 18)
print("y_{k+6} = A y_k:", all(ys[k + 6] == A * ys[k] for k in range(12)))
