"""
Matrix quiddities and matrix friezes
====================================

Replace the numbers by square matrices. The monodromy becomes a block
product, and friezes obey a diamond rule whose factor order matters.
"""

from quiddity import Matrix, build_matrix_frieze, render_ascii, scalarize
from quiddity.errors import RuleViolation, SingularEntry
from quiddity.matrix_quiddity import (
    MatrixSeq,
    basic_seq,
    bi_circ,
    block_monodromy,
    conj_swap,
    gauss_orbit,
    insert_ear,
    commuting_frieze_seq,
)

M = Matrix([[1, 1], [0, 1]])
s = basic_seq(M)  # (M, 2M^-1, M, 2M^-1)
print("basic:", block_monodromy(s).kind.value)
print(render_ascii(build_matrix_frieze(s)))

# Inserting an ear keeps the monodromy at -Id.
print("with an ear:", block_monodromy(insert_ear(s, 1)).kind.value)

# Entrywise conjugation turns a left solution into a right one.
print("right side:", block_monodromy(conj_swap(s)).kind.value)

# Commuting pairs give period-5 friezes; scalarizing on an eigenvector
# recovers an ordinary frieze.
A, B = Matrix.diag([2, 5]), Matrix.diag([3, 7])
f = build_matrix_frieze(commuting_frieze_seq(A, B), side="two-sided")
print("scalar shadow:", [str(x) for x in scalarize(f, (1, 0)).quiddity()])

# The Gauss map (A, B) -> (B, A^-1(B + I)) has order five.
orbit = gauss_orbit(A, B)
print("returns after five steps:", orbit[5] == (A, B))

# Without commutation the diamond solve drifts away from the continuants
# and the frieze fails to close, although the monodromy is still -Id.
C = Matrix([[2, 0], [1, 1]])
mixed = MatrixSeq(bi_circ(basic_seq(M).as_bisequence(), 1, basic_seq(C).as_bisequence()).p)
print("mixed monodromy:", block_monodromy(mixed).kind.value)
try:
    build_matrix_frieze(mixed)
except (RuleViolation, SingularEntry) as exc:
    print("frieze:", exc)
