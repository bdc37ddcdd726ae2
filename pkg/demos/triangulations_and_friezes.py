"""
Triangulations, quiddities and friezes
======================================

Count triangles at each vertex of a triangulated polygon and you get a
quiddity sequence. Feed it to the unimodular rule and a frieze appears.
"""

from quiddity import build_scalar_frieze, enumerate_dissections, monodromy, quiddity_of, render_ascii, triangulation_of
from quiddity.polygon import Dissection

# A pentagon cut by the diagonals 1-4 and 2-4.
pent = Dissection(5, [(1, 4), (2, 4)])
q = quiddity_of(pent)
print("quiddity:", q.as_ints())

# Its monodromy M(t_5)...M(t_1) is minus the identity.
print("monodromy class:", monodromy(q).kind.value)

# Every triangulation of the pentagon, one per rotation of the fan.
for d in enumerate_dissections("tri", 5):
    print(d.diagonals, quiddity_of(d).as_ints())

# Going back: ear cutting recovers a triangulation from its quiddity.
print("recovered:", triangulation_of(q).diagonals)

# The frieze. Row 2 is the quiddity, row 3 the next continuants.
print(render_ascii(build_scalar_frieze(q)))

# Counts grow like the Catalan numbers.
print([len(enumerate_dissections("tri", n)) for n in range(3, 11)])
