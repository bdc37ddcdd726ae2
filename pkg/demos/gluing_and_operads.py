"""
Gluing polygons and the operad axioms
=====================================

The product T o_i S glues a triangle onto side (i, i+1) of T and the
polygon S onto the triangle's free side. On sequences this is a short
formula; on dissections it is an explicit vertex relabelling.
"""

from quiddity import bullet, check_exclusion, check_operad_axioms, circ, monodromy
from quiddity.polygon import Dissection, glue_circ, ovsienko_index, quiddity_of, triangulation_of
from quiddity.sequences import SEGMENT, UNIT

T, S = (2, 2, 1, 3, 1), (3, 1, 3, 1, 3, 1)
print("circ   :", circ(T, 2, S).as_ints())
print("bullet :", bullet(T, 2, S).as_ints())

# Both agree with gluing actual triangulations.
glued = glue_circ(triangulation_of(T), 2, triangulation_of(S))
print("glued  :", quiddity_of(glued).as_ints(), "faces", glued.face_sizes())

# Hexagons glued by a triangle: Ovsienko index 2, monodromy -Id.
h = Dissection(6)
hh = glue_circ(h, 1, h)
print("index", ovsienko_index(hh), monodromy(quiddity_of(hh)).kind.value)

# The sequential axiom holds for j < m ...
universe = [UNIT, SEGMENT, (1, 1, 1), (2, 1, 2, 1), (1, 2, 1, 2), (3, 1, 2, 2, 1), (2, 2, 1, 3, 1)]
rep = check_operad_axioms(universe)
print("axioms ok:", rep.ok, rep.checked)

# ... and fails at j = m, as it should.
left = circ(circ((3, 1, 2, 2, 1), 2, (2, 1, 2, 1)), 5, (1, 1, 1))
right = circ((3, 1, 2, 2, 1), 2, circ((2, 1, 2, 1), 4, (1, 1, 1)))
print(left.as_ints(), "!=", right.as_ints())
checked, equal = check_exclusion({3: [(1, 1, 1)], 4: [(2, 1, 2, 1), (1, 2, 1, 2)]})
print(f"{checked} triples checked, {len(equal)} coincidences")
