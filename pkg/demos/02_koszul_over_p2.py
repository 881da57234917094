"""
Koszul complexes over the projective plane
==========================================

Build both rows of the diagram, check d^2 = 0 and exactness, then break the
projection on purpose.
"""

from plueckerlab.complexes import chain_map_defect, exact_in_window, first_nonzero_composite
from plueckerlab.p2 import bottom_row, projection_map, top_row

top, bottom = top_row(), bottom_row()
for d in top.differentials:
    print([[str(e) for e in row] for row in d])

print(first_nonzero_composite(top), first_nonzero_composite(bottom))
print(exact_in_window(top, range(1, 4), (1, 8)))

f = projection_map(top, bottom)
print(chain_map_defect(f))

# a single sign change is enough to break commutativity
print(chain_map_defect(projection_map(top, bottom, flip_sign=True)))
