"""
Counting points over F_5
========================

An exhaustive scan of G(2,4) over F_5 with numpy.
"""

import numpy as np

from plueckerlab import GF, GrassmannContext, pluecker_ideal
from plueckerlab.grassmann import v_forms
from plueckerlab.pointscan import projective_space, vanishing_mask

p = 5
ctx = GrassmannContext(2, 4, GF(p))
pts = projective_space(6, p)
print(pts.shape)

on_x = vanishing_mask(pluecker_ideal(ctx).gens, pts, p)
# (p^2 + 1)(p^2 + p + 1) points on the Grassmannian
print(on_x.sum(), (p**2 + 1) * (p**2 + p + 1))

fibre = on_x & vanishing_mask(v_forms(ctx), pts, p)
print(pts[np.nonzero(fibre)])
