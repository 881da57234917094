"""
Two points on the Grassmannian of lines in P^3
==============================================

Cut the Pluecker quadric by four hyperplanes, saturate, and look at what is left.
"""

from plueckerlab import GrassmannContext, hilbert_data, linear_section, pluecker_ideal, projective_points
from plueckerlab.grassmann import v_forms

ctx = GrassmannContext(2, 4)
X = pluecker_ideal(ctx)
print(X.gens)

# the forms l3, l4, l6, l7
forms = v_forms(ctx)
print(forms)

# the section is zero dimensional of degree 2
J, solved = linear_section(X, forms)
hd = hilbert_data(J)
print(hd.proj_dim, hd.degree)

# two reduced points, e14 and e23
for pt, mult in projective_points(J):
    print(pt.support(), mult)
