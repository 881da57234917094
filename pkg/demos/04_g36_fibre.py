"""
A non-reduced fibre on G(3,6)
=============================

Nine hyperplane sections of G(3,6) over F_101.  The scheme has degree 42 but
far fewer points.  Takes a few seconds.
"""

from plueckerlab import GF, GrassmannContext, hilbert_data, linear_section, pluecker_ideal
from plueckerlab import affine_points, zero_dim_radical
from plueckerlab.grassmann import g36_forms
from plueckerlab.zerodim import affine_degree, covering_chart

ctx = GrassmannContext(3, 6, GF(101))
forms = g36_forms(ctx)
J, _ = linear_section(pluecker_ideal(ctx), forms[1:])
hd = hilbert_data(J)
print(hd.proj_dim, hd.degree)

chart = covering_chart(J)
A = chart.ideal(J)
print(affine_degree(zero_dim_radical(A)))
print([k for _, k in affine_points(A)])
