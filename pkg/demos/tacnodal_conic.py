#!/usr/bin/env python3
"""The tacnodal family over a line missing the singular locus.

Along such a line the discriminant of the Hessian form vanishes
identically, so at every point of the line the form has a double root: a
unique hyperplane whose section is the line plus a rational normal cubic
tangent to it (a tacnode).  Sweeping the point along the line, these
hyperplanes trace an exact conic inside the dual 2-plane of hyperplanes
containing the line.
"""

from fractions import Fraction as F

from segrecusp.blowup import surface_through_line
from segrecusp.cusplocus import (dual_plane_conic_fit,
                                 tacnodal_hyperplane_on_line)
from segrecusp.fields import QQ
from segrecusp.surface import ProjectivePoint

fix = surface_through_line(seed=1)
line = fix.distinguished_line
a, b = line.span_over(QQ)
print("line through:", line.point_a, "and", line.point_b)

hyperplanes = []
for t in (F(1), F(2), F(3), F(5), F(7), F(11)):
    p = ProjectivePoint.make(QQ, [ai + t * bi for ai, bi in zip(a, b)])
    H, cls, (lam, mu), _ = tacnodal_hyperplane_on_line(fix, line, p)
    hyperplanes.append(H)
    print(f"  t = {t}: section germ {cls}, hyperplane "
          + "[" + ", ".join(QQ.fmt(h) for h in H) + "]")

conic, residuals = dual_plane_conic_fit(hyperplanes, line)
print("\nconic through the first five hyperplanes (dual-plane coordinates):")
print("  coefficients:", [QQ.fmt(c) for c in conic])
print("  residuals on all six:", [QQ.fmt(r) for r in residuals])
