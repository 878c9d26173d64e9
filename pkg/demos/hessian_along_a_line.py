#!/usr/bin/env python3
"""The Hessian form along a line, worked in full on two surfaces.

First, a surface with four A1 points and two pencils of doubled conics,
where everything has a closed form: the graph functions along the line
joining two of the singular points are

    F = (a-c)/(b-a) * y^2/x        G = (c-b)/(b-a) * y^2

so all three coefficients of the Hessian form vanish to order 2 along the
line (m = 2), the discriminant vanishes to order 4, and the branch
multiplicity 4 - 2*2 = 0 shows the line is not a branch divisor.

Second, a smooth surface with a line missing the singular locus: there
m = 0 and the discriminant vanishes simply, a simple branch divisor.
"""

from segrecusp.appendix import appendix_cases
from segrecusp.blowup import surface_through_line
from segrecusp.cusplocus import line_report

case = appendix_cases()[0]
surf = case.surface()
print("symbol:", surf.pencil.segre_symbol())
print("singular points:", [(str(p), str(t)) for p, t in surf.singularities()])

rep = line_report(surf, case.line(), chart=case.chart(surf))
print("\nline through two A1 points, graph functions along it:")
print("  F =", rep.F)
print("  G =", rep.G)
a, b, c = rep.form.coefficients()
print("Hessian coefficients (Hess F, K, Hess G):")
print("  Hess F =", a)
print("  K      =", b)
print("  Hess G =", c)
print("orders along the line:", rep.coefficient_orders)
print(f"m = {rep.m}, ord(disc) = {rep.disc_order}, "
      f"branch multiplicity = {rep.branch_mult}")

print("\n--- a line missing the singular locus ---")
fix = surface_through_line(seed=1)
rep = line_report(fix, fix.distinguished_line)
print("symbol:", fix.pencil.segre_symbol(), "(smooth)")
print(f"m = {rep.m}, ord(disc) = {rep.disc_order}, "
      f"branch multiplicity = {rep.branch_mult}  (a simple branch divisor)")
