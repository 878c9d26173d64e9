"""Hessian forms, section germs, the trichotomy, line reports, branch data."""

import random
from fractions import Fraction as F

import pytest
import sympy

from segrecusp.appendix import appendix_cases
from segrecusp.cusplocus import (branch_scan, classify_plane_germ,
                                 classify_section_germ, cusp_locus_summary,
                                 dual_plane_conic_fit, hessian_form_at,
                                 line_report, numeric_line_branch_evidence,
                                 point_case, sample_point_cases,
                                 tacnodal_hyperplane_on_line)
from segrecusp.errors import NoDoubleRoot
from segrecusp.fields import QQ
from segrecusp.instances import sampling_instance, table1_instance
from segrecusp.jets import jet_from_poly
from segrecusp.lines import enumerate_lines
from segrecusp.pencil import normal_form
from segrecusp.surface import (AdaptedChart, ProjectivePoint, SurfaceInstance,
                               adapted_chart, sample_rational_points)


def first_case():
    return appendix_cases()[0]


def test_hessian_form_in_worked_chart():
    """In the standard chart of the double-A1-pair surface, the form at the
    point with chart coordinates (1, 1) is (0, -8, 0) with roots the two
    coordinate directions."""
    case = first_case()
    surf = case.surface()
    # chart columns centered at the point (x, y, z, w) = (1, 1, F, G)
    x0, y0 = F(1), F(1)
    F0, G0 = F(-2), F(1)   # closed forms at (1, 1)
    cols = [list(c) for c in case.chart_columns]
    c0 = [cols[0][k] + x0 * cols[1][k] + y0 * cols[2][k]
          + F0 * cols[3][k] + G0 * cols[4][k] for k in range(5)]
    p = ProjectivePoint.make(QQ, c0)
    assert surf.on_surface(p) and surf.is_smooth_at(p)
    chart = AdaptedChart(surface=surf, field=QQ,
                         columns=[c0] + cols[1:], base_point=p)
    hess = hessian_form_at(surf, p, chart=chart)
    a, b, c = hess.form.coefficients()
    assert (a, b, c) == (0, -8, 0)
    roots = {tuple(r) for _, r, _ in hess.roots}
    assert roots == {(1, 0), (0, 1)}


def test_hessian_swap_symmetry():
    case = first_case()
    surf = case.surface()
    pts = sample_rational_points(surf, 1, rng=random.Random(12))
    chart = adapted_chart(surf, pts[0])
    swapped = AdaptedChart(surface=surf, field=QQ,
                           columns=[chart.columns[0], chart.columns[1],
                                    chart.columns[2], chart.columns[4],
                                    chart.columns[3]],
                           base_point=pts[0])
    h1 = hessian_form_at(surf, pts[0], chart=chart)
    h2 = hessian_form_at(surf, pts[0], chart=swapped)
    a1, b1, c1 = h1.form.coefficients()
    a2, b2, c2 = h2.form.coefficients()
    assert (a2, b2, c2) == (c1, b1, a1)
    r1 = {r for _, r, _ in h1.roots}
    r2 = {(mu, lam) for _, (lam, mu), _ in h2.roots}
    # roots swap up to normalization
    from segrecusp.pencil import proj_normalize
    assert {proj_normalize(r) for r in r1} == {proj_normalize(r) for r in r2}


def test_hessian_roots_satisfy_form_exactly(smooth_model):
    pts = sample_rational_points(smooth_model, 2, rng=random.Random(17),
                                 avoid=lambda p: _on_line(smooth_model, p))
    for p in pts:
        hess = hessian_form_at(smooth_model, p)
        a, b, c = hess.form.coefficients()
        for rfield, (lam, mu), _ in hess.roots:
            av, bv, cv = (rfield.coerce(v) for v in (a, b, c))
            assert av * lam * lam + bv * lam * mu + cv * mu * mu == rfield.zero


def test_hessian_two_distinct_roots_off_lines(smooth_model):
    pts = sample_rational_points(smooth_model, 5, rng=random.Random(5),
                                 avoid=lambda p: _on_line(smooth_model, p))
    for p in pts:
        hess = hessian_form_at(smooth_model, p)
        assert hess.has_two_distinct_roots


def _on_line(surface, p):
    from segrecusp.cusplocus import _on_any_line
    return _on_any_line(surface, p)


def test_classify_plane_germ_basics():
    node = jet_from_poly(QQ, ("x", "y"), 8, {(2, 0): 1, (0, 2): -1})
    assert classify_plane_germ(node).kind == "A1_node"
    cusp = jet_from_poly(QQ, ("x", "y"), 8, {(0, 2): 1, (3, 0): -1})
    assert classify_plane_germ(cusp).kind == "A2_cusp"
    tac = jet_from_poly(QQ, ("x", "y"), 8, {(0, 2): 1, (4, 0): -1})
    assert classify_plane_germ(tac).kind == "A3_tacnode"
    f = jet_from_poly(QQ, ("x", "y"), 8, {(0, 1): 1, (2, 0): 1})
    assert classify_plane_germ(f * f).kind == "PerfectSquare"
    y4 = jet_from_poly(QQ, ("x", "y"), 8, {(0, 4): 1, (1, 4): 2})
    assert str(classify_plane_germ(y4, aligned_var="y")) == \
        "NonReducedLineMultiple(4)"


def test_cusp_germ_resultant_oracle(smooth_model):
    """Independent multiplicity check of a Hessian-root section germ:
    ord Res_y(h, h_y) = 3 for an ordinary cusp."""
    pts = sample_rational_points(smooth_model, 1, rng=random.Random(31),
                                 avoid=lambda p: _on_line(smooth_model, p))
    pc = point_case(smooth_model, pts[0])
    assert pc.case == "CaseIII"
    hess = pc.hessian
    rfield, (lam, mu), _ = hess.roots[0]
    chart = hess.chart
    Fj, Gj = chart.solve_graph(8)
    if rfield != QQ:
        Fj = Fj.map_coefficients(rfield, rfield.coerce)
        Gj = Gj.map_coefficients(rfield, rfield.coerce)
    h = Fj * lam + Gj * mu
    xs, ys = sympy.symbols("x y")

    def to_sympy(cval):
        if rfield == QQ:
            return sympy.Rational(cval.numerator, cval.denominator)
        return (sympy.Rational(cval.a.numerator, cval.a.denominator)
                + sympy.Rational(cval.b.numerator, cval.b.denominator)
                * sympy.sqrt(rfield.d))

    expr = sympy.Integer(0)
    for e, cval in h.truncate(5).coeffs.items():
        expr += to_sympy(cval) * xs ** e[0] * ys ** e[1]
    kwargs = {} if rfield == QQ else {"extension": sympy.sqrt(rfield.d)}
    p1 = sympy.Poly(expr, ys, xs, **kwargs)
    p2 = sympy.Poly(sympy.diff(expr, ys), ys, xs, **kwargs)
    res = p1.resultant(p2)
    xi = res.gens.index(xs)
    orders = [m[xi] for m, c in zip(res.monoms(), res.coeffs()) if c != 0]
    assert min(orders) == 3


def test_generic_section_is_nodal(smooth_model):
    pts = sample_rational_points(smooth_model, 1, rng=random.Random(8),
                                 avoid=lambda p: _on_line(smooth_model, p))
    p = pts[0]
    chart = adapted_chart(smooth_model, p)
    # a hyperplane through T_pS that is not a Hessian root
    hess = hessian_form_at(smooth_model, p, chart=chart)
    for lam in (F(1), F(2), F(3), F(5)):
        if all(not (r[0] == 1 and r[1] == lam) for _, r, _ in hess.roots):
            H = chart.hyperplane_from_dual(1, lam)
            assert classify_section_germ(smooth_model, p, H).kind == "A1_node"
            break
    # and one through p but not through T_pS cuts a smooth germ
    from segrecusp.linalg import nullspace
    rows = [list(p.coords)]
    covector = nullspace(QQ, rows)[0]
    duals = chart.dual_coords(covector)
    if duals is None:
        assert classify_section_germ(smooth_model, p, covector).kind == "Smooth"


@pytest.mark.parametrize("symbol,expected", [
    ("[1(11)(11)]", "CaseI"), ("[111(11)]", "CaseII"), ("[23]", "CaseIII"),
])
def test_point_case_examples(symbol, expected):
    inst = sampling_instance(symbol, seed=5)
    if inst.lines is None:
        enumerate_lines(inst, starts_per_chart=150)
    for p, pc in sample_point_cases(inst, 3, rng=random.Random(7)):
        assert pc.case == expected


def test_point_case_constant_over_five_points():
    inst = sampling_instance("[(11)3]", seed=5)
    enumerate_lines(inst, starts_per_chart=150)
    cases = {pc.case for _, pc in sample_point_cases(inst, 5,
                                                     rng=random.Random(2))}
    assert cases == {"CaseII"}


def test_cusp_locus_summary_cross_check():
    inst = sampling_instance("[1(13)]", seed=5)
    enumerate_lines(inst, starts_per_chart=150)
    pts = [p for p, _ in sample_point_cases(inst, 3, rng=random.Random(7))]
    summ = cusp_locus_summary(inst, sample_points=pts)
    assert summ.classification == "BirationalToS" and summ.cross_checked


def test_line_report_appendix_values():
    for case in appendix_cases():
        surf = case.surface()
        rep = line_report(surf, case.line(), chart=case.chart(surf))
        assert (rep.m, rep.branch_mult) == (case.expected_m, 0)
        assert rep.disc_order == 2 * rep.m


def test_line_report_base_point_independent(line_fixture):
    from segrecusp.cusplocus import line_chart
    line = line_fixture.distinguished_line
    r1 = line_report(line_fixture, line,
                     chart=line_chart(line_fixture, line, base_param=1))
    r2 = line_report(line_fixture, line,
                     chart=line_chart(line_fixture, line, base_param=3))
    assert (r1.m, r1.branch_mult) == (r2.m, r2.branch_mult) == (0, 1)


def test_line_report_one_singularity_branch_at_least_two():
    # eigenvalues chosen so the lines through one A1 point are rational
    pen = normal_form("[12(11)]", [1, 5, 2])
    inst = SurfaceInstance(pen, seed=3)
    census = enumerate_lines(inst, starts_per_chart=150)
    checked = 0
    for line in census.lines:
        if line.n_incident == 1 and line.exactness == "exact" \
                and line.field() == QQ:
            rep = line_report(inst, line)
            assert rep.m == 0 and rep.branch_mult >= 2
            checked += 1
    assert checked >= 2


def test_branch_scan_221_two_sing_line_not_branch():
    inst = table1_instance("[122]", seed=11)
    enumerate_lines(inst, starts_per_chart=150)
    scan = branch_scan(inst, offline_points=5)
    two_sing = [r for r in scan.records if r.line.n_incident == 2]
    assert two_sing and all(r.branch_mult == 0 and r.m == 2 for r in two_sing)
    assert scan.offline_all_two_roots


def test_branch_scan_smooth_fixture_all_simple(line_fixture):
    scan = branch_scan(line_fixture, offline_points=5)
    assert len(scan.records) == 16
    assert all(r.exact and r.m == 0 and r.branch_mult == 1
               for r in scan.records)
    assert not scan.anomalies


def test_numeric_branch_evidence_diag(census_cache):
    inst, census = census_cache("[11111]")
    ev = numeric_line_branch_evidence(inst, census.lines[0])
    assert ev["status"] == "ok"
    assert ev["m_estimate"] == 0 and ev["branch_estimate"] == 1


def test_tacnodal_family_and_conic(line_fixture):
    line = line_fixture.distinguished_line
    a, b = line.span_over(QQ)
    hyps = []
    for t in (F(1), F(2), F(3), F(5), F(7), F(11)):
        p = ProjectivePoint.make(QQ, [ai + t * bi for ai, bi in zip(a, b)])
        H, cls, (lam, mu), chart = tacnodal_hyperplane_on_line(
            line_fixture, line, p)
        assert cls.kind == "A3_tacnode"
        hess = hessian_form_at(line_fixture, p, chart=chart)
        # on a simple-branch line the discriminant vanishes along the line,
        # so the Hessian form at p has a double root, and that root is the
        # tacnodal direction itself
        assert not hess.discriminant
        assert len(hess.roots) == 1 and hess.roots[0][2] == 2
        _, root, _ = hess.roots[0]
        assert lam * root[1] == mu * root[0]
        hyps.append(H)
    conic, residuals = dual_plane_conic_fit(hyps, line)
    assert any(conic)
    assert all(r == 0 for r in residuals)


def test_tacnodal_no_double_root_error(line_fixture):
    # a point where f1 = g1 = 0 cannot exist generically; feed a wrong line
    line = line_fixture.lines[0]
    if line.plucker_float() is not None and \
            line is not line_fixture.distinguished_line:
        a, b = line.span_over(QQ)
        p = ProjectivePoint.make(QQ, [ai + 2 * bi for ai, bi in zip(a, b)])
        try:
            H, cls, lm, chart = tacnodal_hyperplane_on_line(
                line_fixture, line, p)
            assert cls.kind in ("A3_tacnode", "NonReducedLineMultiple",
                                "Other", "PerfectSquare")
        except NoDoubleRoot:
            pass
