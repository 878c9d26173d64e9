"""The cuspidal-locus data of a Segre surface.

For a smooth point p and local graph presentation z = F(x,y), w = G(x,y),
the hyperplanes through the tangent plane T_pS form a pencil (lam : mu), and
the section by such a hyperplane has a non-nodal singularity at p exactly
when the binary quadratic

    Hess(F) lam^2 + (F_xx G_yy + G_xx F_yy - 2 F_xy G_xy) lam mu + Hess(G) mu^2

vanishes.  This module computes that form at points (exactly), along lines
(as jets over Q(x)), classifies the resulting section germs, and derives the
divisor multiplicities and branch data of the induced double covering.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .errors import (CrossCheckMismatch, HyperplaneNotTangent, NoDoubleRoot,
                     NonGenericPoint, RootFieldUnsupported, SegreCuspError,
                     TowerUnsupported, TruncationInsufficient)
from .fields import (QQ, QuadraticExtension, RationalFunctions, field_with_sqrt,
                     quadext_sqrt)
from .jets import (BinaryQuadratic, InfiniteOrder, Jet, hensel_solve,
                   splitting_reduce, try_extract_square, y_order)
from .linalg import nullspace
from .pencil import proj_normalize, qform
from .surface import AdaptedChart, ProjectivePoint, adapted_chart

DEFAULT_ORDER = 8
MAX_ORDER = 32


# --------------------------------------------------------------------------
# the Hessian form at a point


@dataclass
class HessianAtPoint:
    point: ProjectivePoint
    chart: AdaptedChart
    form: BinaryQuadratic          # scalar coefficients
    discriminant: object
    roots: list                    # [(field, (lam, mu), multiplicity)]
    F: Jet
    G: Jet

    @property
    def has_two_distinct_roots(self):
        a, b, c = self.form.coefficients()
        return bool(self.discriminant) or (not a and not c and b)


def _hessian_coefficients(F: Jet, G: Jet):
    """(Hess F, K, Hess G) from the 2-jets of a graph presentation."""
    def second(J):
        return (2 * J.coefficient((2, 0)), J.coefficient((1, 1)),
                2 * J.coefficient((0, 2)))
    fxx, fxy, fyy = second(F)
    gxx, gxy, gyy = second(G)
    a = fxx * fyy - fxy * fxy
    b = fxx * gyy + gxx * fyy - 2 * fxy * gxy
    c = gxx * gyy - gxy * gxy
    return a, b, c


def _quadratic_roots(a, b, c, field):
    """Projective roots (lam : mu) of a*lam^2 + b*lam*mu + c*mu^2."""
    if not a and not b and not c:
        return None
    if not a:
        roots = [(field, (field.one, field.zero), 1 if b else 2)]
        if b:
            roots.append((field, proj_normalize((-c, b)), 1))
        return roots
    disc = b * b - 4 * a * c
    if field == QQ:
        rfield, root = field_with_sqrt(disc)
        if rfield == QQ:
            if root:
                return [(QQ, proj_normalize((-b + root, 2 * a)), 1),
                        (QQ, proj_normalize((-b - root, 2 * a)), 1)]
            return [(QQ, proj_normalize((-b, 2 * a)), 2)]
        mb, two_a = rfield.coerce(-b), rfield.coerce(2 * a)
        return [(rfield, proj_normalize((mb + root, two_a)), 1),
                (rfield, proj_normalize((mb - root, two_a)), 1)]
    # already inside a quadratic extension: the root must stay there
    if not disc:
        return [(field, proj_normalize((-b, 2 * a)), 2)]
    root = quadext_sqrt(field.coerce(disc))
    if root is None:
        raise RootFieldUnsupported(
            "Hessian roots would need a second quadratic extension")
    return [(field, proj_normalize((-b + root, 2 * a)), 1),
            (field, proj_normalize((-b - root, 2 * a)), 1)]


def hessian_form_at(surface, point, chart=None, order=2,
                    with_roots=True) -> HessianAtPoint:
    """The binary quadratic detecting non-nodal sections at a smooth point."""
    if chart is None:
        chart = adapted_chart(surface, point)
    F, G = chart.solve_graph(max(order, 2))
    a, b, c = _hessian_coefficients(F, G)
    form = BinaryQuadratic(a, b, c)
    roots = _quadratic_roots(a, b, c, chart.field) if with_roots else None
    return HessianAtPoint(point=point, chart=chart, form=form,
                          discriminant=form.discriminant(),
                          roots=roots or [], F=F, G=G)


# --------------------------------------------------------------------------
# section germ classification


@dataclass(frozen=True)
class SectionGermClass:
    kind: str                     # Smooth | A1_node | A2_cusp | A3_tacnode |
    multiplicity: int = 0         # PerfectSquare | NonReducedLineMultiple | Other
    detail: str = ""

    def __str__(self):
        if self.kind == "NonReducedLineMultiple":
            return f"NonReducedLineMultiple({self.multiplicity})"
        return self.kind


def classify_plane_germ(h: Jet, aligned_var=None) -> SectionGermClass:
    """Classify a plane-curve germ h(x, y) with vanishing 1-jet.

    With ``aligned_var`` set (a line mapped to {y = 0}), divisibility by
    y^k with k >= 2 is reported first as a non-reduced multiple of the line.
    """
    h = h - Jet(h.field, h.vars, h.order,
                {e: c for e, c in h.coeffs.items() if sum(e) <= 1})
    if h.is_zero():
        return SectionGermClass("Other", detail="zero to truncation order")
    if aligned_var is not None:
        k = h.order_in(aligned_var)
        if k is not None and k >= 2:
            return SectionGermClass("NonReducedLineMultiple", multiplicity=k)
    split = splitting_reduce(h)
    if split.rank == 2:
        return SectionGermClass("A1_node")
    sq = try_extract_square(h)
    if sq is not None:
        return SectionGermClass("PerfectSquare")
    if split.rank == 1:
        v = split.residual.valuation()
        if v is None:
            return SectionGermClass(
                "Other", detail=f"residual vanishes to order {split.residual.order}")
        if v == 3:
            return SectionGermClass("A2_cusp")
        if v == 4:
            return SectionGermClass("A3_tacnode")
        return SectionGermClass("Other", detail=f"A{v - 1} residual")
    return SectionGermClass("Other", detail="corank 2 plane germ")


def section_germ(surface, point, hyperplane, chart=None, order=DEFAULT_ORDER):
    """The local equation of a hyperplane section in an adapted chart."""
    if chart is None:
        chart = adapted_chart(surface, point)
    duals = chart.dual_coords(hyperplane)
    if duals is None:
        h = [chart.field.coerce(c) for c in hyperplane]
        if sum(h[k] * chart.columns[0][k] for k in range(5)):
            raise HyperplaneNotTangent("hyperplane misses the point")
        return None, chart  # contains p but not T_pS: smooth section
    lam, mu = duals
    F, G = chart.solve_graph(order)
    lam_mu_field = _common_field(chart.field, lam, mu)
    if lam_mu_field != chart.field:
        F = F.map_coefficients(lam_mu_field, lam_mu_field.coerce)
        G = G.map_coefficients(lam_mu_field, lam_mu_field.coerce)
        lam, mu = lam_mu_field.coerce(lam), lam_mu_field.coerce(mu)
    return F * lam + G * mu, chart


def _common_field(field, *values):
    out = field
    for v in values:
        if hasattr(v, "d"):
            cand = QuadraticExtension(v.d)
            if out == QQ:
                out = cand
            elif out != cand:
                raise TowerUnsupported("mixed quadratic extensions")
    return out


def classify_section_germ(surface, point, hyperplane, line=None,
                          order=DEFAULT_ORDER) -> SectionGermClass:
    """Classify the germ at ``point`` of the section by ``hyperplane``.

    ``line`` aligns the chart so non-reduced multiples of that line are
    recognized.
    """
    chart = adapted_chart(surface, point, line)
    h, chart = section_germ(surface, point, hyperplane, chart=chart, order=order)
    if h is None:
        return SectionGermClass("Smooth")
    return classify_plane_germ(h, aligned_var="y" if line is not None else None)


# --------------------------------------------------------------------------
# the trichotomy at a generic point


@dataclass
class PointCase:
    case: str                      # CaseI | CaseII | CaseIII
    root_classes: tuple
    hessian: HessianAtPoint


def point_case(surface, point, order=DEFAULT_ORDER) -> PointCase:
    """Classify both Hessian-root sections at a smooth point off all lines."""
    hess = hessian_form_at(surface, point)
    if not hess.has_two_distinct_roots:
        raise NonGenericPoint(
            f"Hessian form at {point} is degenerate; the point is not generic")
    chart = hess.chart
    F, G = chart.solve_graph(order)
    classes = []
    for rfield, (lam, mu), _m in hess.roots:
        Fr, Gr = F, G
        if rfield != chart.field:
            Fr = F.map_coefficients(rfield, rfield.coerce)
            Gr = G.map_coefficients(rfield, rfield.coerce)
            lam, mu = rfield.coerce(lam), rfield.coerce(mu)
        h = Fr * lam + Gr * mu
        classes.append(classify_plane_germ(h))
    kinds = sorted(c.kind for c in classes)
    squares = kinds.count("PerfectSquare")
    if squares == 2:
        case = "CaseI"
    elif squares == 1 and "A2_cusp" in kinds:
        case = "CaseII"
    elif kinds == ["A2_cusp", "A2_cusp"]:
        case = "CaseIII"
    else:
        # e.g. a tacnodal section: the point sits on a special curve
        raise NonGenericPoint(
            f"root classification {kinds} at {point} is not generic")
    return PointCase(case=case, root_classes=tuple(classes), hessian=hess)


def sample_point_cases(surface, count, rng=None, order=DEFAULT_ORDER,
                       max_attempts=None):
    """Point cases at ``count`` generic rational points, resampling the
    occasional hit on a special curve."""
    from .surface import sample_rational_points

    rng = rng or random.Random(surface.seed + 3)
    out = []
    attempts = max_attempts or (8 * count + 16)
    seen = set()
    for _ in range(attempts):
        if len(out) >= count:
            return out
        (p,) = sample_rational_points(surface, 1, rng=rng,
                                      avoid=lambda q: _on_any_line(surface, q)
                                      or q in seen)
        seen.add(p)
        try:
            out.append((p, point_case(surface, p, order=order)))
        except (NonGenericPoint, RootFieldUnsupported):
            continue
    raise SegreCuspError(f"found only {len(out)} of {count} generic points")


# --------------------------------------------------------------------------
# the Hessian form along a line (jets over Q(x))


@dataclass
class HessianAlongLine:
    line: object
    chart: AdaptedChart
    form: BinaryQuadratic            # coefficients are jets in y over Q(x)
    coefficient_orders: tuple        # y-orders of (Hess F, K, Hess G)
    m: int                           # multiplicity of pi_1^{-1}(l) in D_1
    disc_order: int
    branch_mult: int
    F: Jet
    G: Jet


def line_chart(surface, line, base_param=None):
    """Chart over Q(x) aligned to an exact rational line.

    Sends the line to {y = z = w = 0} with x the line parameter; the base
    point (at x = 0) is chosen smooth with the tangent plane at it mapped to
    {z = w = 0}.
    """
    if line.field() != QQ:
        raise TowerUnsupported("line chart needs a rational line")
    a, b = line.span_over(QQ)
    params = [Fraction(base_param)] if base_param is not None else \
        [Fraction(t) for t in (0, 1, 2, 3, 5, 7, -1, -2, 11, 13, -3, 4, 6, 8,
                               9, 10, -5, 12, -7, 15)]
    last_error = None
    for t in params:
        c0 = [ai + t * bi for ai, bi in zip(a, b)]
        base = ProjectivePoint.make(QQ, c0)
        if not surface.on_surface(base):
            continue
        try:
            if not surface.is_smooth_at(base):
                continue
            chart = adapted_chart(surface, base, line)
            q1, q2, ok = _line_chart_jets(surface, chart, probe=True)
            if ok:
                return chart
        except SegreCuspError as exc:
            last_error = exc
            continue
    raise SegreCuspError(f"no usable base point found on {line}: {last_error}")


def _line_chart_jets(surface, chart, order=DEFAULT_ORDER, probe=False):
    """The two quadrics as jets in (y, z, w) over Q(x) for an aligned chart."""
    Kx = RationalFunctions("x")
    x = Kx.gen
    names = ("y", "z", "w")
    jets = []
    for k in range(5):
        const = Kx.coerce(chart.columns[0][k]) + x * Kx.coerce(chart.columns[1][k])
        terms = {(0, 0, 0): const}
        for i in range(3):
            e = tuple(1 if j == i else 0 for j in range(3))
            terms[e] = Kx.coerce(chart.columns[i + 2][k])
        jets.append(Jet(Kx, names, order, terms))
    P = [[Kx.coerce(c) for c in row] for row in surface.pencil.P]
    Q = [[Kx.coerce(c) for c in row] for row in surface.pencil.Q]
    q1, q2 = qform(P, jets), qform(Q, jets)
    if q1.constant_term() or q2.constant_term():
        raise SegreCuspError("chart is not aligned: quadrics do not vanish on it")
    if probe:
        jz = [[e.derivative(v).constant_term() for v in ("z", "w")]
              for e in (q1, q2)]
        det = jz[0][0] * jz[1][1] - jz[0][1] * jz[1][0]
        return q1, q2, bool(det)
    return q1, q2


def line_report(surface, line, chart=None, order=DEFAULT_ORDER) -> HessianAlongLine:
    """Hessian data along an exact line: the D_1 multiplicity m, the
    discriminant order, and the branch multiplicity disc_order - 2m.

    Escalates the truncation order (doubling, up to 32) when a vanishing
    order hits the cap.
    """
    if chart is None:
        chart = line_chart(surface, line)
    current = order
    while True:
        try:
            return _line_report_at_order(surface, line, chart, current)
        except TruncationInsufficient:
            if current >= MAX_ORDER:
                raise
            current = min(2 * current, MAX_ORDER)


def _line_report_at_order(surface, line, chart, order):
    q1, q2 = _line_chart_jets(surface, chart, order=order)
    F, G = hensel_solve([q1, q2], ("z", "w"), order=order)

    def split_derivs(J):
        Jx = J.coefficient_derivative()
        return (Jx.coefficient_derivative(), Jx.derivative("y"),
                J.derivative("y").derivative("y"))

    fxx, fxy, fyy = split_derivs(F)
    gxx, gxy, gyy = split_derivs(G)
    a = fxx * fyy - fxy * fxy
    b = fxx * gyy + gxx * fyy - 2 * fxy * gxy
    c = gxx * gyy - gxy * gxy
    orders = tuple(y_order(j, "y") for j in (a, b, c))
    finite = [o for o in orders if not isinstance(o, InfiniteOrder)]
    if not finite:
        raise TruncationInsufficient(
            f"all Hessian coefficients vanish to order {order} along the line")
    m = min(finite)
    disc = b * b - 4 * (a * c)
    d_ord = y_order(disc, "y")
    if isinstance(d_ord, InfiniteOrder):
        raise TruncationInsufficient(
            f"discriminant vanishes to order {d_ord.truncation_order} along the line")
    branch = d_ord - 2 * m
    assert branch >= 0, "discriminant order below twice the coefficient order"
    return HessianAlongLine(line=line, chart=chart,
                            form=BinaryQuadratic(a, b, c),
                            coefficient_orders=orders, m=m,
                            disc_order=d_ord, branch_mult=branch, F=F, G=G)


# --------------------------------------------------------------------------
# tacnodal hyperplanes along a line


def tacnodal_hyperplane_on_line(surface, line, point, order=DEFAULT_ORDER):
    """The unique tangent-direction hyperplane along a line at a point.

    Writes F = y f, G = y g in the line-aligned chart at the point; the
    residual intersection with the line of the section by (lam : mu) is the
    root set of (lam f + mu g)(x, 0).  Returns the hyperplane whose
    restriction has a double root at x = 0, with the classification of its
    section germ (a tacnode for generic points).
    """
    chart = adapted_chart(surface, point, line)
    F, G = chart.solve_graph(order)
    for J in (F, G):
        k = J.order_in("y")
        if k is not None and k < 1:
            raise SegreCuspError("graph functions do not vanish on the line")
    f = F.divide_by_power("y", 1)
    g = G.divide_by_power("y", 1)
    f1 = f.coefficient((1, 0))
    g1 = g.coefficient((1, 0))
    if not f1 and not g1:
        raise NoDoubleRoot("restriction to the line is degenerate at the point")
    lam, mu = g1, -f1
    f2 = f.coefficient((2, 0))
    g2 = g.coefficient((2, 0))
    if not (lam * f2 + mu * g2):
        raise NoDoubleRoot("double root degenerates to higher order")
    h = F * lam + G * mu
    cls = classify_plane_germ(h, aligned_var="y")
    hyperplane = chart.hyperplane_from_dual(lam, mu)
    return hyperplane, cls, (lam, mu), chart


def dual_plane_conic_fit(hyperplanes, line):
    """Fit a conic in the dual plane l* through five hyperplanes, check six.

    Hyperplanes containing the line form a CP2 inside the dual CP4; returns
    (conic coefficients in a basis of that plane, residuals on all inputs).
    """
    a, b = line.span_over(QQ)
    rows = [a, b]
    basis = nullspace(QQ, rows)  # covectors vanishing on the line
    assert len(basis) == 3
    coords = []
    for h in hyperplanes:
        sol = _express_in_basis(h, basis)
        coords.append(sol)
    monomials = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]

    def mono_row(c):
        return [c[i] * c[j] for i, j in monomials]

    system = [mono_row(c) for c in coords[:5]]
    kernel = nullspace(QQ, system)
    if not kernel:
        raise SegreCuspError("five hyperplanes do not determine a conic")
    conic = kernel[0]
    residuals = [sum(q * m for q, m in zip(conic, mono_row(c))) for c in coords]
    return conic, residuals


def _express_in_basis(h, basis):
    from .linalg import solve_linear
    M = [[basis[j][i] for j in range(3)] for i in range(5)]
    sol = solve_linear(QQ, M, [Fraction(c) for c in h])
    if sol is None:
        raise SegreCuspError("hyperplane does not contain the line")
    return sol


# --------------------------------------------------------------------------
# branch scan and summary


@dataclass
class LineBranchRecord:
    line: object
    exact: bool
    m: object = None
    disc_order: object = None
    branch_mult: object = None
    coefficient_orders: tuple = ()
    evidence: dict = dc_field(default_factory=dict)


@dataclass
class BranchReport:
    records: list
    offline_points_checked: int
    offline_all_two_roots: bool
    anomalies: list = dc_field(default_factory=list)

    def branch_components(self):
        return [r for r in self.records
                if isinstance(r.branch_mult, int) and r.branch_mult >= 1]


def branch_scan(surface, offline_points=10, rng=None, order=DEFAULT_ORDER,
                numeric_deltas=(1e-3, 5e-4, 2.5e-4)) -> BranchReport:
    """Per-line branch data plus a no-off-line-branching spot check."""
    from .lines import enumerate_lines
    from .surface import sample_rational_points

    if surface.lines is None:
        enumerate_lines(surface)
    records = []
    anomalies = []
    for line in surface.lines:
        if line.exactness == "exact" and line.field() == QQ:
            try:
                rep = line_report(surface, line, order=order)
                records.append(LineBranchRecord(
                    line=line, exact=True, m=rep.m, disc_order=rep.disc_order,
                    branch_mult=rep.branch_mult,
                    coefficient_orders=rep.coefficient_orders))
                continue
            except (SegreCuspError, TowerUnsupported) as exc:
                anomalies.append(f"exact report failed on {line}: {exc}")
        ev = numeric_line_branch_evidence(surface, line, deltas=numeric_deltas)
        records.append(LineBranchRecord(
            line=line, exact=False, m=ev.get("m_estimate"),
            disc_order=ev.get("disc_order_estimate"),
            branch_mult=ev.get("branch_estimate"), evidence=ev))

    ok = True
    checked = 0
    if offline_points:
        try:
            pts = sample_rational_points(
                surface, offline_points, rng=rng,
                avoid=lambda p: _on_any_line(surface, p))
        except SegreCuspError as exc:
            pts = []
            anomalies.append(f"off-line sampling unavailable: {exc}")
        for p in pts:
            hess = hessian_form_at(surface, p, with_roots=False)
            checked += 1
            if not hess.has_two_distinct_roots:
                ok = False
                anomalies.append(f"double Hessian root off lines at {p}")
    return BranchReport(records=records, offline_points_checked=checked,
                        offline_all_two_roots=ok, anomalies=anomalies)


def _on_any_line(surface, point, tol=1e-7):
    if not surface.lines:
        return False
    coords = point.as_float()
    return any(l.contains_point_float(coords, tol=tol) for l in surface.lines)


def numeric_line_branch_evidence(surface, line, deltas=(1e-3, 5e-4, 2.5e-4)):
    """Residual-level branch data for a line without an exact chart.

    Evaluates the three Hessian coefficients and their discriminant at
    surface points approached transversally to the line; the log-slope of
    the discriminant against the offset estimates its vanishing order.
    Numeric evidence only, never an exact claim.
    """
    P = np.array([[float(c) for c in row] for row in surface.pencil.P])
    Q = np.array([[float(c) for c in row] for row in surface.pencil.Q])
    M = line.as_matrix_float()
    out = {"deltas": list(deltas)}
    samples = []
    for t in (0.3, 0.7):
        base = M[0] + t * M[1]
        base = base / np.linalg.norm(base)
        frame = _numeric_frame(P, Q, base, M)
        if frame is None:
            continue
        disc_vals, coeff_vals = [], []
        for d in deltas:
            pt = _project_to_surface(P, Q, base + d * frame[1], frame)
            if pt is None:
                break
            abc = _numeric_hessian(P, Q, pt, frame)
            if abc is None:
                break
            a, b, c = abc
            disc_vals.append(abs(b * b - 4 * a * c))
            coeff_vals.append(max(abs(a), abs(b), abs(c)))
        if len(disc_vals) == len(deltas):
            samples.append((coeff_vals, disc_vals))
    if not samples:
        out["status"] = "no numeric samples"
        return out
    m_slopes, disc_slopes = [], []
    for coeff_vals, disc_vals in samples:
        m_slopes.append(_log_slope(deltas, coeff_vals))
        disc_slopes.append(_log_slope(deltas, disc_vals))
    m_est = int(round(float(np.median(m_slopes))))
    d_est = int(round(float(np.median(disc_slopes))))
    out.update({
        "m_estimate": max(m_est, 0),
        "disc_order_estimate": max(d_est, 0),
        "branch_estimate": max(d_est - 2 * max(m_est, 0), 0),
        "m_slopes": [float(s) for s in m_slopes],
        "disc_slopes": [float(s) for s in disc_slopes],
        "status": "ok",
    })
    return out


def _log_slope(deltas, values):
    xs = np.log(np.array(deltas, dtype=float))
    ys = np.log(np.maximum(np.array(values, dtype=float), 1e-300))
    A = np.vstack([xs, np.ones_like(xs)]).T
    slope, _ = np.linalg.lstsq(A, ys, rcond=None)[0]
    return slope


def _numeric_frame(P, Q, base, M):
    """Frame (c1 along the line, c2 tangent transverse, c3, c4 normal)."""
    gp, gq = P @ base, Q @ base
    rows = np.vstack([gp, gq])
    _, sv, vh = np.linalg.svd(rows)
    if sv[-1] < 1e-10:
        return None  # singular point of the surface
    tangent = vh[2:].conj()  # 3-dim: contains base and the line direction
    c1 = M[1] - (M[1] @ base.conj()) * base
    c1 = c1 / np.linalg.norm(c1)
    # transverse tangent direction: inside tangent, orthogonal to base, c1
    block = np.vstack([base, c1])
    best = None
    for v in tangent:
        w = v - block.T @ (block.conj() @ v)
        if np.linalg.norm(w) > (1e-6 if best is None else np.linalg.norm(best[1])):
            best = (v, w)
    if best is None:
        return None
    c2 = best[1] / np.linalg.norm(best[1])
    # normal directions paired invertibly with the gradients under the
    # complex-bilinear form: conjugated gradients do exactly that
    c3 = np.conj(gp) / np.linalg.norm(gp)
    c4 = np.conj(gq) / np.linalg.norm(gq)
    full = np.vstack([base, c1, c2, c3, c4])
    if abs(np.linalg.det(full)) < 1e-10:
        return None
    return base, c2, c1, c3, c4


def _project_to_surface(P, Q, x0, frame, iters=40):
    base, c2, c1, c3, c4 = frame
    x = x0.copy()
    for _ in range(iters):
        f = np.array([x @ P @ x, x @ Q @ x])
        if max(abs(f)) < 1e-14 * (np.linalg.norm(x) ** 2):
            return x
        J = np.array([[2 * (P @ x) @ c3, 2 * (P @ x) @ c4],
                      [2 * (Q @ x) @ c3, 2 * (Q @ x) @ c4]])
        try:
            dz = np.linalg.solve(J, -f)
        except np.linalg.LinAlgError:
            return None
        x = x + dz[0] * c3 + dz[1] * c4
    return None


def _numeric_hessian(P, Q, pt, frame):
    """Hessian-form coefficients at a numeric surface point, fixed frame."""
    _, c2, c1, c3, c4 = frame
    cs = {"x": c1, "y": c2, "z": c3, "w": c4}

    def bf(M, u, v):
        return u @ M @ v

    J = np.array([[2 * bf(P, pt, c3), 2 * bf(P, pt, c4)],
                  [2 * bf(Q, pt, c3), 2 * bf(Q, pt, c4)]])
    try:
        Jinv = np.linalg.inv(J)
    except np.linalg.LinAlgError:
        return None
    first = {}
    for name in ("x", "y"):
        rhs = -2 * np.array([bf(P, pt, cs[name]), bf(Q, pt, cs[name])])
        first[name] = Jinv @ rhs
    X = {name: cs[name] + first[name][0] * c3 + first[name][1] * c4
         for name in ("x", "y")}
    second = {}
    for pair in (("x", "x"), ("x", "y"), ("y", "y")):
        rhs = -np.array([2 * bf(P, X[pair[0]], X[pair[1]]),
                         2 * bf(Q, X[pair[0]], X[pair[1]])])
        second[pair] = Jinv @ rhs
    fxx, gxx = second[("x", "x")]
    fxy, gxy = second[("x", "y")]
    fyy, gyy = second[("y", "y")]
    a = fxx * fyy - fxy ** 2
    b = fxx * gyy + gxx * fyy - 2 * fxy * gxy
    c = gxx * gyy - gxy ** 2
    return a, b, c


# --------------------------------------------------------------------------
# summary


CASE_BY_COUNT = {2: "Empty", 1: "BirationalToS", 0: "DoubleCoverOfS"}
CASE_FOR_SUMMARY = {"Empty": "CaseI", "BirationalToS": "CaseII",
                    "DoubleCoverOfS": "CaseIII"}


@dataclass
class CuspLocusSummary:
    classification: str
    double_conic_pencils: int
    point_cases: list
    cross_checked: bool


def cusp_locus_summary(surface, sample_points=None, order=DEFAULT_ORDER):
    """Empty / birational-to-S / double-cover classification of the locus.

    Based on the double-conic pencil count from the Segre symbol, optionally
    cross-checked against the point trichotomy at supplied sample points.
    """
    count = surface.pencil.double_conic_pencil_count()
    summary = CASE_BY_COUNT[count]
    cases = []
    if sample_points:
        expected = CASE_FOR_SUMMARY[summary]
        for p in sample_points:
            pc = point_case(surface, p, order=order)
            cases.append(pc.case)
            if pc.case != expected:
                raise CrossCheckMismatch(
                    f"symbol predicts {expected} but {p} gives {pc.case}")
    return CuspLocusSummary(classification=summary,
                            double_conic_pencils=count,
                            point_cases=cases,
                            cross_checked=bool(sample_points))
