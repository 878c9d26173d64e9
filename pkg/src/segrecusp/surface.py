"""Geometry of a concrete Segre quartic surface.

Builds on a validated pencil: exact singular points with their ADE types,
tangent planes and adapted charts, exact rational point sampling, and the
rank-3 double-conic projection.  Line enumeration lives in
:mod:`segrecusp.lines`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (NonIsolatedSingularity, OrderTooSmall, PointNotOnLine,
                     PointSingular, ReducibleImageConic, RetryExhausted,
                     SegreCuspError, UnsupportedSingularity)
from .fields import QQ, QuadraticExtension, field_with_sqrt
from .jets import Jet, hensel_solve, splitting_reduce
from .jets import pdiv_list
from .linalg import complete_basis, mat_rank, mat_vec, nullspace
from .pencil import QuadricPencil, bform, proj_normalize, qform

DEFAULT_ORDER = 8


# --------------------------------------------------------------------------
# points and ADE labels


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of CP4 with exact coordinates, stored normalized."""

    field: object
    coords: tuple

    @staticmethod
    def make(field, coords):
        coords = tuple(field.coerce(c) for c in coords)
        if not any(coords):
            raise ValueError("projective point needs a nonzero coordinate")
        return ProjectivePoint(field, proj_normalize(coords))

    @property
    def is_rational(self):
        return self.field == QQ

    def as_float(self):
        return [_to_complex(c) for c in self.coords]

    def __repr__(self):
        return "(" + " : ".join(self.field.fmt(c) for c in self.coords) + ")"


def _to_complex(c):
    if isinstance(c, Fraction):
        return complex(c)
    if hasattr(c, "a"):  # quadratic extension element
        import math
        root = math.sqrt(abs(c.d))
        r = complex(root) if c.d > 0 else complex(0, root)
        return complex(c.a) + complex(c.b) * r
    raise TypeError(f"cannot convert {c!r} to complex")


@dataclass(frozen=True)
class ADEClass:
    family: str
    index: int

    def __post_init__(self):
        if (self.family, self.index) not in (
                ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5)):
            raise UnsupportedSingularity(
                f"{self.family}{self.index} cannot occur on a Segre surface")

    def __str__(self):
        return f"{self.family}{self.index}"


# --------------------------------------------------------------------------
# the surface


class SurfaceInstance:
    """A Segre surface cut out by a validated pencil, plus cached geometry."""

    def __init__(self, pencil: QuadricPencil, order=DEFAULT_ORDER, seed=0,
                 tolerance=1e-12):
        self.pencil = pencil
        self.order = order
        self.seed = seed
        self.tolerance = tolerance
        self.point_source = None   # optional exact parameterization
        self.lines = None          # filled by segrecusp.lines.enumerate_lines
        self._singular = None

    # ---------------------------------------------------------- singularities

    def singular_points(self):
        """Exact singular points (without classification)."""
        return [p for p, _ in self.singularities()]

    def singularities(self):
        """List of (point, ADEClass), computed once."""
        if self._singular is None:
            pts = _singular_points_exact(self.pencil)
            self._singular = [(p, classify_singularity(self, p, order=self.order))
                              for p in pts]
        return self._singular

    def singularity_multiset(self):
        return sorted(str(ade) for _, ade in self.singularities())

    # --------------------------------------------------------------- helpers

    def gradient_rows(self, point):
        coords = list(point.coords)
        field = point.field
        P = [[field.coerce(c) for c in row] for row in self.pencil.P]
        Q = [[field.coerce(c) for c in row] for row in self.pencil.Q]
        return [mat_vec(P, coords), mat_vec(Q, coords)], field

    def on_surface(self, point):
        coords = list(point.coords)
        field = point.field
        P = [[field.coerce(c) for c in row] for row in self.pencil.P]
        Q = [[field.coerce(c) for c in row] for row in self.pencil.Q]
        return not qform(P, coords) and not qform(Q, coords)

    def is_smooth_at(self, point):
        if not self.on_surface(point):
            raise SegreCuspError(f"{point} is not on the surface")
        rows, field = self.gradient_rows(point)
        return mat_rank(field, rows) == 2

    def tangent_space(self, point):
        """Basis of the projective tangent plane (3 vectors, first is p)."""
        rows, field = self.gradient_rows(point)
        if mat_rank(field, rows) != 2:
            raise PointSingular(f"{point} is singular")
        kernel = nullspace(field, rows)
        assert len(kernel) == 3
        # replace one kernel vector so the point itself is in the basis
        basis = [list(point.coords)]
        for v in kernel:
            if mat_rank(field, basis + [v]) == len(basis) + 1:
                basis.append(v)
            if len(basis) == 3:
                break
        assert len(basis) == 3
        return basis, field


def _restricted_conic_points(pencil, v1, v2):
    """Exact points of S on the kernel line spanned by v1, v2."""
    # both quadrics restrict proportionally on the kernel; use a nonzero one
    for M in (pencil.Q, pencil.P):
        a = qform(M, v1)
        b = bform(M, v1, v2)
        c = qform(M, v2)
        if a or b or c:
            break
    else:
        raise NonIsolatedSingularity(
            "a kernel line lies on the surface: singular locus is a curve")
    # roots of a s^2 + 2b st + c t^2
    sols = []
    if not a:
        sols.append((Fraction(1), Fraction(0)))
        if b:
            sols.append((-c, 2 * b))
    else:
        disc = b * b - a * c
        field, root = field_with_sqrt(disc)
        if field == QQ:
            if root:
                sols = [((-b + root), a), ((-b - root), a)]
            else:
                sols = [(-b, a)]
        else:
            mb = field.coerce(-b)
            sols = [(mb + root, field.coerce(a)), (mb - root, field.coerce(a))]
    points = []
    for s, t in sols:
        field = QQ if isinstance(s, Fraction) else QuadraticExtension(s.d)
        coords = [field.coerce(v1[i]) * s + field.coerce(v2[i]) * t
                  for i in range(5)]
        points.append(ProjectivePoint.make(field, coords))
    return points


def _singular_points_exact(pencil: QuadricPencil):
    """Sing(S) as kernel points of degenerate members lying on S."""
    points = []
    for member in pencil.rank_drop_members():
        if member.rank <= 2:
            raise NonIsolatedSingularity(
                f"member of rank {member.rank}: not a Segre surface")
        if member.rank == 4:
            v = member.kernel[0]
            if not qform(pencil.P, v) and not qform(pencil.Q, v):
                points.append(ProjectivePoint.make(QQ, v))
        else:
            points.extend(_restricted_conic_points(pencil, *member.kernel))
    unique = []
    for p in points:
        if p not in unique:
            unique.append(p)
    return sorted(unique, key=lambda p: tuple(str(c) for c in p.coords))


def singular_sweep_numeric(surface, n_starts=200, tol=1e-8, seed=0):
    """Random Newton sweep on the rank-drop system, cross-checked exactly.

    Solves (A - lam*B) x = 0 with an affine normalization from random starts
    (both orderings of the pencil generators), keeps kernel directions lying
    on the surface, and compares them with the exact singular set.  Returns
    (matched, unresolved); unresolved hits are reported, never added.
    """
    import numpy as np

    rng = np.random.default_rng(seed + 1)
    P = np.array([[float(c) for c in row] for row in surface.pencil.P])
    Q = np.array([[float(c) for c in row] for row in surface.pencil.Q])
    exact = [np.array([complex(x) for x in p.as_float()])
             for p in surface.singular_points()]

    hits = []
    for A, B in ((P, Q), (Q, P)):
        for _ in range(n_starts // 2):
            x = rng.standard_normal(5) + 1j * rng.standard_normal(5)
            lam = rng.standard_normal() + 1j * rng.standard_normal()
            a = rng.standard_normal(5) + 1j * rng.standard_normal(5)
            for _ in range(60):
                M = A - lam * B
                r = np.concatenate((M @ x, [a @ x - 1.0]))
                J = np.zeros((6, 6), dtype=complex)
                J[:5, :5] = M
                J[:5, 5] = -(B @ x)
                J[5, :5] = a
                try:
                    step = np.linalg.solve(J, -r)
                except np.linalg.LinAlgError:
                    break
                x = x + step[:5]
                lam = lam + step[5]
                if np.linalg.norm(step) < 1e-13:
                    break
            if not np.isfinite(x).all():
                continue
            xn = x / np.linalg.norm(x)
            member_resid = np.linalg.norm((A - lam * B) @ xn)
            on_surface = abs(xn @ P @ xn) + abs(xn @ Q @ xn)
            if member_resid < tol and on_surface < tol:
                hits.append(xn)
    matched, unresolved = [], []
    for h in hits:
        ok = any(abs(np.vdot(e / np.linalg.norm(e), h)) > 1 - 1e-6
                 for e in exact)
        (matched if ok else unresolved).append(h)
    distinct = []
    for h in unresolved:
        if all(abs(abs(np.vdot(h, d)) - 1) > 1e-6 for d in distinct):
            distinct.append(h)
    return matched, distinct


def _numeric_jacobian(fn, x, eps=1e-7):
    import numpy as np

    base = fn(x)
    J = np.zeros((len(base), len(x)), dtype=complex)
    for k in range(len(x)):
        dx = np.zeros(len(x), dtype=complex)
        dx[k] = eps
        J[:, k] = (fn(x + dx) - base) / eps
    return J


# --------------------------------------------------------------------------
# affine germs and ADE classification


def _affine_chart_vectors(point):
    """Basis b_1..b_4 with X = p + sum u_i b_i an affine chart at p."""
    field = point.field
    pivot = next(i for i, c in enumerate(point.coords) if c)
    basis = []
    for j in range(5):
        if j != pivot:
            basis.append([field.one if k == j else field.zero for k in range(5)])
    return basis


def hypersurface_germ(surface, point, order=DEFAULT_ORDER):
    """Eliminate one coordinate via a pencil member smooth at the point.

    Returns a 3-variable jet f with f(0) = 0 whose zero germ is (S, p).
    """
    field = point.field
    coords = list(point.coords)
    P = [[field.coerce(c) for c in row] for row in surface.pencil.P]
    Q = [[field.coerce(c) for c in row] for row in surface.pencil.Q]
    candidates = [(Q, P), (P, Q)]
    grads = {0: mat_vec(candidates[0][0], coords), 1: mat_vec(candidates[1][0], coords)}
    use = next((k for k in (0, 1) if any(grads[k])), None)
    if use is None:
        raise UnsupportedSingularity(
            "both quadrics are singular at the point: not a hypersurface germ")
    member, other = candidates[use]

    basis = _affine_chart_vectors(point)
    names = ("u1", "u2", "u3", "u4")
    jets = []
    for k in range(5):
        terms = {(0, 0, 0, 0): coords[k]}
        for i, b in enumerate(basis):
            e = tuple(1 if j == i else 0 for j in range(4))
            terms[e] = b[k]
        jets.append(Jet(field, names, order, terms))
    q_member = qform(member, jets)
    q_other = qform(other, jets)

    grad = grads[use]
    solve_idx = next((i for i, b in enumerate(basis)
                      if sum(grad[k] * b[k] for k in range(5))), None)
    assert solve_idx is not None, "Euler relation guarantees a usable direction"
    solve_var = names[solve_idx]
    (h,) = hensel_solve([q_member], (solve_var,), order=order)
    images = {v: Jet.variable(field, h.vars, order, v) for v in h.vars}
    images[solve_var] = h
    return q_other.substitute(images)


def _binary_cubic_double_root(coeffs, field):
    """Analyze a binary cubic c0*u^3 + c1*u^2 v + c2*u v^2 + c3*v^3.

    Returns ('distinct', None), ('double', direction) or ('triple', direction),
    the direction being the projective zero (u, v) of the repeated factor.
    """
    c0, c1, c2, c3 = coeffs
    # dehomogenize with v = 1: p(t) = c0 t^3 + c1 t^2 + c2 t + c3
    p = [c3, c2, c1, c0]
    while p and not p[-1]:
        p.pop()
    inf_mult = 3 - (len(p) - 1)
    if inf_mult >= 2:
        # factor v^2 or v^3
        return ("triple" if inf_mult == 3 else "double", (field.one, field.zero))
    dp = [p[i] * i for i in range(1, len(p))]
    g = _list_gcd(p, dp, field)
    if len(g) <= 1:
        return ("distinct", None)
    if len(g) == 2:
        t0 = -g[0] / g[1]
        return ("double", (t0, field.one))
    # gcd of degree 2: triple rational root
    # p = c (t - t0)^3, so t0 = -p[2]/(3 p[3]) when deg 3
    t0 = -g[1] / (2 * g[2])
    return ("triple", (t0, field.one))


def _list_gcd(a, b, field):
    a, b = list(a), list(b)
    while b and any(b):
        _, r = pdiv_list(a, b, field)
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    while a and not a[-1]:
        a.pop()
    if a:
        inv = field.one / a[-1]
        a = [c * inv for c in a]
    return a


def classify_germ(f: Jet) -> ADEClass:
    """ADE type of a 3-variable hypersurface germ (A1..A4, D4, D5 only)."""
    split = splitting_reduce(f)
    corank = len(f.vars) - split.rank
    res = split.residual
    if corank == 0:
        return ADEClass("A", 1)
    if corank == 1:
        v = res.valuation()
        if v is None:
            raise OrderTooSmall(
                f"residual vanishes to order {res.order}; raise the order")
        if v > 5:
            raise UnsupportedSingularity(f"corank 1 residual of order {v}")
        return ADEClass("A", v - 1)
    if corank == 2:
        v = res.valuation()
        if v is None:
            raise OrderTooSmall(
                f"residual vanishes to order {res.order}; raise the order")
        if v != 3:
            raise UnsupportedSingularity(
                f"corank 2 residual with valuation {v}")
        cubic = res.homogeneous_part(3)
        coeffs = [res.field.zero] * 4
        for e, c in cubic.items():
            coeffs[e[1]] = c
        kind, direction = _binary_cubic_double_root(coeffs, res.field)
        if kind == "distinct":
            return ADEClass("D", 4)
        if kind == "triple":
            raise UnsupportedSingularity("cubic with a triple factor (E type)")
        # restrict to the zero line of the double factor
        t_field = res.field
        tvar = Jet.variable(t_field, ("t",), res.order, "t")
        images = {res.vars[0]: tvar * direction[0], res.vars[1]: tvar * direction[1]}
        restricted = res.substitute(images)
        w = restricted.valuation()
        if w is None:
            raise OrderTooSmall(
                f"restriction vanishes to order {restricted.order}")
        if w + 1 not in (4, 5):
            raise UnsupportedSingularity(f"D-series index {w + 1}")
        return ADEClass("D", w + 1)
    raise UnsupportedSingularity(f"corank {corank} germ")


def classify_singularity(surface, point, order=DEFAULT_ORDER) -> ADEClass:
    """ADE class of a singular point, with automatic order escalation."""
    current = max(order, DEFAULT_ORDER)
    while current <= 4 * max(order, DEFAULT_ORDER):
        try:
            return classify_germ(hypersurface_germ(surface, point, order=current))
        except OrderTooSmall:
            current *= 2
    raise OrderTooSmall(f"classification failed up to order {current // 2}")


# --------------------------------------------------------------------------
# adapted charts


@dataclass
class AdaptedChart:
    """Exact linear chart: X = c0 + x c1 + y c2 + z c3 + w c4.

    The base point is c0, the tangent plane maps to {z = w = 0}, and an
    aligned line (when present) to {y = z = w = 0}.
    """

    surface: SurfaceInstance
    field: object
    columns: list            # five 5-vectors over field
    base_point: ProjectivePoint
    aligned_line: object = None

    VAR_NAMES = ("x", "y", "z", "w")

    def chart_jets(self, order):
        """The two quadrics as jets in (x, y, z, w) centered at the base point."""
        field = self.field
        jets = []
        for k in range(5):
            terms = {(0, 0, 0, 0): self.columns[0][k]}
            for i in range(4):
                e = tuple(1 if j == i else 0 for j in range(4))
                terms[e] = self.columns[i + 1][k]
            jets.append(Jet(field, self.VAR_NAMES, order, terms))
        P = [[field.coerce(c) for c in row] for row in self.surface.pencil.P]
        Q = [[field.coerce(c) for c in row] for row in self.surface.pencil.Q]
        return qform(P, jets), qform(Q, jets)

    def solve_graph(self, order):
        """F, G with the surface locally {z = F(x,y), w = G(x,y)}."""
        q1, q2 = self.chart_jets(order)
        return hensel_solve([q1, q2], ("z", "w"), order=order)

    def point_at(self, x, y, z, w):
        field = self.field
        vals = [field.coerce(v) for v in (x, y, z, w)]
        coords = [self.columns[0][k]
                  + sum(vals[i] * self.columns[i + 1][k] for i in range(4))
                  for k in range(5)]
        return ProjectivePoint.make(field, coords)

    def hyperplane_from_dual(self, lam, mu):
        """The hyperplane with section germ lam*F + mu*G (5 covector entries)."""
        from .linalg import mat_inv
        field = self.field
        A = [[self.columns[j][i] for j in range(5)] for i in range(5)]
        Ainv = mat_inv(field, A)
        lam, mu = field.coerce(lam), field.coerce(mu)
        return tuple(Ainv[3][i] * lam + Ainv[4][i] * mu for i in range(5))

    def dual_coords(self, hyperplane):
        """(lam, mu) of a hyperplane containing the tangent plane."""
        field = self.field
        h = [field.coerce(c) for c in hyperplane]
        for i in range(3):
            if sum(h[k] * self.columns[i][k] for k in range(5)):
                return None
        lam = sum(h[k] * self.columns[3][k] for k in range(5))
        mu = sum(h[k] * self.columns[4][k] for k in range(5))
        return (lam, mu)


def adapted_chart(surface, point, line=None) -> AdaptedChart:
    """Chart at a smooth point; optionally align a line to {y = z = w = 0}."""
    if not surface.is_smooth_at(point):
        raise PointSingular(f"{point} must be smooth")
    tangent, field = surface.tangent_space(point)
    c0 = list(point.coords)
    if line is not None:
        if line.exactness != "exact":
            raise PointNotOnLine("chart alignment needs an exact line")
        span = line.span_over(field)
        if not _point_on_span(field, point, span):
            raise PointNotOnLine(f"{point} is not on the line")
        direction = _line_direction(field, point, span)
        basis = [c0, direction]
        for v in tangent:
            if mat_rank(field, basis + [v]) == len(basis) + 1:
                basis.append(v)
            if len(basis) == 3:
                break
        if len(basis) != 3:
            raise SegreCuspError("line is not inside the tangent plane")
    else:
        basis = [c0] + [v for v in tangent
                        if mat_rank(field, [c0, v]) == 2][:2]
        if len(basis) != 3:
            basis = complete_basis(field, [c0], 3)
    cols = complete_basis(field, basis, 5)
    return AdaptedChart(surface=surface, field=field, columns=cols,
                        base_point=point, aligned_line=line)


def _point_on_span(field, point, span):
    rows = [list(v) for v in span] + [list(point.coords)]
    return mat_rank(field, rows) == 2


def _line_direction(field, point, span):
    """A vector spanning the line together with the point."""
    for v in span:
        if mat_rank(field, [list(point.coords), list(v)]) == 2:
            return list(v)
    raise ValueError("degenerate line span")


# --------------------------------------------------------------------------
# exact rational points via cones over singular points


def _isotropic_seed(pencil, member, surface_points=()):
    """A rational point on the member quadric that is smooth on it.

    Kernel vectors are the cone's vertex and cannot seed the stereographic
    sweep; any other singular point of the surface lies on every member and
    works, otherwise small coordinate combinations are scanned.
    """
    kernel = member.kernel
    M = pencil.member(*member.root)
    n = 5
    candidates = [list(p.coords) for p in surface_points if p.is_rational]
    basis = [[Fraction(1) if k == j else Fraction(0) for k in range(n)]
             for j in range(n)]
    candidates += list(basis)
    import itertools as _it
    scales = (1, -1, 2, -2)
    for i, j in _it.combinations(range(n), 2):
        for s in scales:
            candidates.append([basis[i][k] + s * basis[j][k] for k in range(n)])
    for i, j, k3 in _it.combinations(range(n), 3):
        for c1 in (1, 2):
            for s in scales:
                for t in scales:
                    candidates.append([c1 * basis[i][k] + s * basis[j][k]
                                       + t * basis[k3][k] for k in range(n)])
    for v in candidates:
        if qform(M, v) != 0:
            continue
        if mat_rank(QQ, kernel + [v]) != len(kernel) + 1:
            continue
        if any(mat_vec(M, v)):
            return v
    return None


def sample_rational_points(surface, count, rng=None, avoid=None,
                           require_smooth=True, max_attempts=4000):
    """Exact rational points on the surface, drawn from a dense family.

    Uses the attached parameterization when the surface has one, otherwise
    sweeps lines through a singular point inside a degenerate member's cone.
    ``avoid`` is a predicate rejecting unwanted points (e.g. on a line).
    """
    rng = rng or random.Random(surface.seed)
    out = []

    def accept(p):
        if p is None or not surface.on_surface(p):
            return
        if require_smooth and not surface.is_smooth_at(p):
            return
        if avoid is not None and avoid(p):
            return
        if p not in out:
            out.append(p)

    if surface.point_source is not None:
        for _ in range(max_attempts):
            if len(out) >= count:
                return out
            accept(surface.point_source(rng))
        raise RetryExhausted("parameterized point sampling exhausted attempts")

    all_sing = surface.singular_points()
    strategies = []
    for member in surface.pencil.rank_drop_members():
        if member.rank not in (3, 4):
            continue
        kernel_points = [p for p in all_sing
                         if p.is_rational and _in_kernel(member, p)]
        if not kernel_points:
            continue
        seed_vec = _isotropic_seed(surface.pencil, member, all_sing)
        if seed_vec is None:
            continue
        strategies.append((member, kernel_points[0], seed_vec))
    if not strategies:
        raise RetryExhausted(
            "no exact point strategy: surface has no usable singular cone "
            "and no parameterization")

    M_cache = {}
    for _ in range(max_attempts):
        if len(out) >= count:
            return out
        member, s_pt, seed_vec = strategies[rng.randrange(len(strategies))]
        key = member.root
        if key not in M_cache:
            M_cache[key] = surface.pencil.member(*member.root)
        M = M_cache[key]
        w = [Fraction(rng.randint(-9, 9)) for _ in range(5)]
        qw = qform(M, w)
        bw = bform(M, seed_vec, w)
        if not qw:
            continue
        # second intersection of the line through the seed with the cone
        d = [qw * seed_vec[k] - 2 * bw * w[k] for k in range(5)]
        if not any(d):
            continue
        s = list(s_pt.coords)
        qp_d = qform(surface.pencil.P, d)
        qq_d = qform(surface.pencil.Q, d)
        bp = bform(surface.pencil.P, s, d)
        bq = bform(surface.pencil.Q, s, d)
        if qq_d:
            tau = -2 * bq / qq_d
        elif qp_d:
            tau = -2 * bp / qp_d
        else:
            continue
        if not tau:
            continue
        coords = [s[k] + tau * d[k] for k in range(5)]
        if not any(coords):
            continue
        p = ProjectivePoint.make(QQ, coords)
        accept(p)
    if len(out) < count:
        raise RetryExhausted(
            f"found only {len(out)} of {count} rational points")
    return out


def _in_kernel(member, point):
    vecs = member.kernel + [list(point.coords)]
    return mat_rank(QQ, vecs) == len(member.kernel)


# --------------------------------------------------------------------------
# double-conic hyperplanes from rank-3 members


def _conic_tangency_point(surface, member, t):
    """A rational point of the rank-3 member cone at conic parameter t."""
    t = Fraction(t)
    N = surface.pencil.member(*member.root)
    # rational point on the image conic = image of a rational surface point
    base = None
    for p in surface.singular_points():
        if p.is_rational and not _in_kernel(member, p):
            base = list(p.coords)
            break
    if base is None:
        pts = sample_rational_points(surface, 1,
                                     rng=random.Random(surface.seed + 17))
        base = list(pts[0].coords)
    if qform(N, base) != 0:
        raise ReducibleImageConic("surface point off its own pencil member")
    # two directions completing the base modulo the kernel
    comp = complete_basis(QQ, member.kernel + [base], 5)[len(member.kernel) + 1:]
    w1, w2 = comp
    w = [w1[k] + t * w2[k] for k in range(5)]
    qw = qform(N, w)
    bw = bform(N, base, w)
    u = [qw * base[k] - 2 * bw * w[k] for k in range(5)]
    if not any(u):
        raise ReducibleImageConic("conic parameterization degenerated")
    return N, u


def double_conic_hyperplane(surface, member, t):
    """Pullback of a tangent line of the rank-3 member's image conic.

    ``t`` selects the tangency point along a rational parameterization of the
    conic.  Returns the hyperplane as five exact rational coefficients.
    """
    if member.rank != 3:
        raise ValueError("member must have rank 3")
    N, u = _conic_tangency_point(surface, member, t)
    h = mat_vec(N, u)
    if not any(h):
        raise ReducibleImageConic("tangent hyperplane collapsed")
    return tuple(proj_normalize(h))


def double_conic_points(surface, member, t, count=3, rng=None):
    """Smooth rational points on the double conic cut by the t-hyperplane.

    The conic is the plane section of S by <kernel, tangency point>; it
    passes a singular point of S on the kernel line, from which it is swept
    rationally.
    """
    rng = rng or random.Random(surface.seed + 23)
    _, u = _conic_tangency_point(surface, member, t)
    plane = [list(v) for v in member.kernel] + [u]
    # restriction of a quadric to the plane (both restrict proportionally)
    for M in (surface.pencil.Q, surface.pencil.P):
        f = [[bform(M, plane[i], plane[j]) for j in range(3)] for i in range(3)]
        if any(any(row) for row in f):
            break
    # a singular point of S on the kernel line, in plane coordinates
    anchor = None
    for s in surface.singular_points():
        if not s.is_rational or not _in_kernel(member, s):
            continue
        cols = [[plane[j][i] for j in range(3)] for i in range(5)]
        from .linalg import solve_linear
        sol = solve_linear(QQ, cols, list(s.coords))
        if sol is not None:
            anchor = sol
            break
    if anchor is None:
        raise ReducibleImageConic("no rational singular anchor on the conic")
    out = []
    for _ in range(200):
        if len(out) >= count:
            break
        d = [Fraction(rng.randint(-9, 9)) for _ in range(3)]
        qd = qform(f, d)
        if not qd:
            continue
        bd = bform(f, anchor, d)
        pc = [qd * anchor[i] - 2 * bd * d[i] for i in range(3)]
        coords = [sum(pc[j] * plane[j][i] for j in range(3)) for i in range(5)]
        if not any(coords):
            continue
        p = ProjectivePoint.make(QQ, coords)
        if not surface.on_surface(p):
            continue
        if not surface.is_smooth_at(p):
            continue
        if p not in out:
            out.append(p)
    return out
