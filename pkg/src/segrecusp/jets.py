"""Truncated multivariate power series (jets) with exact coefficients.

A :class:`Jet` stores a sparse map from exponent vectors to nonzero field
elements, together with the truncation order up to which its coefficients are
guaranteed exact.  Arithmetic tracks that guarantee: multiplying a jet known
to order 8 by one of valuation 2 yields coefficients trusted to order 10.

On top of the ring operations this module provides the local-analysis
primitives used throughout the package: implicit solving of one or two
equations (Newton lifting), vanishing orders, extraction of unit-times-square
factorizations, and the formal splitting of a germ into a nondegenerate
quadratic part plus a residual in the corank variables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderTooSmall, SingularJacobian


DEFAULT_ORDER = 8


def _exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Jet:
    """Power series in up to four variables truncated at a total degree."""

    __slots__ = ("field", "vars", "order", "coeffs")

    def __init__(self, field, vars, order, coeffs=None):
        if not 1 <= len(vars) <= 4:
            raise ValueError(f"jets support 1-4 variables, got {vars!r}")
        self.field = field
        self.vars = tuple(vars)
        self.order = int(order)
        clean = {}
        if coeffs:
            for exps, c in coeffs.items():
                if sum(exps) <= self.order and c:
                    clean[exps] = c
        self.coeffs = clean

    # ------------------------------------------------------------ builders

    @classmethod
    def zero(cls, field, vars, order):
        return cls(field, vars, order)

    @classmethod
    def constant(cls, field, vars, order, value):
        value = field.coerce(value)
        e0 = (0,) * len(vars)
        return cls(field, vars, order, {e0: value} if value else {})

    @classmethod
    def variable(cls, field, vars, order, name):
        i = tuple(vars).index(name)
        e = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(field, vars, order, {e: field.one})

    def clone(self, coeffs, order=None):
        return Jet(self.field, self.vars, self.order if order is None else order,
                   coeffs)

    # ------------------------------------------------------------- queries

    def valuation(self):
        """Minimal total degree of a nonzero term, or None for the zero jet."""
        if not self.coeffs:
            return None
        return min(sum(e) for e in self.coeffs)

    def _val_bound(self):
        v = self.valuation()
        return self.order + 1 if v is None else v

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.vars), self.field.zero)

    def coefficient(self, exps):
        return self.coeffs.get(tuple(exps), self.field.zero)

    def homogeneous_part(self, degree):
        return {e: c for e, c in self.coeffs.items() if sum(e) == degree}

    def degree_in(self, name):
        i = self.vars.index(name)
        return max((e[i] for e in self.coeffs), default=0)

    def order_in(self, name):
        """Minimal exponent of ``name`` over nonzero terms (None if zero jet)."""
        i = self.vars.index(name)
        return min((e[i] for e in self.coeffs), default=None)

    def __eq__(self, other):
        if not isinstance(other, Jet):
            if not other:
                return self.is_zero()
            return self.coeffs == {(0,) * len(self.vars): self.field.coerce(other)}
        return (self.field == other.field and self.vars == other.vars
                and self.coeffs == other.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return f"Jet(0; O({self.order + 1}))"
        parts = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            mono = "*".join(f"{v}^{k}" if k > 1 else v
                            for v, k in zip(self.vars, e) if k)
            c = self.field.fmt(self.coeffs[e])
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) + f" + O({self.order + 1})"

    # ---------------------------------------------------------- arithmetic

    def _check_compatible(self, other):
        if self.field != other.field or self.vars != other.vars:
            raise ValueError("jets over different rings")

    def __add__(self, other):
        if not isinstance(other, Jet):
            other = Jet.constant(self.field, self.vars, self.order, other)
        self._check_compatible(other)
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, self.field.zero) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self.clone(out, order)

    __radd__ = __add__

    def __neg__(self):
        return self.clone({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Jet):
            other = Jet.constant(self.field, self.vars, self.order, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            c = self.field.coerce(other)
            if not c:
                return self.clone({})
            return self.clone({e: v * c for e, v in self.coeffs.items()})
        self._check_compatible(other)
        order = min(self.order + other._val_bound(), other.order + self._val_bound())
        out = {}
        zero = self.field.zero
        for ea, ca in self.coeffs.items():
            da = sum(ea)
            for eb, cb in other.coeffs.items():
                if da + sum(eb) > order:
                    continue
                e = _exp_add(ea, eb)
                s = out.get(e, zero) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return self.clone(out, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = Jet.constant(self.field, self.vars, self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse; requires an invertible constant term."""
        c0 = self.constant_term()
        if not c0:
            raise ZeroDivisionError("jet with zero constant term has no inverse")
        inv0 = self.field.one / c0
        nvars = len(self.vars)
        e0 = (0,) * nvars
        out = {e0: inv0}
        by_degree = {}
        for e, c in self.coeffs.items():
            if e != e0:
                by_degree.setdefault(sum(e), []).append((e, c))
        for d in range(1, self.order + 1):
            layer = {}
            for dd, terms in by_degree.items():
                if dd > d:
                    continue
                for e, c in terms:
                    for e2, c2 in list(out.items()):
                        if sum(e2) == d - dd:
                            e3 = _exp_add(e, e2)
                            layer[e3] = layer.get(e3, self.field.zero) + c * c2
            for e, c in layer.items():
                if sum(e) == d and c:
                    out[e] = -inv0 * c
        return self.clone(out)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.inverse()
        return self * (self.field.one / self.field.coerce(other))

    # -------------------------------------------------------------- calculus

    def derivative(self, name):
        """Partial derivative with respect to a jet variable."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.coeffs.items():
            if e[i]:
                e2 = tuple(k - 1 if j == i else k for j, k in enumerate(e))
                out[e2] = c * e[i]
        return self.clone(out, self.order - 1)

    def coefficient_derivative(self):
        """Derivative through the coefficient field (d/dx over Q(x))."""
        out = {}
        for e, c in self.coeffs.items():
            dc = self.field.derivative(c)
            if dc:
                out[e] = dc
        return self.clone(out)

    # --------------------------------------------------------- reshaping

    def truncate(self, order):
        return Jet(self.field, self.vars, min(order, self.order), self.coeffs)

    def map_coefficients(self, field, fn):
        return Jet(field, self.vars, self.order,
                   {e: fn(c) for e, c in self.coeffs.items()})

    def restrict_zero(self, name):
        """Set one jet variable to zero (keeping the variable slot)."""
        i = self.vars.index(name)
        return self.clone({e: c for e, c in self.coeffs.items() if e[i] == 0})

    def drop_vars(self, names):
        """Remove variables the jet does not involve."""
        idx = [self.vars.index(n) for n in names]
        for e in self.coeffs:
            if any(e[i] for i in idx):
                raise ValueError(f"jet still involves {names}")
        keep = [j for j in range(len(self.vars)) if j not in idx]
        return Jet(self.field, tuple(self.vars[j] for j in keep), self.order,
                   {tuple(e[j] for j in keep): c for e, c in self.coeffs.items()})

    def divide_by_power(self, name, k):
        """Exact division by name**k; raises if not divisible."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.coeffs.items():
            if e[i] < k:
                raise ValueError(f"jet not divisible by {name}^{k}")
            out[tuple(v - k if j == i else v for j, v in enumerate(e))] = c
        return self.clone(out, self.order - k)

    def substitute(self, images):
        """Substitute every variable by a jet (all images over one target ring).

        Images of variables that merely rename/embed must be supplied too.
        The result is exact to min(self.order, image orders).
        """
        target = next(iter(images.values()))
        order = min([self.order] + [g.order for g in images.values()])
        result = Jet.zero(target.field, target.vars, order)
        powers = {v: [Jet.constant(target.field, target.vars, order, 1)]
                  for v in self.vars}
        for v in self.vars:
            g = images[v].truncate(order)
            top = self.degree_in(v)
            for _ in range(top):
                powers[v].append(powers[v][-1] * g)
        for e, c in self.coeffs.items():
            term = Jet.constant(target.field, target.vars, order, c)
            for v, k in zip(self.vars, e):
                if k:
                    term = term * powers[v][k]
            result = result + term
        return result.truncate(order)


# --------------------------------------------------------------------------
# polynomial entry point


def jet_from_poly(field, vars, order, terms):
    """Build a jet from {exponent tuple: coefficient} polynomial data."""
    return Jet(field, vars, order,
               {tuple(e): field.coerce(c) for e, c in terms.items()})


# --------------------------------------------------------------------------
# vanishing orders


@dataclass(frozen=True)
class InfiniteOrder:
    """Vanishing order beyond the truncation cap; possibly not truly infinite."""

    truncation_order: int

    @property
    def is_infinite(self):
        return True

    def __eq__(self, other):
        return isinstance(other, InfiniteOrder)

    def __hash__(self):
        return hash("InfiniteOrder")

    def __repr__(self):
        return f"INFINITE(beyond order {self.truncation_order})"


def y_order(jet: Jet, name=None):
    """Minimal vanishing order of a jet along {name = 0}.

    Returns the least exponent of ``name`` carried by a nonzero coefficient,
    or :class:`InfiniteOrder` when the jet is identically zero to its
    truncation order (a truncation caveat, not a proof of vanishing).
    """
    if name is None:
        if len(jet.vars) != 1:
            raise ValueError("specify the variable for a multivariate jet")
        name = jet.vars[0]
    k = jet.order_in(name)
    if k is None:
        return InfiniteOrder(jet.order)
    return k


# --------------------------------------------------------------------------
# binary quadratics


@dataclass(frozen=True)
class BinaryQuadratic:
    """a*lam**2 + b*lam*mu + c*mu**2 with scalar or jet coefficients."""

    a: object
    b: object
    c: object

    def discriminant(self):
        return self.b * self.b - 4 * (self.a * self.c)

    def evaluate(self, lam, mu):
        return self.a * lam * lam + self.b * lam * mu + self.c * mu * mu

    def coefficients(self):
        return (self.a, self.b, self.c)


# --------------------------------------------------------------------------
# Newton lifting of implicit functions


def hensel_solve(equations, solve_vars, order=None):
    """Solve ``equations == 0`` for ``solve_vars`` as jets in the other variables.

    The equations are jets in base + solve variables, vanishing at the
    origin, whose Jacobian with respect to the solve variables is invertible
    at the origin.  Returns one jet per solve variable, in base variables,
    exact modulo total degree ``order + 1``.
    """
    eqs = list(equations)
    if order is None:
        order = min(e.order for e in eqs)
    if order < 2:
        raise OrderTooSmall(f"truncation order {order} < 2")
    if len(eqs) != len(solve_vars) or len(eqs) not in (1, 2):
        raise ValueError("hensel_solve handles 1 or 2 equations")
    field = eqs[0].field
    all_vars = eqs[0].vars
    base_vars = tuple(v for v in all_vars if v not in solve_vars)
    for e in eqs:
        if e.constant_term():
            raise SingularJacobian("equation does not vanish at the origin")

    jac = [[e.derivative(v) for v in solve_vars] for e in eqs]
    jac0 = [[entry.constant_term() for entry in row] for row in jac]
    if len(eqs) == 1:
        det0 = jac0[0][0]
    else:
        det0 = jac0[0][0] * jac0[1][1] - jac0[0][1] * jac0[1][0]
    if not det0:
        raise SingularJacobian("Jacobian in the solve variables is singular at 0")

    # staged Newton: each step doubles the trusted order, so early steps can
    # run at low truncation (a large saving over Q(x) coefficients)
    stages = [order]
    while stages[-1] > 2:
        stages.append(stages[-1] // 2)
    stages.reverse()

    current = [Jet.zero(field, base_vars, stages[0]) for _ in solve_vars]
    for stage_idx, stage in enumerate(stages):
        eqs_s = [e.truncate(stage) for e in eqs]
        jac_s = [[entry.truncate(stage) for entry in row] for row in jac]
        identity_images = {v: Jet.variable(field, base_vars, stage, v)
                           for v in base_vars}
        current = [Jet(field, base_vars, stage, f.coeffs) for f in current]
        for _ in range(3 if stage_idx else stage.bit_length() + 3):
            images = dict(identity_images)
            for v, f in zip(solve_vars, current):
                images[v] = f
            residuals = [e.substitute(images) for e in eqs_s]
            if all(r.is_zero() for r in residuals):
                break
            jval = [[entry.substitute(images) for entry in row] for row in jac_s]
            if len(eqs) == 1:
                delta = [residuals[0] / jval[0][0]]
            else:
                det = jval[0][0] * jval[1][1] - jval[0][1] * jval[1][0]
                det_inv = det.inverse()
                delta = [
                    (jval[1][1] * residuals[0] - jval[0][1] * residuals[1]) * det_inv,
                    (jval[0][0] * residuals[1] - jval[1][0] * residuals[0]) * det_inv,
                ]
            current = [f - d for f, d in zip(current, delta)]
        else:
            raise OrderTooSmall(
                f"Newton lifting failed to converge at order {stage}")
    current = [Jet(field, base_vars, order, f.coeffs) for f in current]
    return tuple(current)


def hensel_solve_pair(q1: Jet, q2: Jet, solve_vars=("z", "w"), order=None):
    """Two-equation front end; returns (F, G) with q_i(base, F, G) = 0."""
    return hensel_solve([q1, q2], tuple(solve_vars), order)


# --------------------------------------------------------------------------
# unit * square extraction


def _form_to_list(form, degree, last_index):
    """Homogeneous 2-variable form -> dense list indexed by last-variable degree."""
    out = [None] * (degree + 1)
    for e, c in form.items():
        out[e[last_index]] = c
    return out


def try_extract_square(h: Jet):
    """Factor h = u * s**2 with u a unit jet, if possible to truncation order.

    Returns (u, s) with s(0) = 0, or None.  h must vanish at the origin and
    involve at most two variables.
    """
    if len(h.vars) > 2:
        raise ValueError("try_extract_square expects a jet in at most 2 variables")
    if h.constant_term():
        raise ValueError("h must vanish at the origin")
    v = h.valuation()
    if v is None or v % 2:
        return None
    m = v // 2
    field = h.field
    nvars = len(h.vars)
    last = nvars - 1

    lowest = _form_to_list(h.homogeneous_part(v), v, last)
    i0 = next((i for i, c in enumerate(lowest) if c is not None), None)
    if i0 is None or i0 % 2:
        return None
    c0 = lowest[i0]
    # square root of the lowest form, normalized to leading coefficient 1
    b = [field.zero] * (m - i0 // 2 + 1)
    b[0] = field.one
    for k in range(1, len(b)):
        target = lowest[i0 + k] if lowest[i0 + k] is not None else field.zero
        acc = target / c0
        for i in range(1, k):
            acc = acc - b[i] * b[k - i]
        b[k] = acc / 2
    # verify c0 * q**2 equals the lowest form
    sq = [field.zero] * (2 * len(b) - 1)
    for i, bi in enumerate(b):
        for j, bj in enumerate(b):
            sq[i + j] = sq[i + j] + bi * bj
    for i, c in enumerate(lowest):
        want = c if c is not None else field.zero
        got = c0 * sq[i - i0] if 0 <= i - i0 < len(sq) else field.zero
        if want != got:
            return None

    def form_entry(degree, last_deg):
        if nvars == 2:
            return (degree - last_deg, last_deg)
        return (last_deg,) if last_deg == degree else None

    s_coeffs = {}
    for i, c in enumerate(b):
        if c:
            e = form_entry(m, i + i0 // 2)
            if e is None:
                return None
            s_coeffs[e] = c

    q_list = [field.zero] * (m + 1)
    for e, c in s_coeffs.items():
        q_list[e[last]] = c
    s_order = h.order - m
    # lift degree by degree: (h/c0) must equal s**2 exactly
    s = Jet(field, h.vars, s_order, s_coeffs)
    target = h / c0
    for k in range(1, s_order - m + 1):
        diff = (target - s * s).homogeneous_part(v + k)
        if not diff:
            continue
        num = [c if c is not None else field.zero
               for c in _form_to_list(diff, v + k, last)]
        quot, rem = pdiv_list(num, q_list, field)
        if quot is None or any(rem):
            return None
        add = {}
        for i, c in enumerate(quot):
            if c:
                e = form_entry(m + k, i)
                if e is None or i > m + k:
                    return None
                add[e] = c / 2
        s = s + Jet(field, h.vars, s_order, add)
    if not (s * s * c0 - h).is_zero():
        return None
    u = Jet.constant(field, h.vars, h.order, field.one) * c0
    return u, s


def pdiv_list(num, den, field):
    """Dense list division over a field; returns (quotient, remainder)."""
    den = list(den)
    while den and not den[-1]:
        den.pop()
    if not den:
        return None, num
    num = list(num)
    q = [field.zero] * max(len(num) - len(den) + 1, 0)
    inv = field.one / den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] * inv
        if c:
            q[k] = c
            for j, cb in enumerate(den):
                num[k + j] = num[k + j] - c * cb
    return q, num


# --------------------------------------------------------------------------
# formal splitting (Morse reduction)


@dataclass
class SplitResult:
    rank: int
    residual: Jet
    residual_vars: tuple


def _quadratic_matrix(f: Jet):
    n = len(f.vars)
    H = [[f.field.zero] * n for _ in range(n)]
    for e, c in f.homogeneous_part(2).items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx[0], idx[1]
        if i == j:
            H[i][i] = c + c
        else:
            H[i][j] = H[i][j] + c
            H[j][i] = H[j][i] + c
    return H


def _matrix_rank(H, field):
    M = [row[:] for row in H]
    n = len(M)
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = field.one / M[rank][col]
        for r in range(n):
            if r != rank and M[r][col]:
                factor = M[r][col] * inv
                M[r] = [a - factor * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def splitting_reduce(f: Jet, max_rounds=None):
    """Split a germ (no constant or linear part) into squares plus a residual.

    Returns the Hessian rank at the origin and the residual germ in the
    remaining (corank-many) variables, equivalent to f up to formal
    coordinate change through the truncation order.
    """
    if f.constant_term() or f.homogeneous_part(1):
        raise ValueError("germ must have no constant or linear part")
    field = f.field
    hess_rank = _matrix_rank(_quadratic_matrix(f), field)
    active = list(f.vars)
    current = f
    splits = 0
    while splits < hess_rank:
        quad = current.homogeneous_part(2)
        # direction with nonzero square coefficient, creating one if needed
        sq_var = None
        for v in active:
            i = current.vars.index(v)
            e = tuple(2 if j == i else 0 for j in range(len(current.vars)))
            if quad.get(e):
                sq_var = v
                break
        if sq_var is None:
            cross = next(iter(e for e in quad), None)
            if cross is None:
                break
            i, j = [k for k, x in enumerate(cross) for _ in range(x)][:2]
            vi, vj = current.vars[i], current.vars[j]
            images = {v: Jet.variable(field, current.vars, current.order, v)
                      for v in current.vars}
            images[vj] = images[vj] + Jet.variable(field, current.vars,
                                                   current.order, vi)
            current = current.substitute(images)
            continue
        i = current.vars.index(sq_var)
        e2 = tuple(2 if j == i else 0 for j in range(len(current.vars)))
        a = current.coeffs[e2]
        # iteratively remove terms of degree one in sq_var
        for _ in range(current.order + 1):
            linear = {tuple(0 if j == i else k for j, k in enumerate(e)): c
                      for e, c in current.coeffs.items() if e[i] == 1}
            if not linear:
                break
            w = Jet(field, current.vars, current.order, linear) / (2 * a)
            images = {v: Jet.variable(field, current.vars, current.order, v)
                      for v in current.vars}
            images[sq_var] = images[sq_var] - w
            current = current.substitute(images)
        else:
            raise OrderTooSmall("square completion did not stabilize")
        current = current.restrict_zero(sq_var)
        active.remove(sq_var)
        splits += 1
    if splits != hess_rank:
        raise OrderTooSmall("could not realize the full Hessian rank")
    if not active:
        residual = Jet.zero(field, f.vars[:1], current.order)
    elif len(active) < len(f.vars):
        residual = current.drop_vars([v for v in f.vars if v not in active])
    else:
        residual = current
    return SplitResult(rank=hess_rank, residual=residual,
                       residual_vars=tuple(active))
