"""Pencils of quadrics in CP4 and their Segre symbols.

A pencil is stored as a pair of 5x5 symmetric rational matrices (P, Q).  The
Segre symbol collects, for each eigenvalue of the pencil, the multiset of
Jordan block sizes of M = R**-1 * S, where R is a recorded invertible member
and S an independent one.  Degenerate members, their exact kernels, and the
count of double-conic pencils all derive from this data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (CrossCheckMismatch, DegeneratePencil, DuplicateEigenvalue,
                     IrrationalEigenvalue)
from .fields import QQ, RationalFunctions, parse_rational
from .linalg import (identity, mat_det, mat_inv, mat_mul, mat_rank, mat_sub,
                     nullspace, rational_roots, transpose)

DIM = 5

# trial members (a, b) -> a*P + b*Q; seven distinct projective points cannot
# all be roots of a nonzero quintic form, so failure of all proves degeneracy
_MEMBER_TRIALS = [(0, 1), (1, 0), (1, 1), (1, -1), (1, 2), (1, 3), (1, 4)]


def qform(M, X):
    """Evaluate the quadratic form X^T M X (entries follow X's arithmetic)."""
    acc = X[0] * 0
    for i, row in enumerate(M):
        for j, c in enumerate(row):
            if c:
                acc = acc + X[i] * X[j] * c
    return acc


def bform(M, X, Y):
    """Polar bilinear form X^T M Y."""
    acc = X[0] * 0
    for i, row in enumerate(M):
        for j, c in enumerate(row):
            if c:
                acc = acc + X[i] * Y[j] * c
    return acc


def member_matrix(P, Q, lam, mu):
    return [[lam * p + mu * q for p, q in zip(rp, rq)] for rp, rq in zip(P, Q)]


def proj_normalize(vec):
    """Scale a projective tuple so its first nonzero entry is one."""
    for c in vec:
        if c:
            inv = 1 / c
            return tuple(x * inv for x in vec)
    raise ValueError("zero vector is not projective")


# --------------------------------------------------------------------------
# Segre symbols


_UNIT_RE = re.compile(r"\((\d+)\)|(\d)")


@dataclass(frozen=True)
class SegreSymbol:
    """Multiset of bracketed partitions, e.g. [(12)(11)] or [221].

    ``units`` keeps the written order (relevant for parameter assignment);
    equality compares the underlying multiset.  ``eigenvalues``, when present,
    records the projective root (lam:mu) of det(lam*P + mu*Q) attached to each
    unit of a computed symbol.
    """

    units: tuple
    eigenvalues: tuple = None

    @staticmethod
    def parse(text: str) -> "SegreSymbol":
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"malformed Segre symbol {text!r}")
        units = []
        pos = 1
        for m in _UNIT_RE.finditer(text, 1):
            if m.start() != pos:
                raise ValueError(f"malformed Segre symbol {text!r}")
            pos = m.end()
            if m.group(1) is not None:
                units.append(tuple(sorted(int(ch) for ch in m.group(1))))
            else:
                units.append((int(m.group(2)),))
        if pos != len(text) - 1:
            raise ValueError(f"malformed Segre symbol {text!r}")
        sym = SegreSymbol(tuple(units))
        if sym.total() != DIM:
            raise ValueError(f"block sizes of {text!r} sum to {sym.total()}, not {DIM}")
        return sym

    def total(self):
        return sum(sum(u) for u in self.units)

    def canonical_units(self):
        return tuple(sorted((tuple(sorted(u)) for u in self.units),
                            key=lambda u: (-sum(u), len(u), u)))

    def __eq__(self, other):
        if not isinstance(other, SegreSymbol):
            return NotImplemented
        return self.canonical_units() == other.canonical_units()

    def __hash__(self):
        return hash(self.canonical_units())

    def __str__(self):
        parts = []
        for u in self.units:
            body = "".join(str(b) for b in sorted(u))
            parts.append(f"({body})" if len(u) > 1 else body)
        return "[" + "".join(parts) + "]"

    def __repr__(self):
        return f"SegreSymbol({self})"

    def double_conic_units(self):
        return [u for u in self.units if tuple(sorted(u)) in
                ((1, 1), (1, 2), (1, 3), (1, 4))]


TABLE1_SYMBOLS = [SegreSymbol.parse(s) for s in (
    "[11111]", "[1112]", "[111(11)]", "[12(11)]", "[1(11)(11)]", "[113]",
    "[122]", "[11(12)]", "[14]", "[1(13)]", "[(11)3]", "[(12)2]",
    "[(11)(12)]", "[(14)]", "[23]", "[5]")]


# --------------------------------------------------------------------------
# the pencil itself


@dataclass
class RankMember:
    root: tuple          # projective (lam, mu), exact rationals
    rank: int
    multiplicity: int    # multiplicity of the root in det(lam*P + mu*Q)
    kernel: list         # exact kernel basis vectors

    @property
    def is_rank3(self):
        return self.rank == 3


class QuadricPencil:
    """A non-degenerate pencil of quadrics on CP4 over Q."""

    def __init__(self, P, Q):
        self.P = [[parse_rational(c) for c in row] for row in P]
        self.Q = [[parse_rational(c) for c in row] for row in Q]
        for M in (self.P, self.Q):
            if len(M) != DIM or any(len(r) != DIM for r in M):
                raise ValueError("pencil matrices must be 5x5")
            if any(M[i][j] != M[j][i] for i in range(DIM) for j in range(DIM)):
                raise ValueError("pencil matrices must be symmetric")
        self._symbol = None
        self._members = None
        self._reference = None

    def is_single_quadric(self):
        """True when P and Q are linearly dependent (no actual pencil)."""
        rows = [[c for row in M for c in row] for M in (self.P, self.Q)]
        return mat_rank(QQ, rows) < 2

    @property
    def reference(self):
        """An invertible member (a, b), found once and recorded."""
        if self._reference is None:
            if self.is_single_quadric():
                raise DegeneratePencil("P and Q span a single quadric")
            for a, b in _MEMBER_TRIALS:
                M = member_matrix(self.P, self.Q, Fraction(a), Fraction(b))
                if mat_det(QQ, M):
                    self._reference = (Fraction(a), Fraction(b))
                    break
            else:
                raise DegeneratePencil("det(lam*P + mu*Q) vanishes identically")
        return self._reference

    def member(self, lam, mu):
        return member_matrix(self.P, self.Q, Fraction(lam), Fraction(mu))

    def det_polynomial(self):
        """Coefficients (ascending in s) of det(s*P + Q)."""
        Kx = RationalFunctions("s")
        s = Kx.gen
        M = [[s * p + Kx.coerce(q) for p, q in zip(rp, rq)]
             for rp, rq in zip(self.P, self.Q)]
        d = mat_det(Kx, M)
        assert d.den == (Fraction(1),)
        return d.num

    # ------------------------------------------------------------- symbol

    def segre_symbol(self) -> SegreSymbol:
        if self._symbol is not None:
            return self._symbol
        a, b = self.reference
        R = self.member(a, b)
        S = self.member(1, 0) if (a, b) != (1, 0) else self.member(0, 1)
        M = mat_mul(mat_inv(QQ, R), S)
        # char poly of M via det(t*I - M) over Q(t)
        Kt = RationalFunctions("t")
        t = Kt.gen
        TM = [[t * (1 if i == j else 0) - Kt.coerce(M[i][j])
               for j in range(DIM)] for i in range(DIM)]
        chi = mat_det(Kt, TM).num
        roots, leftovers = rational_roots(chi)
        if leftovers:
            raise IrrationalEigenvalue(
                f"pencil eigenvalue outside Q: irreducible factor(s) {leftovers}",
                factor=leftovers)
        units, eigenroots = [], []
        for alpha, mult in sorted(roots):
            A = mat_sub(M, [[alpha if i == j else Fraction(0)
                             for j in range(DIM)] for i in range(DIM)])
            ranks = [DIM]
            power = identity(QQ, DIM)
            while True:
                power = mat_mul(power, A)
                ranks.append(mat_rank(QQ, power))
                if ranks[-1] == ranks[-2]:
                    break
            at_least = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
            sizes = []
            for k in range(len(at_least)):
                exactly = at_least[k] - (at_least[k + 1] if k + 1 < len(at_least) else 0)
                sizes.extend([k + 1] * exactly)
            assert sum(sizes) == mult, "Jordan structure does not match multiplicity"
            units.append(tuple(sorted(sizes)))
            # the singular member S - alpha*R, expressed as lam*P + mu*Q
            if (a, b) != (Fraction(1), Fraction(0)):
                root = (Fraction(1) - alpha * a, -alpha * b)
            else:
                root = (-alpha, Fraction(1))
            eigenroots.append(proj_normalize(root))
        sym = SegreSymbol(tuple(units), tuple(eigenroots))
        if sym.total() != DIM:
            raise DegeneratePencil("Jordan blocks do not fill dimension 5")
        self._symbol = sym
        return sym

    # ------------------------------------------------------------- members

    def rank_drop_members(self):
        """One entry per root of det(lam*P + mu*Q), with exact kernel."""
        if self._members is not None:
            return self._members
        det = self.det_polynomial()
        if not det:
            raise DegeneratePencil("det(lam*P + mu*Q) vanishes identically")
        roots, leftovers = rational_roots(det)
        if leftovers:
            raise IrrationalEigenvalue(
                f"pencil eigenvalue outside Q: irreducible factor(s) {leftovers}",
                factor=leftovers)
        members = []
        entries = [(Fraction(r), 1, m) for r, m in roots]
        inf_mult = DIM - (len(det) - 1)
        if inf_mult > 0:
            entries.append((Fraction(1), 0, inf_mult))
        for lam, mu, mult in entries:
            M = self.member(lam, mu)
            members.append(RankMember(
                root=proj_normalize((Fraction(lam), Fraction(mu))),
                rank=mat_rank(QQ, M),
                multiplicity=mult,
                kernel=nullspace(QQ, M)))
        members.sort(key=lambda m: m.root)
        self._members = members
        return members

    def double_conic_pencil_count(self):
        """Number of pencils of double conics, with a rank cross-check."""
        sym = self.segre_symbol()
        by_symbol = len(sym.double_conic_units())
        by_rank = sum(1 for m in self.rank_drop_members() if m.is_rank3)
        if by_symbol != by_rank:
            raise CrossCheckMismatch(
                f"symbol predicts {by_symbol} double-conic pencils, "
                f"rank data gives {by_rank}")
        return by_symbol

    def congruent(self, A):
        """The pencil (A^T P A, A^T Q A)."""
        At = transpose(A)
        return QuadricPencil(mat_mul(mat_mul(At, self.P), A),
                             mat_mul(mat_mul(At, self.Q), A))

    def basis_changed(self, a, b, c, d):
        """The pencil (a*P + b*Q, c*P + d*Q); requires ad - bc nonzero."""
        if a * d - b * c == 0:
            raise ValueError("basis change must be invertible")
        return QuadricPencil(self.member(a, b), self.member(c, d))


# --------------------------------------------------------------------------
# normal forms


def _block_pair(size, alpha):
    """P- and Q-blocks for a single Jordan block of the pencil.

    Q is the anti-identity; P puts the eigenvalue on the anti-diagonal and
    ones on the adjacent (lower) anti-diagonal, matching the classical
    symmetric normal form of a pair.
    """
    P = [[Fraction(0)] * size for _ in range(size)]
    Q = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        Q[i][size - 1 - i] = Fraction(1)
        P[i][size - 1 - i] = Fraction(alpha)
    for i in range(size):
        j = size - i
        if 0 <= j < size:
            P[i][j] = P[i][j] + 1
    return P, Q


def _hyperbolic_pair(alpha):
    P = [[Fraction(0), Fraction(alpha)], [Fraction(alpha), Fraction(0)]]
    Q = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    return P, Q


def normal_form(symbol, params) -> QuadricPencil:
    """Instantiate a Segre symbol as an explicit rational pencil.

    ``params`` assigns one rational per unit, in the symbol's written order
    (a list, or a mapping whose insertion order is used).  Distinct units
    must receive distinct values.
    """
    if isinstance(symbol, str):
        symbol = SegreSymbol.parse(symbol)
    if isinstance(params, dict):
        values = [parse_rational(v) for v in params.values()]
    else:
        values = [parse_rational(v) for v in params]
    if len(values) != len(symbol.units):
        raise ValueError(f"{symbol} needs {len(symbol.units)} parameters, "
                         f"got {len(values)}")
    if len(set(values)) != len(values):
        raise DuplicateEigenvalue(f"parameters {values} are not distinct")
    P = [[Fraction(0)] * DIM for _ in range(DIM)]
    Q = [[Fraction(0)] * DIM for _ in range(DIM)]
    offset = 0
    for unit, alpha in zip(symbol.units, values):
        blocks = sorted(unit)
        if blocks == [1, 1]:
            pieces = [_hyperbolic_pair(alpha)]
        else:
            pieces = [_block_pair(b, alpha) for b in blocks]
        for bp, bq in pieces:
            k = len(bp)
            for i in range(k):
                for j in range(k):
                    P[offset + i][offset + j] = bp[i][j]
                    Q[offset + i][offset + j] = bq[i][j]
            offset += k
    assert offset == DIM
    pencil = QuadricPencil(P, Q)
    computed = pencil.segre_symbol()
    if computed != symbol:
        raise CrossCheckMismatch(
            f"normal form round-trip failed: wanted {symbol}, got {computed}")
    return pencil


DEFAULT_EIGENVALUES = [Fraction(1), Fraction(2), Fraction(5), Fraction(7),
                       Fraction(11)]


def default_instance(symbol) -> QuadricPencil:
    """The symbol instantiated at the default eigenvalues 1, 2, 5, 7, 11."""
    if isinstance(symbol, str):
        symbol = SegreSymbol.parse(symbol)
    return normal_form(symbol, DEFAULT_EIGENVALUES[:len(symbol.units)])


# --------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    checks: dict = dc_field(default_factory=dict)
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, name, ok, detail=""):
        self.checks[name] = {"ok": bool(ok), "detail": detail}
        if not ok:
            self.failures.append(name)


def validate_segre(pencil: QuadricPencil) -> ValidationReport:
    """Desk-scale sanity checks that the pencil cuts out a Segre surface."""
    report = ValidationReport()
    try:
        pencil.reference
        report.record("nondegenerate_pencil", True)
    except DegeneratePencil as exc:
        report.record("nondegenerate_pencil", False, str(exc))
        return report
    try:
        sym = pencil.segre_symbol()
        report.record("segre_symbol", True, str(sym))
    except IrrationalEigenvalue as exc:
        report.record("segre_symbol", False, str(exc))
        return report
    members = pencil.rank_drop_members()
    min_rank = min(m.rank for m in members) if members else DIM
    report.record("no_low_rank_member", min_rank >= 3,
                  f"minimal member rank {min_rank}")
    report.record("finite_singular_candidates",
                  all(m.rank >= 3 for m in members),
                  "kernels of degenerate members have dimension <= 2")
    return report
