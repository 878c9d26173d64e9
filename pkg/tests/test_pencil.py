import random
from fractions import Fraction as F

import pytest

from segrecusp.errors import (DegeneratePencil, DuplicateEigenvalue,
                              IrrationalEigenvalue)
from segrecusp.fields import QQ
from segrecusp.pencil import (TABLE1_SYMBOLS, QuadricPencil, SegreSymbol,
                              default_instance, normal_form, validate_segre)


def diag_pencil(values):
    P = [[F(v) if i == j else F(0) for j in range(5)]
         for i, v in enumerate(values)]
    Q = [[F(int(i == j)) for j in range(5)] for i in range(5)]
    return QuadricPencil(P, Q)


def test_symbol_parsing_and_equality():
    s = SegreSymbol.parse("[(12)(11)]")
    assert s.units == ((1, 2), (1, 1))
    assert s == SegreSymbol.parse("[(11)(21)]")
    assert str(SegreSymbol.parse("[221]")) == "[221]"
    with pytest.raises(ValueError):
        SegreSymbol.parse("[123]")  # sums to 6
    with pytest.raises(ValueError):
        SegreSymbol.parse("(11)3")


def test_segre_symbol_distinct_diagonal():
    assert str(diag_pencil([1, 2, 3, 4, 5]).segre_symbol()) == "[11111]"


def test_segre_symbol_hyperbolic_221_instance():
    a, b, c = 1, 2, 3
    P = [[0, a, 0, 0, 0], [a, 1, 0, 0, 0], [0, 0, 0, b, 0],
         [0, 0, b, 1, 0], [0, 0, 0, 0, c]]
    Q = [[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 1, 0],
         [0, 0, 1, 0, 0], [0, 0, 0, 0, 1]]
    pen = QuadricPencil(P, Q)
    assert str(pen.segre_symbol()) == "[221]"


def test_irrational_eigenvalue_detected():
    P = [[1, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 3, 0, 0],
         [0, 0, 0, 4, 0], [0, 0, 0, 0, 5]]
    Q = [[F(int(i == j)) for j in range(5)] for i in range(5)]
    with pytest.raises(IrrationalEigenvalue) as info:
        QuadricPencil(P, Q).segre_symbol()
    assert info.value.factor  # the irreducible factor is reported


def test_single_quadric_rejected():
    P = [[F(int(i == j)) for j in range(5)] for i in range(5)]
    with pytest.raises(DegeneratePencil):
        QuadricPencil(P, P).segre_symbol()


@pytest.mark.parametrize("symbol", [str(s) for s in TABLE1_SYMBOLS])
def test_normal_form_round_trip(symbol):
    pen = default_instance(symbol)
    assert pen.segre_symbol() == SegreSymbol.parse(symbol)


def test_normal_form_221_explicit_entries():
    pen = normal_form("[221]", [1, 2, 3])
    # 2*1*X0X1 + X1^2 + 2*2*X2X3 + X3^2 + 3*X4^2
    assert pen.P[0][1] == 1 and pen.P[1][1] == 1
    assert pen.P[2][3] == 2 and pen.P[3][3] == 1 and pen.P[4][4] == 3
    assert pen.Q[0][1] == 1 and pen.Q[2][3] == 1 and pen.Q[4][4] == 1


def test_normal_form_12_block_convention():
    pen = normal_form("[(12)2]", [F(4), F(9)])
    # unit (12) at 4: diag block [4] then [[0,4],[4,1]]
    assert pen.P[0][0] == 4
    assert pen.P[1][2] == 4 and pen.P[2][2] == 1
    assert pen.Q[0][0] == 1 and pen.Q[1][2] == 1 and pen.Q[2][2] == 0


def test_duplicate_eigenvalues_rejected():
    with pytest.raises(DuplicateEigenvalue):
        normal_form("[221]", [1, 1, 3])


def test_rank_drop_members_diagonal():
    pen = diag_pencil([1, 2, 3, 4, 5])
    members = pen.rank_drop_members()
    assert len(members) == 5
    assert all(m.rank == 4 and m.multiplicity == 1 for m in members)


@pytest.mark.parametrize("symbol,count", [
    ("[11111]", 0), ("[1(13)]", 1), ("[(12)(11)]", 2), ("[12(11)]", 1),
    ("[1(11)(11)]", 2), ("[23]", 0),
])
def test_double_conic_pencil_count(symbol, count):
    assert default_instance(symbol).double_conic_pencil_count() == count


def test_rank3_members_match_unit_count():
    for symbol in TABLE1_SYMBOLS:
        pen = default_instance(symbol)
        n3 = sum(1 for m in pen.rank_drop_members() if m.is_rank3)
        assert n3 == len(pen.segre_symbol().double_conic_units())


def _random_invertible(rng):
    from segrecusp.linalg import mat_det
    while True:
        A = [[F(rng.randint(-3, 3)) for _ in range(5)] for _ in range(5)]
        if mat_det(QQ, A):
            return A


def test_congruence_invariance(rng):
    pen = default_instance("[122]")
    sym = pen.segre_symbol()
    for _ in range(10):
        assert pen.congruent(_random_invertible(rng)).segre_symbol() == sym


def test_basis_change_preserves_block_structure(rng):
    pen = default_instance("[(12)2]")
    blocks = sorted(pen.segre_symbol().canonical_units())
    for coeffs in ((1, 1, 0, 1), (2, 3, 1, 2), (0, 1, -1, 0), (1, -2, 3, 1)):
        a, b, c, d = coeffs
        if a * d - b * c == 0:
            continue
        changed = pen.basis_changed(a, b, c, d).segre_symbol()
        assert sorted(changed.canonical_units()) == blocks


def test_validate_segre():
    rep = validate_segre(diag_pencil([1, 2, 3, 4, 5]))
    assert rep.ok
    P = [[F(int(i == j)) for j in range(5)] for i in range(5)]
    rep = validate_segre(QuadricPencil(P, P))
    assert not rep.ok and "nondegenerate_pencil" in rep.failures
