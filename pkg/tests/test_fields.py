import random
from fractions import Fraction as F

import pytest

from segrecusp.errors import FieldError, TowerUnsupported
from segrecusp.fields import (QQ, QuadraticExtension, RatFuncElem,
                              RationalFunctions, field_with_sqrt,
                              fraction_sqrt, parse_rational, pgcd, pmul,
                              quadext_sqrt, squarefree_split)


def test_parse_and_format_rationals():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational(-2) == F(-2)
    assert QQ.fmt(F(5, 3)) == "5/3"
    assert QQ.fmt(F(7)) == "7"
    with pytest.raises(FieldError):
        parse_rational(0.5)


def test_fraction_sqrt_and_squarefree():
    assert fraction_sqrt(F(49, 9)) == F(7, 3)
    assert fraction_sqrt(F(2)) is None
    d, r = squarefree_split(F(18))
    assert d == 2 and r * r * d == 18
    d, r = squarefree_split(F(-4, 9))
    assert d == -1 and r * r * d == F(-4, 9)


def test_field_with_sqrt_routes():
    fld, root = field_with_sqrt(F(25, 4))
    assert fld == QQ and root == F(5, 2)
    fld, root = field_with_sqrt(F(-3))
    assert isinstance(fld, QuadraticExtension) and fld.d == -3
    assert root * root == -3


def test_quadratic_extension_arithmetic():
    E = QuadraticExtension(5)
    r = E.sqrt_gen
    x = 2 + 3 * r
    assert x * x == 49 + 12 * r
    assert (x / x) == 1
    assert (1 / x) * x == E.one
    with pytest.raises(TowerUnsupported):
        _ = x + QuadraticExtension(7).sqrt_gen
    with pytest.raises(FieldError):
        QuadraticExtension(9)


def test_quadext_sqrt():
    E = QuadraticExtension(2)
    r = E.sqrt_gen
    v = (3 + r) * (3 + r)
    assert quadext_sqrt(v) in ((3 + r), -(3 + r))
    assert quadext_sqrt(E.coerce(2)) == r or quadext_sqrt(E.coerce(2)) == -r
    assert quadext_sqrt(1 + r) is None


def test_rational_functions_reduce_and_derive():
    K = RationalFunctions("x")
    x = K.gen
    e = (x * x * x - x) / (x * x - 1)
    assert e == x
    q = 1 / (x - 1)
    dq = K.derivative(q)
    assert dq == -1 / ((x - 1) * (x - 1))
    assert K.coerce("2/3") == RatFuncElem.make([F(2, 3)])
    with pytest.raises(TowerUnsupported):
        K.coerce(QuadraticExtension(2).sqrt_gen)


def test_polynomial_gcd_random_products(rng=random.Random(7)):
    for _ in range(25):
        a = tuple(F(rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))) + (F(1),)
        b = tuple(F(rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))) + (F(1),)
        c = tuple(F(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))) + (F(1),)
        g = pgcd(pmul(a, c), pmul(b, c))
        # gcd is divisible by c (monic): check degree and exact division
        from segrecusp.fields import pdivmod
        q, r = pdivmod(g, c)
        assert not r
