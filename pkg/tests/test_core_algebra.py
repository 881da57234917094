from fractions import Fraction
import random

import pytest

from plueckerlab import GF, QQ, ParseError, PolyRing, RingMismatch, DomainError
from plueckerlab.domains import parse_domain
from plueckerlab.grassmann import GrassmannContext, minor_vector, pluecker_ideal
from plueckerlab.linalg import matrix_rank
from plueckerlab.polynomial import GREVLEX, LEX, block, evaluate_matrix, jacobian, partial_derivative


@pytest.fixture
def R():
    return PolyRing(("x", "y", "z"), QQ)


def test_parse_pluecker_quadric():
    S = PolyRing(("p12", "p13", "p14", "p23", "p24", "p34"), QQ)
    f = S("p12*p34 - p13*p24 + p14*p23")
    assert len(f.terms) == 3
    assert str(f) == "p14*p23 - p13*p24 + p12*p34"


def test_parse_zero(R):
    f = R("0")
    assert not f and f.terms == {}


def test_roundtrip(R):
    f = R("x^2 + 2*x + 1")
    assert R(str(f)).terms == f.terms


def test_parse_rational_and_parens(R):
    f = R("1/2*(x + y)^2 - 3/4")
    assert f.terms[(0, 0, 0)] == Fraction(-3, 4)
    assert f.terms[(1, 1, 0)] == 1


@pytest.mark.parametrize("text", ["x y", "x +", "2x", "(x + y", "x ^ y", "w + 1"])
def test_parse_errors(R, text):
    with pytest.raises(ParseError):
        R(text)


def test_parse_error_reports_position(R):
    with pytest.raises(ParseError) as exc:
        R("x + * y")
    assert "position" in str(exc.value)


def test_coefficient_not_in_domain():
    S = PolyRing(("x",), GF(3))
    with pytest.raises((ParseError, DomainError)):
        S("1/3*x")


def test_products(R):
    x, y, _ = R.gens()
    assert (x + y) * (x - y) == x**2 - y**2
    assert (x + y) * R.zero == R.zero
    F2 = PolyRing(("x",), GF(2))
    assert (F2("x + 1")) ** 2 == F2("x^2 + 1")


def test_ring_mismatch(R):
    S = PolyRing(("x", "y"), QQ)
    with pytest.raises(RingMismatch):
        R("x") * S("x")


def test_substitute():
    S = PolyRing(("p14", "p23"), QQ)
    l5 = S("p14 + p23")
    assert l5.evaluate({"p14": 1, "p23": 0}) == 1
    assert l5.subs({"p14": S("p14")}) == l5


def test_quadric_vanishes_on_minors():
    ctx = GrassmannContext(2, 4, GF(7))
    quad = pluecker_ideal(ctx).gens[0]
    rng = random.Random(3)
    for _ in range(20):
        M = [[rng.randrange(7) for _ in range(2)] for _ in range(4)]
        assert quad.evaluate(minor_vector(ctx, M)) == 0


def test_partial_derivatives():
    R = PolyRing(("x", "y"), QQ)
    assert partial_derivative(R("x^2*y"), "x") == R("2*x*y")
    assert partial_derivative(R("5"), "x") == R.zero
    F3 = PolyRing(("x",), GF(3))
    assert partial_derivative(F3("x^3"), "x") == F3.zero


def test_jacobian_examples():
    Q = PolyRing(("q12", "q13", "q23", "q24", "q34"), QQ)
    g = Q("q23 - q12*q34 + q13*q24")
    row = evaluate_matrix(jacobian([g], Q.variables), {v: 0 for v in Q.variables})
    assert row == [[0, 0, 1, 0, 0]]
    assert jacobian([], Q.variables) == []
    P = PolyRing(("p12", "p13", "p14", "p23", "p24", "p34"), QQ)
    J = evaluate_matrix(jacobian([P("p12"), P("p13")], P.variables), {})
    assert J == [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
    with pytest.raises(ValueError):
        P("p12 + p13").evaluate({"p12": 1})


def test_matrix_rank():
    assert matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]], QQ) == 3
    assert matrix_rank([[0, 0], [0, 0]], QQ) == 0
    assert matrix_rank([[1, 1], [1, 1]], GF(2)) == 1
    R = PolyRing(("x",), QQ)
    with pytest.raises(ValueError):
        matrix_rank([[R("x")]])


def test_domains():
    assert parse_domain("F7") == GF(7) and parse_domain("Q") == QQ
    with pytest.raises(DomainError):
        GF(6)
    assert GF(5).inv(2) == 3


def _monomials(n, d):
    if n == 0:
        yield ()
        return
    for a in range(d + 1):
        for rest in _monomials(n - 1, d - a):
            yield (a,) + rest


@pytest.mark.parametrize("order", [GREVLEX, LEX, block(1)])
def test_orders_exhaustive(order):
    key = order.key_function(None)
    monos = list(_monomials(3, 4))
    keys = [key(m) for m in monos]
    assert len(set(keys)) == len(keys)                      # total
    zero = (0, 0, 0)
    assert all(key(zero) <= k for k in keys)                # 1 is minimal
    for a in monos:
        for b in monos:
            if key(a) < key(b):
                for c in [(1, 0, 0), (0, 1, 0), (0, 0, 2)]:
                    ac = tuple(x + y for x, y in zip(a, c))
                    bc = tuple(x + y for x, y in zip(b, c))
                    assert key(ac) < key(bc)
