import pytest

from plueckerlab import GF, QQ, Ideal, PolyRing, eliminate, hilbert_data, ideal_quotient, saturate
from plueckerlab.grassmann import GrassmannContext, pluecker_ideal, v_ideal
from plueckerlab.ideals import in_radical, intersect, linear_section, unit_ideal


@pytest.fixture
def R():
    return PolyRing(("x", "y", "z"), QQ)


def I(R, *texts):
    return Ideal([R(t) for t in texts], R)


def test_quotient_examples(R, oracle):
    assert ideal_quotient(I(R, "x^2"), R("x")) == I(R, "x")
    Q = ideal_quotient(I(R, "x^2*y", "x*z"), R("x"))
    assert Q == I(R, "x*y", "z")
    assert oracle["small"]["quotient_candidate_times_x_in_I"]
    J = I(R, "x^2*y", "x*z")
    assert ideal_quotient(J, R.one) == J
    with pytest.raises(ValueError):
        ideal_quotient(J, R.zero)


def test_saturate_examples(R):
    J = I(R, "x^2*y", "x*z")
    assert saturate(J, I(R, "x")) == I(R, "y", "z")
    assert saturate(J, unit_ideal(R)) == J


def test_two_point_saturation():
    ctx = GrassmannContext(2, 4)
    p = ctx.p
    S = saturate(pluecker_ideal(ctx) + v_ideal(ctx))
    assert S == Ideal([p(1, 2), p(1, 3), p(2, 4), p(3, 4), p(1, 4) * p(2, 3)], ctx.ring)


def test_eliminate_examples(R, oracle):
    assert eliminate(I(R, "x - y^2"), {"x"}).gens == ()
    E = eliminate(I(R, "x*y", "x - z"), {"x"})
    assert sorted(str(g) for g in E.gens) == oracle["small"]["eliminate_x"]
    J = I(R, "x^2 - y", "y")
    assert set(eliminate(J, set()).gens) == set(J.reduced_gens())


def test_hilbert_examples(R, oracle):
    hd = hilbert_data(I(R, "x^2", "x*y", "y^2"))
    assert (hd.proj_dim, hd.degree) == (0, 3)
    counts = oracle["hilbert_x2_xy_y2_counts"]
    assert [hd.hilbert_function(d) for d in range(len(counts))] == counts
    S = PolyRing(tuple(f"x{i}" for i in range(5)), QQ)
    hz = hilbert_data(Ideal([], S))
    assert (hz.proj_dim, hz.degree) == (4, 1)
    ctx = GrassmannContext(2, 4)
    p = ctx.p
    h2 = hilbert_data(Ideal([p(1, 2), p(1, 3), p(2, 4), p(3, 4), p(1, 4) * p(2, 3)], ctx.ring))
    assert (h2.proj_dim, h2.degree) == (0, 2)


def test_hilbert_rejects_inhomogeneous(R):
    with pytest.raises(ValueError):
        hilbert_data(I(R, "x^2 - y"))


def test_empty_scheme(R):
    hd = hilbert_data(I(R, "x", "y", "z"))
    assert hd.proj_dim == -1 and hd.degree == 0


def test_intersect_and_radical(R):
    A, B = I(R, "x"), I(R, "y")
    assert intersect(A, B) == I(R, "x*y")
    assert in_radical(R("x"), I(R, "x^3"))
    assert not in_radical(R("y"), I(R, "x^3"))


def test_linear_section_g24():
    ctx = GrassmannContext(2, 4, GF(5))
    J, solved = linear_section(pluecker_ideal(ctx), list(v_ideal(ctx).gens))
    assert set(solved) == {"p12", "p13", "p24", "p34"}
    assert J.ring.variables == ("p14", "p23")
    assert (hilbert_data(J).proj_dim, hilbert_data(J).degree) == (0, 2)


def test_linear_section_inconsistent(R):
    J, solved = linear_section(I(R, "x*y"), [R("x"), R("x - 1")])
    assert J.is_unit() and solved == {}
