import pytest

from plueckerlab import GF, LEX, GREVLEX, QQ, PolyRing, buchberger, normal_form
from plueckerlab.grassmann import GrassmannContext, affine_chart_ideal, pluecker_ideal
from plueckerlab.groebner import ideal_member, is_groebner, is_reduced, s_polynomial


@pytest.fixture
def R():
    return PolyRing(("x", "y"), QQ)


def test_normal_form_lex(R, oracle):
    f = normal_form(R("x^2*y"), [R("x^2 - y")], LEX)
    assert str(f).replace("^", "**") == oracle["small"]["nf_lex_x2y"]


def test_normal_form_trivial(R):
    g = R("x^3 - x*y + 2")
    assert normal_form(g, [g]) == R.zero
    assert normal_form(g, []) == g


def test_buchberger_lex(R, oracle):
    G = buchberger([R("x^2 - y"), R("y")], LEX)
    assert sorted(str(g).replace("^", "**") for g in G.elements) == oracle["small"]["gb_lex_x2-y_y"]


def test_unit_and_single():
    R = PolyRing(("x", "y"), QQ)
    assert [str(g) for g in buchberger([R("3")]).elements] == ["1"]
    assert list(buchberger([], ring=R).elements) == []
    ctx = GrassmannContext(2, 4)
    q = pluecker_ideal(ctx).gens[0]
    assert list(buchberger([q], GREVLEX).elements) == [q]


def test_membership():
    ctx = GrassmannContext(2, 4)
    a = affine_chart_ideal(ctx)
    m = list(a.ring.gens())
    assert all(ideal_member(g, m) for g in a.gens)
    R = PolyRing(("x",), QQ)
    assert ideal_member(R.one, [R("x"), R("x + 1")])
    assert not ideal_member(R("x"), [R("x^2")])


def test_post_hoc_properties():
    R = PolyRing(("x", "y", "z"), GF(7))
    gens = [R("x^2*y - z^3"), R("x*y^2 - z"), R("x^3 - y*z")]
    for order in (GREVLEX, LEX):
        G = buchberger(gens, order)
        assert is_groebner(G.elements, order)
        assert is_reduced(G)
        for i, f in enumerate(G.elements):
            for g in G.elements[i + 1:]:
                assert normal_form(s_polynomial(f, g, order), G.elements, order) == R.zero
        assert all(G.contains(g) for g in gens)
