import pytest

from plueckerlab import QQ, ChainMap, FreeComplex, Ideal, PolyRing, check_chain_map, homology_dimension
from plueckerlab import is_complex, is_regular_sequence, koszul_complex
from plueckerlab.complexes import ComplexError, complex_from_json, compose, identity_map
from plueckerlab.grassmann import GrassmannContext, pluecker_ideal, v_forms
from plueckerlab.p2 import bottom_row, expected_top_differentials, projection_map, top_row


@pytest.fixture
def S():
    return PolyRing(("x1", "x2", "x3"), QQ)


def rows(M):
    return [[str(e) for e in r] for r in M]


def test_koszul_two(S):
    x1, x2, _ = S.gens()
    K = koszul_complex([x1, x2])
    assert rows(K.differential(1)) == [["x2", "x1"]]
    assert rows(K.differential(2)) == [["x1"], ["-x2"]]


def test_koszul_three_matches_reference(S):
    K = koszul_complex(S.gens())
    want = expected_top_differentials(S)
    assert [[list(r) for r in d] for d in K.differentials] == want
    assert rows(K.differential(2)) == [["x2", "x1", "0"], ["-x3", "0", "x1"], ["0", "-x3", "-x2"]]


def test_koszul_single(S):
    f = S("x1^2 + x2*x3")
    K = koszul_complex([f])
    assert K.length == 1 and K.twists == ((0,), (2,)) and K.differential(1) == ((f,),)


def test_koszul_rejects_inhomogeneous(S):
    with pytest.raises(ComplexError):
        koszul_complex([S("x1 + 1")])


def test_is_complex(S):
    x = S("x1")
    bad = FreeComplex(S, ((0,), (1,), (2,)), ([[x]], [[x]]))
    assert not is_complex(bad)
    assert is_complex(koszul_complex(S.gens()))
    assert is_complex(FreeComplex(S, ((0,),), ()))


def test_homology(S):
    K = koszul_complex(S.gens())
    assert homology_dimension(K, 0, 0) == 1
    assert all(homology_dimension(K, 1, d) == 0 for d in range(1, 7))
    R = PolyRing(("x",), QQ)
    Kxx = koszul_complex([R("x"), R("x")])
    assert homology_dimension(Kxx, 1, 1) == 1
    with pytest.raises(ComplexError):
        homology_dimension(K, 7, 0)


def test_p2_diagram():
    top, bottom = top_row(), bottom_row()
    assert is_complex(top) and is_complex(bottom)
    assert check_chain_map(projection_map(top, bottom))
    assert not check_chain_map(projection_map(top, bottom, flip_sign=True))
    assert check_chain_map(identity_map(top))


def test_composition_stays_chain_map():
    top, bottom = top_row(), bottom_row()
    f = projection_map(top, bottom)
    assert check_chain_map(compose(identity_map(bottom), compose(f, identity_map(top))))


def test_chain_map_shape_error():
    top, bottom = top_row(), bottom_row()
    with pytest.raises(ComplexError):
        check_chain_map(ChainMap(top, bottom, {2: [[top.ring.one]]}))


def test_regular_sequences(S):
    R = PolyRing(("x", "y", "z"), QQ)
    assert is_regular_sequence([R("x"), R("y")], Ideal([], R))
    R2 = PolyRing(("x", "y"), QQ)
    assert not is_regular_sequence([R2("x"), R2("x")], Ideal([], R2))
    ctx = GrassmannContext(2, 4)
    assert is_regular_sequence(v_forms(ctx), pluecker_ideal(ctx))


def test_json_roundtrip():
    C = bottom_row()
    D = complex_from_json(C.to_json())
    assert D.twists == C.twists
    assert [rows(d) for d in D.differentials] == [rows(d) for d in C.differentials]
    assert is_complex(D)
