import itertools
import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from plueckerlab import GF, LEX, GREVLEX, QQ, Ideal, buchberger, hilbert_data, ideal_quotient, saturate
from plueckerlab.complexes import homology_dimension, is_regular_sequence, koszul_complex
from plueckerlab.linalg import matrix_rank
from plueckerlab.polynomial import partial_derivative
from plueckerlab.zerodim import affine_points, zero_dim_radical

from strategies import brute_hilbert, exps, polynomials, random_homogeneous, random_monomial_ideal, ring

R3 = ring(3)
F7 = ring(3, GF(7))
FAST = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@FAST
@given(polynomials(R3))
def test_print_parse_roundtrip(f):
    assert R3(str(f)) == f


@FAST
@given(polynomials(F7), polynomials(F7), polynomials(F7))
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@FAST
@given(polynomials(R3), polynomials(R3))
def test_leibniz(a, b):
    for v in R3.variables:
        assert partial_derivative(a * b, v) == a * partial_derivative(b, v) + b * partial_derivative(a, v)


@FAST
@given(st.lists(polynomials(F7), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_gb_independent_of_order_and_duplicates(gens, rnd):
    for order in (GREVLEX, LEX):
        G = buchberger(gens, order, ring=F7).elements
        shuffled = list(gens) + [gens[0]]
        rnd.shuffle(shuffled)
        assert buchberger(shuffled, order, ring=F7).elements == G


def _graded_member(f, gens, d):
    """f (homogeneous of degree d) in the ideal, by linear algebra on the degree-d piece."""
    R = f.ring
    span = []
    for g in gens:
        if g.degree() > d:
            continue
        for e in exps(R.nvars, d - g.degree()):
            if sum(e) == d - g.degree():
                span.append(g * R.monomial(e))
    monos = sorted({e for h in span + [f] for e in h.terms})
    M = [[h.terms.get(e, 0) for e in monos] for h in span]
    base = matrix_rank(M, R.domain) if M else 0
    return matrix_rank(M + [[f.terms.get(e, 0) for e in monos]], R.domain) == base


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_membership_matches_graded_linear_algebra(rnd):
    R = ring(rnd.randint(2, 4), GF(5))
    gens = [random_homogeneous(rnd, R, rnd.randint(1, 3)) for _ in range(rnd.randint(1, 3))]
    gens = [g for g in gens if g]
    if not gens:
        return
    I = Ideal(gens, R)
    d = rnd.randint(1, 5)
    f = random_homogeneous(rnd, R, d, max_terms=4)
    if rnd.random() < 0.5 and d >= gens[0].degree():
        k = d - gens[0].degree()
        mono = next(e for e in exps(R.nvars, k) if sum(e) == k)
        f = gens[0] * R.monomial(mono) + (f if d == gens[0].degree() else R.zero)
    assert I.contains(f) == _graded_member(f, gens, d)


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_saturation_properties(rnd):
    R = ring(3, GF(7))
    I = Ideal([random_homogeneous(rnd, R, rnd.randint(1, 3)) for _ in range(2)], R)
    J = Ideal([R.var(rnd.choice(R.variables))], R)
    S = saturate(I, J)
    assert S.contains(I)
    assert saturate(S, J) == S
    assert ideal_quotient(S, J.gens[0]) == S
    assert ideal_quotient(I, J.gens[0]).contains(I)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_hilbert_vs_monomial_count(rnd):
    I = random_monomial_ideal(rnd, rnd.randint(1, 4))
    hd = hilbert_data(I)
    for d in range(0, 9):
        assert hd.hilbert_function(d) == brute_hilbert(I, d)


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_koszul_exactness_iff_regular(rnd):
    R = ring(rnd.randint(1, 3), QQ)
    gens = [random_homogeneous(rnd, R, rnd.randint(1, 2)) for _ in range(rnd.randint(1, 3))]
    gens = [g for g in gens if g]
    if not gens:
        return
    K = koszul_complex(gens)
    lo = 0
    hi = sum(g.degree() for g in gens) + 2 * R.nvars
    exact = all(homology_dimension(K, i, d) == 0 for i in range(1, K.length + 1) for d in range(lo, hi + 1))
    assert exact == is_regular_sequence(gens, Ideal([], R))


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_radical_keeps_points(rnd):
    p = 5
    R = ring(2, GF(p))
    x, y = R.gens()
    # zero-dimensional by construction: univariate polynomials in each variable
    gens = [(x - rnd.randrange(p)) ** rnd.randint(1, 3) * (x - rnd.randrange(p)),
            (y - rnd.randrange(p)) ** rnd.randint(1, 2) * (y - x)]
    I = Ideal(gens, R)
    rad = zero_dim_radical(I)
    assert rad.contains(I)
    for g in rad.gens:
        assert I.contains(g ** (2 * p))  # radical elements are nilpotent mod I
    scan = lambda J: {(a, b) for a in range(p) for b in range(p)
                      if all(g.evaluate([a, b]) == 0 for g in J.gens)}
    assert scan(rad) == scan(I)
    assert {tuple(pt.coordinates) for pt, _ in affine_points(I)} == scan(I)
