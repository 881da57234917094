"""Shared hypothesis strategies and random generators for the property tests."""

import itertools
import random

from hypothesis import strategies as st

from plueckerlab import GF, QQ, Ideal, PolyRing
from plueckerlab.polynomial import Polynomial

VARS = ("x", "y", "z", "w")


def ring(nvars, dom=QQ):
    return PolyRing(VARS[:nvars], dom)


def exps(nvars, maxdeg):
    return [e for e in itertools.product(range(maxdeg + 1), repeat=nvars) if sum(e) <= maxdeg]


@st.composite
def polynomials(draw, R, maxdeg=3, max_terms=4, homogeneous_degree=None):
    pool = exps(R.nvars, maxdeg)
    if homogeneous_degree is not None:
        pool = [e for e in pool if sum(e) == homogeneous_degree]
    terms = draw(st.dictionaries(st.sampled_from(pool), st.integers(-5, 5), max_size=max_terms))
    return Polynomial(R, {e: R.domain(c) for e, c in terms.items() if R.domain(c)})


def random_poly(rng, R, maxdeg=3, max_terms=4):
    pool = exps(R.nvars, maxdeg)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(pool)] = rng.randint(-5, 5)
    return Polynomial(R, {e: R.domain(c) for e, c in terms.items() if R.domain(c)})


def random_homogeneous(rng, R, degree, max_terms=3):
    pool = [e for e in exps(R.nvars, degree) if sum(e) == degree]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(pool)] = rng.randint(-3, 3)
    return Polynomial(R, {e: R.domain(c) for e, c in terms.items() if R.domain(c)})


def random_monomial_ideal(rng, nvars, maxdeg=6, max_gens=5):
    R = ring(nvars)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, maxdeg)
        e = [0] * nvars
        for _ in range(d):
            e[rng.randrange(nvars)] += 1
        gens.append(R.monomial(tuple(e)))
    return Ideal(gens, R)


def brute_hilbert(I, degree):
    """Number of monomials of the given degree outside the monomial ideal I."""
    lead = [next(iter(g.terms)) for g in I.gens]
    count = 0
    for e in exps(I.ring.nvars, degree):
        if sum(e) == degree and not any(all(a <= b for a, b in zip(l, e)) for l in lead):
            count += 1
    return count
