"""Zero-dimensional ideals: quotient algebras, radicals, points, multiplicities.

Everything here works in the finite-dimensional algebra ``A = k[x]/I``
through its standard-monomial basis and the multiplication matrices of the
variables.  Points are joint eigenvalues of those matrices; the multiplicity
of a point is the dimension of its joint generalized eigenspace, which is
the local algebra ``A_m`` (all other primary components split off).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import univariate as uni
from .domains import CoefficientDomain
from .ideals import Ideal, hilbert_data
from .linalg import matpow, matvec, nullspace, rref, solve_in_span
from .polynomial import GREVLEX, Polynomial, PolyRing


class NotZeroDimensional(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    """A point with coordinates in the coefficient domain."""

    variables: tuple
    coordinates: tuple

    def as_dict(self) -> dict:
        return dict(zip(self.variables, self.coordinates))

    def __str__(self):
        return "(" + ", ".join(f"{v}={c}" for v, c in zip(self.variables, self.coordinates)) + ")"

    def __repr__(self):
        return f"Point{self}"

    def support(self) -> list:
        """Variables with nonzero coordinate."""
        return [v for v, c in zip(self.variables, self.coordinates) if c]


class PointList(list):
    """Points found; ``complete`` is False when some of V(I) is not rational."""

    complete: bool = True
    unresolved: int = 0


# --------------------------------------------------------------------------


class QuotientAlgebra:
    """``k[x]/I`` for a zero-dimensional (affine) ideal ``I``."""

    def __init__(self, I: Ideal):
        self.ideal = I
        self.ring = I.ring
        self.dom = I.ring.domain
        self.gb = I.groebner(GREVLEX)
        n = self.ring.nvars
        lead = self.gb.leading_exponents
        if self.gb.is_unit():
            self.basis = []
        else:
            for i in range(n):
                if not any(e[i] and all(not x for j, x in enumerate(e) if j != i) for e in lead):
                    raise NotZeroDimensional(
                        f"no pure power of {self.ring.variables[i]} among leading monomials")
            self.basis = _standard_monomials(lead, n, GREVLEX.key_function(self.ring.weights))
        self.index = {e: k for k, e in enumerate(self.basis)}
        self._mult: dict = {}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coords(self, f: Polynomial) -> list:
        r = self.gb.reduce(f)
        v = [self.dom.zero] * len(self.basis)
        for e, c in r.terms.items():
            v[self.index[e]] = c
        return v

    def element(self, v: Sequence) -> Polynomial:
        return Polynomial(self.ring, {e: c for e, c in zip(self.basis, v) if c})

    def mult_matrix(self, f) -> list:
        """Matrix of multiplication by ``f`` (a variable name or polynomial)."""
        key = f if isinstance(f, str) else f
        if key in self._mult:
            return self._mult[key]
        D = len(self.basis)
        cols = []
        if isinstance(f, str):
            i = self.ring.index(f)
            for e in self.basis:
                ne = list(e)
                ne[i] += 1
                ne = tuple(ne)
                if ne in self.index:
                    col = [self.dom.zero] * D
                    col[self.index[ne]] = self.dom.one
                else:
                    col = self.coords(self.ring.monomial(ne))
                cols.append(col)
        else:
            for e in self.basis:
                cols.append(self.coords(f * self.ring.monomial(e)))
        M = [[cols[j][i] for j in range(D)] for i in range(D)]
        self._mult[key] = M
        return M

    def minimal_polynomial(self, var: str) -> list:
        """Monic minimal polynomial of a variable in ``A`` (coefficients low to high)."""
        D = len(self.basis)
        if D == 0:
            return [self.dom.one]
        M = self.mult_matrix(var)
        one = self.coords(self.ring.one)
        vecs = [one]
        while True:
            nxt = matvec(M, vecs[-1], self.dom)
            coeffs = solve_in_span(vecs, nxt, self.dom)
            if coeffs is not None:
                p = self.dom.p
                poly = [(-c) % p if p else -c for c in coeffs] + [self.dom.one]
                return uni.trim(poly)
            vecs.append(nxt)


def _standard_monomials(lead: list, n: int, key) -> list:
    def standard(e):
        return not any(all(a <= b for a, b in zip(l, e)) for l in lead)

    seen = {(0,) * n}
    frontier = [(0,) * n]
    out = [(0,) * n]
    while frontier:
        nxt = []
        for e in frontier:
            for i in range(n):
                ne = e[:i] + (e[i] + 1,) + e[i + 1:]
                if ne not in seen:
                    seen.add(ne)
                    if standard(ne):
                        out.append(ne)
                        nxt.append(ne)
        frontier = nxt
    out.sort(key=key)
    return out


def is_zero_dimensional(I: Ideal) -> bool:
    try:
        QuotientAlgebra(I)
    except NotZeroDimensional:
        return False
    return True


def affine_degree(I: Ideal) -> int:
    """``dim_k k[x]/I`` for a zero-dimensional ideal."""
    return QuotientAlgebra(I).dimension


def zero_dim_radical(I: Ideal) -> Ideal:
    """Radical of a zero-dimensional ideal.

    Adds the squarefree part of the minimal polynomial of every variable
    (Seidenberg); over GF(p) inseparable factors are handled by p-th roots.
    """
    alg = QuotientAlgebra(I)
    if alg.dimension == 0:
        return I
    ring = I.ring
    extra = []
    for i, v in enumerate(ring.variables):
        mp = alg.minimal_polynomial(v)
        sf = uni.squarefree_part(mp, alg.dom)
        if len(sf) < len(mp):
            extra.append(_univariate_to_poly(sf, ring, i))
    if not extra:
        return Ideal(alg.gb.elements, ring)
    rad = Ideal(list(alg.gb.elements) + extra, ring)
    return Ideal(rad.reduced_gens(), ring)


def _univariate_to_poly(a: list, ring: PolyRing, i: int) -> Polynomial:
    terms = {}
    for k, c in enumerate(a):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = c
    return Polynomial(ring, terms)


# --------------------------------------------------------------------------
# points and multiplicities


def _restrict(M, W, dom):
    """Matrix of ``M`` on the invariant subspace spanned by the vectors ``W``."""
    cols = []
    for w in W:
        x = solve_in_span(W, matvec(M, w, dom), dom)
        if x is None:
            raise ArithmeticError("subspace is not invariant")
        cols.append(x)
    r = len(W)
    return [[cols[j][i] for j in range(r)] for i in range(r)]


def _gen_eigenspace(M, W, a, dom):
    """Vectors spanning ``W ∩ ker((M - a)^dim W)``."""
    r = len(W)
    if r == 0:
        return []
    R = _restrict(M, W, dom)
    p = dom.p
    shifted = [[(R[i][j] - (a if i == j else 0)) % p if p else R[i][j] - (a if i == j else 0)
                for j in range(r)] for i in range(r)]
    K = nullspace(matpow(shifted, r, dom), dom, r)
    D = len(W[0])
    out = []
    for k in K:
        v = [dom.zero] * D
        for coef, w in zip(k, W):
            if coef:
                for t in range(D):
                    if w[t]:
                        v[t] += coef * w[t]
        if p:
            v = [x % p for x in v]
        out.append(v)
    return out


def _unit_vectors(D, dom):
    return [[dom.one if i == j else dom.zero for i in range(D)] for j in range(D)]


def affine_points(I: Ideal) -> PointList:
    """Points of V(I) with coordinates in the ring's domain, with multiplicities.

    Returns a :class:`PointList` of ``(Point, multiplicity)`` pairs.  Over GF(p)
    the list is complete; over QQ any part of V(I) with irrational
    coordinates is reported through ``complete``/``unresolved``.
    """
    alg = QuotientAlgebra(I)
    dom = alg.dom
    D = alg.dimension
    out = PointList()
    if D == 0:
        return out
    ring = I.ring
    roots = [uni.roots(alg.minimal_polynomial(v), dom) for v in ring.variables]
    mats = [alg.mult_matrix(v) for v in ring.variables]
    found = 0

    def walk(i, W, coords):
        nonlocal found
        if i == ring.nvars:
            out.append((Point(ring.variables, tuple(coords)), len(W)))
            found += len(W)
            return
        for a in roots[i]:
            Wa = _gen_eigenspace(mats[i], W, a, dom)
            if Wa:
                walk(i + 1, Wa, coords + [a])

    walk(0, _unit_vectors(D, dom), [])
    out.sort(key=lambda t: [_sort_key(c) for c in t[0].coordinates])
    out.unresolved = D - found
    out.complete = out.unresolved == 0
    return out


def _sort_key(c):
    return c


def affine_local_multiplicity(I: Ideal, point: Mapping | Sequence) -> int:
    alg = QuotientAlgebra(I)
    dom = alg.dom
    ring = I.ring
    if isinstance(point, Mapping):
        coords = [dom(point[v]) for v in ring.variables]
    elif isinstance(point, Point):
        coords = [dom(c) for c in point.coordinates]
    else:
        coords = [dom(c) for c in point]
    W = _unit_vectors(alg.dimension, dom)
    for v, a in zip(ring.variables, coords):
        W = _gen_eigenspace(alg.mult_matrix(v), W, a, dom)
        if not W:
            break
    if not W:
        raise ValueError(f"point {tuple(coords)} is not on V(I)")
    return len(W)


# --------------------------------------------------------------------------
# projective charts


@dataclass
class Chart:
    """An affine chart ``h = 1`` of projective space.

    ``solved`` is the variable eliminated by ``h = 1``; ``substitution`` its
    value as an affine polynomial in the remaining variables.
    """

    ring: PolyRing            # projective ring
    affine_ring: PolyRing
    solved: str
    substitution: Polynomial  # value of ``solved`` on the chart
    form: Polynomial          # the linear form h (in the projective ring)

    def dehomogenize(self, f: Polynomial) -> Polynomial:
        return f.subs({self.solved: self.substitution}, self.affine_ring)

    def ideal(self, I: Ideal) -> Ideal:
        gens = [self.dehomogenize(g) for g in I.gens]
        return Ideal([g for g in gens if g], self.affine_ring)

    def to_projective(self, pt: Point) -> tuple:
        vals = dict(zip(pt.variables, pt.coordinates))
        vals[self.solved] = self.substitution.evaluate(
            [vals[v] for v in self.affine_ring.variables])
        return normalize_projective(tuple(vals[v] for v in self.ring.variables), self.ring.domain)

    def to_affine(self, coords: Sequence) -> tuple:
        dom = self.ring.domain
        h = self.form.evaluate(coords)
        if not h:
            raise ValueError("point lies outside the chart")
        inv = dom.inv(h)
        scaled = dict(zip(self.ring.variables, (dom(c * inv) for c in coords)))
        return tuple(scaled[v] for v in self.affine_ring.variables)


def normalize_projective(coords: Sequence, dom: CoefficientDomain) -> tuple:
    """Scale so that the first nonzero coordinate is 1."""
    coords = [dom(c) for c in coords]
    for c in coords:
        if c:
            inv = dom.inv(c)
            return tuple(dom(x * inv) for x in coords)
    raise ValueError("the zero vector is not a projective point")


def coordinate_chart(ring: PolyRing, var: str) -> Chart:
    rest = tuple(v for v in ring.variables if v != var)
    aff = PolyRing(rest, ring.domain)
    return Chart(ring, aff, var, aff.one, ring.var(var))


def linear_chart(ring: PolyRing, coeffs: Mapping) -> Chart:
    """Chart ``sum c_v x_v = 1``; solves for the first variable with ``c_v = 1``."""
    dom = ring.domain
    solved = next(v for v in ring.variables if dom(coeffs.get(v, 0)) == 1)
    rest = tuple(v for v in ring.variables if v != solved)
    aff = PolyRing(rest, dom)
    sub = aff.one
    for v in rest:
        c = dom(coeffs.get(v, 0))
        if c:
            sub = sub - aff.var(v) * c
    form = sum((ring.var(v) * dom(coeffs.get(v, 0)) for v in ring.variables), ring.zero)
    return Chart(ring, aff, solved, sub, form)


def misses_chart_boundary(I: Ideal, form: Polynomial) -> bool:
    """True when no point of the projective scheme V(I) lies on ``form = 0``."""
    return hilbert_data(I + Ideal([form], I.ring)).proj_dim == -1


def covering_chart(I: Ideal, seed: int = 0, tries: int = 20) -> Chart:
    """A chart containing every point of the zero-dimensional projective V(I).

    Coordinate charts are tried first (they keep the ideal sparse), then
    random linear forms from a seeded generator.
    """
    ring = I.ring
    for v in ring.variables:
        if misses_chart_boundary(I, ring.var(v)):
            return coordinate_chart(ring, v)
    rng = random.Random(seed)
    dom = ring.domain
    bound = dom.p if dom.p else 7
    for _ in range(tries):
        coeffs = {ring.variables[0]: 1}
        for v in ring.variables[1:]:
            coeffs[v] = rng.randrange(bound) if dom.p else rng.randrange(-bound, bound + 1)
        chart = linear_chart(ring, coeffs)
        if misses_chart_boundary(I, chart.form):
            return chart
    raise RuntimeError("no covering chart found")


def projective_points(I: Ideal) -> PointList:
    """Points of the zero-dimensional projective scheme V(I), with multiplicities.

    Points are normalised (first nonzero coordinate 1) and found chart by
    chart: in chart ``i`` the earlier coordinates vanish and ``x_i = 1``.
    Multiplicities are computed in the full chart ``x_i = 1``.
    """
    ring = I.ring
    out = PointList()
    unresolved = 0
    for i, v in enumerate(ring.variables):
        chart = coordinate_chart(ring, v)
        J = chart.ideal(I)
        slice_gens = list(J.gens) + [chart.affine_ring.var(w) for w in ring.variables[:i]]
        S = Ideal(slice_gens, chart.affine_ring)
        pts = affine_points(S)
        unresolved += pts.unresolved
        for pt, _ in pts:
            proj = chart.to_projective(pt)
            mult = affine_local_multiplicity(J, pt)
            out.append((Point(ring.variables, proj), mult))
    out.sort(key=lambda t: t[0].coordinates, reverse=True)
    out.unresolved = unresolved
    out.complete = unresolved == 0
    return out


def projective_local_multiplicity(I: Ideal, coords: Sequence) -> int:
    ring = I.ring
    coords = normalize_projective(coords, ring.domain)
    v = next(ring.variables[i] for i, c in enumerate(coords) if c)
    chart = coordinate_chart(ring, v)
    return affine_local_multiplicity(chart.ideal(I), chart.to_affine(coords))


def _looks_projective(I: Ideal) -> bool:
    """Homogeneous ideals whose affine zero set is not finite are read projectively."""
    return bool(I.gens) and I.is_homogeneous() and not is_zero_dimensional(I)


def variety_points(I: Ideal, over: CoefficientDomain | None = None, projective: bool | None = None) -> PointList:
    """Rational points of V(I) over ``over`` (default: the ideal's domain).

    ``projective`` defaults to True for homogeneous ideals that are not
    zero-dimensional as affine ideals.
    Returns :class:`PointList` of Points (multiplicities dropped).
    """
    if over is not None and over != I.ring.domain:
        I = I.over(over)
    if projective is None:
        projective = _looks_projective(I)
    found = projective_points(I) if projective else affine_points(I)
    out = PointList(pt for pt, _ in found)
    out.complete = found.complete
    out.unresolved = found.unresolved
    return out


def local_multiplicity(I: Ideal, point, projective: bool | None = None) -> int:
    """Length of the local algebra of V(I) at ``point``."""
    if projective is None:
        projective = _looks_projective(I)
    coords = point.coordinates if isinstance(point, Point) else point
    if projective:
        if isinstance(coords, Mapping):
            coords = [coords[v] for v in I.ring.variables]
        return projective_local_multiplicity(I, coords)
    return affine_local_multiplicity(I, coords)
