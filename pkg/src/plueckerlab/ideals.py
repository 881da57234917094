"""Polynomial ideals: quotients, saturation, elimination and Hilbert data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, buchberger, divide_exact
from .hilbert import divide_one_minus_t, hilbert_numerator
from .polynomial import GREVLEX, MonomialOrder, Polynomial, PolyRing, RingMismatch, block


class Ideal:
    """An ideal given by generators, with Groebner bases cached per order."""

    def __init__(self, gens: Iterable[Polynomial], ring: PolyRing | None = None):
        gens = [g for g in gens]
        if ring is None:
            if not gens:
                raise ValueError("pass ring= for an ideal without generators")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("generators live in different rings")
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self._gb: dict = {}

    @classmethod
    def parse(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls([ring(t) for t in texts], ring)

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.gens, order, ring=self.ring)
            self._gb[order] = gb
        return gb

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.groebner().reduce(f)

    def contains(self, f) -> bool:
        if isinstance(f, Ideal):
            return all(self.contains(g) for g in f.gens)
        if not f:
            return True
        if not self.gens:
            return False
        return self.groebner().contains(f)

    __contains__ = contains

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.contains(other) and other.contains(self)

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.gens + other.gens, self.ring)
        return Ideal(self.gens + tuple(other), self.ring)

    def __mul__(self, other: "Ideal"):
        return Ideal([f * g for f in self.gens for g in other.gens], self.ring)

    def is_unit(self) -> bool:
        return bool(self.gens) and self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def change_ring(self, ring: PolyRing) -> "Ideal":
        return Ideal([g.change_ring(ring) for g in self.gens], ring)

    def over(self, domain) -> "Ideal":
        return self.change_ring(self.ring.with_domain(domain))

    def reduced_gens(self, order: MonomialOrder = GREVLEX) -> list:
        return list(self.groebner(order).elements)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"

    __str__ = __repr__


def unit_ideal(ring: PolyRing) -> Ideal:
    return Ideal([ring.one], ring)


def irrelevant_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring.gens(), ring)


def _fresh_name(ring: PolyRing, base: str) -> str:
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}{k}"
    return name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` via elimination of a tag variable from ``t I + (1 - t) J``."""
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal([], ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    t = _fresh_name(ring, "tag")
    big = PolyRing((t,) + ring.variables, ring.domain, None)
    tv = big.var(t)
    gens = [tv * f.change_ring(big) for f in I.gens]
    gens += [(1 - tv) * g.change_ring(big) for g in J.gens]
    gb = buchberger(gens, block(1), ring=big)
    keep = [g for g in gb.elements if all(e[0] == 0 for e in g.terms)]
    return Ideal([_drop_first(g, ring) for g in keep], ring)


def _drop_first(g: Polynomial, ring: PolyRing) -> Polynomial:
    return Polynomial._clean(ring, {e[1:]: c for e, c in g.terms.items()})


def ideal_quotient(I: Ideal, f) -> Ideal:
    """``I : f = {g : f g ∈ I}`` for a polynomial ``f`` (or ``I : J`` for an ideal)."""
    if isinstance(f, Ideal):
        if f.is_zero():
            raise ValueError("quotient by the zero ideal")
        out = None
        for g in f.gens:
            q = ideal_quotient(I, g)
            out = q if out is None else intersect(out, q)
        return out
    if f.ring != I.ring:
        raise RingMismatch("polynomial not in the ideal's ring")
    if not f:
        raise ValueError("quotient by zero")
    if f.is_constant():
        return I
    if I.is_zero():
        return I
    if I.contains(f):
        return Ideal([I.ring.one], I.ring)
    inter = intersect(I, Ideal([f], I.ring))
    return Ideal([divide_exact(g, f) for g in inter.gens], I.ring)


def saturate_element(I: Ideal, f: Polynomial, max_steps: int = 1000) -> Ideal:
    """``I : f^∞`` by iterating quotients until they stabilise."""
    current = I
    for _ in range(max_steps):
        nxt = ideal_quotient(current, f)
        if current.contains(nxt):
            return current
        current = Ideal(nxt.reduced_gens(), I.ring)
    raise RuntimeError("saturation did not stabilise")


def saturate(I: Ideal, J: Ideal | None = None) -> Ideal:
    """``I : J^∞``; ``J`` defaults to the irrelevant ideal of the ring.

    Computed as the intersection of the saturations by the generators of J.
    """
    if J is None:
        J = irrelevant_ideal(I.ring)
    if J.ring != I.ring:
        raise RingMismatch("ideals live in different rings")
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    if J.is_unit() or I.is_unit():
        return I
    out = None
    for g in J.gens:
        s = saturate_element(I, g)
        out = s if out is None else intersect(out, s)
        if out.is_zero():
            break
    return Ideal(out.reduced_gens(), I.ring) if out.gens else out


def eliminate(I: Ideal, drop: Iterable[str]) -> Ideal:
    """``I ∩ k[remaining variables]`` via a block order."""
    drop = [d for d in I.ring.variables if d in set(drop)]
    ring = I.ring
    if not drop:
        return Ideal(I.reduced_gens(), ring)
    keep = [v for v in ring.variables if v not in set(drop)]
    big = PolyRing(tuple(drop) + tuple(keep), ring.domain, None)
    gens = [g.change_ring(big) for g in I.gens]
    gb = buchberger(gens, block(len(drop)), ring=big) if gens else None
    k = len(drop)
    out = []
    if gb is not None:
        for g in gb.elements:
            if all(not any(e[:k]) for e in g.terms):
                out.append(g.change_ring(ring))
    return Ideal(out, ring)


# --------------------------------------------------------------------------
# Hilbert data


@dataclass(frozen=True)
class HilbertData:
    """Series numerator (lowest power first), projective dimension and degree.

    ``reduced_numerator`` is the numerator after cancelling every ``(1 - t)``
    factor; ``degree`` is its value at 1.  The empty scheme has
    ``proj_dim == -1`` and ``degree == 0``.
    """

    numerator: tuple
    reduced_numerator: tuple
    proj_dim: int
    degree: int
    nvars: int

    def hilbert_function(self, d: int) -> int:
        from .hilbert import hilbert_function_from_series
        return hilbert_function_from_series(list(self.numerator), self.nvars, d)

    def hilbert_polynomial_value(self, d: int) -> int:
        """Value of the Hilbert polynomial at ``d`` (valid for all ``d``)."""
        from math import comb
        k = self.proj_dim + 1
        if k <= 0:
            return 0
        total = 0
        for i, a in enumerate(self.reduced_numerator):
            total += a * _binom_poly(d - i + k - 1, k - 1)
        return total


def _binom_poly(x: int, r: int) -> int:
    num = 1
    for i in range(r):
        num *= x - i
    from math import factorial
    return num // factorial(r)


def hilbert_data(I: Ideal) -> HilbertData:
    """Hilbert data of ``S / I`` from the leading-term ideal of a grevlex basis."""
    ring = I.ring
    if ring.weights is not None:
        raise ValueError("hilbert_data needs the standard grading")
    for g in I.gens:
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator: {g}")
    n = ring.nvars
    lead = I.groebner().leading_exponents if I.gens else []
    num = hilbert_numerator(lead, None) if lead else [1]
    reduced, k = divide_one_minus_t(num)
    if not any(num):
        return HilbertData(tuple(num), (0,), -1, 0, n)
    krull = n - k
    if krull == 0:
        return HilbertData(tuple(num), tuple(reduced), -1, 0, n)
    return HilbertData(tuple(num), tuple(reduced), krull - 1, sum(reduced), n)


def homogeneous_linear_span_dim(polys: Sequence[Polynomial]) -> int:
    """Dimension of the linear span of a list of polynomials."""
    from .linalg import matrix_rank
    if not polys:
        return 0
    monos = sorted({e for f in polys for e in f.terms})
    M = [[f.terms.get(e, 0) for e in monos] for f in polys]
    return matrix_rank(M, polys[0].ring.domain)


def linear_section(I: Ideal, forms: Sequence[Polynomial]):
    """Cut ``I`` by linear forms, eliminating variables by substitution.

    Each form is solved for its last variable in ring order (after
    Gauss-Jordan elimination among the forms).  Returns ``(J, solved)``
    where ``J`` lives in the ring of the remaining variables and ``solved``
    maps each eliminated variable to its value there.
    """
    from .linalg import rref
    ring = I.ring
    dom = ring.domain
    n = ring.nvars
    order = list(range(n - 1, -1, -1))          # columns: last variable first
    rows = []
    for f in forms:
        if f.degree() > 1:
            raise ValueError(f"not a linear form: {f}")
        row = [dom.zero] * (n + 1)
        for e, c in f.terms.items():
            if any(e):
                row[order.index(e.index(1))] = c
            else:
                row[n] = c
        rows.append(row)
    R, pivots = rref(rows, dom, n + 1) if rows else ([], [])
    if n in pivots:
        return Ideal([PolyRing(ring.variables, dom).one], ring), {}
    solved_idx = {order[c] for c in pivots}
    rest = tuple(v for i, v in enumerate(ring.variables) if i not in solved_idx)
    small = PolyRing(rest, dom)
    solved = {}
    for row, c in zip(R, pivots):
        var = ring.variables[order[c]]
        value = small.constant(-row[n]) if row[n] else small.zero
        for col in range(n):
            if col != c and row[col]:
                value = value - small.var(ring.variables[order[col]]) * row[col]
        solved[var] = value
    assignment = dict(solved)
    J = Ideal([g.subs(assignment, small) for g in I.gens], small)
    return Ideal([g for g in J.gens if g], small), solved


def in_radical(f: Polynomial, I: Ideal) -> bool:
    """Whether some power of ``f`` lies in ``I`` (Rabinowitsch: ``1 ∈ I + (1 - t f)``)."""
    if not f:
        return True
    ring = I.ring
    t = _fresh_name(ring, "rab")
    big = PolyRing(ring.variables + (t,), ring.domain, None)
    tv = big.var(t)
    gens = [g.change_ring(big) for g in I.gens] + [1 - tv * f.change_ring(big)]
    return buchberger(gens, GREVLEX, ring=big).is_unit()


def same_radical(I: Ideal, J: Ideal):
    """``None`` if ``rad I = rad J``, else the first generator witnessing a difference."""
    for g in I.gens:
        if not in_radical(g, J):
            return g
    for g in J.gens:
        if not in_radical(g, I):
            return g
    return None


def first_not_contained(I: Ideal, J: Ideal):
    """First generator of ``J`` outside ``I``, or ``None`` when ``J ⊆ I``."""
    for g in J.gens:
        if not I.contains(g):
            return g
    return None
