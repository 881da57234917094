"""Reduced Groebner bases by Buchberger's algorithm.

Pairs are managed with the Gebauer-Moeller update (which implements the
coprime-leading-monomial and chain criteria) and selected by the sugar
strategy.  All work happens on plain ``{exponent: coefficient}`` dicts; the
public functions convert from and to :class:`Polynomial`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .polynomial import GREVLEX, MonomialOrder, Polynomial, PolyRing, RingMismatch


def _mask(e) -> int:
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class _Reducer:
    """Normal forms of term dicts modulo a list of monic polynomials."""

    def __init__(self, ring: PolyRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        self.p = ring.domain.p
        self.dom = ring.domain
        self._key = order.key_function(ring.weights)
        self._keys: dict = {}
        self._negkeys: dict = {}
        self.basis: list = []  # entries: (lm, mask, tail_terms)

    def key(self, e):
        k = self._keys.get(e)
        if k is None:
            k = self._keys[e] = self._key(e)
        return k

    def negkey(self, e):
        k = self._negkeys.get(e)
        if k is None:
            k = self._negkeys[e] = tuple(-x for x in self.key(e))
        return k

    def lead(self, f: dict):
        return max(f, key=self.key)

    def monic(self, f: dict) -> dict:
        lm = self.lead(f)
        c = f[lm]
        if c == 1:
            return f
        inv = self.dom.inv(c)
        if self.p:
            return {e: v * inv % self.p for e, v in f.items()}
        return {e: v * inv for e, v in f.items()}

    def entry(self, f: dict):
        """Basis entry for a monic dict."""
        lm = self.lead(f)
        tail = sorted(((e, c) for e, c in f.items() if e != lm),
                      key=lambda t: self.key(t[0]), reverse=True)
        return (lm, _mask(lm), tail)

    def set_basis(self, monic_dicts):
        self.basis = [self.entry(f) for f in monic_dicts]

    def find_divisor(self, m, mmask, basis):
        for ent in basis:
            lm, gmask, _ = ent
            if gmask & ~mmask:
                continue
            if _divides(lm, m):
                return ent
        return None

    def reduce(self, f: dict, basis=None, full: bool = True) -> dict:
        basis = self.basis if basis is None else basis
        if not f or not basis:
            return dict(f)
        p = self.p
        f = dict(f)
        negkey = self.negkey
        heap = [(negkey(e), e) for e in f]
        heapq.heapify(heap)
        rem: dict = {}
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            _, m = pop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            ent = self.find_divisor(m, _mask(m), basis)
            if ent is None:
                rem[m] = c
                if not full:
                    rem.update(f)
                    return rem
                continue
            lm, _, tail = ent
            q = tuple(a - b for a, b in zip(m, lm))
            for e, gc in tail:
                ne = tuple(a + b for a, b in zip(q, e))
                v = f.get(ne)
                if v is None:
                    v = -c * gc
                    if p:
                        v %= p
                    f[ne] = v
                    push(heap, (negkey(ne), ne))
                else:
                    v = v - c * gc
                    if p:
                        v %= p
                    if v:
                        f[ne] = v
                    else:
                        del f[ne]
        return rem


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    order: MonomialOrder
    elements: tuple
    _reducer: _Reducer = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self._reducer is None:
            red = _Reducer(self.ring, self.order)
            red.set_basis([g.terms for g in self.elements])
            object.__setattr__(self, "_reducer", red)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def leading_exponents(self) -> list:
        return [ent[0] for ent in self._reducer.basis]

    def leading_monomials(self) -> list:
        return [self.ring.monomial(e) for e in self.leading_exponents]

    def is_unit(self) -> bool:
        return any(not any(e) for e in self.leading_exponents)

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch("polynomial and basis live in different rings")
        return Polynomial._clean(self.ring, self._reducer.reduce(f.terms))

    def contains(self, f: Polynomial) -> bool:
        return not self._reducer.reduce(f.terms)

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.elements) + "]"


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``basis``.

    ``basis`` need not be a Groebner basis; then the remainder depends on the
    order of the list (the first divisor found is used).
    """
    if isinstance(basis, GroebnerBasis) and basis.order == order:
        return basis.reduce(f)
    red = _Reducer(f.ring, order)
    gens = []
    for g in basis:
        if g.ring != f.ring:
            raise RingMismatch("polynomial and basis live in different rings")
        if g.terms:
            gens.append(red.monic(g.terms))
    red.set_basis(gens)
    return Polynomial._clean(f.ring, red.reduce(f.terms))


def _sugar(ring: PolyRing, f: dict) -> int:
    return max(ring.degree_of(e) for e in f)


def _gm_update(G: list, pairs: list, h: int, lms: list):
    """Gebauer-Moeller update of the active set ``G`` and pair list for new index ``h``."""
    lh = lms[h]
    C = [g for g in G]
    D = []
    lcm_h = {g: _lcm(lms[g], lh) for g in C}
    for idx, g1 in enumerate(C):
        l1 = lcm_h[g1]
        coprime = all(not (a and b) for a, b in zip(lms[g1], lh))
        if coprime:
            D.append(g1)
            continue
        redundant = False
        for g2 in C[idx + 1:]:
            if _divides(lcm_h[g2], l1):
                redundant = True
                break
        if not redundant:
            for g2 in D:
                if _divides(lcm_h[g2], l1):
                    redundant = True
                    break
        if not redundant:
            D.append(g1)
    new_pairs = [(g, h) for g in D if not all(not (a and b) for a, b in zip(lms[g], lh))]
    kept = []
    for (g1, g2, l12) in pairs:
        if (_divides(lh, l12) and _lcm(lms[g1], lh) != l12 and _lcm(lms[g2], lh) != l12):
            continue
        kept.append((g1, g2, l12))
    kept.extend((g, h2, _lcm(lms[g], lms[h2])) for g, h2 in new_pairs)
    G_new = [g for g in G if not _divides(lh, lms[g])]
    G_new.append(h)
    return G_new, kept


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               ring: PolyRing | None = None) -> GroebnerBasis:
    """The reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("pass ring= for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
    if order != GREVLEX and len(gens) > 1:
        # a grevlex basis is usually a much better starting set for lex and
        # block orders than the raw generators
        gens = list(buchberger(gens, GREVLEX, ring).elements)
    red = _Reducer(ring, order)
    inputs = [red.monic(g.terms) for g in gens if g.terms]
    # deterministic processing order, independent of the caller's order
    inputs = {tuple(sorted(f.items())): f for f in inputs}.values()
    inputs = sorted(inputs, key=lambda f: (_sugar(ring, f), red.key(red.lead(f)), sorted(f.items())))

    polys: list = []   # monic dicts
    lms: list = []
    sugars: list = []
    entries: list = []
    G: list = []
    pairs: list = []

    def active_basis():
        return [entries[i] for i in G]

    def add(f, sugar):
        nonlocal G, pairs
        f = red.monic(f)
        idx = len(polys)
        polys.append(f)
        lm = red.lead(f)
        lms.append(lm)
        sugars.append(sugar)
        entries.append(red.entry(f))
        G, pairs = _gm_update(G, pairs, idx, lms)

    for f in inputs:
        r = red.reduce(f, active_basis())
        if r:
            if all(not any(e) for e in r):
                return _unit_basis(ring, order)
            add(r, _sugar(ring, f))

    while pairs:
        best = None
        best_k = None
        for k, (i, j, l) in enumerate(pairs):
            dl = ring.degree_of(l)
            s = max(sugars[i] + dl - ring.degree_of(lms[i]), sugars[j] + dl - ring.degree_of(lms[j]))
            sel = (s, red.key(l), i, j)
            if best is None or sel < best:
                best = sel
                best_k = k
        i, j, l = pairs.pop(best_k)
        s = best[0]
        spoly = _spoly(polys[i], polys[j], lms[i], lms[j], l, red.p)
        if not spoly:
            continue
        r = red.reduce(spoly, active_basis())
        if r:
            if all(not any(e) for e in r):
                return _unit_basis(ring, order)
            add(r, s)

    # interreduce the minimal basis
    basis = [polys[i] for i in G]
    basis.sort(key=lambda f: red.key(red.lead(f)))
    reduced = []
    for k, f in enumerate(basis):
        others = [red.entry(g) for t, g in enumerate(basis) if t != k]
        lm = red.lead(f)
        tail = {e: c for e, c in f.items() if e != lm}
        tail = red.reduce(tail, others)
        tail[lm] = f[lm]
        reduced.append(tail)
    basis = [red.monic(f) for f in reduced]
    basis.sort(key=lambda f: red.key(red.lead(f)))
    elems = tuple(Polynomial._clean(ring, f) for f in basis)
    red.set_basis(basis)
    return GroebnerBasis(ring, order, elems, red)


def _unit_basis(ring, order):
    return GroebnerBasis(ring, order, (ring.one,))


def _spoly(f, g, lf, lg, l, p):
    qf = tuple(a - b for a, b in zip(l, lf))
    qg = tuple(a - b for a, b in zip(l, lg))
    out = {}
    for e, c in f.items():
        out[tuple(a + b for a, b in zip(e, qf))] = c
    for e, c in g.items():
        ne = tuple(a + b for a, b in zip(e, qg))
        v = out.get(ne, 0) - c
        if p:
            v %= p
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return out


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    red = _Reducer(f.ring, order)
    a, b = red.monic(f.terms), red.monic(g.terms)
    la, lb = red.lead(a), red.lead(b)
    return Polynomial._clean(f.ring, _spoly(a, b, la, lb, _lcm(la, lb), red.p))


def is_groebner(basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    basis = [g for g in basis if g]
    if not basis:
        return True
    red = _Reducer(basis[0].ring, order)
    monic = [red.monic(g.terms) for g in basis]
    red.set_basis(monic)
    for i in range(len(monic)):
        for j in range(i + 1, len(monic)):
            la, lb = red.lead(monic[i]), red.lead(monic[j])
            s = _spoly(monic[i], monic[j], la, lb, _lcm(la, lb), red.p)
            if red.reduce(s):
                return False
    return True


def is_reduced(basis: GroebnerBasis) -> bool:
    """Monic and no term of any element divisible by another's leading monomial."""
    red = basis._reducer
    lms = basis.leading_exponents
    for k, g in enumerate(basis.elements):
        if g.terms[lms[k]] != 1:
            return False
        for e in g.terms:
            for t, l in enumerate(lms):
                if t != k and _divides(l, e):
                    return False
    return True


def ideal_member(f: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """Whether ``f`` lies in the ideal generated by ``gens``."""
    if not f:
        return True
    if not gens:
        return False
    return buchberger(gens, order, ring=f.ring).contains(f)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g`` when ``g`` divides ``f``; raises ValueError otherwise."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    red = _Reducer(f.ring, GREVLEX)
    lg = red.lead(g.terms)
    inv = red.dom.inv(g.terms[lg])
    p = red.p
    rest = dict(f.terms)
    quot: dict = {}
    while rest:
        lm = red.lead(rest)
        if not _divides(lg, lm):
            raise ValueError(f"{g} does not divide {f}")
        q = tuple(a - b for a, b in zip(lm, lg))
        c = rest[lm] * inv
        if p:
            c %= p
        quot[q] = c
        for e, gc in g.terms.items():
            ne = tuple(a + b for a, b in zip(q, e))
            v = rest.get(ne, 0) - c * gc
            if p:
                v %= p
            if v:
                rest[ne] = v
            else:
                rest.pop(ne, None)
    return Polynomial._clean(f.ring, quot)
