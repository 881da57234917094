"""Pluecker coordinates on G(d, m) and the ideals built from them.

Variables are named ``p`` followed by the sorted index digits (``p13``,
``p245``); indices therefore stay below 10.  Chart variables on
``p_{1,m} = 1`` are named ``q<i><j>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .domains import QQ, CoefficientDomain
from .ideals import Ideal
from .linalg import rref
from .polynomial import Polynomial, PolyRing


class UnsupportedContext(ValueError):
    pass


def _name(prefix: str, idx: Sequence[int]) -> str:
    return prefix + "".join(str(i) for i in idx)


@dataclass(frozen=True)
class GrassmannContext:
    d: int
    m: int
    domain: CoefficientDomain = QQ

    def __post_init__(self):
        if not (2 <= self.d < self.m):
            raise UnsupportedContext(f"need 2 <= d < m, got d={self.d}, m={self.m}")
        if self.m > 9:
            raise UnsupportedContext("variable naming supports m <= 9")

    @property
    def tuples(self) -> list:
        return list(combinations(range(1, self.m + 1), self.d))

    @property
    def ring(self) -> PolyRing:
        return PolyRing(tuple(_name("p", t) for t in self.tuples), self.domain)

    @property
    def n(self) -> int:
        """Dimension d(m-d) of the Grassmannian."""
        return self.d * (self.m - self.d)

    @property
    def N(self) -> int:
        """Dimension of the ambient projective space."""
        return comb(self.m, self.d) - 1

    def p(self, *idx) -> Polynomial:
        if len(idx) == 1 and not isinstance(idx[0], int):
            idx = tuple(idx[0])
        return self.ring.var(_name("p", sorted(idx)))

    def over(self, domain: CoefficientDomain) -> "GrassmannContext":
        return GrassmannContext(self.d, self.m, domain)

    def __str__(self):
        return f"G({self.d},{self.m}) over {self.domain}"


def parse_context(text: str, domain: CoefficientDomain = QQ) -> GrassmannContext:
    d, m = (int(x) for x in text.split(","))
    return GrassmannContext(d, m, domain)


# --------------------------------------------------------------------------
# Pluecker relations


def _signed(idx: Sequence[int]):
    """(sign, sorted tuple) of an index list; sign 0 when an index repeats."""
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


def grassmann_pluecker_relations(ctx: GrassmannContext) -> list:
    """All relations ``sum_k (-1)^k p_{I+j_k} p_{J-j_k}`` with ``|I|=d-1``, ``|J|=d+1``."""
    ring = ctx.ring
    d, m = ctx.d, ctx.m
    out = []
    seen = set()
    for I in combinations(range(1, m + 1), d - 1):
        for J in combinations(range(1, m + 1), d + 1):
            terms: dict = {}
            for k, j in enumerate(J):
                s1, a = _signed(list(I) + [j])
                if not s1:
                    continue
                rest = J[:k] + J[k + 1:]
                s = s1 * (-1) ** k
                e = [0] * ring.nvars
                e[ring.index(_name("p", a))] += 1
                e[ring.index(_name("p", rest))] += 1
                e = tuple(e)
                terms[e] = terms.get(e, 0) + s
            f = Polynomial(ring, terms)
            if not f:
                continue
            key = frozenset(f.terms.items())
            neg = frozenset((-f).terms.items())
            if key in seen or neg in seen:
                continue
            seen.add(key)
            out.append(f)
    return out


def pluecker_ideal(ctx: GrassmannContext) -> Ideal:
    """Ideal of the Pluecker embedding of G(d, m), for d in {2, 3}.

    d = 2: the three-term quadrics ``p_ij p_kl - p_ik p_jl + p_il p_jk``.
    d = 3: a linearly independent subset of the Grassmann-Pluecker quadrics
    spanning all of them over the context's field.
    """
    ring = ctx.ring
    if ctx.d == 2:
        gens = []
        for i, j, k, l in combinations(range(1, ctx.m + 1), 4):
            gens.append(ctx.p(i, j) * ctx.p(k, l) - ctx.p(i, k) * ctx.p(j, l) + ctx.p(i, l) * ctx.p(j, k))
        return Ideal(gens, ring)
    if ctx.d == 3:
        rels = grassmann_pluecker_relations(ctx)
        return Ideal(_independent_subset(rels), ring)
    raise UnsupportedContext(f"Pluecker ideals implemented for d in {{2, 3}}, got d={ctx.d}")


def _independent_subset(polys: list) -> list:
    if not polys:
        return []
    dom = polys[0].ring.domain
    monos = sorted({e for f in polys for e in f.terms}, reverse=True)
    col = {e: i for i, e in enumerate(monos)}
    chosen = []
    rows = []
    rank = 0
    for f in polys:
        row = [dom.zero] * len(monos)
        for e, c in f.terms.items():
            row[col[e]] = c
        trial = rows + [row]
        R, piv = rref(trial, dom)
        if len(piv) > rank:
            chosen.append(f)
            rows = R
            rank = len(piv)
    return chosen


def minor_vector(ctx: GrassmannContext, matrix: Sequence[Sequence]) -> dict:
    """Pluecker coordinates (maximal minors) of an ``m x d`` matrix."""
    dom = ctx.domain
    out = {}
    for t in ctx.tuples:
        sub = [[dom(matrix[i - 1][j]) for j in range(ctx.d)] for i in t]
        out[_name("p", t)] = determinant(sub, dom)
    return out


def determinant(A, dom: CoefficientDomain):
    A = [list(r) for r in A]
    n = len(A)
    det = dom.one
    p = dom.p
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return dom.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c]
        inv = dom.inv(A[c][c])
        for r in range(c + 1, n):
            f = A[r][c] * inv
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
                if p:
                    A[r] = [a % p for a in A[r]]
    return dom(det)


# --------------------------------------------------------------------------
# linear forms


def form_range(ctx: GrassmannContext) -> range:
    lo = comb(ctx.d + 1, 2)
    return range(lo, lo + ctx.n + 1)


def hyperplane_form(ctx: GrassmannContext, s: int) -> Polynomial:
    """Sum of the Pluecker variables whose index tuple sums to ``s``."""
    if s not in form_range(ctx):
        r = form_range(ctx)
        raise ValueError(f"index sum {s} outside {r.start}..{r.stop - 1}")
    ring = ctx.ring
    out = ring.zero
    for t in ctx.tuples:
        if sum(t) == s:
            out = out + ring.var(_name("p", t))
    return out


def v_forms(ctx: GrassmannContext) -> list:
    """``l_3, ..., l_{2m-1}`` without ``l_{m+1}`` (d = 2)."""
    if ctx.d != 2:
        raise UnsupportedContext("V is defined for d = 2")
    return [hyperplane_form(ctx, k) for k in range(3, 2 * ctx.m) if k != ctx.m + 1]


def v_ideal(ctx: GrassmannContext) -> Ideal:
    return Ideal(v_forms(ctx), ctx.ring)


def g36_forms(ctx: GrassmannContext) -> list:
    """The ten forms ``l_6, ..., l_15`` on G(3, 6)."""
    if (ctx.d, ctx.m) != (3, 6):
        raise UnsupportedContext("g36_forms needs d = 3, m = 6")
    return [hyperplane_form(ctx, s) for s in form_range(ctx)]


# --------------------------------------------------------------------------
# Schubert varieties (d = 2)


def _check_pair(ctx, pair):
    if ctx.d != 2:
        raise UnsupportedContext("Schubert ideals are implemented for d = 2")
    i, j = pair
    if not (1 <= i < j <= ctx.m):
        raise ValueError(f"invalid pair {pair} for m = {ctx.m}")


def schubert_vanishing(ctx: GrassmannContext, pair) -> list:
    """Variables ``p_ab`` with ``(a, b)`` not componentwise below ``pair``."""
    _check_pair(ctx, pair)
    i, j = pair
    return [ctx.p(a, b) for a, b in ctx.tuples if a > i or b > j]


def reverse_indices(ctx: GrassmannContext, f: Polynomial) -> Polynomial:
    """Image under the index reversal ``a -> m + 1 - a``."""
    m = ctx.m
    assignment = {}
    for t in ctx.tuples:
        s, rt = _signed([m + 1 - a for a in t])
        assignment[_name("p", t)] = ctx.ring.var(_name("p", rt))
    return f.subs(assignment)


def schubert_ideal(ctx: GrassmannContext, pair, variant: str = "standard", opposite_pair=None) -> Ideal:
    """Ideal of the Schubert variety ``Y_pair`` and its relatives.

    ``opposite`` is the image of the standard ideal under index reversal;
    ``richardson`` adds the standard ideal of ``pair`` and the opposite ideal
    of ``opposite_pair`` (default: the same pair).
    """
    _check_pair(ctx, pair)
    base = list(pluecker_ideal(ctx).gens)
    if variant == "standard":
        return Ideal(base + schubert_vanishing(ctx, pair), ctx.ring)
    if variant == "opposite":
        return Ideal(base + [reverse_indices(ctx, f) for f in schubert_vanishing(ctx, pair)], ctx.ring)
    if variant == "richardson":
        other = pair if opposite_pair is None else tuple(opposite_pair)
        _check_pair(ctx, other)
        return Ideal(base + schubert_vanishing(ctx, pair)
                     + [reverse_indices(ctx, f) for f in schubert_vanishing(ctx, other)], ctx.ring)
    raise ValueError(f"unknown variant {variant!r}")


def schubert_dimension(pair) -> int:
    i, j = pair
    return i + j - 3


def schubert_pairs_of_dimension(ctx: GrassmannContext, dim: int) -> list:
    return [t for t in ctx.tuples if schubert_dimension(t) == dim]


# --------------------------------------------------------------------------
# affine chart p_{1,m} = 1


def chart_ring(ctx: GrassmannContext) -> PolyRing:
    if ctx.d != 2:
        raise UnsupportedContext("the chart ideal is defined for d = 2")
    return PolyRing(tuple(_name("q", t) for t in ctx.tuples if t != (1, ctx.m)), ctx.domain)


def dehomogenize_at_corner(ctx: GrassmannContext, f: Polynomial) -> Polynomial:
    """``p_ab -> q_ab`` and ``p_1m -> 1``."""
    R = chart_ring(ctx)
    assignment = {}
    for t in ctx.tuples:
        name = _name("p", t)
        assignment[name] = R.one if t == (1, ctx.m) else R.var(_name("q", t))
    return f.subs(assignment, R)


def affine_chart_ideal(ctx: GrassmannContext) -> Ideal:
    """Ideal of X ∩ V in the chart ``p_1m = 1`` (dehomogenised Pluecker relations and V-forms)."""
    R = chart_ring(ctx)
    gens = [dehomogenize_at_corner(ctx, f) for f in pluecker_ideal(ctx).gens]
    gens += [dehomogenize_at_corner(ctx, f) for f in v_forms(ctx)]
    return Ideal(gens, R)


def section_point(ctx: GrassmannContext) -> dict:
    """The coordinate point ``e_{1,m}`` in Pluecker coordinates."""
    dom = ctx.domain
    return {_name("p", t): (dom.one if t == (1, ctx.m) else dom.zero) for t in ctx.tuples}


# --------------------------------------------------------------------------
# the involution of G(2, 4)


def tau_assignment(ctx: GrassmannContext) -> dict:
    if (ctx.d, ctx.m) != (2, 4):
        raise UnsupportedContext("tau is defined on G(2, 4)")
    out = {}
    for t in ctx.tuples:
        comp = tuple(sorted(set(range(1, 5)) - set(t)))
        out[_name("p", t)] = ctx.ring.var(_name("p", comp))
    return out


def tau_apply(ctx: GrassmannContext, f: Polynomial) -> Polynomial:
    """``p_ij -> p_kl`` with ``{i, j, k, l} = {1, 2, 3, 4}``."""
    return f.subs(tau_assignment(ctx))


def tau_point(ctx: GrassmannContext, coords: Sequence) -> tuple:
    """Action of tau on a coordinate vector (ordered like the ring variables)."""
    assignment = tau_assignment(ctx)
    names = ctx.ring.variables
    value = dict(zip(names, coords))
    # tau maps p_I to p_{I^c}, so the new I-coordinate is the old I^c one
    return tuple(value[str(assignment[v])] for v in names)
