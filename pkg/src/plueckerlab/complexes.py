"""Graded complexes with polynomial-matrix differentials.

Position ``i`` of a :class:`FreeComplex` is ``⊕_k (S/J_i)(-a_k)``: a list of
twists ``a_k`` (the summand ``S(-a_k)`` has its generator in degree
``a_k``) and an optional quotient ideal ``J_i``, which is ``None`` for a free
module.  ``d_i : M_i -> M_{i-1}`` is a matrix whose column ``c`` is the image
of the ``c``-th generator of ``M_i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .ideals import Ideal, hilbert_data
from .linalg import rref
from .polynomial import GREVLEX, Polynomial, PolyRing


class ComplexError(ValueError):
    pass


def _monomials_of_degree(n: int, d: int) -> list:
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


@dataclass(frozen=True)
class FreeComplex:
    ring: PolyRing
    twists: tuple                 # twists[i]: tuple of a_k for position i
    differentials: tuple          # differentials[i-1] = d_i as a list of rows
    quotients: tuple = None       # quotients[i]: Ideal or None
    labels: tuple = None          # optional basis labels per position
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self):
        tw = tuple(tuple(t) for t in self.twists)
        object.__setattr__(self, "twists", tw)
        diffs = tuple(tuple(tuple(row) for row in d) for d in self.differentials)
        object.__setattr__(self, "differentials", diffs)
        if self.quotients is None:
            object.__setattr__(self, "quotients", (None,) * len(tw))
        if len(self.quotients) != len(tw):
            raise ComplexError("one quotient entry per position")
        if tw and len(diffs) != len(tw) - 1:
            raise ComplexError(f"{len(tw)} modules need {len(tw) - 1} differentials")
        if self.ring.weights is not None:
            raise ComplexError("complexes use the standard grading")
        for i, d in enumerate(diffs, start=1):
            rows, cols = len(tw[i - 1]), len(tw[i])
            if len(d) != rows or any(len(r) != cols for r in d):
                raise ComplexError(f"d_{i} should be {rows}x{cols}")
            for r in range(rows):
                for c in range(cols):
                    f = d[r][c]
                    if f.ring != self.ring:
                        raise ComplexError(f"d_{i}[{r}][{c}] is in another ring")
                    want = tw[i][c] - tw[i - 1][r]
                    if f and (not f.is_homogeneous() or f.degree() != want):
                        raise ComplexError(
                            f"d_{i}[{r}][{c}] = {f} should be homogeneous of degree {want}")

    # --------------------------------------------------------------------

    @property
    def length(self) -> int:
        return max(len(self.twists) - 1, 0)

    def rank(self, i: int) -> int:
        return len(self.twists[i]) if 0 <= i < len(self.twists) else 0

    def differential(self, i: int):
        """``d_i`` as a tuple of rows (``1 <= i <= length``)."""
        return self.differentials[i - 1]

    def shifted(self, s: int) -> "FreeComplex":
        """Same complex with every twist increased by ``s`` (i.e. tensored with S(-s))."""
        return FreeComplex(self.ring, tuple(tuple(a + s for a in t) for t in self.twists),
                           self.differentials, self.quotients, self.labels)

    def _quotient_gb(self, i):
        J = self.quotients[i]
        if J is None or not J.gens:
            return None
        return J.groebner(GREVLEX)

    def reduce_at(self, i: int, f: Polynomial) -> Polynomial:
        gb = self._quotient_gb(i)
        return gb.reduce(f) if gb is not None else f

    def graded_basis(self, i: int, t: int) -> list:
        """Basis of ``(M_i)_t``: pairs ``(summand, monomial exponent)``."""
        key = ("basis", i, t)
        if key in self._cache:
            return self._cache[key]
        gb = self._quotient_gb(i)
        lead = gb.leading_exponents if gb is not None else []
        n = self.ring.nvars
        out = []
        for k, a in enumerate(self.twists[i]):
            for e in _monomials_of_degree(n, t - a):
                if lead and any(all(x <= y for x, y in zip(l, e)) for l in lead):
                    continue
                out.append((k, e))
        self._cache[key] = out
        return out

    def graded_map(self, i: int, t: int) -> list:
        """Matrix of ``d_i`` restricted to degree ``t`` (rows: target basis)."""
        src = self.graded_basis(i, t)
        tgt = self.graded_basis(i - 1, t)
        index = {b: r for r, b in enumerate(tgt)}
        dom = self.ring.domain
        d = self.differential(i)
        M = [[dom.zero] * len(src) for _ in tgt]
        for col, (k, e) in enumerate(src):
            u = self.ring.monomial(e)
            for r in range(len(d)):
                f = d[r][k]
                if not f:
                    continue
                img = self.reduce_at(i - 1, f * u)
                for ee, c in img.terms.items():
                    M[index[(r, ee)]][col] = c
        return M

    def graded_rank(self, i: int, t: int) -> int:
        if i < 1 or i > self.length:
            return 0
        key = ("rank", i, t)
        if key not in self._cache:
            M = self.graded_map(i, t)
            self._cache[key] = len(rref(M, self.ring.domain)[1]) if M and M[0] else 0
        return self._cache[key]

    def to_json(self) -> str:
        data = {
            "ring": {"variables": list(self.ring.variables), "domain": str(self.ring.domain)},
            "modules": [
                {"rank": len(t), "twists": list(t),
                 **({"quotient": [str(g) for g in q.gens]} if q is not None else {})}
                for t, q in zip(self.twists, self.quotients)
            ],
            "differentials": [[[str(f) for f in row] for row in d] for d in self.differentials],
        }
        return json.dumps(data, indent=2)


def complex_from_json(text: str) -> FreeComplex:
    from .domains import parse_domain
    data = json.loads(text)
    ring = PolyRing(tuple(data["ring"]["variables"]), parse_domain(data["ring"].get("domain", "Q")))
    twists = []
    quotients = []
    for m in data["modules"]:
        tw = m["twists"]
        if "rank" in m and m["rank"] != len(tw):
            raise ComplexError("rank does not match the number of twists")
        twists.append(tw)
        q = m.get("quotient")
        quotients.append(Ideal([ring(g) for g in q], ring) if q is not None else None)
    diffs = [[[ring(s) for s in row] for row in d] for d in data["differentials"]]
    return FreeComplex(ring, twists, diffs, tuple(quotients))


# --------------------------------------------------------------------------


def koszul_complex(gens: Sequence[Polynomial], twists: Sequence[int] | None = None,
                   shift: int = 0, ring: PolyRing | None = None) -> FreeComplex:
    """Koszul complex of homogeneous ``gens``.

    Position ``k`` has one generator ``e_s`` per ``k``-subset ``s``, listed in
    descending lexicographic order (``e_23, e_13, e_12`` for three
    generators), with twist ``shift + sum(twists[s])``.  The differential is
    ``e_s -> sum_j (-1)^(j+1) f_{s_j} e_{s - s_j}``.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ComplexError("pass ring= for an empty sequence")
        ring = gens[0].ring
    for g in gens:
        if g and not g.is_homogeneous():
            raise ComplexError(f"non-homogeneous generator: {g}")
    if twists is None:
        twists = [max(g.degree(), 0) for g in gens]
    twists = list(twists)
    if len(twists) != len(gens):
        raise ComplexError("one twist per generator")
    n = len(gens)
    bases = [sorted(combinations(range(n), k), reverse=True) for k in range(n + 1)]
    tw = [tuple(shift + sum(twists[j] for j in s) for s in b) for b in bases]
    diffs = []
    for k in range(1, n + 1):
        index = {s: r for r, s in enumerate(bases[k - 1])}
        M = [[ring.zero] * len(bases[k]) for _ in bases[k - 1]]
        for c, s in enumerate(bases[k]):
            for j, gi in enumerate(s):
                face = s[:j] + s[j + 1:]
                M[index[face]][c] = gens[gi] if j % 2 == 0 else -gens[gi]
        diffs.append(M)
    labels = tuple(tuple("e" + "".join(str(i + 1) for i in s) if s else "e" for s in b) for b in bases)
    return FreeComplex(ring, tw, diffs, None, labels)


def _matmul_poly(A, B, ring) -> list:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for c in range(cols):
            acc = ring.zero
            for k, a in enumerate(row):
                if a:
                    b = B[k][c]
                    if b:
                        acc = acc + a * b
            new.append(acc)
        out.append(new)
    return out


def is_complex(C: FreeComplex) -> bool:
    """Whether every ``d_{i-1} ∘ d_i`` vanishes (modulo the target quotient)."""
    return first_nonzero_composite(C) is None


def first_nonzero_composite(C: FreeComplex):
    """``(i, row, col, entry)`` of the first nonzero entry of some ``d_{i-1} d_i``."""
    for i in range(2, C.length + 1):
        prod = _matmul_poly(C.differential(i - 1), C.differential(i), C.ring)
        for r, row in enumerate(prod):
            for c, f in enumerate(row):
                f = C.reduce_at(i - 2, f)
                if f:
                    return (i, r, c, f)
    return None


def homology_dimension(C: FreeComplex, position: int, degree: int) -> int:
    """``dim_k H_position(C)_degree`` by exact linear algebra on graded pieces."""
    if position < 0 or position > C.length or not C.twists:
        raise ComplexError(f"position {position} out of range 0..{C.length}")
    dim = len(C.graded_basis(position, degree))
    return dim - C.graded_rank(position, degree) - C.graded_rank(position + 1, degree)


def default_window(C: FreeComplex) -> tuple:
    lo = min(min(t) for t in C.twists if t)
    return lo, lo + 2 * C.ring.nvars


def exact_in_window(C: FreeComplex, positions: Sequence[int], window: tuple) -> list:
    """List of ``(position, degree, dim)`` where homology does not vanish."""
    bad = []
    for i in positions:
        for t in range(window[0], window[1] + 1):
            h = homology_dimension(C, i, t)
            if h:
                bad.append((i, t, h))
    return bad


# --------------------------------------------------------------------------
# chain maps


@dataclass(frozen=True)
class ChainMap:
    """Per-position matrices ``f_i : source_i -> target_i`` (missing = zero)."""

    source: FreeComplex
    target: FreeComplex
    maps: dict

    def matrix(self, i: int):
        if i in self.maps:
            return self.maps[i]
        rows, cols = self.target.rank(i), self.source.rank(i)
        return [[self.target.ring.zero] * cols for _ in range(rows)]


def _check_shapes(m: ChainMap):
    if m.source.ring != m.target.ring:
        raise ComplexError("source and target live in different rings")
    for i, M in m.maps.items():
        rows, cols = m.target.rank(i), m.source.rank(i)
        if len(M) != rows or any(len(r) != cols for r in M):
            raise ComplexError(f"f_{i} should be {rows}x{cols}")


def chain_map_defect(m: ChainMap):
    """First square that fails to commute: ``(i, row, col, difference)`` or None."""
    _check_shapes(m)
    ring = m.source.ring
    top = max(m.source.length, m.target.length)
    for i in range(1, top + 1):
        ds = m.source.differential(i) if i <= m.source.length else None
        dt = m.target.differential(i) if i <= m.target.length else None
        # d^t_i ∘ f_i  vs  f_{i-1} ∘ d^s_i, both maps source_i -> target_{i-1}
        rows, cols = m.target.rank(i - 1), m.source.rank(i)
        left = _matmul_poly(dt, m.matrix(i), ring) if dt is not None else None
        right = _matmul_poly(m.matrix(i - 1), ds, ring) if ds is not None else None
        for r in range(rows):
            for c in range(cols):
                a = left[r][c] if left else ring.zero
                b = right[r][c] if right else ring.zero
                diff = m.target.reduce_at(i - 1, a - b)
                if diff:
                    return (i, r, c, diff)
    return None


def check_chain_map(m: ChainMap) -> bool:
    """True iff every square commutes identically."""
    return chain_map_defect(m) is None


def identity_map(C: FreeComplex) -> ChainMap:
    ring = C.ring
    maps = {i: [[ring.one if r == c else ring.zero for c in range(C.rank(i))] for r in range(C.rank(i))]
            for i in range(len(C.twists))}
    return ChainMap(C, C, maps)


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """``g ∘ f``."""
    if f.target is not g.source and f.target != g.source:
        raise ComplexError("chain maps are not composable")
    ring = f.source.ring
    positions = sorted(set(f.maps) | set(g.maps))
    maps = {}
    for i in positions:
        maps[i] = _matmul_poly(g.matrix(i), f.matrix(i), ring)
    return ChainMap(f.source, g.target, maps)


# --------------------------------------------------------------------------


def is_regular_sequence(gens: Sequence[Polynomial], ambient: Ideal) -> bool:
    """Codimension test for a homogeneous sequence on a Cohen-Macaulay quotient.

    True iff adding ``gens`` drops the projective dimension by ``len(gens)``.
    """
    for g in gens:
        if not g.is_homogeneous():
            raise ComplexError(f"non-homogeneous element: {g}")
    base = hilbert_data(ambient).proj_dim
    cut = hilbert_data(ambient + Ideal(list(gens), ambient.ring)).proj_dim
    return cut == base - len(gens)
