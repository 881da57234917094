"""Hilbert series numerators of monomial ideals.

For a monomial ideal ``I`` in ``k[x_1..x_n]`` the series of ``S/I`` is
``N(t) / prod(1 - t^w_i)``; ``N`` is returned as a list of integer
coefficients, lowest power first.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _trim(a: list) -> list:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def minimalize(gens: Iterable[tuple]) -> tuple:
    """Minimal generators, sorted; drops any generator divisible by another."""
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def hilbert_numerator(gens: Sequence[tuple], weights: Sequence[int] | None = None) -> list:
    """Numerator of the Hilbert series of ``S / (monomials)``."""
    gens = list(gens)
    if not gens:
        return [1]
    n = len(gens[0])
    w = tuple(weights) if weights is not None else (1,) * n
    return _trim(list(_numerator(minimalize(gens), w)))


def _deg(e, w):
    return sum(a * b for a, b in zip(e, w))


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple, w: tuple) -> tuple:
    if not gens:
        return (1,)
    if any(not any(g) for g in gens):
        return (0,)
    # split into variable-disjoint blocks; the numerator is multiplicative
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in gens]
    blocks = _components(supports)
    if len(blocks) > 1:
        out = [1]
        for blk in blocks:
            out = _pmul(out, list(_numerator(tuple(sorted(gens[i] for i in blk)), w)))
        return tuple(out)
    if len(gens) == 1:
        d = _deg(gens[0], w)
        out = [0] * (d + 1)
        out[0] += 1
        out[d] -= 1
        return tuple(out)
    # pivot on the variable occurring in most generators
    counts = [0] * len(w)
    for g in gens:
        for i, x in enumerate(g):
            if x:
                counts[i] += 1
    v = max(range(len(w)), key=lambda i: (counts[i], -i))
    e = min(g[v] for g in gens if g[v])
    pivot = tuple(e if i == v else 0 for i in range(len(w)))
    # I + (pivot): generators divisible by pivot disappear
    plus = [g for g in gens if g[v] < e] + [pivot]
    # I : pivot
    colon = [tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens]
    left = list(_numerator(minimalize(plus), w))
    right = list(_numerator(minimalize(colon), w))
    shift = _deg(pivot, w)
    right = [0] * shift + right
    return tuple(_padd(left, right))


def _components(supports: list) -> list:
    n = len(supports)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner: dict = {}
    for i, s in enumerate(supports):
        for v in s:
            if v in owner:
                ra, rb = find(i), find(owner[v])
                if ra != rb:
                    parent[ra] = rb
            else:
                owner[v] = i
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def divide_one_minus_t(num: list):
    """``(quotient, times)``: strip as many ``(1 - t)`` factors as possible."""
    num = _trim(list(num))
    k = 0
    while any(num) and sum(num) == 0:
        # synthetic division by (1 - t): q_i = sum_{j<=i} a_j
        q = []
        acc = 0
        for a in num[:-1]:
            acc += a
            q.append(acc)
        num = _trim(q) if q else [0]
        k += 1
    return num, k


def hilbert_function_from_series(num: list, nvars: int, degree: int) -> int:
    """Value of the Hilbert function in ``degree`` (standard grading)."""
    from math import comb
    total = 0
    for i, a in enumerate(num):
        d = degree - i
        if d >= 0 and a:
            total += a * comb(d + nvars - 1, nvars - 1)
    return total
