"""Exhaustive enumeration of projective points over a small prime field.

Points of P^{n-1}(F_p) are listed once each, normalised so that the first
nonzero coordinate is 1, as rows of an integer array.  Polynomials are
evaluated on all rows at once.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .polynomial import Polynomial


def projective_space(n: int, p: int) -> np.ndarray:
    """All normalised points of P^{n-1}(F_p), shape ``((p^n - 1)/(p - 1), n)``."""
    blocks = []
    for lead in range(n):
        free = n - lead - 1
        count = p ** free
        block = np.zeros((count, n), dtype=np.int64)
        block[:, lead] = 1
        idx = np.arange(count, dtype=np.int64)
        for j in range(free):
            block[:, n - 1 - j] = idx % p
            idx //= p
        blocks.append(block)
    return np.concatenate(blocks)


def evaluate(f: Polynomial, points: np.ndarray, p: int) -> np.ndarray:
    """Values of ``f`` (integer coefficients read mod p) on every row."""
    out = np.zeros(points.shape[0], dtype=np.int64)
    for e, c in f.terms.items():
        c = Fraction(c)
        c = c.numerator * pow(c.denominator, -1, p) % p
        term = np.full(points.shape[0], c, dtype=np.int64)
        for i, k in enumerate(e):
            for _ in range(k):
                term = term * points[:, i] % p
        out = (out + term) % p
    return out


def vanishing_mask(polys, points: np.ndarray, p: int) -> np.ndarray:
    """Boolean mask of rows where every polynomial vanishes."""
    mask = np.ones(points.shape[0], dtype=bool)
    for f in polys:
        mask &= evaluate(f, points, p) == 0
    return mask
