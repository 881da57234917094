"""Exact dense linear algebra over QQ and GF(p).

Matrices are lists of rows.  Entries are domain elements (``Fraction`` or
ints reduced mod ``p``); nothing here ever touches floating point.
"""

from __future__ import annotations

from typing import Sequence

from .domains import CoefficientDomain
from .polynomial import Polynomial


def constant_matrix(M: Sequence[Sequence], dom: CoefficientDomain) -> list:
    """Coerce entries to ``dom``; polynomial entries must be constants."""
    out = []
    for i, row in enumerate(M):
        new = []
        for j, x in enumerate(row):
            if isinstance(x, Polynomial):
                if not x.is_constant():
                    raise ValueError(f"entry ({i}, {j}) is not constant: {x}")
                x = x.constant_value()
            new.append(dom(x))
        out.append(new)
    return out


def rref(M: Sequence[Sequence], dom: CoefficientDomain, ncols: int | None = None):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    A = [list(r) for r in M]
    if not A:
        return [], []
    n = len(A[0]) if ncols is None else ncols
    p = dom.p
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(A)):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = dom.inv(A[r][c])
        row = A[r]
        if p:
            row = [x * inv % p for x in row]
        else:
            row = [x * inv for x in row]
        A[r] = row
        for i in range(len(A)):
            if i != r:
                f = A[i][c]
                if f:
                    other = A[i]
                    if p:
                        A[i] = [(a - f * b) % p for a, b in zip(other, row)]
                    else:
                        A[i] = [a - f * b for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def matrix_rank(M: Sequence[Sequence], dom: CoefficientDomain | None = None) -> int:
    """Exact rank.  Polynomial entries are allowed when they are constants."""
    if not M or not len(M[0]):
        return 0
    if dom is None:
        first = next((x for row in M for x in row if isinstance(x, Polynomial)), None)
        if first is None:
            raise ValueError("pass the coefficient domain for non-polynomial entries")
        dom = first.ring.domain
    A = constant_matrix(M, dom)
    return len(rref(A, dom)[1])


def nullspace(M: Sequence[Sequence], dom: CoefficientDomain, ncols: int | None = None) -> list:
    """Basis of ``{v : M v = 0}`` as a list of vectors."""
    n = len(M[0]) if M else (ncols or 0)
    R, pivots = rref(M, dom, n)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [dom.zero] * n
        v[f] = dom.one
        for row, pc in zip(R, pivots):
            v[pc] = dom(-row[f])
        basis.append(v)
    return basis


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], dom: CoefficientDomain) -> list:
    p = dom.p
    Bt = list(zip(*B)) if B else []
    out = []
    for row in A:
        new = []
        for col in Bt:
            s = sum(a * b for a, b in zip(row, col) if a and b)
            new.append(s % p if p else s)
        out.append(new)
    return out


def matvec(A: Sequence[Sequence], v: Sequence, dom: CoefficientDomain) -> list:
    p = dom.p
    out = []
    for row in A:
        s = sum(a * b for a, b in zip(row, v) if a and b)
        out.append(s % p if p else s)
    return out


def identity(n: int, dom: CoefficientDomain) -> list:
    return [[dom.one if i == j else dom.zero for j in range(n)] for i in range(n)]


def matpow(A: Sequence[Sequence], k: int, dom: CoefficientDomain) -> list:
    result = identity(len(A), dom)
    base = [list(r) for r in A]
    while k:
        if k & 1:
            result = matmul(result, base, dom)
        k >>= 1
        if k:
            base = matmul(base, base, dom)
    return result


def solve_in_span(basis: Sequence[Sequence], v: Sequence, dom: CoefficientDomain):
    """Coordinates of ``v`` in the span of ``basis`` vectors, or None."""
    if not basis:
        return [] if not any(v) else None
    k = len(basis)
    # augmented system: columns are basis vectors, last column is v
    rows = [[b[i] for b in basis] + [v[i]] for i in range(len(v))]
    R, pivots = rref(rows, dom, k + 1)
    if k in pivots:
        return None
    x = [dom.zero] * k
    for row, pc in zip(R, pivots):
        x[pc] = row[k]
    return x
