"""Dense univariate polynomials over a coefficient domain.

Coefficient lists run from the constant term upwards; the zero polynomial
is ``[]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from .domains import CoefficientDomain


def trim(a: list) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def degree(a: list) -> int:
    return len(trim(a)) - 1


def _norm(dom, x):
    return x % dom.p if dom.p else x


def add(a, b, dom):
    n = max(len(a), len(b))
    return trim([_norm(dom, (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) for i in range(n)])


def sub(a, b, dom):
    n = max(len(a), len(b))
    return trim([_norm(dom, (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) for i in range(n)])


def mul(a, b, dom):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([_norm(dom, c) for c in out])


def monic(a, dom):
    a = trim(a)
    if not a:
        return a
    inv = dom.inv(a[-1])
    return [_norm(dom, c * inv) for c in a]


def divmod_poly(a, b, dom):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [dom.zero] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv = dom.inv(b[-1])
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = _norm(dom, r[-1] * inv)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = _norm(dom, r[shift + i] - c * y)
        r = trim(r)
    return trim(q), r


def gcd(a, b, dom):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b, dom)[1]
    return monic(a, dom)


def derivative(a, dom):
    return trim([_norm(dom, i * c) for i, c in enumerate(a)][1:])


def evaluate(a, x, dom):
    acc = dom.zero
    for c in reversed(a):
        acc = _norm(dom, acc * x + c)
    return acc


def _pth_root(a, p):
    """``b`` with ``b(x)^p = a(x)`` for ``a`` in ``F_p[x^p]`` (Frobenius fixes F_p)."""
    return [a[i] for i in range(0, len(a), p)]


def squarefree_part(a, dom):
    """Product of the distinct irreducible factors of ``a`` (monic)."""
    a = monic(a, dom)
    if len(a) <= 2:
        return a
    da = derivative(a, dom)
    if not da:
        # a(x) = b(x^p) = b(x)^p over F_p
        return squarefree_part(_pth_root(a, dom.p), dom)
    g = gcd(a, da, dom)
    w = divmod_poly(a, g, dom)[0]       # factors of multiplicity prime to p
    if not dom.p:
        return monic(w, dom)
    c = g
    while True:
        y = gcd(w, c, dom)
        if len(y) <= 1:
            break
        c = divmod_poly(c, y, dom)[0]
    if len(c) > 1:
        rest = squarefree_part(_pth_root(c, dom.p), dom)
        return monic(mul(w, rest, dom), dom)
    return monic(w, dom)


def is_squarefree(a, dom) -> bool:
    return degree(squarefree_part(a, dom)) == degree(a)


def roots(a, dom: CoefficientDomain) -> list:
    """Distinct roots of ``a`` in the coefficient domain, sorted."""
    a = trim(a)
    if not a:
        raise ValueError("the zero polynomial has every element as a root")
    if len(a) == 1:
        return []
    if dom.p:
        if dom.p > 200_000:
            raise ValueError("root scan limited to primes below 200000")
        return [x for x in range(dom.p) if not evaluate(a, x, dom)]
    return _rational_roots(a)


def _divisors(n: int) -> list:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _rational_roots(a) -> list:
    den = 1
    for c in a:
        den = den * Fraction(c).denominator // igcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in a]
    found = []
    if ints[0] == 0:
        found.append(Fraction(0))
        k = 0
        while ints[k] == 0:
            k += 1
        ints = ints[k:]
    if len(ints) > 1:
        for num in _divisors(ints[0]):
            for d in _divisors(ints[-1]):
                for s in (1, -1):
                    x = Fraction(s * num, d)
                    if x not in found and _int_eval(ints, x) == 0:
                        found.append(x)
    return sorted(found)


def _int_eval(ints, x):
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def to_string(a, var: str = "t") -> str:
    a = trim(a)
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)
