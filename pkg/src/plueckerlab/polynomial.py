"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a mapping from exponent tuples to nonzero coefficients of a
:class:`~plueckerlab.domains.CoefficientDomain`.  Values are immutable; every
operation returns a new polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .domains import QQ, CoefficientDomain, DomainError

Exp = tuple


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = -1):
        self.pos = pos
        self.text = text
        if pos >= 0:
            message = f"{message} at position {pos}"
        super().__init__(message)


class RingMismatch(ValueError):
    pass


_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


# --------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or a block order.

    ``block`` with ``elim=k`` compares the first ``k`` variables by grevlex and
    breaks ties by grevlex on the remaining ones, so it eliminates the first
    ``k`` variables.
    """

    kind: str = "grevlex"
    elim: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.elim < 0:
            raise ValueError("block order needs elim >= 0")

    def __str__(self):
        return f"block({self.elim})" if self.kind == "block" else self.kind

    def key_function(self, weights: Sequence[int] | None = None):
        """Return ``key(exp)``: larger key means larger monomial.

        Keys are flat int tuples so negating every entry reverses the order
        (used for min-heaps).
        """
        if self.kind == "lex":
            return tuple
        if self.kind == "grevlex":
            if weights is None or all(w == 1 for w in weights):
                def key(e):
                    return (sum(e),) + tuple(-x for x in reversed(e))
            else:
                w = tuple(weights)

                def key(e):
                    return (sum(a * b for a, b in zip(w, e)),) + tuple(-x for x in reversed(e))
            return key
        k = self.elim
        w = tuple(weights) if weights is not None else None

        def key(e):
            head, tail = e[:k], e[k:]
            if w is None:
                d1, d2 = sum(head), sum(tail)
            else:
                d1 = sum(a * b for a, b in zip(w[:k], head))
                d2 = sum(a * b for a, b in zip(w[k:], tail))
            return ((d1,) + tuple(-x for x in reversed(head))
                    + (d2,) + tuple(-x for x in reversed(tail)))
        return key


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block(elim: int) -> MonomialOrder:
    return MonomialOrder("block", elim)


# --------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class PolyRing:
    variables: tuple
    domain: CoefficientDomain = QQ
    weights: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        for v in self.variables:
            if not _VAR_RE.match(v):
                raise ValueError(f"bad variable name {v!r}")
        if self.weights is not None:
            w = tuple(int(x) for x in self.weights)
            if len(w) != len(self.variables) or any(x <= 0 for x in w):
                raise ValueError("weights must be positive, one per variable")
            object.__setattr__(self, "weights", None if all(x == 1 for x in w) else w)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def degree_of(self, e: Exp) -> int:
        if self.weights is None:
            return sum(e)
        return sum(a * b for a, b in zip(self.weights, e))

    def __str__(self):
        return f"{','.join(self.variables)} over {self.domain}"

    # constructors ---------------------------------------------------------

    def zero_exp(self) -> Exp:
        return (0,) * len(self.variables)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.zero_exp(): c})

    def var(self, name: str) -> "Polynomial":
        e = [0] * len(self.variables)
        e[self.index(name)] = 1
        return Polynomial._clean(self, {tuple(e): self.domain.one})

    def gens(self) -> list:
        return [self.var(v) for v in self.variables]

    def monomial(self, e: Exp, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(e): c})

    def __call__(self, obj) -> "Polynomial":
        if isinstance(obj, Polynomial):
            if obj.ring == self:
                return obj
            return obj.change_ring(self)
        if isinstance(obj, str):
            return parse_poly(obj, self)
        return self.constant(obj)

    def with_domain(self, domain: CoefficientDomain) -> "PolyRing":
        return PolyRing(self.variables, domain, self.weights)

    def with_variables(self, variables: Sequence[str]) -> "PolyRing":
        return PolyRing(tuple(variables), self.domain, None)


# --------------------------------------------------------------------------
# polynomials


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping | None = None):
        dom = ring.domain
        n = ring.nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError("exponent length does not match ring")
            c = dom(c)
            if c:
                if e in clean:
                    c = dom(clean[e] + c)
                    if not c:
                        del clean[e]
                        continue
                clean[e] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _clean(cls, ring: PolyRing, terms: dict) -> "Polynomial":
        """Wrap an already-normalised term dict without copying."""
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(self.ring.zero_exp(), self.ring.domain.zero)

    def coefficient(self, e: Exp):
        return self.terms.get(tuple(e), self.ring.domain.zero)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.degree_of(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.degree_of(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> dict:
        out: dict = {}
        for e, c in self.terms.items():
            out.setdefault(self.ring.degree_of(e), {})[e] = c
        return {d: Polynomial._clean(self.ring, t) for d, t in out.items()}

    def support_variables(self) -> list:
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return [self.ring.variables[i] for i in sorted(used)]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list:
        key = order.key_function(self.ring.weights)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_exp(self, order: MonomialOrder = GREVLEX) -> Exp:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order.key_function(self.ring.weights)
        return max(self.terms, key=key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_exp(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self * self.ring.domain.inv(self.leading_coefficient(order))

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._clean(self.ring, _add(self.terms, other.terms, 1, self.ring.domain.p))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._clean(self.ring, _add(self.terms, other.terms, -1, self.ring.domain.p))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        p = self.ring.domain.p
        if p:
            return Polynomial._clean(self.ring, {e: p - c for e, c in self.terms.items()})
        return Polynomial._clean(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.domain(other)
            if not c:
                return self.ring.zero
            p = self.ring.domain.p
            if p:
                return Polynomial._clean(self.ring, {e: a * c % p for e, a in self.terms.items()})
            return Polynomial._clean(self.ring, {e: a * c for e, a in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._clean(self.ring, _mul(self.terms, other.terms, self.ring.domain.p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution -------------------------------------------

    def diff(self, var: str) -> "Polynomial":
        return partial_derivative(self, var)

    def subs(self, assignment: Mapping, target: PolyRing | None = None) -> "Polynomial":
        return substitute(self, assignment, target)

    def evaluate(self, point: Mapping | Sequence):
        """Value at a point given as a mapping or a coordinate sequence."""
        dom = self.ring.domain
        if isinstance(point, Mapping):
            used = {i for e in self.terms for i, k in enumerate(e) if k}
            missing = [self.ring.variables[i] for i in sorted(used) if self.ring.variables[i] not in point]
            if missing:
                raise ValueError(f"unassigned variable {missing[0]}")
            coords = [dom(point[v]) if v in point else dom.zero for v in self.ring.variables]
        else:
            coords = [dom(x) for x in point]
        total = dom.zero
        for e, c in self.terms.items():
            t = c
            for x, k in zip(coords, e):
                if k:
                    t = t * x ** k
            total += t
        return dom(total)

    def change_ring(self, ring: PolyRing) -> "Polynomial":
        """Map to a ring with a superset of the used variables (and maybe another domain)."""
        idx = [ring.index(v) for v in self.ring.variables]
        n = ring.nvars
        out = {}
        dom = ring.domain
        for e, c in self.terms.items():
            ne = [0] * n
            for i, k in enumerate(e):
                if k:
                    ne[idx[i]] = k
            if self.ring.domain.p and not dom.p:
                c = self.ring.domain.lift(c)
            out[tuple(ne)] = c
        return Polynomial(ring, out)

    # printing -----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _add(a: dict, b: dict, sign: int, p: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if p:
            v %= p
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def _mul(a: dict, b: dict, p: int) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    if p:
        return {e: c % p for e, c in out.items() if c % p}
    return {e: c for e, c in out.items() if c}


# --------------------------------------------------------------------------
# printing and parsing


def _format_monomial(e: Exp, names: Sequence[str]) -> str:
    parts = []
    for v, k in zip(names, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    """Terms in descending grevlex order; ``-`` folded into the separator."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    pieces = []
    for e, c in f.sorted_terms(GREVLEX):
        mono = _format_monomial(e, names)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start():
            break
        if m.group(1) is not None:
            toks.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("var", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            toks.append((ch, ch, m.start(3)))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", self.text, 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        tok = self.peek()
        if tok[0] in ("num", "var", "("):
            raise ParseError("missing '*' between factors", self.text, tok[2])
        return acc

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("num")
            base = base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", self.text, den[2])
                value = Fraction(int(tok[1]), int(den[1]))
            try:
                return self.ring.constant(value)
            except DomainError as exc:
                raise ParseError(f"coefficient not in domain: {exc}", self.text, tok[2]) from None
        if tok[0] == "var":
            self.take()
            if tok[1] not in self.ring._index:
                raise ParseError(f"unknown variable {tok[1]!r}", self.text, tok[2])
            return self.ring.var(tok[1])
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", self.text, tok[2])


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` (integers, ``a/b`` literals, ``+ - * ^``, parentheses)."""
    return _Parser(text, ring).parse()


# --------------------------------------------------------------------------
# substitution and derivatives


def substitute(f: Polynomial, assignment: Mapping, target: PolyRing | None = None) -> Polynomial:
    """Ring homomorphism sending each variable to its assigned image.

    Keys may be variable names or polynomials that are single variables.
    Values are polynomials of ``target`` (default: ``f.ring``) or constants.
    Unassigned variables go to the same-named variable of ``target``.
    """
    target = target or f.ring
    images = []
    amap = {}
    for k, v in assignment.items():
        name = k if isinstance(k, str) else _single_var(k)
        amap[name] = v
    for name in f.ring.variables:
        if name in amap:
            v = amap[name]
            if isinstance(v, Polynomial):
                if v.ring != target:
                    raise RingMismatch(f"image of {name} not in target ring")
            else:
                v = target.constant(v)
            images.append(v)
        elif name in target._index:
            images.append(target.var(name))
        else:
            raise KeyError(f"unassigned variable {name!r}")
    powers: list = [dict() for _ in images]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = images[i] ** k
        return cache[k]

    p = target.domain.p
    out: dict = {}
    src_p = f.ring.domain.p
    for e, c in f.terms.items():
        if src_p and not p:
            c = f.ring.domain.lift(c)
        c = target.domain(c)
        t = {target.zero_exp(): c}
        for i, k in enumerate(e):
            if k:
                t = _mul(t, power(i, k).terms, p)
                if not t:
                    break
        out = _add(out, t, 1, p)
    return Polynomial._clean(target, out)


def _single_var(p: Polynomial) -> str:
    if len(p.terms) == 1:
        (e, c), = p.terms.items()
        if c == 1 and sum(e) == 1:
            return p.ring.variables[e.index(1)]
    raise ValueError(f"{p} is not a variable")


def partial_derivative(f: Polynomial, var: str) -> Polynomial:
    i = f.ring.index(var) if isinstance(var, str) else f.ring.index(_single_var(var))
    dom = f.ring.domain
    out = {}
    for e, c in f.terms.items():
        k = e[i]
        if k:
            v = dom(c * k)
            if v:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = v
    return Polynomial._clean(f.ring, out)


def jacobian(gens: Sequence[Polynomial], variables: Sequence) -> list:
    """Matrix with entry ``(i, j) = d gens[i] / d variables[j]``."""
    return [[partial_derivative(g, v) for v in variables] for g in gens]


def evaluate_matrix(matrix: Sequence[Sequence[Polynomial]], point: Mapping) -> list:
    return [[entry.evaluate(point) for entry in row] for row in matrix]


def polys(ring: PolyRing, texts: Iterable[str]) -> list:
    return [parse_poly(t, ring) for t in texts]
