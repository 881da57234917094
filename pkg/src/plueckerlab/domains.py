"""Exact coefficient domains: the rationals and prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class CoefficientDomain:
    """Either ``QQ`` (``p == 0``) or the prime field ``GF(p)``.

    Elements of ``QQ`` are :class:`fractions.Fraction`; elements of ``GF(p)``
    are plain ints reduced into ``[0, p)``.
    """

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "prime-field" if self.p else "rationals"

    @property
    def is_prime_field(self) -> bool:
        return self.p != 0

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return f"F{self.p}" if self.p else "Q"

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, value):
        """Coerce an int, Fraction or ``"a/b"`` string into the domain."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p:
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise DomainError(f"{value} is not defined in GF({self.p})")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def elements(self):
        """All elements of a prime field (used by exhaustive scans)."""
        if not self.p:
            raise DomainError("QQ is infinite")
        return range(self.p)

    def lift(self, a) -> int | Fraction:
        """Symmetric integer representative (prime field) or the rational itself."""
        if self.p:
            return a - self.p if a > self.p // 2 else a
        return a


QQ = CoefficientDomain(0)


def GF(p: int) -> CoefficientDomain:
    return CoefficientDomain(p)


def parse_domain(text: str) -> CoefficientDomain:
    """``"Q"``/``"QQ"`` or ``"F7"``/``"GF7"``/``"Fp7"``."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    for prefix in ("GF", "Fp", "F"):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            return GF(int(t[len(prefix):]))
    raise DomainError(f"unknown coefficient domain {text!r}")
