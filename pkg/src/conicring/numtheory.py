"""Exact rational arithmetic, bounded factorization, and local Hilbert symbols over Q.

Everything is pure and exact.  Rationals are `fractions.Fraction` (always in
lowest terms with positive denominator, so equality is structural).
Factorization is trial division with an explicit bound that fails loudly
rather than ever returning a wrong answer.  Hilbert symbols are evaluated by
the classical closed-form local formulas: sign analysis at the real place,
valuations and Legendre symbols at odd primes, and the epsilon/omega
characters of odd parts at 2.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FactorBoundExceeded, ParseError

#: The coefficient field of every conic: exact arbitrary-precision fractions.
Rational = Fraction

DEFAULT_FACTOR_BOUND = 10**6

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse the restricted rational syntax: optional sign, integer, optional /positive-integer."""
    if not _RATIONAL_RE.fullmatch(text):
        raise ParseError(f"not a rational number: {text!r}")
    num, slash, den = text.partition("/")
    if slash and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den)) if slash else Fraction(int(num))


def is_prime(n: int) -> bool:
    """Primality by trial division; intended for desk-scale inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> tuple[int, dict[int, int]]:
    """Factor a nonzero integer by trial division up to `bound`.

    Returns (sign, {prime: exponent}) with primes ascending.  A leftover
    cofactor with no divisor <= bound is prime whenever it is <= bound**2 and
    is then included; a larger one raises FactorBoundExceeded since trial
    division cannot certify it.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if bound < 1:
        raise ValueError("bound must be positive")
    sign = 1 if n > 0 else -1
    m = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d <= bound and d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors[d] = e
        d += 1 if d == 2 else 2
    if m > 1:
        if m > bound * bound:
            raise FactorBoundExceeded(m, bound)
        factors[m] = factors.get(m, 0) + 1
    return sign, factors


def squarefree_part(q: Fraction | int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """The squarefree integer representing the square class of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("0 has no square class")
    # n/d and n*d differ by the square d^2.
    sign, factors = factor(q.numerator * q.denominator, bound)
    part = sign
    for p, e in factors.items():
        if e % 2:
            part *= p
    return part


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, via Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@functools.total_ordering
@dataclass(frozen=True)
class Place:
    """A place of Q: a finite prime p, or the real place (p is None).

    The canonical total order is 2 < 3 < 5 < ... < real.
    """

    p: int | None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @classmethod
    def real(cls) -> "Place":
        return cls(None)

    @property
    def is_real(self) -> bool:
        return self.p is None

    def _key(self) -> tuple[int, int]:
        return (1, 0) if self.p is None else (0, self.p)

    def __lt__(self, other: "Place") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)

    def __repr__(self) -> str:
        return f"Place({self.p!r})"


REAL = Place.real()


def _odd_part(n: int, p: int) -> tuple[int, int]:
    """Write n = p**e * u with p not dividing u; return (e, u)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def _eps(u: int) -> int:
    """(u - 1)/2 mod 2 for odd u: detects u = 3 mod 4."""
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    """(u^2 - 1)/8 mod 2 for odd u: detects u = +-3 mod 8."""
    return ((u * u - 1) // 8) % 2


def hilbert_symbol(
    a: Fraction | int,
    b: Fraction | int,
    place: Place,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> int:
    """Local Hilbert symbol (a, b) at a place of Q, in {+1, -1}.

    +1 exactly when x^2 - a*y^2 - b*z^2 = 0 has a nontrivial solution over
    the completion at the place.  Inputs are reduced to squarefree integers
    first; the symbol only depends on square classes.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol requires nonzero arguments")
    sa = squarefree_part(a, factor_bound)
    sb = squarefree_part(b, factor_bound)
    if place.is_real:
        return -1 if sa < 0 and sb < 0 else 1
    p = place.p
    alpha, u = _odd_part(sa, p)
    beta, w = _odd_part(sb, p)
    if p == 2:
        exponent = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if exponent % 2 else 1
    sign = 1
    if alpha and beta and ((p - 1) // 2) % 2:
        sign = -sign
    if beta:
        sign *= legendre(u, p)
    if alpha:
        sign *= legendre(w, p)
    return sign


def candidate_places(
    a: Fraction | int,
    b: Fraction | int,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> list[Place]:
    """Every place where the symbol (a, b) could be -1, in canonical order.

    Always includes 2 and the real place, plus the odd primes dividing a
    numerator or denominator of either argument; at any other place both
    arguments are units at an odd prime, so the symbol is +1.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("candidate places require nonzero arguments")
    odd: set[int] = set()
    for n in (a.numerator, a.denominator, b.numerator, b.denominator):
        _, factors = factor(n, factor_bound)
        odd.update(q for q in factors if q != 2)
    return [Place.finite(2), *(Place.finite(q) for q in sorted(odd)), REAL]
