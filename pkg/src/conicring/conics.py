"""Smooth conics over Q as quaternion symbols.

A conic is the diagonal curve x1^2 - a*x2^2 - b*x3^2 = 0, stored with a, b
reduced to squarefree integers (square-class representatives).  Its Brauer
class is the set of places where the local symbol (a, b) is -1, which is a
complete isomorphism invariant; the conic has a rational point exactly when
that set is empty.

The product of two classes is realized on conics through a common quadratic
splitting field Q(sqrt(d)): both conics are rewritten as (d, b') and (d, c'),
and (d, b'c') represents the sum of the classes.  Every bounded search here
is deterministic (height order) and verified exactly before returning.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .brauer import BrauerClass, class_add
from .errors import InvalidConic, SearchBoundExceeded
from .numtheory import (
    DEFAULT_FACTOR_BOUND,
    Place,
    candidate_places,
    factor,
    hilbert_symbol,
    legendre,
    squarefree_part,
)

DEFAULT_SEARCH_BOUND = 10**4


@dataclass(frozen=True)
class Conic:
    """Diagonal conic x1^2 - a*x2^2 - b*x3^2 = 0 with squarefree a, b."""

    a: int
    b: int

    def __post_init__(self):
        for c in (self.a, self.b):
            if c == 0:
                raise InvalidConic("coefficients of a smooth conic must be nonzero")
            if not _squarefree_small(abs(c)):
                raise InvalidConic(f"{c} is not squarefree; construct via new_conic")

    def __str__(self) -> str:
        return f"Conic({self.a},{self.b})"

    def text_form(self) -> str:
        """The two-column file syntax, e.g. "-1 3"."""
        return f"{self.a} {self.b}"

    def value_at(self, x1, x2, x3):
        """Evaluate x1^2 - a*x2^2 - b*x3^2; accepts rationals or QuadExtElem."""
        x1, x2, x3 = (_as_quad(v) for v in (x1, x2, x3))
        return x1 * x1 - self.a * (x2 * x2) - self.b * (x3 * x3)


def new_conic(a, b, factor_bound: int = DEFAULT_FACTOR_BOUND) -> Conic:
    """Validate and square-class-reduce coefficients into a Conic."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise InvalidConic("coefficients of a smooth conic must be nonzero")
    return Conic(squarefree_part(a, factor_bound), squarefree_part(b, factor_bound))


@functools.lru_cache(maxsize=None)
def _ramification(a: int, b: int, factor_bound: int) -> BrauerClass:
    ramified = [
        v for v in candidate_places(a, b, factor_bound)
        if hilbert_symbol(a, b, v, factor_bound) == -1
    ]
    return BrauerClass(ramified)


def brauer_class(conic: Conic, factor_bound: int = DEFAULT_FACTOR_BOUND) -> BrauerClass:
    """The ramification set of the conic's quaternion symbol."""
    return _ramification(conic.a, conic.b, factor_bound)


def has_rational_point(conic: Conic, factor_bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Split test: a point exists over Q iff no place ramifies (Hasse-Minkowski)."""
    return brauer_class(conic, factor_bound).is_trivial


def is_isomorphic(c1: Conic, c2: Conic, factor_bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Conics are isomorphic iff their classes agree."""
    return brauer_class(c1, factor_bound) == brauer_class(c2, factor_bound)


def admits_rational_map(c1: Conic, c2: Conic, factor_bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Whether a rational map c1 -> c2 exists: c2 is split, or c1 and c2 are isomorphic."""
    cls2 = brauer_class(c2, factor_bound)
    return cls2.is_trivial or brauer_class(c1, factor_bound) == cls2


def _signed_squarefree(limit: int) -> Iterator[int]:
    """1, -1, 2, -2, 3, -3, 5, -5, 6, ... : squarefree integers in height order."""
    for n in range(1, limit + 1):
        if _squarefree_small(n):
            yield n
            yield -n


@functools.lru_cache(maxsize=None)
def _squarefree_small(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _nonsquare_in_completion(d: int, place: Place) -> bool:
    """Whether a squarefree d is a nonsquare in the completion at the place."""
    if place.is_real:
        return d < 0
    p = place.p
    if d % p == 0:
        return True  # odd valuation
    if p == 2:
        return d % 8 != 1
    return legendre(d, p) == -1


def common_splitting_discriminant(
    c1: Conic,
    c2: Conic,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> int:
    """Smallest squarefree d (by |d|, ties positive) with Q(sqrt(d)) splitting both.

    d works iff it is a nonsquare in the completion at every ramified place
    of either conic; d = 1 is returned exactly when both conics are split.
    """
    ramified = sorted(
        set(brauer_class(c1, factor_bound).places)
        | set(brauer_class(c2, factor_bound).places)
    )
    for d in _signed_squarefree(search_bound):
        if all(_nonsquare_in_completion(d, v) for v in ramified):
            return d
    raise SearchBoundExceeded(
        f"no common splitting discriminant with |d| <= {search_bound}"
    )


def _rewrite_candidates(
    target: BrauerClass, d: int, search_bound: int, factor_bound: int
) -> list[int]:
    """Candidate second coefficients for presenting `target` as (d, e).

    The symbol (d, e) ramifies at an odd prime q not dividing d only when
    q divides e, so the odd primes of the target outside d are mandatory
    factors.  The remaining local conditions (at 2, the real place, and the
    primes of d) are adjusted by the sign, a factor of 2, primes dividing d,
    and small auxiliary primes at which d is a square (those never add
    ramification of their own).
    """
    odd_target = {v.p for v in target.places if not v.is_real and v.p != 2}
    mandatory = math.prod(q for q in odd_target if d % q != 0)
    _, d_factors = factor(d, factor_bound)
    optional = {2} | {q for q in d_factors if q != 2} | {
        r for r in (3, 5, 7, 11, 13)
        if r not in odd_target and d % r != 0 and legendre(d, r) == 1
    }
    values: set[int] = set()
    for size in range(len(optional) + 1):
        for combo in itertools.combinations(sorted(optional), size):
            v = mandatory * math.prod(combo)
            if v <= search_bound:
                values.update((v, -v))
    return sorted(values, key=lambda v: (abs(v), v < 0))


def rewrite_with_discriminant(
    conic: Conic,
    d: int,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> Conic:
    """Present the conic's class as (d, e): same Brauer class, first coefficient d.

    e is found by a bounded height-order search over squarefree integers
    built from the primes relevant to the conic's class and small auxiliary
    primes; every candidate is verified exactly by class equality, so the
    result is correct by construction.
    """
    target = brauer_class(conic, factor_bound)
    if d == 1 and not target.is_trivial:
        raise ValueError("d = 1 cannot present a non-split conic")
    for v in target.places:
        if not _nonsquare_in_completion(d, v):
            raise ValueError(f"Q(sqrt({d})) does not split {conic}")
    for e in _rewrite_candidates(target, d, search_bound, factor_bound):
        candidate = Conic(d, e)
        if brauer_class(candidate, factor_bound) == target:
            return candidate
    raise SearchBoundExceeded(
        f"no coefficient e with |e| <= {search_bound} presents {conic} over sqrt({d})"
    )


def brauer_product(
    c1: Conic,
    c2: Conic,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> Conic:
    """A conic whose class is the sum of the two input classes.

    With a shared first coefficient the product of (a, b) and (a, c) is
    (a, bc) directly.  Otherwise both conics are rewritten over a common
    splitting discriminant: candidates d are scanned in height order and the
    first one whose two rewrites fit the search bound wins.  The class
    additivity of the result is checked exactly before returning.
    """
    if c1.a == c2.a:
        left, right = c1, c2
    else:
        ramified = sorted(
            set(brauer_class(c1, factor_bound).places)
            | set(brauer_class(c2, factor_bound).places)
        )
        for d in _signed_squarefree(search_bound):
            if not all(_nonsquare_in_completion(d, v) for v in ramified):
                continue
            try:
                left = rewrite_with_discriminant(c1, d, search_bound, factor_bound)
                right = rewrite_with_discriminant(c2, d, search_bound, factor_bound)
            except SearchBoundExceeded:
                continue
            break
        else:
            raise SearchBoundExceeded(
                f"no common presentation of {c1} and {c2} within {search_bound}"
            )
    product = new_conic(left.a, Fraction(left.b) * Fraction(right.b), factor_bound)
    expected = class_add(brauer_class(c1, factor_bound), brauer_class(c2, factor_bound))
    if brauer_class(product, factor_bound) != expected:
        raise AssertionError(
            f"product {product} of {c1}, {c2} fails class additivity"
        )
    return product


def conic_from_class(
    cls: BrauerClass,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> Conic:
    """A conic realizing a given ramification set, by verified bounded search.

    Candidate coefficients are signed squarefree products of the odd primes
    in the set together with 2 and a few small auxiliary primes; pairs are
    tried in height order and each is checked exactly by classification.
    """
    primes = sorted(
        {p.p for p in cls.places if not p.is_real} | {2, 3, 5, 7, 11, 13}
    )
    values: list[int] = []
    for r in range(len(primes) + 1):
        for combo in itertools.combinations(primes, r):
            v = math.prod(combo)
            if v <= search_bound:
                values.append(v)
    values = sorted(
        (s * v for v in values for s in (1, -1)), key=lambda v: (abs(v), v < 0)
    )
    for n, vn in enumerate(values):
        for i in range(n + 1):
            vi = values[i]
            pairs = ((vn, vn),) if i == n else ((vi, vn), (vn, vi))
            for a, b in pairs:
                candidate = Conic(a, b)
                if brauer_class(candidate, factor_bound) == cls:
                    return candidate
    raise SearchBoundExceeded(
        f"no conic with coefficients <= {search_bound} realizes {cls}"
    )


@dataclass(frozen=True)
class QuadExtElem:
    """An element u + v*sqrt(d) of Q(sqrt(d)), d a squarefree nonzero integer.

    Rational elements are normalized to d = 1 with v = 0, so equality is
    structural; elements over different nontrivial discriminants cannot be
    combined.
    """

    d: int
    u: Fraction
    v: Fraction

    def __init__(self, d: int, u, v=0):
        if d == 0 or not _squarefree_small(abs(d)):
            raise ValueError("discriminant must be a squarefree nonzero integer")
        u, v = Fraction(u), Fraction(v)
        if d == 1:
            u, v = u + v, Fraction(0)
        elif v == 0:
            d = 1
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def _common_d(self, other: "QuadExtElem") -> int:
        if self.d == other.d or other.d == 1:
            return self.d
        if self.d == 1:
            return other.d
        raise ValueError(f"incompatible discriminants {self.d} and {other.d}")

    def __add__(self, other):
        other = _as_quad(other)
        return QuadExtElem(self._common_d(other), self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(self.d, -self.u, -self.v)

    def __sub__(self, other):
        return self + (-_as_quad(other))

    def __rsub__(self, other):
        return _as_quad(other) + (-self)

    def __mul__(self, other):
        other = _as_quad(other)
        d = self._common_d(other)
        return QuadExtElem(
            d,
            self.u * other.u + d * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.v == 0:
            return str(self.u)
        head = f"{self.u}+" if self.u else ""
        return f"{head}{self.v}*sqrt({self.d})"


def _as_quad(value) -> QuadExtElem:
    if isinstance(value, QuadExtElem):
        return value
    return QuadExtElem(1, Fraction(value))


def sqrt_of(d: int) -> QuadExtElem:
    """The element sqrt(d) of Q(sqrt(d))."""
    return QuadExtElem(d, 0, 1)


def phi_forward(
    a,
    x: tuple[QuadExtElem, QuadExtElem, QuadExtElem],
    y: tuple[QuadExtElem, QuadExtElem, QuadExtElem],
) -> tuple[QuadExtElem, QuadExtElem, QuadExtElem]:
    """The bilinear map (x, y) -> (x1*y1 + a*x2*y2, x1*y2 + x2*y1, x3*y3).

    Satisfies z1^2 - a*z2^2 = (x1^2 - a*x2^2)(y1^2 - a*y2^2) identically, so
    it carries a pair of points on conics with shared first coefficient a to
    a point on the conic (a, bc).
    """
    a = Fraction(a)
    x1, x2, x3 = (_as_quad(v) for v in x)
    y1, y2, y3 = (_as_quad(v) for v in y)
    return (x1 * y1 + a * (x2 * y2), x1 * y2 + x2 * y1, x3 * y3)


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A projective point with coordinates in a common Q(sqrt(d))."""

    coords: tuple[QuadExtElem, QuadExtElem, QuadExtElem]

    def __init__(self, coords: Iterable):
        coords = tuple(_as_quad(c) for c in coords)
        if len(coords) != 3:
            raise ValueError("projective point needs three coordinates")
        if all(c.is_zero for c in coords):
            raise ValueError("projective point cannot be all zero")
        d = 1
        for c in coords:
            if c.d != 1:
                if d != 1 and c.d != d:
                    raise ValueError("coordinates over different discriminants")
                d = c.d
        object.__setattr__(self, "coords", coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        a, b = self.coords, other.coords
        return all(
            (a[i] * b[j] - a[j] * b[i]).is_zero
            for i, j in ((0, 1), (0, 2), (1, 2))
        )

    __hash__ = None

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def rational_point(conic: Conic, search_bound: int = DEFAULT_SEARCH_BOUND) -> tuple[int, int, int]:
    """Deterministic primitive integer point on a split conic.

    Enumerates triples by ascending maximum coordinate, normalizing the sign
    so the first nonzero coordinate is positive.
    """
    a, b = conic.a, conic.b
    for h in range(1, search_bound + 1):
        for x1 in range(-h, h + 1):
            for x2 in range(-h, h + 1):
                for x3 in range(-h, h + 1):
                    if max(abs(x1), abs(x2), abs(x3)) != h:
                        continue
                    if x1 * x1 - a * x2 * x2 - b * x3 * x3 != 0:
                        continue
                    if math.gcd(math.gcd(abs(x1), abs(x2)), abs(x3)) != 1:
                        continue
                    sign = 1 if next(v for v in (x1, x2, x3) if v) > 0 else -1
                    return (sign * x1, sign * x2, sign * x3)
    raise SearchBoundExceeded(
        f"no rational point of height <= {search_bound} on {conic}"
    )


def point_over_splitting_field(
    conic: Conic,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    factor_bound: int = DEFAULT_FACTOR_BOUND,
) -> ProjPoint:
    """A point on the conic over its splitting field.

    A split conic gets a rational point by bounded height search.  A
    non-split conic must be presented as (d, e) with d its splitting
    discriminant; the point is then (sqrt(d) : 1 : 0).
    """
    if has_rational_point(conic, factor_bound):
        return ProjPoint(rational_point(conic, search_bound))
    return ProjPoint((sqrt_of(conic.a), 1, 0))
