"""F2 linear algebra on 2-torsion Brauer classes of Q.

A class is stored as its ramification set: the finite, even-cardinality set
of places where the local symbol is -1.  Addition is symmetric difference.
A subgroup is stored as the unique reduced echelon basis with respect to the
canonical place order, which makes subgroup equality structural and lets
subgroups serve as map keys.

All linear algebra runs on int bitsets over the finitely many places that
occur in a given computation, in the style of a dense GF(2) row reduction;
bit i of a row corresponds to the i-th smallest place in play.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .numtheory import Place


@functools.total_ordering
@dataclass(frozen=True)
class BrauerClass:
    """A 2-torsion Brauer class, i.e. an even finite set of places."""

    places: tuple[Place, ...]

    def __init__(self, places: Iterable[Place] = ()):
        normalized = tuple(sorted(set(places)))
        if len(normalized) % 2:
            raise ValueError(f"ramification set must have even size: {normalized}")
        object.__setattr__(self, "places", normalized)

    @property
    def is_trivial(self) -> bool:
        return not self.places

    def __lt__(self, other: "BrauerClass") -> bool:
        return self.places < other.places

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.places) + "}"

    def __repr__(self) -> str:
        return f"BrauerClass({self})"


TRIVIAL_CLASS = BrauerClass()


def class_add(x: BrauerClass, y: BrauerClass) -> BrauerClass:
    """Group law: symmetric difference of ramification sets."""
    return BrauerClass(set(x.places) ^ set(y.places))


@functools.total_ordering
@dataclass(frozen=True)
class Subgroup:
    """A finite F2-subspace of classes in canonical reduced echelon form.

    The pivot of a basis class is its smallest place.  Canonical form means
    pivots are strictly increasing and no pivot place is ramified in any
    other basis class; the representation of a subgroup is therefore unique
    and equality/hashing are structural.
    """

    basis: tuple[BrauerClass, ...]

    def __init__(self, basis: Iterable[BrauerClass] = ()):
        basis = tuple(basis)
        pivots = []
        for cls in basis:
            if cls.is_trivial:
                raise ValueError("zero class in a basis")
            pivots.append(cls.places[0])
        if any(q <= p for p, q in zip(pivots, pivots[1:])):
            raise ValueError("basis pivots must be strictly increasing")
        for i, cls in enumerate(basis):
            for j, pivot in enumerate(pivots):
                if i != j and pivot in cls.places:
                    raise ValueError("pivot place ramified in another basis class")
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_trivial(self) -> bool:
        return not self.basis

    def sort_key(self):
        return (self.dim, self.basis)

    def __lt__(self, other: "Subgroup") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "<" + ",".join(str(c) for c in self.basis) + ">"

    def __repr__(self) -> str:
        return f"Subgroup({self})"


TRIVIAL_SUBGROUP = Subgroup()


def _ambient(classes: Iterable[BrauerClass]) -> list[Place]:
    return sorted({p for cls in classes for p in cls.places})


def _to_bits(cls: BrauerClass, index: dict[Place, int]) -> int:
    bits = 0
    for p in cls.places:
        bits |= 1 << index[p]
    return bits


def _from_bits(bits: int, places: Sequence[Place]) -> BrauerClass:
    return BrauerClass(p for i, p in enumerate(places) if (bits >> i) & 1)


def _rref(rows: list[int], n_cols: int) -> list[int]:
    """Reduced row echelon form over GF(2); returns nonzero rows by pivot."""
    work = rows[:]
    cur = 0
    for col in range(n_cols):
        bit = 1 << col
        pivot = next((r for r in range(cur, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[cur], work[pivot] = work[pivot], work[cur]
        for r in range(len(work)):
            if r != cur and work[r] & bit:
                work[r] ^= work[cur]
        cur += 1
        if cur == len(work):
            break
    return work[:cur]


def span(classes: Iterable[BrauerClass]) -> Subgroup:
    """Canonical basis of the F2-span; independent of the input order."""
    classes = list(classes)
    places = _ambient(classes)
    index = {p: i for i, p in enumerate(places)}
    rows = _rref([_to_bits(c, index) for c in classes], len(places))
    return Subgroup(_from_bits(r, places) for r in rows)


def join(g1: Subgroup, g2: Subgroup) -> Subgroup:
    """Smallest subgroup containing both: the span of the two bases."""
    return span(g1.basis + g2.basis)


def contains(group: Subgroup, x: BrauerClass) -> bool:
    """Whether x reduces to the trivial class against the basis."""
    places = _ambient((*group.basis, x))
    index = {p: i for i, p in enumerate(places)}
    bits = _to_bits(x, index)
    for row_cls in group.basis:
        row = _to_bits(row_cls, index)
        pivot_bit = row & -row
        if bits & pivot_bit:
            bits ^= row
    return bits == 0


def subgroup_leq(g1: Subgroup, g2: Subgroup) -> bool:
    """Inclusion test via basis reduction."""
    return all(contains(g2, cls) for cls in g1.basis)


@dataclass(frozen=True)
class TransvectionOp:
    """The elementary move e[j] <- e[i] + e[j] on a list of classes."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("transvection needs distinct indices")
        if self.i < 0 or self.j < 0:
            raise ValueError("transvection indices must be nonnegative")


def replay(classes: Sequence[BrauerClass], ops: Iterable[TransvectionOp]) -> list[BrauerClass]:
    """Apply transvections sequentially to a copy of the list."""
    state = list(classes)
    for op in ops:
        if op.i >= len(state) or op.j >= len(state):
            raise IndexError(f"transvection {op} out of range for {len(state)} classes")
        state[op.j] = class_add(state[op.i], state[op.j])
    return state


def reduce_generators(
    classes: Sequence[BrauerClass],
) -> tuple[list[TransvectionOp], Subgroup]:
    """Transform a generating collection into (canonical basis, zero classes).

    Returns a transvection script and the canonical basis of the span.
    Replaying the script on a copy of the input yields exactly the basis
    classes in positions 0..dim-1 and the trivial class everywhere after.
    Every transvection is invertible over F2, so each intermediate state
    spans the same subgroup; position swaps are emulated by three
    transvections.
    """
    places = _ambient(classes)
    index = {p: i for i, p in enumerate(places)}
    rows = [_to_bits(c, index) for c in classes]
    ops: list[TransvectionOp] = []

    def transvect(i: int, j: int) -> None:
        rows[j] ^= rows[i]
        ops.append(TransvectionOp(i, j))

    def swap(i: int, j: int) -> None:
        if i != j:
            transvect(i, j)
            transvect(j, i)
            transvect(i, j)

    cur = 0
    for col in range(len(places)):
        bit = 1 << col
        pivot = next((r for r in range(cur, len(rows)) if rows[r] & bit), None)
        if pivot is None:
            continue
        swap(pivot, cur)
        for r in range(len(rows)):
            if r != cur and rows[r] & bit:
                transvect(cur, r)
        cur += 1
        if cur == len(rows):
            break
    basis = Subgroup(_from_bits(rows[k], places) for k in range(cur))
    return ops, basis
