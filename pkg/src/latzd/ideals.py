"""Ideals, filters, prime ideals, quotients (I:x) and both radical variants.

Everything here is exhaustive: lattices in scope have at most eight
elements, so ideal enumeration walks all subsets and primality is a
full pair scan.  Enumeration order is canonical (cardinality, then the
sorted member tuple) so reports are byte-stable.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .lattice import Lattice


class RadicalVariant(enum.Enum):
    """Which prime family the radical intersects.

    CONTAINED: primes P with P <= I (the corrected reading).
    CONTAINING: primes P with I <= P (the original article's reading).
    """

    CONTAINED = "contained"
    CONTAINING = "containing"


@dataclass(frozen=True)
class IdealSet:
    """A subset of a lattice with verified status flags."""

    members: frozenset[int]
    lattice_size: int
    is_ideal: bool
    is_proper: bool
    is_prime: bool
    is_filter: bool

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def label_str(self, L: Lattice) -> str:
        return "{" + ",".join(L.labels[i] for i in self.sorted_members()) + "}"


@dataclass(frozen=True)
class RadicalResult:
    """Intersection of the qualifying prime family.

    ``value`` is absent when no prime qualifies; we deliberately do not
    adopt the empty-intersection-equals-L convention so that callers can
    tell a vacuous radical from one that happens to equal L.
    """

    value: Optional[frozenset[int]]
    family_size: int


def is_ideal(L: Lattice, S: Iterable[int]) -> bool:
    """Non-empty, down-closed and join-closed."""
    members = frozenset(S)
    if not members:
        return False
    for x in members:
        L._check_index(x)
        down = L.down[x]
        for y in L.elements():
            if down >> y & 1 and y not in members:
                return False
    for x, y in itertools.combinations(members, 2):
        if L.join(x, y) not in members:
            return False
    return True


def is_filter(L: Lattice, S: Iterable[int]) -> bool:
    """Non-empty, up-closed and meet-closed."""
    members = frozenset(S)
    if not members:
        return False
    for x in members:
        L._check_index(x)
        up = L.up[x]
        for y in L.elements():
            if up >> y & 1 and y not in members:
                return False
    for x, y in itertools.combinations(members, 2):
        if L.meet(x, y) not in members:
            return False
    return True


def is_prime_ideal(L: Lattice, S: Iterable[int]) -> bool:
    """Proper ideal with meet(a, b) in S implying a in S or b in S.

    Cross-checked against the complement characterization: S is prime
    iff its complement is a (prime) filter.
    """
    members = frozenset(S)
    if not is_ideal(L, members) or len(members) == L.n:
        return False
    direct = True
    for a in L.elements():
        for b in range(a, L.n):
            if L.meet(a, b) in members and a not in members and b not in members:
                direct = False
                break
        if not direct:
            break
    complement = frozenset(L.elements()) - members
    via_filter = is_filter(L, complement)
    assert direct == via_filter, "prime-ideal characterizations disagree"
    return direct


def make_ideal(L: Lattice, members: Iterable[int]) -> IdealSet:
    """Classify a subset and package it with verified flags."""
    ms = frozenset(members)
    for x in ms:
        L._check_index(x)
    ideal = is_ideal(L, ms)
    return IdealSet(
        members=ms,
        lattice_size=L.n,
        is_ideal=ideal,
        is_proper=len(ms) < L.n,
        is_prime=is_prime_ideal(L, ms) if ideal else False,
        is_filter=is_filter(L, ms),
    )


def require_ideal(L: Lattice, I: IdealSet, proper: bool = False) -> None:
    if I.lattice_size != L.n:
        raise ValueError("ideal belongs to a different lattice")
    if not I.is_ideal:
        raise ValueError("set is not an ideal")
    if proper and not I.is_proper:
        raise ValueError("ideal must be proper")


def _canonical_order(sets: list[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(sets, key=lambda s: (len(s), tuple(sorted(s))))


def enumerate_ideals(L: Lattice) -> list[IdealSet]:
    """All ideals of L, in canonical order."""
    found: list[frozenset[int]] = []
    for mask in range(1, 1 << L.n):
        members = frozenset(i for i in L.elements() if mask >> i & 1)
        if is_ideal(L, members):
            found.append(members)
    return [make_ideal(L, s) for s in _canonical_order(found)]


def enumerate_prime_ideals(L: Lattice) -> list[IdealSet]:
    return [I for I in enumerate_ideals(L) if I.is_prime]


def quotient_ideal(L: Lattice, I: IdealSet, x: int) -> frozenset[int]:
    """(I:x) = {z : z ^ x in I}; an ideal whenever L is distributive."""
    require_ideal(L, I)
    L._check_index(x)
    return frozenset(z for z in L.elements() if L.meet(z, x) in I.members)


def _qualifying_primes(L: Lattice, I: IdealSet, variant: RadicalVariant) -> list[IdealSet]:
    primes = enumerate_prime_ideals(L)
    if variant is RadicalVariant.CONTAINED:
        return [P for P in primes if P.members <= I.members]
    return [P for P in primes if I.members <= P.members]


def radical(L: Lattice, I: IdealSet, variant: RadicalVariant) -> RadicalResult:
    """Intersect the primes contained in I (or containing I)."""
    require_ideal(L, I)
    family = _qualifying_primes(L, I, variant)
    if not family:
        return RadicalResult(value=None, family_size=0)
    value = frozenset(L.elements())
    for P in family:
        value &= P.members
    return RadicalResult(value=value, family_size=len(family))


def is_finite_intersection_of_primes(
    L: Lattice, I: IdealSet, variant: RadicalVariant
) -> Optional[list[IdealSet]]:
    """Minimal family of qualifying primes whose intersection equals I.

    Any witness member must contain I (an intersection only shrinks),
    so candidates outside that cone are pruned up front.  Subfamilies
    are tried in increasing size; the first hit is minimal.
    """
    require_ideal(L, I)
    candidates = [P for P in _qualifying_primes(L, I, variant) if I.members <= P.members]
    for size in range(1, len(candidates) + 1):
        for family in itertools.combinations(candidates, size):
            value = frozenset(L.elements())
            for P in family:
                value &= P.members
            if value == I.members:
                return list(family)
    return None
