"""Circulant graphs over Z_n and the gcd-class structure of their connection sets.

A circulant graph lives on vertices {0, ..., n-1}; two vertices a, b are
adjacent iff (a - b) mod n belongs to the connection set S. S must be
symmetric (s in S implies n - s in S) so the graph is undirected, and must
not contain 0 (simple graphs only).

The gcd classes S_n(d) = {x in [1, n-1] : gcd(x, n) = d}, one per proper
divisor d of n, partition [1, n-1]. How S meets each class (empty, proper,
or full) drives the transfer classifier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import ContainsZero, EmptySet, InvalidOrder, NotADivisor, NotSymmetric


@dataclass(frozen=True)
class CirculantGraph:
    """Validated circulant graph: order n and canonical sorted connection set."""

    n: int
    connection_set: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.connection_set)

    def is_cycle(self) -> bool:
        """True when S = {1, n-1} (for n = 2 this is the single edge P_2)."""
        return self.connection_set == tuple(sorted({1, self.n - 1}))

    def set_pairs(self) -> tuple[tuple[int, ...], bool]:
        """Unordered pairs {s, n-s} with s < n-s, plus a flag for n/2 in S.

        The self-paired element n/2 (even n only) is reported separately
        because it contributes half the weight of a full pair.
        """
        pairs = tuple(s for s in self.connection_set if s < self.n - s)
        has_half = self.n % 2 == 0 and (self.n // 2) in self.connection_set
        return pairs, has_half

    def to_dict(self) -> dict:
        return {"n": self.n, "set": list(self.connection_set)}


def make_graph(n: int, members: Iterable[int]) -> CirculantGraph:
    """Build a validated CirculantGraph from raw integers.

    Members are reduced mod n, deduplicated, and sorted. Raises
    InvalidOrder, EmptySet, ContainsZero, or NotSymmetric (naming the
    offending element) on bad input.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidOrder(f"graph order must be an integer >= 2, got {n!r}")
    raw = list(members)
    if not raw:
        raise EmptySet("connection set is empty")
    reduced = {int(s) % n for s in raw}
    if 0 in reduced:
        raise ContainsZero("connection set contains 0 mod n; loops are not allowed")
    for s in sorted(reduced):
        if (n - s) % n not in reduced:
            raise NotSymmetric(f"connection set is missing {n - s} = n - {s}")
    return CirculantGraph(n=n, connection_set=tuple(sorted(reduced)))


def parse_connection_set(text: str) -> list[int]:
    """Parse a comma-separated integer list such as "1,7,9,15"."""
    items = [part.strip() for part in text.split(",")]
    if not any(items):
        raise ValueError("empty connection-set string")
    try:
        return [int(part) for part in items if part]
    except ValueError as exc:
        raise ValueError(f"connection set must be comma-separated integers: {text!r}") from exc


def euler_phi(m: int) -> int:
    """Euler's totient, by trial-division factoring (desk-scale m)."""
    if m < 1:
        raise ValueError(f"totient needs m >= 1, got {m}")
    result = m
    remainder = m
    p = 2
    while p * p <= remainder:
        if remainder % p == 0:
            while remainder % p == 0:
                remainder //= p
            result -= result // p
        p += 1
    if remainder > 1:
        result -= result // remainder
    return result


def proper_divisors(n: int) -> list[int]:
    """All divisors d of n with 1 <= d < n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    divisors = small + large[::-1]
    return [d for d in divisors if d < n]


@dataclass(frozen=True)
class GcdClass:
    """The class S_n(d) = {x in [1, n-1] : gcd(x, n) = d} for a proper divisor d."""

    n: int
    d: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def gcd_class(n: int, d: int) -> GcdClass:
    """Enumerate S_n(d). Raises NotADivisor unless 0 < d < n and d | n."""
    if n < 2:
        raise InvalidOrder(f"graph order must be >= 2, got {n}")
    if not isinstance(d, int) or d <= 0 or d >= n or n % d != 0:
        raise NotADivisor(f"{d} is not a proper divisor of {n}")
    members = tuple(x for x in range(1, n) if math.gcd(x, n) == d)
    return GcdClass(n=n, d=d, members=members)


class IntersectionStatus(Enum):
    EMPTY = "Empty"
    PROPER = "Proper"
    FULL = "Full"


@dataclass(frozen=True)
class ProfileEntry:
    d: int
    intersection_size: int
    class_size: int
    status: IntersectionStatus


@dataclass(frozen=True)
class DivisorProfile:
    """Per-divisor intersection sizes |S ∩ S_n(d)|, ordered by ascending d."""

    n: int
    entries: tuple[ProfileEntry, ...]

    def entry(self, d: int) -> ProfileEntry:
        for e in self.entries:
            if e.d == d:
                return e
        raise NotADivisor(f"{d} is not a proper divisor of {self.n}")

    def least_proper(self) -> ProfileEntry | None:
        """Least divisor whose intersection is non-empty and proper.

        "Least" is numeric ascending order (1 < 2 < 4 < ...). Returns None
        for gcd-sets, where no class is partially covered.
        """
        for e in self.entries:
            if e.status is IntersectionStatus.PROPER:
                return e
        return None

    def least_proper_with_size_2_mod_4(self) -> ProfileEntry | None:
        """Least divisor with a non-empty proper intersection of size = 2 (mod 4)."""
        for e in self.entries:
            if e.status is IntersectionStatus.PROPER and e.intersection_size % 4 == 2:
                return e
        return None


def divisor_profile(G: CirculantGraph) -> DivisorProfile:
    """Intersection size and status of S against every gcd class of Z_n."""
    entries = []
    for d in proper_divisors(G.n):
        size = sum(1 for s in G.connection_set if math.gcd(s, G.n) == d)
        class_size = euler_phi(G.n // d)
        if size == 0:
            status = IntersectionStatus.EMPTY
        elif size == class_size:
            status = IntersectionStatus.FULL
        else:
            status = IntersectionStatus.PROPER
        entries.append(ProfileEntry(d, size, class_size, status))
    return DivisorProfile(n=G.n, entries=tuple(entries))


def is_gcd_set(G: CirculantGraph) -> bool:
    """True iff S is a union of whole gcd classes (no class is partially covered).

    Equivalent to the graph having an all-integer spectrum.
    """
    return all(e.status is not IntersectionStatus.PROPER for e in divisor_profile(G).entries)


def symmetric_sets(n: int, include_empty: bool = False) -> Iterator[tuple[int, ...]]:
    """Enumerate symmetric connection sets of Z_n as sorted tuples.

    Sets are unions of the units {s, n-s} for 1 <= s < n/2 plus, for even n,
    the self-paired element n/2. Enumeration order is binary counting over
    those units (low s = low bit), so output is deterministic. The empty
    set is emitted first only when include_empty is set; it is not a valid
    connection set.
    """
    if n < 2:
        raise InvalidOrder(f"graph order must be >= 2, got {n}")
    units: list[tuple[int, ...]] = [(s, n - s) for s in range(1, (n + 1) // 2) if s != n - s]
    if n % 2 == 0:
        units.append((n // 2,))
    for mask in range(2 ** len(units)):
        if mask == 0 and not include_empty:
            continue
        chosen: list[int] = []
        for bit, unit in enumerate(units):
            if mask >> bit & 1:
                chosen.extend(unit)
        yield tuple(sorted(chosen))
