"""Finite posets and their order polynomials.

A poset is stored by its cover relations on elements 0..p-1.  The order
polynomial counts order-preserving maps into a t-chain; it is evaluated
exactly through a dynamic program over the lattice of order ideals and
interpolated into a :class:`RationalPolynomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polynomials import RationalPolynomial, lagrange_interpolate

MAX_POSET_SIZE = 16
MAX_BRUTE_FORCE_SIZE = 10


@dataclass(frozen=True)
class Poset:
    """A strict partial order on {0, .., size-1} given by its cover pairs.

    A pair (a, b) means a is covered by b.  Use :meth:`from_covers`, which
    rejects cyclic input and stored transitive shortcuts.
    """

    size: int
    covers: tuple[tuple[int, int], ...]

    @classmethod
    def from_covers(cls, size: int, covers) -> "Poset":
        if size < 0 or size > MAX_POSET_SIZE:
            raise ValueError(f"poset size {size} outside 0..{MAX_POSET_SIZE}")
        pairs = sorted(set((int(a), int(b)) for a, b in covers))
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size):
                raise ValueError(f"cover pair ({a}, {b}) outside range(0, {size})")
            if a == b:
                raise ValueError(f"reflexive pair ({a}, {b})")
        poset = cls(size=size, covers=tuple(pairs))
        below = _strictly_below(poset)  # raises on cycles
        for a, b in pairs:
            # a covered by b: nothing may sit strictly between them.
            between = below[b] & ~below[a] & ~(1 << a)
            if between:
                raise ValueError(f"cover pair ({a}, {b}) has elements in between")
        return poset

    def leq(self, a: int, b: int) -> bool:
        """True iff a <= b in the order (reflexive)."""
        return a == b or bool(_strictly_below(self)[b] & (1 << a))


@lru_cache(maxsize=None)
def _strictly_below(poset: Poset) -> tuple[int, ...]:
    """below[b] = bitmask of all a with a < b.  Raises ValueError on cycles."""
    preds: list[list[int]] = [[] for _ in range(poset.size)]
    succs: list[list[int]] = [[] for _ in range(poset.size)]
    indegree = [0] * poset.size
    for a, b in poset.covers:
        preds[b].append(a)
        succs[a].append(b)
        indegree[b] += 1

    order = [v for v in range(poset.size) if indegree[v] == 0]
    for v in order:
        for w in succs[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                order.append(w)
    if len(order) != poset.size:
        raise ValueError("cover relation contains a cycle")

    below = [0] * poset.size
    for v in order:
        acc = 0
        for a in preds[v]:
            acc |= below[a] | (1 << a)
        below[v] = acc
    return tuple(below)


@lru_cache(maxsize=None)
def _order_ideals(poset: Poset) -> tuple[int, ...]:
    """All down-sets as bitmasks, ascending."""
    below = _strictly_below(poset)
    ideals = []
    for mask in range(1 << poset.size):
        m = mask
        ok = True
        while m:
            low = m & -m
            if below[low.bit_length() - 1] & ~mask:
                ok = False
                break
            m ^= low
        if ok:
            ideals.append(mask)
    return tuple(ideals)


def count_order_preserving_maps(poset: Poset, t: int) -> int:
    """Number of maps f: P -> {1..t} with a <= b implying f(a) <= f(b).

    Exact count via chains of order ideals: maps into a t-chain correspond
    to weakly increasing chains of t-1 down-sets, counted by repeated
    subset-sum transforms over the ideal lattice.
    """
    if t < 1:
        raise ValueError("the order polynomial count is defined for t >= 1")
    p = poset.size
    if p == 0:
        return 1
    if t == 1:
        return 1
    ideals = _order_ideals(poset)
    full = 1 << p
    counts = [0] * full
    for ideal in ideals:
        counts[ideal] = 1
    ideal_flags = [False] * full
    for ideal in ideals:
        ideal_flags[ideal] = True
    for _ in range(t - 2):
        for d in range(p):
            bit = 1 << d
            for mask in range(full):
                if mask & bit:
                    counts[mask] += counts[mask ^ bit]
        for mask in range(full):
            if not ideal_flags[mask]:
                counts[mask] = 0
    return sum(counts[ideal] for ideal in ideals)


def count_order_preserving_maps_brute(poset: Poset, t: int) -> int:
    """Backtracking oracle for the map count; independent of the ideal DP."""
    if t < 1:
        raise ValueError("the order polynomial count is defined for t >= 1")
    if poset.size > MAX_BRUTE_FORCE_SIZE:
        raise ValueError(f"brute force limited to size <= {MAX_BRUTE_FORCE_SIZE}")
    below = _strictly_below(poset)
    values = [0] * poset.size

    def assign(i: int) -> int:
        if i == poset.size:
            return 1
        total = 0
        for v in range(1, t + 1):
            ok = True
            for j in range(i):
                jbit = 1 << j
                if below[i] & jbit and values[j] > v:
                    ok = False
                    break
                if below[j] & (1 << i) and v > values[j]:
                    ok = False
                    break
            if ok:
                values[i] = v
                total += assign(i + 1)
        return total

    return assign(0)


def order_polynomial(poset: Poset) -> RationalPolynomial:
    """The degree-|P| polynomial agreeing with the map count at t = 1..|P|+1."""
    if poset.size < 1:
        raise ValueError("order polynomial requires a nonempty poset")
    points = [(t, count_order_preserving_maps(poset, t)) for t in range(1, poset.size + 2)]
    return lagrange_interpolate(points)


def parse_poset(literal: str) -> Poset:
    """Parse the ``p; a<b, c<d`` cover-pair literal (elements are 1..p)."""
    head, _, tail = literal.partition(";")
    try:
        size = int(head.strip())
    except ValueError:
        raise ValueError(f"bad poset size in {literal!r}") from None
    covers = []
    tail = tail.strip()
    if tail:
        for chunk in tail.split(","):
            a, sep, b = chunk.partition("<")
            if not sep:
                raise ValueError(f"bad cover pair {chunk.strip()!r}")
            covers.append((int(a) - 1, int(b) - 1))
    return Poset.from_covers(size, covers)


def format_poset(poset: Poset) -> str:
    pairs = ", ".join(f"{a + 1}<{b + 1}" for a, b in poset.covers)
    return f"{poset.size}; {pairs}" if pairs else f"{poset.size};"
