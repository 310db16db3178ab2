"""Matroids presented by their base families.

Elements are labeled 1..n and subsets are stored as bitmasks of width n
(bit i-1 set iff element i is in the subset), which keeps every subset
operation a single word operation at the scales this library targets
(n <= 16, catalogs use n <= 9).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

MAX_GROUND_SET = 16
MAX_SUBSET_ENUMERATION = 12


class InvalidBasesError(ValueError):
    """Candidate base family violates the basis axioms or the file format."""


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` (0-based), lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(n: int, subset) -> int:
    """Normalize a subset of [n] (iterable of elements 1..n, or bitmask) to a bitmask."""
    if isinstance(subset, int):
        if subset < 0 or subset >> n:
            raise ValueError(f"mask {subset:#x} is not a subset of [{n}]")
        return subset
    mask = 0
    for e in subset:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set [{n}]")
        mask |= 1 << (e - 1)
    return mask


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(b + 1 for b in iter_bits(mask))


def validate_bases(n: int, candidate: Iterable) -> bool:
    """Decide whether ``candidate`` is the base family of a matroid on [n].

    True iff the family is nonempty, equicardinal, and satisfies the basis
    exchange axiom: for all B1, B2 and e in B1 - B2 there is f in B2 - B1
    with (B1 - {e}) + {f} in the family.  Total function: returns False
    rather than raising for families that merely fail the axioms.
    """
    masks = sorted({as_mask(n, b) for b in candidate})
    if not masks:
        return False
    k = masks[0].bit_count()
    if any(m.bit_count() != k for m in masks):
        return False
    family = set(masks)
    for b1 in masks:
        for b2 in masks:
            if b1 == b2:
                continue
            adds = b2 & ~b1
            for e in iter_bits(b1 & ~b2):
                removed = b1 ^ (1 << e)
                if not any(removed | (1 << f) in family for f in iter_bits(adds)):
                    return False
    return True


@dataclass(frozen=True)
class Matroid:
    """A matroid on ground set [n] of rank k, given by its bases as bitmasks.

    ``bases`` is sorted and deduplicated; instances are immutable and
    hashable, so they can be shared freely and used as cache keys.
    """

    n: int
    k: int
    bases: tuple[int, ...]

    @classmethod
    def from_masks(cls, n: int, masks, validate: bool = True) -> "Matroid":
        if not 1 <= n <= MAX_GROUND_SET:
            raise InvalidBasesError(f"ground set size {n} outside 1..{MAX_GROUND_SET}")
        unique = sorted({as_mask(n, m) for m in masks})
        if not unique:
            raise InvalidBasesError("base family is empty")
        k = unique[0].bit_count()
        if validate and not validate_bases(n, unique):
            raise InvalidBasesError("family violates the basis-exchange axiom")
        if any(m.bit_count() != k for m in unique):
            raise InvalidBasesError("bases are not equicardinal")
        return cls(n=n, k=k, bases=tuple(unique))

    @classmethod
    def from_sets(cls, n: int, sets, validate: bool = True) -> "Matroid":
        return cls.from_masks(n, (as_mask(n, s) for s in sets), validate=validate)

    @property
    def ground_set(self) -> range:
        return range(1, self.n + 1)

    def basis_sets(self) -> list[frozenset[int]]:
        return [mask_to_set(b) for b in self.bases]

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, k={self.k}, {len(self.bases)} bases)"


def uniform(k: int, n: int) -> Matroid:
    """The uniform matroid U_{k,n}: every k-subset of [n] is a basis."""
    if not 0 <= k <= n:
        raise ValueError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    masks = [as_mask(n, combo) for combo in combinations(range(1, n + 1), k)]
    return Matroid.from_masks(n, masks, validate=False)


def rank(matroid: Matroid, subset) -> int:
    """rk(A) = max over bases B of |A intersect B|."""
    mask = as_mask(matroid.n, subset)
    return max((mask & b).bit_count() for b in matroid.bases)


@lru_cache(maxsize=None)
def rank_table(matroid: Matroid) -> tuple[int, ...]:
    """Ranks of all 2^n subsets, indexed by bitmask.  Cached per matroid."""
    if matroid.n > MAX_SUBSET_ENUMERATION:
        raise ValueError(f"rank table limited to n <= {MAX_SUBSET_ENUMERATION}")
    bases = matroid.bases
    return tuple(
        max((mask & b).bit_count() for b in bases) for mask in range(1 << matroid.n)
    )


def loops(matroid: Matroid) -> frozenset[int]:
    """Elements contained in no basis."""
    union = 0
    for b in matroid.bases:
        union |= b
    return mask_to_set(~union & ((1 << matroid.n) - 1))


def coloops(matroid: Matroid) -> frozenset[int]:
    """Elements contained in every basis."""
    common = (1 << matroid.n) - 1
    for b in matroid.bases:
        common &= b
    return mask_to_set(common)


def _close_gap(mask: int, i: int) -> int:
    # Drop bit i-1 and shift the higher bits down, relabeling [n] to [n-1].
    low = mask & ((1 << (i - 1)) - 1)
    return low | ((mask >> i) << (i - 1))


def delete(matroid: Matroid, i: int) -> Matroid:
    """Single-element deletion M \\ i; bases are the bases avoiding i."""
    if not 1 <= i <= matroid.n:
        raise ValueError(f"element {i} outside ground set [{matroid.n}]")
    if matroid.n == 1:
        raise ValueError("cannot delete the last element")
    if i in coloops(matroid):
        raise ValueError(f"cannot delete coloop {i}")
    bit = 1 << (i - 1)
    masks = [_close_gap(b, i) for b in matroid.bases if not b & bit]
    return Matroid.from_masks(matroid.n - 1, masks, validate=False)


def contract(matroid: Matroid, i: int) -> Matroid:
    """Single-element contraction M / i; bases are bases through i, minus i."""
    if not 1 <= i <= matroid.n:
        raise ValueError(f"element {i} outside ground set [{matroid.n}]")
    if matroid.n == 1:
        raise ValueError("cannot contract the last element")
    if i in loops(matroid):
        raise ValueError(f"cannot contract loop {i}")
    bit = 1 << (i - 1)
    masks = [_close_gap(b & ~bit, i) for b in matroid.bases if b & bit]
    return Matroid.from_masks(matroid.n - 1, masks, validate=False)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """M1 + M2 on [n1 + n2], with M2's elements shifted up by n1."""
    masks = [b1 | (b2 << m1.n) for b1 in m1.bases for b2 in m2.bases]
    return Matroid.from_masks(m1.n + m2.n, masks, validate=False)


@lru_cache(maxsize=None)
def circuits(matroid: Matroid) -> tuple[int, ...]:
    """All circuits (minimal dependent sets) as bitmasks."""
    if matroid.n > MAX_SUBSET_ENUMERATION:
        raise ValueError(f"circuit enumeration limited to n <= {MAX_SUBSET_ENUMERATION}")
    table = rank_table(matroid)
    found = []
    for mask in range(1, 1 << matroid.n):
        size = mask.bit_count()
        if table[mask] == size:
            continue
        if all(table[mask ^ (1 << e)] == size - 1 for e in iter_bits(mask)):
            found.append(mask)
    return tuple(found)


@lru_cache(maxsize=None)
def connected_components(matroid: Matroid) -> tuple[frozenset[int], ...]:
    """Finest partition of [n] closing elements that share a circuit.

    Loops and coloops come out as singleton parts; c(M) is the number of
    parts returned.
    """
    parent = list(range(matroid.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for circuit in circuits(matroid):
        members = [b + 1 for b in iter_bits(circuit)]
        root = find(members[0])
        for e in members[1:]:
            parent[find(e)] = root

    groups: dict[int, set[int]] = {}
    for e in matroid.ground_set:
        groups.setdefault(find(e), set()).add(e)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def is_connected(matroid: Matroid) -> bool:
    return len(connected_components(matroid)) == 1


@lru_cache(maxsize=None)
def flats(matroid: Matroid) -> tuple[int, ...]:
    """All closed sets (adding any outside element raises the rank), as masks."""
    table = rank_table(matroid)
    n = matroid.n
    out = []
    for mask in range(1 << n):
        r = table[mask]
        if all(table[mask | (1 << e)] > r for e in range(n) if not mask & (1 << e)):
            out.append(mask)
    return tuple(out)


def parse_matroid(text: str, validate: bool = True) -> Matroid:
    """Parse the matroid text format.

    Line 1 is ``n k``; each following nonempty line is one basis as a
    length-n string over {0,1} (character i = 1 iff element i is in the
    basis).  Raises InvalidBasesError on malformed input, inconsistent
    widths or cardinalities, and (unless ``validate`` is False) on
    exchange-axiom failures.
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise InvalidBasesError("empty matroid file")
    header = lines[0].split()
    if len(header) != 2:
        raise InvalidBasesError(f"expected header 'n k', got {lines[0]!r}")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise InvalidBasesError(f"expected integer header 'n k', got {lines[0]!r}") from None
    if len(lines) == 1:
        raise InvalidBasesError("no basis rows")
    masks = []
    for row in lines[1:]:
        if len(row) != n or set(row) - {"0", "1"}:
            raise InvalidBasesError(f"basis row {row!r} is not a length-{n} 0/1 string")
        mask = 0
        for i, ch in enumerate(row):
            if ch == "1":
                mask |= 1 << i
        if mask.bit_count() != k:
            raise InvalidBasesError(f"basis row {row!r} does not have cardinality {k}")
        masks.append(mask)
    matroid = Matroid.from_masks(n, masks, validate=validate)
    if matroid.k != k:
        raise InvalidBasesError(f"declared rank {k} != basis cardinality {matroid.k}")
    return matroid


def format_matroid(matroid: Matroid) -> str:
    """Render a matroid in the text format accepted by :func:`parse_matroid`."""
    rows = [f"{matroid.n} {matroid.k}"]
    for b in matroid.bases:
        rows.append("".join("1" if b & (1 << i) else "0" for i in range(matroid.n)))
    return "\n".join(rows) + "\n"
