"""Lattice-path matroids, skew shapes, border strips, and cell posets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .matroids import Matroid
from .posets import Poset


@dataclass(frozen=True)
class LatticePath:
    """A monotone path from (0,0) to (n-k, k) as a word over {N, E}.

    The i-th letter (1-indexed) is N when the i-th step is north.  The
    north-step index set determines the path and doubles as a basis of the
    associated lattice-path matroid.
    """

    word: str

    def __post_init__(self):
        if not self.word:
            raise ValueError("lattice path must have at least one step")
        bad = set(self.word) - {"N", "E"}
        if bad:
            raise ValueError(f"path letters must be N or E, found {sorted(bad)}")

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def k(self) -> int:
        return self.word.count("N")

    @property
    def north_set(self) -> frozenset[int]:
        return frozenset(i + 1 for i, ch in enumerate(self.word) if ch == "N")

    def prefix_north_counts(self) -> tuple[int, ...]:
        """counts[m] = number of north steps among the first m letters."""
        counts = [0]
        for ch in self.word:
            counts.append(counts[-1] + (ch == "N"))
        return tuple(counts)

    def points(self) -> list[tuple[int, int]]:
        """The n+1 lattice points visited, starting at (0, 0)."""
        x = y = 0
        pts = [(0, 0)]
        for ch in self.word:
            if ch == "N":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    @classmethod
    def from_north_set(cls, n: int, north: frozenset[int] | set[int]) -> "LatticePath":
        return cls("".join("N" if i in north else "E" for i in range(1, n + 1)))


def lies_below(lower: LatticePath, upper: LatticePath) -> bool:
    """Dominance order on paths: every prefix of ``upper`` has at least as
    many north steps as the same prefix of ``lower``."""
    if lower.n != upper.n or lower.k != upper.k:
        raise ValueError(
            f"paths must share length and north count: "
            f"({lower.n},{lower.k}) vs ({upper.n},{upper.k})"
        )
    lo = lower.prefix_north_counts()
    hi = upper.prefix_north_counts()
    return all(lo[m] <= hi[m] for m in range(1, lower.n + 1))


def lattice_path_matroid(lower: LatticePath, upper: LatticePath) -> Matroid:
    """Matroid whose bases are the north sets of paths between the two bounds."""
    if not lies_below(lower, upper):
        raise ValueError("lower path does not lie below upper path")
    n, k = lower.n, lower.k
    lo = lower.prefix_north_counts()
    hi = upper.prefix_north_counts()
    masks = []
    for combo in combinations(range(1, n + 1), k):
        count = 0
        pos = 0
        ok = True
        for m in range(1, n + 1):
            if pos < k and combo[pos] == m:
                pos += 1
                count += 1
            if not lo[m] <= count <= hi[m]:
                ok = False
                break
        if ok:
            mask = 0
            for e in combo:
                mask |= 1 << (e - 1)
            masks.append(mask)
    return Matroid.from_masks(n, masks, validate=True)


def is_connected_lpm(lower: LatticePath, upper: LatticePath) -> bool:
    """True iff the bounding paths meet only at the two endpoints."""
    if not lies_below(lower, upper):
        raise ValueError("lower path does not lie below upper path")
    shared = set(lower.points()) & set(upper.points())
    return len(shared) == 2


@dataclass(frozen=True)
class SkewShape:
    """The unit cells strictly between two bounding paths.

    A cell (x, y) is the unit square with lower-left corner (x, y).
    """

    cells: frozenset[tuple[int, int]]

    @classmethod
    def from_paths(cls, lower: LatticePath, upper: LatticePath) -> "SkewShape":
        if not lies_below(lower, upper):
            raise ValueError("lower path does not lie below upper path")
        cells = set()
        for x, (lo_h, hi_h) in enumerate(zip(_east_heights(lower), _east_heights(upper))):
            for y in range(lo_h, hi_h):
                cells.add((x, y))
        return cls(frozenset(cells))

    @classmethod
    def from_partitions(cls, lam, mu) -> "SkewShape":
        lam = list(lam)
        mu = list(mu) + [0] * (len(lam) - len(mu))
        if len(mu) > len(lam):
            raise ValueError("inner partition has more rows than outer")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError(f"outer shape {lam} is not a partition")
        if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
            raise ValueError(f"inner shape {mu} is not a partition")
        if any(m > l for l, m in zip(lam, mu)):
            raise ValueError("inner partition does not fit inside outer")
        rows = len(lam)
        cells = set()
        for r in range(rows):  # row r = 0 is the top row in English notation
            y = rows - 1 - r
            for x in range(mu[r], lam[r]):
                cells.add((x, y))
        return cls(frozenset(cells))

    @property
    def size(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)


def _east_heights(path: LatticePath) -> list[int]:
    """Height of the path's east step over each column x = 0..n-k-1."""
    heights = []
    y = 0
    for ch in path.word:
        if ch == "N":
            y += 1
        else:
            heights.append(y)
    return heights


def parse_shape(literal: str) -> SkewShape:
    """Parse a ``lambda/mu`` partition-pair literal like ``5,4,4,3/3,3,2,0``."""
    outer, sep, inner = literal.partition("/")
    lam = [int(part) for part in outer.split(",") if part.strip()]
    mu = [int(part) for part in inner.split(",") if part.strip()] if sep else []
    return SkewShape.from_partitions(lam, mu)


def is_border_strip(shape: SkewShape) -> bool:
    """True iff no four cells of the shape form a 2x2 square."""
    cells = shape.cells
    return not any(
        (x + 1, y) in cells and (x, y + 1) in cells and (x + 1, y + 1) in cells
        for x, y in cells
    )


def cell_poset(shape: SkewShape) -> Poset:
    """Poset on the cells, adjacency oriented by the clockwise 45-degree turn.

    A cell precedes its north neighbor and succeeds its east neighbor, so a
    border strip becomes a fence.  Elements are indexed by the sorted cell
    order (see :meth:`SkewShape.sorted_cells`).
    """
    if not shape.cells:
        raise ValueError("cell poset of an empty shape")
    cells = shape.sorted_cells()
    index = {cell: i for i, cell in enumerate(cells)}
    covers = []
    for (x, y), i in index.items():
        north = index.get((x, y + 1))
        if north is not None:
            covers.append((i, north))
        east = index.get((x + 1, y))
        if east is not None:
            covers.append((east, i))
    return Poset.from_covers(len(cells), covers)


def enumerate_snake_paths(n: int, k: int) -> list[tuple[LatticePath, LatticePath]]:
    """All bounding-path pairs of snakes on [n] of rank k, in word order.

    A snake is a connected lattice-path matroid whose skew shape is a
    border strip.  Returns [] when the parameters admit no snake.
    """
    if n < 2 or not 1 <= k <= n - 1:
        return []
    paths = [
        LatticePath.from_north_set(n, set(combo))
        for combo in combinations(range(1, n + 1), k)
    ]
    pairs = []
    for lower in paths:
        for upper in paths:
            if not lies_below(lower, upper):
                continue
            if not is_connected_lpm(lower, upper):
                continue
            if is_border_strip(SkewShape.from_paths(lower, upper)):
                pairs.append((lower, upper))
    return pairs


def enumerate_snakes(n: int, k: int) -> list[Matroid]:
    """All snake matroids on [n] of rank k (no isomorphism deduplication)."""
    return [lattice_path_matroid(lo, up) for lo, up in enumerate_snake_paths(n, k)]
