"""Matroid catalogs and the batch verification harness.

Catalog entries carry deterministic identifiers so that reports are byte
identical across runs and worker counts; results are sorted by identifier
after the parallel join.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .ehrhart import linear_coeff_shifted
from .invariants import (
    VerificationRecord,
    beta_definition,
    hypothesis_failures,
    verify_main_theorem,
)
from .lattice_paths import LatticePath, lattice_path_matroid, lies_below
from .matroids import (
    Matroid,
    coloops,
    connected_components,
    direct_sum,
    loops,
    parse_matroid,
    uniform,
)

MAX_EXHAUSTIVE_N = 6
MAX_GRAPHIC_EDGES = 12

PROVENANCES = ("exhaustive", "lattice-path", "graphic", "uniform", "direct-sum", "file")


@dataclass(frozen=True)
class CatalogEntry:
    identifier: str
    matroid: Matroid
    provenance: str


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]

    @classmethod
    def from_entries(cls, entries) -> "Catalog":
        entries = tuple(entries)
        seen = set()
        for entry in entries:
            if entry.identifier in seen:
                raise ValueError(f"duplicate catalog identifier {entry.identifier!r}")
            seen.add(entry.identifier)
            if entry.provenance not in PROVENANCES:
                raise ValueError(f"unknown provenance {entry.provenance!r}")
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def matroids(self) -> list[Matroid]:
        return [entry.matroid for entry in self.entries]


def _exchange_requirements(subsets: list[int]) -> list[list[tuple[int, ...]]]:
    """For k-subsets B_i, B_j: one family-space mask per e in B_i - B_j,
    covering the subsets reachable by exchanging e into B_j - B_i."""
    index = {s: i for i, s in enumerate(subsets)}
    m = len(subsets)
    reqs: list[list[tuple[int, ...]]] = [[() for _ in range(m)] for _ in range(m)]
    for i, b1 in enumerate(subsets):
        for j, b2 in enumerate(subsets):
            if i == j:
                continue
            masks = []
            adds = b2 & ~b1
            diff = b1 & ~b2
            while diff:
                low = diff & -diff
                diff ^= low
                removed = b1 ^ low
                targets = 0
                a = adds
                while a:
                    f = a & -a
                    a ^= f
                    targets |= 1 << index[removed | f]
                masks.append(targets)
            reqs[i][j] = tuple(masks)
    return reqs


def exhaustive_catalog(n: int) -> Catalog:
    """All labeled matroids on [n], by filtering every subfamily of k-subsets
    through the exchange axiom.  Deterministic order: by rank, then by the
    subfamily bitmask."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration limited to 1 <= n <= {MAX_EXHAUSTIVE_N}")
    entries = []
    for k in range(n + 1):
        subsets = sorted(
            sum(1 << (e - 1) for e in combo) for combo in combinations(range(1, n + 1), k)
        )
        m = len(subsets)
        reqs = _exchange_requirements(subsets)
        width = max(1, (m + 3) // 4)
        for family in range(1, 1 << m):
            members = []
            f = family
            while f:
                low = f & -f
                members.append(low.bit_length() - 1)
                f ^= low
            ok = True
            for i in members:
                row = reqs[i]
                for j in members:
                    if i == j:
                        continue
                    for req in row[j]:
                        if not req & family:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                matroid = Matroid.from_masks(
                    n, [subsets[i] for i in members], validate=False
                )
                entries.append(
                    CatalogEntry(f"exh-n{n}-k{k}-f{family:0{width}x}", matroid, "exhaustive")
                )
    return Catalog.from_entries(entries)


def graphic_matroid(edges) -> Matroid:
    """Cycle matroid of a connected multigraph; bases are the spanning trees.

    ``edges`` is a list of endpoint pairs (self-loops allowed, they become
    matroid loops); matroid element i is the i-th edge.
    """
    edges = [tuple(e) for e in edges]
    if not edges:
        raise ValueError("graph needs at least one edge")
    if len(edges) > MAX_GRAPHIC_EDGES:
        raise ValueError(f"graphic matroids limited to {MAX_GRAPHIC_EDGES} edges")
    vertices = sorted({v for e in edges for v in e})
    vid = {v: i for i, v in enumerate(vertices)}
    nv = len(vertices)

    def components(edge_idxs) -> int:
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for idx in edge_idxs:
            u, v = edges[idx]
            parent[find(vid[u])] = find(vid[v])
        return len({find(x) for x in range(nv)})

    if components(range(len(edges))) != 1:
        raise ValueError("graph is not connected")

    masks = []
    for combo in combinations(range(len(edges)), nv - 1):
        if any(edges[idx][0] == edges[idx][1] for idx in combo):
            continue
        if components(combo) == 1:
            masks.append(sum(1 << idx for idx in combo))
    return Matroid.from_masks(len(edges), masks, validate=False)


def uniform_catalog(max_n: int) -> Catalog:
    entries = [
        CatalogEntry(f"uniform-r{k}-n{n}", uniform(k, n), "uniform")
        for n in range(1, max_n + 1)
        for k in range(n + 1)
    ]
    return Catalog.from_entries(entries)


def lattice_path_catalog(max_n: int) -> Catalog:
    """Every lattice-path matroid with 2 <= n <= max_n and 1 <= k <= n-1."""
    if max_n > 10:
        raise ValueError("lattice-path catalog limited to n <= 10")
    entries = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            paths = [
                LatticePath.from_north_set(n, set(combo))
                for combo in combinations(range(1, n + 1), k)
            ]
            for lower in paths:
                for upper in paths:
                    if not lies_below(lower, upper):
                        continue
                    matroid = lattice_path_matroid(lower, upper)
                    entries.append(
                        CatalogEntry(
                            f"lpm-n{n}-k{k}-{lower.word}-{upper.word}",
                            matroid,
                            "lattice-path",
                        )
                    )
    return Catalog.from_entries(entries)


# Small connected graphs for corpus diversity: cycles, a multi-edge, complete
# and complete-bipartite graphs, all within the edge budget.
_GRAPHIC_FAMILY = (
    ("triangle", ((1, 2), (2, 3), (3, 1))),
    ("path2", ((1, 2), (2, 3))),
    ("doubled-edge", ((1, 2), (1, 2))),
    ("tripled-edge", ((1, 2), (1, 2), (1, 2))),
    ("cycle4", ((1, 2), (2, 3), (3, 4), (4, 1))),
    ("cycle5", ((1, 2), (2, 3), (3, 4), (4, 5), (5, 1))),
    ("cycle6", ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1))),
    ("k4", ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    ("k23", ((1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5))),
    ("diamond", ((1, 2), (2, 3), (3, 1), (2, 4), (4, 3))),
    ("theta", ((1, 2), (1, 2), (1, 3), (3, 2))),
)


def graphic_catalog() -> Catalog:
    entries = [
        CatalogEntry(f"graphic-{name}", graphic_matroid(edges), "graphic")
        for name, edges in _GRAPHIC_FAMILY
    ]
    return Catalog.from_entries(entries)


def direct_sum_catalog(max_total_n: int = 8, component_max_n: int = 5) -> Catalog:
    """Pairwise direct sums of connected, loopless, coloopless matroids drawn
    from the exhaustive catalogs on up to ``component_max_n`` elements."""
    components = []
    for n in range(2, component_max_n + 1):
        for entry in exhaustive_catalog(n):
            matroid = entry.matroid
            if loops(matroid) or coloops(matroid):
                continue
            if len(connected_components(matroid)) != 1:
                continue
            components.append(entry)
    entries = []
    for i, first in enumerate(components):
        for second in components[i:]:
            if first.matroid.n + second.matroid.n > max_total_n:
                continue
            entries.append(
                CatalogEntry(
                    f"sum-({first.identifier})+({second.identifier})",
                    direct_sum(first.matroid, second.matroid),
                    "direct-sum",
                )
            )
    return Catalog.from_entries(entries)


def catalog_from_files(paths, validate: bool = True) -> Catalog:
    entries = []
    taken = set()
    for path in paths:
        with open(path, "r", encoding="ascii") as fh:
            matroid = parse_matroid(fh.read(), validate=validate)
        stem = os.path.splitext(os.path.basename(path))[0]
        identifier = stem
        suffix = 2
        while identifier in taken:
            identifier = f"{stem}-{suffix}"
            suffix += 1
        taken.add(identifier)
        entries.append(CatalogEntry(identifier, matroid, "file"))
    return Catalog.from_entries(entries)


@dataclass(frozen=True)
class RejectionRecord:
    """Entry outside the identity's hypotheses, with informational values."""

    identifier: str
    n: int
    k: int
    reasons: tuple[str, ...]
    beta: int
    rhs: Fraction


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[VerificationRecord, ...]
    rejections: tuple[RejectionRecord, ...]

    def all_passed(self) -> bool:
        return all(record.passed for record in self.records)


def _verify_entry(entry: CatalogEntry):
    matroid = entry.matroid
    reasons = hypothesis_failures(matroid)
    if reasons:
        return RejectionRecord(
            identifier=entry.identifier,
            n=matroid.n,
            k=matroid.k,
            reasons=reasons,
            beta=beta_definition(matroid),
            rhs=linear_coeff_shifted(matroid),
        )
    return verify_main_theorem(matroid, identifier=entry.identifier)


def run_verification(catalog: Catalog, workers: int | None = None) -> VerificationReport:
    """Verify the main identity on every catalog entry.

    Eligible entries produce VerificationRecords; entries violating the
    hypotheses produce RejectionRecords with informational beta and linear
    coefficient.  Work fans out over ``workers`` processes (None or <=1
    runs serially); output ordering is fixed by identifier regardless of
    scheduling.
    """
    entries = list(catalog.entries)
    if workers is not None and workers > 1 and len(entries) > 1:
        chunk = max(1, len(entries) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_entry, entries, chunksize=chunk))
    else:
        results = [_verify_entry(entry) for entry in entries]
    records = sorted(
        (r for r in results if isinstance(r, VerificationRecord)),
        key=lambda r: r.identifier,
    )
    rejections = sorted(
        (r for r in results if isinstance(r, RejectionRecord)),
        key=lambda r: r.identifier,
    )
    return VerificationReport(records=tuple(records), rejections=tuple(rejections))


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


CSV_HEADER = ("id", "n", "k", "connected", "beta", "normalization", "lhs", "rhs", "pass")


def report_to_csv(report: VerificationReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.records:
        writer.writerow(
            (
                r.identifier,
                r.n,
                r.k,
                "true" if r.connected else "false",
                r.beta,
                r.normalization,
                _frac(r.lhs),
                _frac(r.rhs),
                "true" if r.passed else "false",
            )
        )
    return buffer.getvalue()


def report_to_json(report: VerificationReport) -> str:
    payload = {
        "records": [
            {
                "id": r.identifier,
                "n": r.n,
                "k": r.k,
                "has_loops": r.has_loops,
                "has_coloops": r.has_coloops,
                "connected": r.connected,
                "beta": r.beta,
                "normalization": r.normalization,
                "lhs": _frac(r.lhs),
                "rhs": _frac(r.rhs),
                "pass": r.passed,
            }
            for r in report.records
        ],
        "rejections": [
            {
                "id": r.identifier,
                "n": r.n,
                "k": r.k,
                "reasons": list(r.reasons),
                "beta": r.beta,
                "rhs": _frac(r.rhs),
            }
            for r in report.rejections
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
