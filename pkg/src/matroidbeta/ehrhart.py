"""Exact lattice-point counts and Ehrhart polynomials of matroid base polytopes.

The t-th dilation of the base polytope is counted through its hyperplane
description: x >= 0, sum(x) = t*k, and x(A) <= t*rk(A) for every subset A.
The counter restricts the subset inequalities to closed sets of rank below
k, which is an exact reduction (x(A) <= x(cl(A)) and rk(cl(A)) = rk(A);
spanning flats are dominated by the total-sum equality).  The reduction is
cross-checked against a full 2^n membership oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .matroids import Matroid, connected_components, flats, rank_table
from .polynomials import RationalPolynomial, lagrange_interpolate


class EhrhartGuardError(RuntimeError):
    """Interpolated polynomial disagrees with a guard count; the dimension
    assumption d = n - c(M) failed for this matroid."""


@dataclass(frozen=True)
class _CountingContext:
    flat_ranks: tuple[int, ...]
    flats_per_element: tuple[tuple[int, ...], ...]
    suffix_ranks: tuple[int, ...]


@lru_cache(maxsize=None)
def _counting_context(matroid: Matroid) -> _CountingContext:
    table = rank_table(matroid)
    k = matroid.k
    n = matroid.n
    binding = [f for f in flats(matroid) if f and table[f] < k]
    per_element = tuple(
        tuple(idx for idx, f in enumerate(binding) if f & (1 << e))
        for e in range(n)
    )
    suffix_ranks = tuple(
        table[((1 << n) - 1) & ~((1 << e) - 1)] for e in range(n)
    ) + (0,)
    return _CountingContext(
        flat_ranks=tuple(table[f] for f in binding),
        flats_per_element=per_element,
        suffix_ranks=suffix_ranks,
    )


def count_lattice_points(matroid: Matroid, t: int) -> int:
    """Number of integer points in the t-th dilation of the base polytope."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 1
    ctx = _counting_context(matroid)
    slack = [t * r for r in ctx.flat_ranks]
    suffix_cap = [t * r for r in ctx.suffix_ranks]
    per_element = ctx.flats_per_element
    last = matroid.n - 1

    def assign(i: int, remaining: int) -> int:
        fids = per_element[i]
        if i == last:
            for fi in fids:
                if slack[fi] < remaining:
                    return 0
            return 1
        hi = remaining
        for fi in fids:
            s = slack[fi]
            if s < hi:
                hi = s
        lo = remaining - suffix_cap[i + 1]
        if lo < 0:
            lo = 0
        if lo > hi:
            return 0
        if lo:
            for fi in fids:
                slack[fi] -= lo
        total = 0
        v = lo
        while True:
            total += assign(i + 1, remaining - v)
            if v == hi:
                break
            v += 1
            for fi in fids:
                slack[fi] -= 1
        for fi in fids:
            slack[fi] += hi
        return total

    return assign(0, t * matroid.k)


def count_lattice_points_filtered(matroid: Matroid, t: int) -> int:
    """Membership-filtered oracle: enumerate all compositions of t*k into n
    parts in [0, t], then test every one of the 2^n subset inequalities.

    Same contract as :func:`count_lattice_points`; intentionally dumb and
    kept independent of the pruned counter for cross-validation.
    """
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 1
    table = rank_table(matroid)
    n = matroid.n
    x = [0] * n

    def feasible() -> bool:
        sums = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            sums[mask] = sums[mask ^ low] + x[low.bit_length() - 1]
            if sums[mask] > t * table[mask]:
                return False
        return True

    def enumerate_parts(i: int, remaining: int) -> int:
        if i == n - 1:
            if remaining > t:
                return 0
            x[i] = remaining
            return 1 if feasible() else 0
        total = 0
        lo = max(0, remaining - t * (n - i - 1))
        for v in range(lo, min(t, remaining) + 1):
            x[i] = v
            total += enumerate_parts(i + 1, remaining - v)
        return total

    return enumerate_parts(0, t * matroid.k)


@lru_cache(maxsize=None)
def ehrhart_polynomial(matroid: Matroid) -> RationalPolynomial:
    """Exact Ehrhart polynomial, interpolated at t = 0..d with d = n - c(M).

    A guard count at t = d+1 must match the interpolation; a mismatch means
    the dimension assumption was wrong and raises EhrhartGuardError instead
    of silently re-fitting.
    """
    d = matroid.n - len(connected_components(matroid))
    points = [(t, count_lattice_points(matroid, t)) for t in range(d + 1)]
    poly = lagrange_interpolate(points)
    guard = count_lattice_points(matroid, d + 1)
    if poly(d + 1) != guard:
        raise EhrhartGuardError(
            f"guard count at t={d + 1} is {guard}, interpolation gives {poly(d + 1)}; "
            f"dimension assumption d={d} failed for {matroid!r}"
        )
    return poly


def shift_by_minus_one(poly: RationalPolynomial) -> RationalPolynomial:
    """q(t) = p(t - 1), exactly."""
    return poly.translate(-1)


def derivative_at(poly: RationalPolynomial, x) -> Fraction:
    """Exact p'(x)."""
    return poly.derivative()(x)


def linear_coeff_shifted(matroid: Matroid) -> Fraction:
    """Coefficient of t in ehr(M, t-1); equals the derivative of ehr at -1."""
    poly = ehrhart_polynomial(matroid)
    coeff = shift_by_minus_one(poly).coefficient(1)
    assert coeff == derivative_at(poly, -1)
    return coeff
