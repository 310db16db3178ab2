"""The beta-invariant, computed two independent ways, and the main identity.

The identity under verification: for a loopless, coloopless matroid of
rank k on n elements,

    beta(M) / ((n-1) * C(n-2, k-1))  ==  [t^1] ehr(M, t-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .ehrhart import linear_coeff_shifted
from .matroids import Matroid, coloops, connected_components, contract, delete, loops, rank_table

MAX_BETA_DEFINITION_N = 20


class HypothesisViolation(ValueError):
    """The matroid fails the hypotheses of the main identity (loops,
    coloops, or degenerate rank); distinct from a failed verification."""

    def __init__(self, reasons):
        self.reasons = tuple(reasons)
        super().__init__("; ".join(self.reasons))


def beta_definition(matroid: Matroid) -> int:
    """Crapo's alternating sum (-1)^k * sum over A of (-1)^|A| rk(A)."""
    if matroid.n > MAX_BETA_DEFINITION_N:
        raise ValueError(f"definitional beta limited to n <= {MAX_BETA_DEFINITION_N}")
    table = rank_table(matroid)
    total = 0
    for mask in range(1 << matroid.n):
        if mask.bit_count() & 1:
            total -= table[mask]
        else:
            total += table[mask]
    beta = -total if matroid.k & 1 else total
    assert beta >= 0, f"beta came out negative for {matroid!r}"
    return beta


@lru_cache(maxsize=None)
def beta_delcon(matroid: Matroid) -> int:
    """Beta by deletion-contraction.

    Base cases: a single coloop gives 1, a single loop gives 0, and a
    matroid on n >= 2 elements all of which are loops or coloops is
    disconnected and gives 0.  Otherwise recurse on the smallest element
    that is neither.
    """
    if matroid.n == 1:
        return 1 if matroid.k == 1 else 0
    trivial = loops(matroid) | coloops(matroid)
    for e in matroid.ground_set:
        if e not in trivial:
            return beta_delcon(delete(matroid, e)) + beta_delcon(contract(matroid, e))
    return 0


def normalization_constant(n: int, k: int) -> int:
    """(n-1) * C(n-2, k-1); positive whenever n >= 2 and 1 <= k <= n-1."""
    return (n - 1) * comb(n - 2, k - 1)


@dataclass(frozen=True)
class VerificationRecord:
    """Per-matroid outcome of the main-identity check."""

    identifier: str
    n: int
    k: int
    has_loops: bool
    has_coloops: bool
    connected: bool
    beta: int
    normalization: int
    lhs: Fraction
    rhs: Fraction
    passed: bool


def hypothesis_failures(matroid: Matroid) -> tuple[str, ...]:
    """Reasons the matroid falls outside the identity's hypotheses, if any."""
    reasons = []
    if matroid.n < 2:
        reasons.append("ground set has fewer than 2 elements")
    if not 1 <= matroid.k <= matroid.n - 1:
        reasons.append(f"degenerate rank k={matroid.k} for n={matroid.n}")
    if loops(matroid):
        reasons.append("loops present")
    if coloops(matroid):
        reasons.append("coloops present")
    return tuple(reasons)


def verify_main_theorem(matroid: Matroid, identifier: str = "matroid") -> VerificationRecord:
    """Check beta/((n-1) C(n-2,k-1)) == [t^1] ehr(M, t-1) exactly.

    Raises HypothesisViolation when the matroid has loops or coloops, or a
    degenerate rank; such inputs are rejections, not failed verifications.
    """
    reasons = hypothesis_failures(matroid)
    if reasons:
        raise HypothesisViolation(reasons)
    beta = beta_definition(matroid)
    norm = normalization_constant(matroid.n, matroid.k)
    lhs = Fraction(beta, norm)
    rhs = linear_coeff_shifted(matroid)
    return VerificationRecord(
        identifier=identifier,
        n=matroid.n,
        k=matroid.k,
        has_loops=False,
        has_coloops=False,
        connected=len(connected_components(matroid)) == 1,
        beta=beta,
        normalization=norm,
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )
