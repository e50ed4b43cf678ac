"""Closed-form thresholds and the (n, k) regime classifier.

All arithmetic is exact integer work built on math.isqrt; floating point
would misround exactly at the perfect-square boundaries these formulas
live on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt


def ceil_isqrt(m: int) -> int:
    """Smallest integer s with s*s >= m, for m >= 0."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    s = isqrt(m)
    return s if s * s == m else s + 1


def tau_of(k: int) -> int:
    """ceil(sqrt(2k-1)), the construction parameter."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return ceil_isqrt(2 * k - 1)


def lambda_of(k: int) -> int:
    """min(floor(sqrt(4k-2)) + 3, floor(k/2) + 4), the guarantee margin."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return min(isqrt(4 * k - 2) + 3, k // 2 + 4)


def construction_admissible(k: int) -> bool:
    """Whether the explicit counterexample coloring exists for this k."""
    return 2 * tau_of(k) <= k


@dataclass(frozen=True)
class Thresholds:
    k: int
    tau: int
    lam: int
    n_counterexample: int
    n_guaranteed: int
    n_conjectured_strict: int
    n_no_guarantee_max: int


def thresholds(k: int) -> Thresholds:
    tau = tau_of(k)
    lam = lambda_of(k)
    return Thresholds(
        k=k,
        tau=tau,
        lam=lam,
        n_counterexample=5 * k - 2 * tau - 3,
        n_guaranteed=5 * k - lam,
        # floor(2*sqrt(2k-1)) == isqrt(8k-4)
        n_conjectured_strict=5 * k - isqrt(8 * k - 4) - 3,
        n_no_guarantee_max=4 * (k - 1),
    )


class Regime(Enum):
    NO_GUARANTEE = "no_guarantee"
    GUARANTEED = "guaranteed"
    COUNTEREXAMPLE_EXISTS = "counterexample_exists"
    CONJECTURED_GUARANTEED = "conjectured_guaranteed"
    OPEN = "open"


@dataclass(frozen=True)
class RegimeReport:
    n: int
    k: int
    regime: Regime
    citation: str


def classify(n: int, k: int) -> RegimeReport:
    """Place (n, k) in exactly one regime; first matching rule wins.

    (a) n <= 4(k-1): no coloring-independent guarantee exists at all.
    (b) n >= 5k - lambda: a k-connected monochromatic subgraph of order
        >= n - 2k + 2 is guaranteed (proved).
    (c) n equals the constructible counterexample order: a coloring with no
        such subgraph exists.
    (d) n above the conjectured threshold 5k - floor(2*sqrt(2k-1)) - 3:
        guarantee conjectured, unproven.
    (e) otherwise open.
    """
    if n < 1 or k < 1:
        raise ValueError(f"n and k must be positive, got n={n}, k={k}")
    t = thresholds(k)
    if n <= t.n_no_guarantee_max:
        citation = f"no guarantee for n <= 4(k-1) = {t.n_no_guarantee_max}"
        if n == t.n_counterexample and not construction_admissible(k):
            citation += "; constructible coloring inadmissible at this k (covered by an external example not built here)"
        return RegimeReport(n, k, Regime.NO_GUARANTEE, citation)
    if n >= t.n_guaranteed:
        return RegimeReport(
            n, k, Regime.GUARANTEED, f"proved for n >= 5k - lambda = {t.n_guaranteed}"
        )
    if n == t.n_counterexample and construction_admissible(k):
        return RegimeReport(
            n,
            k,
            Regime.COUNTEREXAMPLE_EXISTS,
            f"explicit coloring at n = 5k - 2*ceil(sqrt(2k-1)) - 3 = {n}",
        )
    if n > t.n_conjectured_strict:
        return RegimeReport(
            n,
            k,
            Regime.CONJECTURED_GUARANTEED,
            f"conjectured for n > {t.n_conjectured_strict}, unproven",
        )
    citation = "between the known counterexample and the proved threshold"
    if n == t.n_counterexample and not construction_admissible(k):
        citation += "; constructible coloring inadmissible at this k (covered by an external example not built here)"
    return RegimeReport(n, k, Regime.OPEN, citation)
