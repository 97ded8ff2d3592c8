"""Shannon entropy, its closed-form power-law ceiling, and the derivation's
intermediate inequalities as runnable diagnostics.

Everything is in nats internally; the e^b terms of the ceiling force base e.
Entropy uses the standard non-negative convention -sum p ln p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import FrequencyTable
from .errors import BoundNotApplicableError, EmptyCorpusError
from .spectrum import FreqSpectrum

_LN2 = math.log(2)

DEFAULT_CHAIN_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EntropyValue:
    """Entropy in nats, with the derived bit value (nats / ln 2)."""

    nats: float
    bits: float

    @classmethod
    def from_nats(cls, nats: float) -> "EntropyValue":
        return cls(nats=nats, bits=nats / _LN2)


def entropy(table: FrequencyTable) -> EntropyValue:
    """-sum_w p(w) ln p(w) with p(w) = count(w) / N.

    Terms are fed to fsum smallest probability first; fsum makes the result
    order-independent anyway, the sort just pins the iteration down so runs
    are reproducible.
    """
    if table.is_empty():
        raise EmptyCorpusError("entropy of an empty table is undefined")
    n = table.total_tokens
    terms = []
    for c in sorted(table.counts.values()):
        p = c / n
        terms.append(-p * math.log(p))
    return EntropyValue.from_nats(math.fsum(terms) + 0.0)


def entropy_from_spectrum(spec: FreqSpectrum) -> EntropyValue:
    """Entropy regrouped by frequency: -sum_k F(k) (k/N) ln(k/N).

    Mathematically identical to summing word by word, since every word with
    count k contributes the same term.  Accumulated ascending in k (smallest
    probabilities first) with fsum.
    """
    n = spec.total_tokens
    terms = []
    for k, f in spec.points.items():
        p = k / n
        terms.append(-f * p * math.log(p))
    return EntropyValue.from_nats(math.fsum(terms) + 0.0)


def entropy_upper_bound(a: float, b: float) -> float:
    """Closed-form entropy ceiling e^(b(1-1/a)) (b/a + 1), in nats.

    Holds for any corpus whose spectrum satisfies F(k) = e^b k^-a with
    a >= 1; below that slope the derivation breaks down and the request is
    refused rather than answered with a meaningless number.
    """
    if not a >= 1:
        raise BoundNotApplicableError(a)
    return math.exp(b * (1 - 1 / a)) * (b / a + 1)


@dataclass(frozen=True)
class BoundReport:
    """Ceiling vs measured entropy; the value fields are None when a < 1."""

    applicable: bool
    a: float
    b: float
    bound_nats: float | None = None
    margin_nats: float | None = None


def bound_report(a: float, b: float, entropy_nats: float) -> BoundReport:
    """Evaluate the ceiling against a measured entropy, tolerating a < 1."""
    if not a >= 1:
        return BoundReport(applicable=False, a=a, b=b)
    value = entropy_upper_bound(a, b)
    return BoundReport(
        applicable=True, a=a, b=b, bound_nats=value, margin_nats=value - entropy_nats
    )


@dataclass(frozen=True)
class InequalityResult:
    slack: float
    ok: bool


@dataclass(frozen=True)
class ChainDiagnostics:
    """Worst-case slack of each inequality the ceiling's derivation relies on.

    Slacks are oriented so that >= 0 means satisfied, and a check passes when
    its slack >= -tolerance:

      sandwich_lower  min_k  k F(k) - e^(b/a)
      sandwich_upper  min_k  e^b - k F(k)
      n_bound         N - M e^(b/a)
      ratio           e^(-b/a) - M/N
    """

    sandwich_lower: InequalityResult
    sandwich_upper: InequalityResult
    n_bound: InequalityResult
    ratio: InequalityResult
    tolerance: float

    def all_ok(self) -> bool:
        return (
            self.sandwich_lower.ok
            and self.sandwich_upper.ok
            and self.n_bound.ok
            and self.ratio.ok
        )


def chain_check(
    spec: FreqSpectrum, a: float, b: float, tolerance: float = DEFAULT_CHAIN_TOLERANCE
) -> ChainDiagnostics:
    """Evaluate e^(b/a) <= k F(k) <= e^b, N >= M e^(b/a), and M/N <= e^(-b/a)
    over the stored frequencies.

    On data satisfying the law exactly all four pass with zero slack (up to
    float rounding).  Real corpora need not satisfy the law's hypothesis, so
    failures here are diagnostics, not defects.
    """
    if not a >= 1:
        raise BoundNotApplicableError(a)
    if tolerance < 0:
        raise ValueError(f"tolerance must be >= 0, got {tolerance}")
    e_lo = math.exp(b / a)
    e_hi = math.exp(b)
    lower = min(k * f - e_lo for k, f in spec.points.items())
    upper = min(e_hi - k * f for k, f in spec.points.items())
    n = spec.total_tokens
    m = spec.max_k
    n_slack = n - m * e_lo
    ratio_slack = math.exp(-b / a) - m / n

    def check(slack: float) -> InequalityResult:
        return InequalityResult(slack=slack, ok=slack >= -tolerance)

    return ChainDiagnostics(
        sandwich_lower=check(lower),
        sandwich_upper=check(upper),
        n_bound=check(n_slack),
        ratio=check(ratio_slack),
        tolerance=tolerance,
    )
