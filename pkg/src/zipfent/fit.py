"""Unweighted least-squares fit of log F(k) = -a ln k + b."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .errors import InsufficientPointsError
from .spectrum import FreqSpectrum


@dataclass(frozen=True)
class PowerLawFit:
    """Fitted slope magnitude a and intercept b (natural-log units).

    ``k_min``/``k_max`` are the smallest and largest stored frequencies that
    entered the fit; ``rmse`` is the root-mean-square residual in log space.
    """

    a: float
    b: float
    rmse: float
    points_used: int
    k_min: int
    k_max: int


def fit_loglog(spec: FreqSpectrum, k_min: int = 1, k_max: int | None = None) -> PowerLawFit:
    """Ordinary least squares on (ln k, ln F(k)) over stored points in [k_min, k_max].

    Unweighted and deterministic; the result does not depend on point order.
    Raises InsufficientPointsError when fewer than two distinct k survive the
    range filter (e.g. single-word corpora), in which case the power law
    cannot be instantiated at all.
    """
    if k_min < 1:
        raise ValueError(f"k_min must be >= 1, got {k_min}")
    if k_max is None:
        k_max = spec.max_k
    if k_max < k_min:
        raise ValueError(f"k_max ({k_max}) must be >= k_min ({k_min})")
    used = {k: f for k, f in spec.points.items() if k_min <= k <= k_max}
    if len(used) < 2:
        raise InsufficientPointsError(len(used))
    xs = [math.log(k) for k in used]
    ys = [math.log(f) for f in used.values()]
    slope, intercept = statistics.linear_regression(xs, ys)
    resid = [y - (slope * x + intercept) for x, y in zip(xs, ys)]
    rmse = math.sqrt(math.fsum(r * r for r in resid) / len(resid))
    # + 0.0 normalizes the -0.0 slope produced by flat data
    return PowerLawFit(
        a=-slope + 0.0,
        b=intercept + 0.0,
        rmse=rmse,
        points_used=len(used),
        k_min=min(used),
        k_max=max(used),
    )


def predicted_F(k: int, fit: PowerLawFit) -> float:
    """Law value e^(b - a ln k) at frequency k; strictly decreasing in k for a > 0."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return math.exp(fit.b - fit.a * math.log(k))
