"""Frequency-of-frequencies spectra: how many distinct words occur exactly k times."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .corpus import FrequencyTable
from .errors import EmptyCorpusError


@dataclass(frozen=True)
class FreqSpectrum:
    """Map k -> F(k) over the frequencies that actually occur.

    Frequencies with F(k) = 0 are never stored, which keeps log F(k)
    well-defined at every stored point.  Corpus-derived spectra hold positive
    integers; synthetic law-valued spectra may hold positive reals.  Points
    are kept sorted by k.
    """

    points: dict[int, float]
    total_tokens: float  # sum of k * F(k) over the stored points
    max_k: int

    @classmethod
    def from_points(cls, points: dict[int, float]) -> "FreqSpectrum":
        if not points:
            raise EmptyCorpusError("spectrum has no points")
        for k, f in points.items():
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"frequency k must be a positive integer, got {k!r}")
            if not (isinstance(f, (int, float)) and math.isfinite(f) and f > 0):
                raise ValueError(f"F({k}) must be a positive finite number, got {f!r}")
        ordered = dict(sorted(points.items()))
        if all(isinstance(f, int) for f in ordered.values()):
            total = sum(k * f for k, f in ordered.items())
        else:
            total = math.fsum(k * f for k, f in ordered.items())
        return cls(points=ordered, total_tokens=total, max_k=max(ordered))

    @property
    def vocab_size(self) -> float:
        """Sum of F(k): how many distinct words sit behind the spectrum."""
        values = self.points.values()
        if all(isinstance(f, int) for f in values):
            return sum(values)
        return math.fsum(values)

    def is_integer_valued(self) -> bool:
        return all(isinstance(f, int) for f in self.points.values())


def freq_of_freq(table: FrequencyTable) -> FreqSpectrum:
    """Histogram the counts: F(k) = number of distinct words occurring exactly k times."""
    if table.is_empty():
        raise EmptyCorpusError("cannot build a spectrum from an empty table")
    return FreqSpectrum.from_points(dict(Counter(table.counts.values())))


def spectrum_to_points(spec: FreqSpectrum) -> list[tuple[float, float]]:
    """(ln k, ln F(k)) pairs in ascending k, ready for the log-log fit."""
    return [(math.log(k), math.log(f)) for k, f in spec.points.items()]


def spectrum_csv(spec: FreqSpectrum) -> str:
    """Spectrum as CSV rows "k,F(k)" in ascending k."""
    lines = ["k,F(k)"]
    lines.extend(f"{k},{f}" for k, f in spec.points.items())
    return "\n".join(lines) + "\n"
