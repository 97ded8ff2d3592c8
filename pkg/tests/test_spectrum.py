"""Frequency-of-frequencies spectrum construction and export."""

import math
import random

import mpmath
import pytest

from conftest import random_tokens
from zipfent.corpus import FrequencyTable, count_frequencies
from zipfent.errors import EmptyCorpusError
from zipfent.spectrum import FreqSpectrum, freq_of_freq, spectrum_csv, spectrum_to_points


def test_freq_of_freq_hand_enumeration():
    spec = freq_of_freq(FrequencyTable.from_counts({"a": 3, "b": 2, "c": 1}))
    assert spec.points == {1: 1, 2: 1, 3: 1}
    assert spec.total_tokens == 6
    assert spec.max_k == 3


def test_freq_of_freq_singleton():
    assert freq_of_freq(FrequencyTable.from_counts({"a": 5})).points == {5: 1}


def test_freq_of_freq_uniform_corpus():
    table = FrequencyTable.from_counts({f"w{i}": 1 for i in range(9)})
    assert freq_of_freq(table).points == {1: 9}


def test_freq_of_freq_rejects_empty_table():
    with pytest.raises(EmptyCorpusError):
        freq_of_freq(count_frequencies([]))


def test_from_points_validation():
    with pytest.raises(EmptyCorpusError):
        FreqSpectrum.from_points({})
    with pytest.raises(ValueError):
        FreqSpectrum.from_points({0: 3})
    with pytest.raises(ValueError):
        FreqSpectrum.from_points({1.5: 3})
    with pytest.raises(ValueError):
        FreqSpectrum.from_points({2: 0})
    with pytest.raises(ValueError):
        FreqSpectrum.from_points({2: float("nan")})


def test_points_ln1_is_zero():
    assert spectrum_to_points(FreqSpectrum.from_points({1: 4, 2: 2})) == [
        (0.0, math.log(4)),
        (math.log(2), math.log(2)),
    ]
    assert spectrum_to_points(FreqSpectrum.from_points({1: 1})) == [(0.0, 0.0)]


def test_points_match_high_precision_logs():
    # oracle: 50-digit logs, rounded to float
    mpmath.mp.dps = 50
    pts = spectrum_to_points(FreqSpectrum.from_points({1: 6, 2: 3, 3: 2}))
    expected = [
        (float(mpmath.log(k)), float(mpmath.log(f))) for k, f in [(1, 6), (2, 3), (3, 2)]
    ]
    for (x, y), (ex, ey) in zip(pts, expected):
        assert x == pytest.approx(ex, abs=1e-15)
        assert y == pytest.approx(ey, abs=1e-15)


def test_conservation_on_random_corpora():
    rng = random.Random(7)
    for _ in range(100):
        table = count_frequencies(random_tokens(rng, max_tokens=400, alphabet=30))
        spec = freq_of_freq(table)
        assert sum(k * f for k, f in spec.points.items()) == table.total_tokens
        assert sum(spec.points.values()) == table.vocab_size
        assert spec.vocab_size == table.vocab_size
        assert spec.max_k == max(spec.points) == table.max_frequency


def test_invariant_under_word_relabeling():
    rng = random.Random(11)
    table = count_frequencies(random_tokens(rng, max_tokens=300, alphabet=20))
    relabeled = FrequencyTable.from_counts(
        {f"q{i}": c for i, (_, c) in enumerate(sorted(table.counts.items()))}
    )
    assert freq_of_freq(relabeled).points == freq_of_freq(table).points


def test_csv_export_ascending_k():
    spec = FreqSpectrum.from_points({2: 2, 1: 4, 10: 1})
    assert spectrum_csv(spec) == "k,F(k)\n1,4\n2,2\n10,1\n"


def test_real_valued_spectrum_aggregates():
    spec = FreqSpectrum.from_points({1: 2.5, 2: 1.25})
    assert not spec.is_integer_valued()
    assert spec.total_tokens == pytest.approx(2.5 + 2 * 1.25, abs=1e-15)
    assert spec.max_k == 2
