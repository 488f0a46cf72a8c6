import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from dyckrepair.randomwalk import (corollary_window, hitting_pmf, hitting_pmf_array,
                                   hitting_pmf_exact, lower_bound_A, simulate, window_prob)
from dyckrepair.rng import substream


def enumerate_pmf(d, D):
    """Fraction of the 2^D step sequences that first reach 0 at step D."""
    hits = 0
    for steps in itertools.product((1, -1), repeat=D):
        pos, t_hit = d, None
        for t, s in enumerate(steps, 1):
            pos += s
            if pos == 0:
                t_hit = t
                break
        hits += t_hit == D
    return Fraction(hits, 2 ** D)


def test_examples():
    assert hitting_pmf(1, 1) == pytest.approx(0.5, rel=1e-12)
    assert hitting_pmf(2, 4) == pytest.approx(0.125, rel=1e-12)
    assert window_prob(1, 1, 1) == pytest.approx(0.5, rel=1e-12)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_against_enumeration(d):
    for D in range(1, 15):
        ref = enumerate_pmf(d, D)
        assert hitting_pmf_exact(d, D) == ref
        assert hitting_pmf(d, D) == pytest.approx(float(ref), rel=1e-12, abs=0)


# exact values from the closed form, summed with Fractions
@pytest.mark.parametrize("args,value", [
    ((2, 2, 8), Fraction(65, 128)),
    ((3, 9, 9), Fraction(7, 128)),
    ((5, 11, 11), Fraction(75, 2048)),
])
def test_frozen_values(args, value):
    d, lo, hi = args
    assert window_prob(d, lo, hi, exact=True) == value
    assert window_prob(d, lo, hi) == pytest.approx(float(value), rel=1e-12)


def test_parity_zeros():
    for d in range(1, 8):
        for D in range(1, 40):
            if D < d or (D - d) % 2:
                assert hitting_pmf(d, D) == 0.0


def test_relative_error_at_large_steps():
    with mpmath.workdps(40):
        for d, D in [(3, 999_999), (100, 1_000_000), (7, 54_321)]:
            ref = mpmath.mpf(d) / D * mpmath.binomial(D, (D - d) // 2) / mpmath.mpf(2) ** D
            assert abs(hitting_pmf(d, D) - ref) <= 1e-9 * ref


def test_array_agrees_with_scalar():
    arr = hitting_pmf_array(4, 60)
    assert arr[0] == 0
    for D in range(1, 61):
        assert arr[D] == pytest.approx(hitting_pmf(4, D), rel=1e-12, abs=1e-300)


def test_pmf_sums_towards_one():
    assert window_prob(1, 1, 20001) == pytest.approx(1, abs=0.01)


def test_lower_bound_value():
    assert 0.194 <= lower_bound_A(2) < 0.195


def test_lower_bound_monotonicity():
    high = np.linspace(1 / 3, 10, 100)
    vals = [lower_bound_A(a) for a in high]
    assert all(x > y for x, y in zip(vals, vals[1:]))
    low = np.linspace(1 / 3 / 100, 1 / 3, 100)
    vals = [lower_bound_A(a) for a in low]
    assert all(x < y for x, y in zip(vals, vals[1:]))


def test_corollary_window():
    steps, bound = corollary_window(4, 0.5)
    assert steps == 24 and bound == pytest.approx(0.41627730557884884, rel=1e-12)
    assert window_prob(4, 4, 2 * steps) >= bound
    steps, bound = corollary_window(2, 1)
    assert steps == math.ceil(4 / math.log(2))
    assert window_prob(2, 2, 2 * steps) >= bound
    for d in range(2, 40):
        for eps in (0.1, 0.5, 1.0, 2.0):
            assert 0 < corollary_window(d, eps)[1] <= 1


def test_cumulative_hit_within_twice_d_squared():
    for d in range(2, 26):
        assert window_prob(d, 1, 2 * d * d) >= 0.194


def test_simulate_small_cap():
    counts, censored = simulate(1, 1, 10, substream(1))
    assert counts[0] == 0 and counts[1] + censored == 10


def test_simulate_first_step():
    n = 100_000
    counts, _ = simulate(1, 1, n, substream(2))
    se = math.sqrt(0.25 / n)
    assert abs(counts[1] / n - 0.5) <= 3 * se


def test_simulated_cdf_tracks_the_pmf():
    n = 100_000
    counts, _ = simulate(3, 100, n, substream(3))
    emp = np.cumsum(counts) / n
    exact = np.cumsum(hitting_pmf_array(3, 100))
    for D in range(1, 31):
        se = math.sqrt(max(exact[D] * (1 - exact[D]), 1e-12) / n)
        assert abs(emp[D] - exact[D]) <= 3 * se + 1e-12


def test_window_against_monte_carlo():
    n = 100_000
    counts, _ = simulate(2, 8, n, substream(4))
    p = 65 / 128
    assert abs(counts[2:9].sum() / n - p) <= 3 * math.sqrt(p * (1 - p) / n)


def test_bad_arguments():
    with pytest.raises(ValueError):
        hitting_pmf(0, 3)
    with pytest.raises(ValueError):
        window_prob(2, 5, 4)
    with pytest.raises(ValueError):
        lower_bound_A(0)
    with pytest.raises(ValueError):
        corollary_window(1, 0.5)
