"""Hitting times of a fair +-1 walk started at ``d`` and absorbed at 0.

The number of deletions Random-deletion makes is dominated by such a
hitting time, which is why these quantities drive its restart count.

``P_d(T_0 = D) = (d / D) * C(D, (D - d) / 2) * 2^-D`` for ``D >= d`` with
``D - d`` even, and 0 otherwise.  An upper absorbing barrier (the walk
stopping once it is far above ``d``) only removes mass at large ``D`` and
is ignored here, so lower bounds computed from this pmf are conservative.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy import stats

from .rng import as_generator


def hitting_pmf(d: int, D: int) -> float:
    """``P(T_0 = D)`` for a walk started at ``d``."""
    if d < 1 or D < 1:
        raise ValueError("d and D must be >= 1")
    if D < d or (D - d) % 2:
        return 0.0
    # binom.pmf works in log space internally: C(D, k) 2^-D = P(Bin(D, 1/2) = k)
    return d / D * float(stats.binom.pmf((D - d) // 2, D, 0.5))


def hitting_pmf_exact(d: int, D: int) -> Fraction:
    if D < d or (D - d) % 2:
        return Fraction(0)
    return Fraction(d * math.comb(D, (D - d) // 2), D * 2 ** D)


def hitting_pmf_array(d: int, D_max: int) -> np.ndarray:
    """``out[D] = P(T_0 = D)`` for ``D = 0 .. D_max`` (``out[0] = 0``)."""
    D = np.arange(D_max + 1)
    out = np.zeros(D_max + 1)
    ok = (D >= d) & ((D - d) % 2 == 0) & (D > 0)
    Dk = D[ok]
    out[ok] = d / Dk * stats.binom.pmf((Dk - d) // 2, Dk, 0.5)
    return out


def window_prob(d: int, lo: int, hi: int, exact: bool = False):
    """``P(lo <= T_0 <= hi)``; a :class:`~fractions.Fraction` when ``exact``."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    lo = max(lo, 1)
    if exact:
        return sum((hitting_pmf_exact(d, D) for D in range(lo, hi + 1)), Fraction(0))
    if hi < lo:
        return 0.0
    return float(math.fsum(hitting_pmf_array(d, hi)[lo:].tolist()))


def lower_bound_A(alpha: float) -> float:
    """``1 / (alpha * sqrt(2 alpha) * exp(1 / (2 alpha)))``."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return 1.0 / (alpha * math.sqrt(2 * alpha) * math.exp(1 / (2 * alpha)))


def corollary_window(d: int, epsilon: float):
    """``(steps, bound)`` with ``steps = ceil(d^2 / (eps ln d))``.

    ``bound = sqrt(eps ln d) / d^eps`` is the claimed lower bound on hitting
    0 in ``[steps, 2 steps]``.
    """
    if d < 2 or epsilon <= 0:
        raise ValueError("need d >= 2 and epsilon > 0")
    ln = math.log(d)
    steps = math.ceil(d * d / (epsilon * ln))
    return steps, math.sqrt(epsilon * ln) / d ** epsilon


def simulate(d: int, cap: int, trials: int, rng=None):
    """Monte Carlo hitting times.

    Returns ``(counts, censored)``: ``counts[D]`` walks first hit 0 at step
    ``D`` (``D <= cap``); ``censored`` walks had not hit 0 after ``cap`` steps.
    """
    if trials < 1 or d < 1 or cap < 1:
        raise ValueError("need d, cap, trials >= 1")
    rng = as_generator(rng)
    counts = np.zeros(cap + 1, dtype=np.int64)
    pos = np.full(trials, d, dtype=np.int64)
    alive = np.arange(trials)
    for t in range(1, cap + 1):
        if not len(alive):
            break
        pos[alive] += 2 * rng.integers(0, 2, size=len(alive), dtype=np.int8) - 1
        hit = pos[alive] == 0
        counts[t] = int(hit.sum())
        alive = alive[~hit]
    return counts, len(alive)
