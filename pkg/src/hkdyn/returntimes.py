"""Return- and hitting-time statistics for symbolically coded systems,
normalized by cylinder measure so that Kac's lemma puts the mean at 1, plus
the Kolmogorov-Smirnov distance to the exponential law 1 - exp(-t).

Systems:
  doubling      the map x -> 2x mod 1 with Lebesgue measure, driven through
                its binary coding (the digit stream of a Lebesgue-random
                point is an i.i.d. fair coin; float iteration would shed one
                bit of state per step and die after ~53 steps)
  bernoulli     i.i.d. {0,1} stream with P(1) = p
  odometer      the 2-adic adding machine, which revisits every depth-n
                cylinder after exactly 2^n steps

The default cylinder word is 1 followed by zeros.  It has no self-overlap,
so returns do not cluster; an all-zeros cylinder (or any word equal to one
of its own proper shifts on a prefix) keeps the Kac mean at 1 but visibly
breaks the exponential law, which is worth trying via the `word` argument.

Randomness comes from numpy's PCG64, seeded per sample as (master_seed,
sample_index), so any sample subset is reproducible independently of the
others.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels

MAX_DEPTH = 24  # expected return time 2^depth; beyond this a sample crawls
_CHUNK = 4096

SYSTEMS = ("doubling", "bernoulli", "odometer")


@dataclass(frozen=True)
class ReturnSample:
    normalized_times: tuple
    steps: tuple
    cylinder_depth: int
    sample_count: int
    system: str
    mode: str


def default_word(depth):
    """Marker word 1 0 0 ... 0: the non-self-overlapping default cylinder."""
    return (1,) + (0,) * (depth - 1)


def cylinder_measure(word, p_one):
    ones = sum(word)
    return p_one**ones * (1.0 - p_one) ** (len(word) - ones)


def _stream_time(word, p_one, rng, mode):
    """First k >= 1 with the digit window at k equal to `word`, for an
    i.i.d. digit stream started inside the cylinder (return) or started
    anywhere (hitting)."""
    d = len(word)
    w = np.asarray(word, dtype=np.uint8)
    prefix = w if mode == "return" else np.empty(0, dtype=np.uint8)
    buf = prefix
    searched = 1  # candidate positions below this are already excluded
    while True:
        grow = (rng.random(_CHUNK) < p_one).astype(np.uint8)
        buf = np.concatenate([buf, grow])
        hit = kernels.first_match(buf, w, searched)
        if hit >= 0:
            return hit
        searched = max(1, len(buf) - d + 1)


def return_time_samples(system, cylinder_depth, n_samples, seed, mode="return", p_one=0.5, word=None):
    """Normalized return (or hitting) times: steps * cylinder measure.

    For the odometer every depth-n cylinder is revisited after exactly 2^n
    steps (the first n digits advance as a counter mod 2^n), so each sample
    is the exact constant 1; odometer_step + simulated search verify this
    at small depth in the tests.
    """
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}; pick one of {SYSTEMS}")
    if mode not in ("return", "hitting"):
        raise ValueError(f"mode must be 'return' or 'hitting', got {mode!r}")
    if not 1 <= cylinder_depth <= MAX_DEPTH:
        raise ValueError(f"cylinder_depth must lie in [1, {MAX_DEPTH}]")
    if n_samples < 1:
        raise ValueError("need n_samples >= 1")
    if word is None:
        word = default_word(cylinder_depth)
    if len(word) != cylinder_depth or any(b not in (0, 1) for b in word):
        raise ValueError("word must be a 0/1 tuple of length cylinder_depth")

    if system == "odometer":
        steps = (2**cylinder_depth,) * n_samples
        times = (1.0,) * n_samples
        return ReturnSample(times, steps, cylinder_depth, n_samples, system, mode)

    p = 0.5 if system == "doubling" else float(p_one)
    if not 0.0 < p < 1.0:
        raise ValueError(f"bernoulli parameter must lie in (0, 1), got {p}")
    mu = cylinder_measure(word, p)
    steps = []
    for i in range(n_samples):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, i))))
        steps.append(_stream_time(word, p, rng, mode))
    times = tuple(k * mu for k in steps)
    return ReturnSample(times, tuple(steps), cylinder_depth, n_samples, system, mode)


def ks_vs_exponential(sample):
    """KS distance between the empirical law of the normalized times and
    E(t) = max(0, 1 - exp(-t))."""
    t = np.sort(np.asarray(sample.normalized_times, dtype=np.float64))
    if t.size == 0:
        raise ValueError("empty sample")
    n = t.size
    cdf = 1.0 - np.exp(-t)
    upper = np.arange(1, n + 1) / n - cdf
    lower = cdf - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))


def kac_report(sample):
    """Empirical mean of the normalized times with its standard error;
    Kac's lemma makes the true mean exactly 1."""
    t = np.asarray(sample.normalized_times, dtype=np.float64)
    mean = float(t.mean())
    se = float(t.std(ddof=1) / math.sqrt(t.size)) if t.size > 1 else float("inf")
    return {"mean": mean, "se": se, "sigmas_from_one": abs(mean - 1.0) / se if se else 0.0}


def odometer_step(state, depth):
    """One step of the adding machine restricted to `depth` binary digits:
    add 1 with carry, i.e. increment mod 2^depth."""
    if not 0 <= state < 2**depth:
        raise ValueError(f"state {state} out of range for depth {depth}")
    return (state + 1) % 2**depth


def odometer_return_time(state, depth):
    """First k >= 1 with the truncated odometer back at `state`, by direct
    iteration (small depths; the closed form is 2^depth)."""
    k = 1
    s = odometer_step(state, depth)
    while s != state:
        s = odometer_step(s, depth)
        k += 1
    return k
