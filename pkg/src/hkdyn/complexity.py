"""Complexity measures on finite symbol sequences: block (factor) counting,
a topological-entropy estimate from factor growth, the empirical entropy
rate of block statistics, and Kolmogorov-Smirnov equidistribution
diagnostics for angle streams.

Estimators never correct for undersampling; instead results carry an
`undersampled` flag so a thin sample is visible rather than silently
biased.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


@dataclass(frozen=True)
class SymbolSequence:
    symbols: tuple
    alphabet: int

    def __post_init__(self):
        if self.alphabet < 2:
            raise ValueError("alphabet must be >= 2")
        if any(not 0 <= s < self.alphabet for s in self.symbols):
            raise ValueError("symbol outside [0, alphabet-1]")

    def __len__(self):
        return len(self.symbols)

    @classmethod
    def from_digits(cls, digits, alphabet):
        return cls(symbols=tuple(int(d) for d in digits), alphabet=int(alphabet))


class EntropyEstimate(NamedTuple):
    value: float
    undersampled: bool


def block_complexity(seq, n):
    """Number of distinct length-n factors of the sequence."""
    if not 1 <= n <= len(seq):
        raise ValueError(f"block length {n} outside [1, {len(seq)}]")
    s = bytes(seq.symbols) if seq.alphabet <= 256 else None
    if s is not None:
        return len({s[i : i + n] for i in range(len(s) - n + 1)})
    sy = seq.symbols
    return len({sy[i : i + n] for i in range(len(sy) - n + 1)})


def topological_entropy_estimate(seq, n_max):
    """log(block_complexity(n_max)) / n_max in nats; the undersampled flag
    is set when the sequence is shorter than 100 * n_max."""
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    p_n = block_complexity(seq, n_max)
    return EntropyEstimate(
        value=math.log(p_n) / n_max, undersampled=len(seq) < 100 * n_max
    )


def empirical_entropy_rate(seq, block_len):
    """Shannon entropy of the empirical distribution of length-block_len
    factors, divided by block_len, in nats.  Undersampled when the sequence
    is shorter than 100 * alphabet**block_len."""
    if block_len < 1:
        raise ValueError("need block_len >= 1")
    if block_len > len(seq):
        raise ValueError(f"block length {block_len} exceeds sequence length {len(seq)}")
    counts = {}
    sy = bytes(seq.symbols) if seq.alphabet <= 256 else seq.symbols
    for i in range(len(sy) - block_len + 1):
        w = sy[i : i + block_len]
        counts[w] = counts.get(w, 0) + 1
    total = sum(counts.values())
    h = -sum(c / total * math.log(c / total) for c in counts.values())
    return EntropyEstimate(
        value=h / block_len,
        undersampled=len(seq) < 100 * seq.alphabet**block_len,
    )


def entropy_to_bits(nats):
    return nats / math.log(2)


def _sine_squared_cdf(t):
    # CDF of the density (2/pi) sin^2(u) on [0, pi]
    return (t - np.sin(2.0 * t) / 2.0) / np.pi


def equidistribution_stat(values, reference="uniform"):
    """Kolmogorov-Smirnov distance between the empirical distribution of
    angles in [0, pi] and either the uniform law or the semicircle-type law
    with density (2/pi) sin^2."""
    v = np.sort(np.asarray(values, dtype=np.float64))
    if v.size == 0:
        raise ValueError("need a nonempty value list")
    if v[0] < 0 or v[-1] > math.pi + 1e-12:
        raise ValueError("angles must lie in [0, pi]")
    if reference == "uniform":
        cdf = v / math.pi
    elif reference == "sine_squared":
        cdf = _sine_squared_cdf(v)
    else:
        raise ValueError(f"unknown reference {reference!r}")
    n = v.size
    upper = np.arange(1, n + 1) / n - cdf
    lower = cdf - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))
