"""Periodic orbits of the doubling map x -> 2x mod 1 in exact rational
arithmetic: mechanical (Sturmian) words, the orbit measures they code,
necklace enumeration, balancedness, and brute-force ergodic optimization
over all cycles up to a given period.

A periodic binary word w of primitive period q codes the cycle
x_i = 0.(w_i w_{i+1} ...)_2, a rational with denominator 2^q - 1; the
doubling map acts as the left shift, i.e. 2*x_i - w_i = x_{i+1} exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BinaryWord:
    """A cyclic binary word; construction reduces to the primitive period
    but keeps the given rotation."""

    symbols: tuple

    def __post_init__(self):
        if not self.symbols or any(s not in (0, 1) for s in self.symbols):
            raise ValueError("symbols must be a nonempty 0/1 sequence")
        object.__setattr__(self, "symbols", _primitive_root(tuple(self.symbols)))

    @property
    def period(self):
        return len(self.symbols)

    @property
    def canonical(self):
        """Lexicographically least rotation (necklace representative)."""
        return _canonical(self.symbols)


def _primitive_root(word):
    q = len(word)
    for d in range(1, q):
        if q % d == 0 and all(word[i] == word[i % d] for i in range(q)):
            return word[:d]
    return word


def _canonical(word):
    word = _primitive_root(tuple(word))
    return min(word[i:] + word[:i] for i in range(len(word)))


@dataclass(frozen=True)
class PeriodicOrbitMeasure:
    """Uniform probability on a doubling-map cycle; points are exact
    rationals, kept in word order (point i is coded by the i-th rotation)."""

    word: BinaryWord
    points: tuple

    @property
    def period(self):
        return len(self.points)


def sturmian_word(rho, phase=0):
    """Mechanical word of rotation number rho = p/q: the floor-difference
    sequence s(n) = floor((n+1)rho + phase) - floor(n rho + phase) over one
    period, in exact arithmetic."""
    rho = Fraction(rho)
    if not 0 <= rho <= 1:
        raise ValueError(f"rotation number must lie in [0, 1], got {rho}")
    phase = Fraction(phase)
    q = rho.denominator
    bits = tuple(
        math.floor((n + 1) * rho + phase) - math.floor(n * rho + phase) for n in range(q)
    )
    return BinaryWord(symbols=bits)


def word_to_orbit(word):
    """Cycle measure coded by a word: point i is the binary value of the
    i-th rotation read as a fraction with denominator 2^q - 1."""
    w = word.symbols
    q = len(w)
    den = 2**q - 1
    pts = []
    for i in range(q):
        rot = w[i:] + w[:i]
        num = 0
        for bit in rot:
            num = 2 * num + bit
        pts.append(Fraction(num, den))
    return PeriodicOrbitMeasure(word=word, points=tuple(pts))


def orbit_is_exact(measure):
    """Shift identity 2*x_i - w_i == x_{i+1}, exact in rationals; this is
    the doubling map modulo the 0 == 1 circle identification."""
    pts, w = measure.points, measure.word.symbols
    q = len(pts)
    return all(2 * pts[i] - w[i] == pts[(i + 1) % q] for i in range(q))


def orbit_stats(measure, f=None):
    """Barycentre and variance in exact rationals; geometric mean (0 when
    the cycle contains 0) and, when given, the mean of f over the cycle."""
    pts = measure.points
    q = len(pts)
    mean = sum(pts) / q
    var = sum((x - mean) ** 2 for x in pts) / q
    if any(x == 0 for x in pts):
        gm = 0.0
    else:
        gm = math.exp(sum(math.log(x) for x in pts) / q)
    out = {"barycentre": mean, "variance": var, "geometric_mean": gm}
    if f is not None:
        vals = [f(x) for x in pts]
        out["integral_f"] = sum(vals) / q
    return out


MAX_ENUM_PERIOD = 16


def enumerate_cycles(max_period):
    """One measure per primitive binary necklace of period <= max_period,
    complete and duplicate-free.  The all-ones word codes the same circle
    point as the all-zeros word (0.111... = 1 == 0), so only the fixed
    point {0} is kept."""
    if not 1 <= max_period <= MAX_ENUM_PERIOD:
        raise ValueError(f"max_period must lie in [1, {MAX_ENUM_PERIOD}]")
    out = []
    for q in range(1, max_period + 1):
        for word in _necklaces(q):
            if word == (1,):
                continue
            out.append(word_to_orbit(BinaryWord(symbols=word)))
    return out


def _necklaces(q):
    """Primitive binary necklaces of length exactly q, canonical form,
    ascending; simple filter over all q-bit words (q <= 16)."""
    seen = set()
    out = []
    for m in range(2**q):
        word = tuple((m >> (q - 1 - i)) & 1 for i in range(q))
        if _primitive_root(word) != word:
            continue
        canon = _canonical(word)
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    out.sort()
    return out


def is_balanced(word):
    """Balancedness of the cyclic word: any two factors of equal length
    carry 1-counts differing by at most 1.  Periodicity makes lengths up to
    the period sufficient."""
    w = word.symbols
    q = len(w)
    for n in range(1, q + 1):
        counts = [sum(w[(i + j) % q] for j in range(n)) for i in range(q)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def ergodic_optimize(f, theta, cycles, mode="min"):
    """Extremize the cycle average of f(x) + theta*x over the given cycle
    measures.  Ties break toward the smaller period, then the
    lexicographically smaller canonical word; with exact-valued f and
    rational theta the comparison is exact.

    Returns (best measure, best value).
    """
    if not cycles:
        raise ValueError("need a nonempty cycle list")
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    sign = 1 if mode == "min" else -1
    best = None
    for mu in cycles:
        val = sum(f(x) + theta * x for x in mu.points) / mu.period
        key = (sign * val, mu.period, mu.word.canonical)
        if best is None or key < best[0]:
            best = (key, mu, val)
    return best[1], best[2]
