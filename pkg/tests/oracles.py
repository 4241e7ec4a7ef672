"""Independent brute-force reference implementations used across the test
suite.  Everything here is deliberately naive (trial division, direct
enumeration with cmath, exhaustive search) and shares no code with the
package kernels."""

import cmath
import math
from fractions import Fraction
from itertools import product


def prime_trial(n):
    if n < 2:
        return False
    return all(n % k for k in range(2, int(n**0.5) + 1))


def legendre_enum(a, p):
    """Quadratic character by enumerating squares."""
    a %= p
    if a == 0:
        return 0
    return 1 if any((y * y) % p == a for y in range(1, p)) else -1


def trace_enum(c, d, p):
    return -sum(legendre_enum(x * x * x + c * x + d, p) for x in range(p))


def affine_enum(c, d, p):
    """Count solution pairs of y^2 = x^3 + c*x + d by double loop."""
    return sum(
        1
        for x in range(p)
        for y in range(p)
        if (y * y) % p == (x * x * x + c * x + d) % p
    )


def kloosterman_enum(c, d, p):
    s = 0j
    for x in range(1, p):
        xinv = pow(x, -1, p)
        s += cmath.exp(2j * math.pi * ((c * x + d * xinv) % p) / p)
    return s


def angle_ref(v, p):
    return math.acos(max(-1.0, min(1.0, v / (2 * math.sqrt(p)))))


def necklaces_enum(max_q):
    """Primitive binary necklaces up to max_q by filtering all words."""
    seen = set()
    out = []
    for q in range(1, max_q + 1):
        for bits in product((0, 1), repeat=q):
            rots = [bits[i:] + bits[:i] for i in range(q)]
            canon = min(rots)
            if canon in seen:
                continue
            if any(
                all(bits[i] == bits[(i + d) % q] for i in range(q))
                for d in range(1, q)
                if q % d == 0
            ):
                continue
            seen.add(canon)
            out.append(canon)
    return out


def orbit_enum(word):
    q = len(word)
    den = 2**q - 1
    return [
        Fraction(int("".join(map(str, word[i:] + word[:i])), 2), den) for i in range(q)
    ]


def factor_count_enum(symbols, n):
    return len({tuple(symbols[i : i + n]) for i in range(len(symbols) - n + 1)})
