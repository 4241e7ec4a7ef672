"""Exact modular arithmetic primitives: deterministic primality testing,
prime enumeration, Legendre symbols and modular inverses.

All functions are pure and operate on plain Python integers.  Primality is
decided by a Miller-Rabin test with a fixed witness set that is proven
deterministic for all n < 3.3e24, comfortably covering the supported range
n < 2**64.
"""

from dataclasses import dataclass

import numpy as np

# Witnesses making Miller-Rabin deterministic below 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PRIME_LIMIT = 2**64
_SIEVE_LIMIT = 2**31


def is_prime(n):
    """Deterministic primality test for 0 <= n < 2**64."""
    if not 0 <= n < _PRIME_LIMIT:
        raise ValueError(f"primality is only decided for 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """A validated prime; construction rejects composites."""

    value: int

    def __post_init__(self):
        if not is_prime(self.value):
            raise ValueError(f"{self.value} is not prime")

    @property
    def is_odd(self):
        return self.value != 2

    def __index__(self):
        return self.value

    def __int__(self):
        return self.value


def primes_in_range(lo, hi):
    """All primes p with lo <= p <= hi, ascending.  Sieve-backed."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if hi < 2:
        return []
    if hi >= _SIEVE_LIMIT:
        raise ValueError(f"prime enumeration supports hi < 2**31, got {hi}")
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, int(hi**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    ps = np.flatnonzero(sieve)
    return [int(q) for q in ps[ps >= max(lo, 0)]]


def _check_odd_prime(p):
    if p == 2:
        raise ValueError("p = 2 is not supported here (odd prime required)")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def legendre(a, p):
    """Legendre symbol (a/p) for odd prime p, via Euler's criterion."""
    p = int(p)
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def mod_inverse(a, p):
    """Multiplicative inverse of a mod prime p; raises when p divides a."""
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a % p == 0:
        raise ValueError(f"{a} has no inverse mod {p}")
    return pow(a, -1, p)
