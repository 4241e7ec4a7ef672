import pytest

from hkdyn.arith import Prime, is_prime, legendre, mod_inverse, primes_in_range
from oracles import prime_trial


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(91)  # 7 * 13
    assert is_prime(10007)


def test_is_prime_against_trial_division():
    for n in range(0, 2000):
        assert is_prime(n) == prime_trial(n), n


def test_is_prime_rejects_out_of_range():
    with pytest.raises(ValueError):
        is_prime(-1)
    with pytest.raises(ValueError):
        is_prime(2**64)


def test_prime_type_rejects_composites():
    assert Prime(7).is_odd
    assert not Prime(2).is_odd
    assert int(Prime(97)) == 97
    with pytest.raises(ValueError):
        Prime(91)


def test_primes_in_range_examples():
    assert primes_in_range(2, 10) == [2, 3, 5, 7]
    assert primes_in_range(14, 16) == []
    assert primes_in_range(90, 100) == [97]
    assert primes_in_range(-5, 2) == [2]


def test_primes_in_range_rejects_reversed():
    with pytest.raises(ValueError):
        primes_in_range(10, 2)


def test_legendre_examples():
    assert legendre(0, 5) == 0
    assert legendre(2, 7) == 1  # 3^2 = 9 = 2 mod 7
    assert legendre(3, 7) == -1  # squares mod 7 are {1,2,4}


def test_legendre_rejects_two():
    with pytest.raises(ValueError):
        legendre(1, 2)


def test_legendre_reduction_and_multiplicativity():
    for p in primes_in_range(3, 200):
        for a in range(1, p):
            assert legendre(a, p) == legendre(a + 3 * p, p)
        for a in range(1, p):
            for b in (1, 2, p - 1):
                assert legendre(a, p) * legendre(b, p) == legendre(a * b, p)


def test_legendre_residue_count():
    for p in primes_in_range(3, 200):
        hits = sum(1 for a in range(1, p) if legendre(a, p) == 1)
        assert hits == (p - 1) // 2


def test_mod_inverse_examples():
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(4, 7) == 2


def test_mod_inverse_involution():
    for p in (5, 13, 97):
        for a in range(1, p):
            assert mod_inverse(mod_inverse(a, p), p) == a % p


def test_mod_inverse_rejects_multiple_of_p():
    with pytest.raises(ValueError):
        mod_inverse(14, 7)
