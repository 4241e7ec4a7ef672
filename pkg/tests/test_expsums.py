import math

import numpy as np
import pytest

from hkdyn.arith import primes_in_range
from hkdyn.expsums import (
    CubicCurveParams,
    affine_point_count,
    kloosterman_grid,
    kloosterman_sum,
    trace_ap,
    trace_grid,
    weil_angle,
)
from oracles import affine_enum, kloosterman_enum, trace_enum


def test_affine_count_examples():
    assert affine_point_count(CubicCurveParams(1, 1), 5) == 8
    assert affine_point_count(CubicCurveParams(0, 0), 3) == 3
    assert 0 <= affine_point_count(CubicCurveParams(2, 3), 5) <= 10


def test_affine_count_matches_double_loop():
    for c, d, p in [(1, 1, 5), (0, 0, 3), (4, 2, 13), (6, 1, 17), (3, 5, 29)]:
        assert affine_point_count(CubicCurveParams(c, d), p) == affine_enum(c, d, p)


def test_trace_examples():
    r = trace_ap(CubicCurveParams(1, 1), 5)
    assert r.a_p == -3 and r.is_elliptic
    assert 1 + 5 - r.a_p == 9  # projective count
    r = trace_ap(CubicCurveParams(-3, 2), 7)  # f = (x-1)^2 (x+2)
    assert r.a_p == -1 and not r.is_elliptic
    r = trace_ap(CubicCurveParams(0, 0), 5)
    assert r.a_p == 0 and not r.is_elliptic


def test_trace_matches_enum():
    for c, d, p in [(1, 1, 5), (-3, 2, 7), (0, 0, 5), (2, 9, 31), (11, 4, 101)]:
        assert trace_ap(CubicCurveParams(c, d), p).a_p == trace_enum(c, d, p)


def test_trace_rejects_p2():
    with pytest.raises(ValueError):
        trace_ap(CubicCurveParams(1, 1), 2)


def test_kloosterman_examples():
    v = kloosterman_sum(1, 1, 3)
    assert v.real_part == pytest.approx(-1.0, abs=1e-12)
    v = kloosterman_sum(1, 1, 5)
    assert v.real_part == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-12)
    # substitution x -> c^-1 x collapses (c,d) to (1, cd)
    v = kloosterman_sum(2, 3, 5)
    assert v.real_part == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-9)


def test_kloosterman_matches_enum():
    for c, d, p in [(1, 1, 7), (3, 4, 11), (5, 5, 13), (9, 2, 37)]:
        ref = kloosterman_enum(c, d, p)
        v = kloosterman_sum(c, d, p)
        assert v.real_part == pytest.approx(ref.real, abs=1e-10)
        assert abs(v.imag_part) <= 1e-9


def test_kloosterman_rejects_degenerate():
    with pytest.raises(ValueError):
        kloosterman_sum(5, 1, 5)
    with pytest.raises(ValueError):
        kloosterman_sum(1, 10, 5)


def test_kloosterman_defined_at_two():
    v = kloosterman_sum(1, 1, 2)
    assert v.real_part == pytest.approx(1.0, abs=1e-12)


def test_weil_angle_examples():
    assert weil_angle(0, 97) == pytest.approx(math.pi / 2)
    assert weil_angle(-3, 5) == pytest.approx(2.3061, abs=1e-4)
    assert weil_angle(2 * math.sqrt(7), 7) == pytest.approx(0.0, abs=1e-7)


def test_weil_angle_rejects_out_of_bound():
    with pytest.raises(ValueError):
        weil_angle(2 * math.sqrt(5) + 1e-3, 5)


def test_hasse_bound_random_curves():
    # |a_p| <= 2 sqrt(p) on elliptic reductions, random curves per prime
    rng = np.random.Generator(np.random.PCG64(2026))
    for p in primes_in_range(3, 2000):
        cs = rng.integers(0, p, 200)
        ds = rng.integers(0, p, 200)
        for c, d in zip(cs, ds):
            curve = CubicCurveParams(int(c), int(d))
            r = trace_ap(curve, p)
            if r.is_elliptic:
                assert abs(r.a_p) <= 2 * math.sqrt(p)
            else:
                assert r.a_p in (-1, 0, 1)


def test_singular_traces_small():
    # p | 4c^3 + 27d^2 forces a_p into {-1, 0, 1}
    found = 0
    for p in primes_in_range(3, 60):
        for c in range(p):
            for d in range(p):
                if (4 * c**3 + 27 * d**2) % p == 0:
                    assert trace_ap(CubicCurveParams(c, d), p).a_p in (-1, 0, 1)
                    found += 1
        if found > 300:
            return
    assert found


def test_weil_bound_exhaustive_small():
    for p in primes_in_range(3, 60):
        re, max_imag = kloosterman_grid(p)
        assert np.abs(re).max() <= 2 * math.sqrt(p) + 1e-9
        assert max_imag <= 1e-9


def test_multiplicative_substitution():
    # T_p(c,d) = T_p(1, c*d mod p), each side summed directly
    for p in primes_in_range(3, 100):
        re, _ = kloosterman_grid(p)
        for c in range(1, p):
            for d in range(1, p):
                m = (c * d) % p
                assert abs(re[c - 1, d - 1] - re[0, m - 1]) <= 1e-9


def test_trace_grid_crosscheck_runs():
    ap = trace_grid(101)
    assert ap.shape == (100, 100)
    assert int(ap[0, 0]) == trace_enum(1, 1, 101)
