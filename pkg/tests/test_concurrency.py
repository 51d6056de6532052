"""Immutability and concurrent use: shared handles, lazy basis caching."""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from fthresh import Ideal, Ring, fpt, nu, parse_polynomial


def test_concurrent_groebner_readers_see_one_basis():
    ring = Ring(5, ("x", "y"))
    I = Ideal(ring, [parse_polynomial("x^2 + y^3", ring), parse_polynomial("x*y", ring)])
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: I.groebner(), range(32)))
    assert all(r == results[0] for r in results)


def test_concurrent_nu_and_fpt_calls():
    ring = Ring(5, ("x", "y", "z"))
    f = parse_polynomial("x^3 + y^3 + z^3 + x*y*z", ring)
    with ThreadPoolExecutor(max_workers=4) as pool:
        nus = list(pool.map(lambda e: nu(e, f, use_special_algorithms=False), [1, 2] * 3))
        fpts = list(pool.map(lambda _: fpt(f).value, range(4)))
    assert nus == [3, 19] * 3
    assert fpts == [Fraction(4, 5)] * 4


def test_polynomials_are_shared_safely():
    ring = Ring(3, ("x", "y"))
    f = parse_polynomial("x^2 + y", ring)
    before = dict(f.terms)
    with ThreadPoolExecutor(max_workers=4) as pool:
        list(pool.map(lambda n: f**n, range(16)))
        list(pool.map(lambda _: f.frobenius(2), range(8)))
    assert f.terms == before
