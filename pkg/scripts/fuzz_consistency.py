#!/usr/bin/env python3
"""Extended randomized cross-checking beyond the test suite's fixed budget.

Usage:  python3 scripts/fuzz_consistency.py [--cases N] [--seed S]

Draws random polynomials and ideals over F_2, F_3, F_5 and checks, per case:
root/power adjointness, the nu recurrence sandwich, mode independence,
Skoda's identity, and certification of exact driver outputs.  Exits nonzero
on the first violation with a reproduction recipe.
"""

import argparse
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fthresh import (  # noqa: E402
    Ideal,
    Ring,
    compare_fpt,
    fpt,
    frobenius_power,
    frobenius_root,
    is_fpt,
    nu,
    test_ideal,
)

RINGS = [Ring(2, ("x", "y")), Ring(3, ("x", "y")), Ring(5, ("x", "y"))]


def random_poly(rng, ring, max_terms=3, max_exp=3, vanishing=False):
    p = ring.characteristic
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = tuple(rng.randint(0, max_exp) for _ in range(ring.arity))
            if vanishing and not any(exps):
                continue
            terms[exps] = rng.randint(1, p - 1)
        f = ring.poly(terms)
        if not f.is_zero() and (not vanishing or not f.is_constant()):
            return f


def random_ideal(rng, ring, max_gens=2):
    while True:
        I = Ideal(ring, [random_poly(rng, ring) for _ in range(rng.randint(1, max_gens))])
        if not I.is_zero():
            return I


CHECKS = {}


def check(fn):
    CHECKS[fn.__name__] = fn
    return fn


@check
def adjointness(rng, ring):
    e = rng.randint(0, 2)
    I = random_ideal(rng, ring)
    J = random_ideal(rng, ring)
    assert I.is_contained_in(frobenius_power(J, e)) == frobenius_root(I, e).is_contained_in(J)


@check
def sandwich(rng, ring):
    p = ring.characteristic
    f = random_poly(rng, ring, vanishing=True)
    seq = nu(2, f, return_list=True, use_special_algorithms=False)
    for s in range(1, len(seq)):
        assert p * seq[s - 1] <= seq[s] <= p * seq[s - 1] + p - 1, (f, seq)


@check
def mode_independence(rng, ring):
    f = random_poly(rng, ring, vanishing=True)
    e = rng.randint(1, 2)
    values = {
        nu(e, f, containment=mode, use_special_algorithms=False)
        for mode in ("standard", "root", "power")
    }
    assert len(values) == 1, (f, values)


@check
def skoda(rng, ring):
    f = random_poly(rng, ring, max_terms=2, vanishing=True)
    t = Fraction(rng.randint(1, 5), rng.randint(2, 7))
    lhs = test_ideal(t + 1, f)
    rhs = Ideal(ring, [g * f for g in test_ideal(t, f).generators])
    assert lhs == rhs.reduced(), (f, t)


@check
def driver_certification(rng, ring):
    f = random_poly(rng, ring, vanishing=True)
    result = fpt(f, depth_of_search=rng.randint(1, 2), attempts=3)
    if result.kind == "exact":
        assert is_fpt(result.value, f, at_origin=True), (f, result)
    elif result.kind == "interval":
        if result.lower > 0:
            assert compare_fpt(result.lower, f, at_origin=True) <= 0, (f, result)
        assert compare_fpt(result.upper, f, at_origin=True) >= 0, (f, result)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cases", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    names = sorted(CHECKS)
    t0 = time.time()
    for case in range(args.cases):
        name = names[case % len(names)]
        ring = rng.choice(RINGS)
        try:
            CHECKS[name](rng, ring)
        except AssertionError as exc:
            print(f"FAIL {name} at case {case} (seed {args.seed}): {exc}")
            return 1
        if case and case % 500 == 0:
            rate = case / (time.time() - t0)
            print(f"... {case} cases ({rate:.0f}/s)")
    print(f"{args.cases} cases passed in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
