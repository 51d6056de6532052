"""Frobenius powers, roots, adjointness, and generalized powers."""

import random

from fthresh import (
    Ideal,
    Ring,
    frobenius_power,
    frobenius_root,
    generalized_frobenius_power,
    parse_polynomial,
    root_of_product,
)

from helpers import random_ideal, random_poly

R3 = Ring(3, ("x", "y"))
R5 = Ring(5, ("x", "y"))


def P(text, ring):
    return parse_polynomial(text, ring)


def unit(ring):
    return Ideal(ring, [ring.one()])


class TestFrobeniusPower:
    def test_maximal_ideal(self):
        m = Ideal(R3, [R3.variable("x"), R3.variable("y")])
        assert frobenius_power(m, 1) == Ideal(R3, [P("x^3", R3), P("y^3", R3)])

    def test_level_zero(self):
        J = Ideal(R5, [P("x^2 + y", R5)])
        assert frobenius_power(J, 0) == J

    def test_composition(self):
        rng = random.Random(41)
        for _ in range(20):
            J = random_ideal(rng, R3, max_gens=2, max_exp=2)
            assert frobenius_power(frobenius_power(J, 1), 1) == frobenius_power(J, 2)


class TestFrobeniusRoot:
    def test_single_variable_digit_shift(self):
        # <x^a>^[1/p] = <x^floor(a/p)>: the digit decomposition drops the residue
        x = R3.variable("x")
        for a in range(0, 12):
            root = frobenius_root(Ideal(R3, [x**a]), 1)
            assert root == Ideal(R3, [x ** (a // 3)])

    def test_level_zero(self):
        I = Ideal(R5, [P("x^2 + y^3", R5)])
        assert frobenius_root(I, 0) == I

    def test_adjointness(self):
        # I within J^[p^e] iff I^[1/p^e] within J, via independent routes
        rng = random.Random(101)
        for _ in range(250):
            ring = rng.choice([R3, R5])
            e = rng.randint(0, 2)
            I = random_ideal(rng, ring, max_gens=2, max_exp=4)
            J = random_ideal(rng, ring, max_gens=2, max_exp=2)
            lhs = I.is_contained_in(frobenius_power(J, e))
            rhs = frobenius_root(I, e).is_contained_in(J)
            assert lhs == rhs

    def test_galois_connection(self):
        rng = random.Random(59)
        for _ in range(40):
            J = random_ideal(rng, R3, max_gens=2, max_exp=2)
            # in a polynomial ring the root recovers J from its Frobenius power
            assert frobenius_root(frobenius_power(J, 1), 1) == J.reduced()

    def test_additivity_over_generators(self):
        rng = random.Random(61)
        for _ in range(30):
            A = random_ideal(rng, R5, max_gens=2, max_exp=3)
            B = random_ideal(rng, R5, max_gens=2, max_exp=3)
            lhs = frobenius_root(A + B, 1)
            rhs = Ideal(R5, frobenius_root(A, 1).generators + frobenius_root(B, 1).generators)
            assert lhs == rhs.reduced()

    def test_root_of_product_peeling(self):
        rng = random.Random(73)
        for _ in range(40):
            ring = rng.choice([R3, R5])
            f = random_poly(rng, ring, max_terms=3, max_exp=2)
            n = rng.randint(0, 40)
            e = rng.randint(0, 2)
            I = random_ideal(rng, ring, max_gens=2, max_exp=2)
            direct = frobenius_root(Ideal(ring, [g * f**n for g in I.generators]), e)
            assert root_of_product(f, n, I, e) == direct


class TestGeneralizedPower:
    def test_small_digits_are_ordinary_powers(self):
        m = Ideal(R5, [R5.variable("x"), R5.variable("y")])
        for n in range(5):
            assert generalized_frobenius_power(m, n) == m.power(n)

    def test_pure_power_digit(self):
        m = Ideal(R3, [R3.variable("x"), R3.variable("y")])
        for e in range(3):
            assert generalized_frobenius_power(m, 3**e) == frobenius_power(m, e)

    def test_principal_matches_ordinary(self):
        rng = random.Random(83)
        for _ in range(25):
            ring = rng.choice([R3, R5])
            f = random_poly(rng, ring, max_terms=2, max_exp=2)
            n = rng.randint(0, 100)
            I = Ideal(ring, [f])
            assert generalized_frobenius_power(I, n) == Ideal(ring, [f**n])

    def test_monotone_and_submultiplicative(self):
        rng = random.Random(89)
        for _ in range(15):
            I = random_ideal(rng, R3, max_gens=2, max_exp=1)
            n, m = rng.randint(0, 8), rng.randint(1, 8)
            assert generalized_frobenius_power(I, n + m).is_contained_in(
                generalized_frobenius_power(I, n) * generalized_frobenius_power(I, m)
            )
            assert generalized_frobenius_power(I, n + 1).is_contained_in(
                generalized_frobenius_power(I, n)
            )
