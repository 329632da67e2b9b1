"""Randomized algebraic property suites over the exact backends."""

import random
from fractions import Fraction

from cga import (
    FLOAT,
    Multivector,
    NotInvertibleError,
    RATIONAL,
    canonicalize,
    dual,
    embed_point,
    euclidean_vector,
    grade,
    left_contraction,
    multivector_inverse,
    point,
    reversion,
    rotation,
    rotor,
    sandwich,
    symbolic_backend,
    translator,
)
from cga.engine import EINF

from conftest import random_fraction, random_multivector


def test_associativity_random_triples(rng):
    for _ in range(1000):
        a, b, c = (random_multivector(rng, max_terms=4) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_associativity_all_basis_blade_triples():
    blades = [Multivector(RATIONAL, {m: Fraction(1)}) for m in range(32)]
    for a in blades:
        for b in blades:
            ab = a * b
            for c in blades:
                assert ab * c == a * (b * c)


def test_distributivity_and_bilinearity(rng):
    for _ in range(1000):
        a, b, c = (random_multivector(rng, max_terms=4) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (b + c) * a == b * a + c * a
        s = random_fraction(rng)
        assert (s * a) * b == s * (a * b)


def test_grade_completeness_random(rng):
    zero = Multivector.scalar(RATIONAL, 0)
    for _ in range(500):
        a = random_multivector(rng)
        assert sum((grade(a, k) for k in range(6)), zero) == a


def test_reversion_antiautomorphism_random(rng):
    for _ in range(1000):
        a, b = random_multivector(rng, max_terms=4), random_multivector(rng, max_terms=4)
        assert reversion(a * b) == reversion(b) * reversion(a)


def test_double_dual_is_negation(rng):
    for _ in range(1000):
        a = random_multivector(rng)
        assert dual(dual(a)) == -a


def test_versor_inverse_contract(rng):
    one = Multivector.scalar(RATIONAL, 1)
    succeeded = 0
    for _ in range(1000):
        a = random_multivector(rng, max_terms=4)
        try:
            inv = multivector_inverse(a)
        except NotInvertibleError:
            continue
        assert a * inv == one
        assert inv * a == one
        succeeded += 1
    assert succeeded > 500


def test_translator_group_law(rng):
    one = Multivector.scalar(RATIONAL, 1)
    for _ in range(1000):
        s = euclidean_vector(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        t = euclidean_vector(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        x = random_multivector(rng, max_terms=4)
        lhs = sandwich(translator(s), sandwich(translator(t), x))
        rhs = sandwich(translator(s + t), x)
        assert lhs == rhs
        assert translator(t).mv * translator(-t).mv == one


def test_null_point_invariant_random_and_symbolic(rng):
    for _ in range(500):
        p = point(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        assert (p * p).is_zero()
    bk = symbolic_backend()
    p = point(bk, bk.symbol("u"), bk.symbol("v"), bk.symbol("w"))
    assert (p * p).is_zero()


def test_incidence_of_constructed_points(rng):
    from cga import line_through, plane_through, sphere_through

    for _ in range(100):
        a = point(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        b = point(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        if (a - b).is_zero():
            continue
        line = line_through(a, b)
        t = random_fraction(rng)
        ax, ay, az = (a.coefficient(i) for i in (1, 2, 3))
        bx, by, bz = (b.coefficient(i) for i in (1, 2, 3))
        q = point(RATIONAL, ax + t * (bx - ax), ay + t * (by - ay), az + t * (bz - az))
        assert (q ^ line).is_zero()


def test_rotor_preserves_inner_products_float(rng):
    for _ in range(200):
        a = euclidean_vector(FLOAT, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        b = euclidean_vector(FLOAT, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        x = euclidean_vector(FLOAT, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        y = euclidean_vector(FLOAT, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        try:
            r = rotor(a, b)
            rx, ry = sandwich(r, x), sandwich(r, y)
        except (NotInvertibleError, ZeroDivisionError):
            continue
        before = left_contraction(x, y).scalar_part()
        after = left_contraction(rx, ry).scalar_part()
        assert abs(before - after) <= 1e-10 * max(1.0, abs(before))


def test_rotor_fixes_null_directions_exactly(rng):
    e0 = canonicalize(RATIONAL, [0])
    einf = canonicalize(RATIONAL, ["inf"])
    for _ in range(200):
        a = euclidean_vector(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        b = euclidean_vector(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        if a.is_zero() or b.is_zero():
            continue
        r = rotor(a, b)
        try:
            assert sandwich(r, e0) == e0
            assert sandwich(r, einf) == einf
        except NotInvertibleError:
            continue


def test_versor_covariance_over_outer_products(rng):
    for _ in range(200):
        t = euclidean_vector(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        v = translator(t)
        a, b = random_multivector(rng, max_terms=3), random_multivector(rng, max_terms=3)
        assert sandwich(v, a ^ b) == (sandwich(v, a) ^ sandwich(v, b))
    for _ in range(100):
        a1 = euclidean_vector(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        b1 = euclidean_vector(RATIONAL, *(random_fraction(rng) for _ in range(3)))
        if a1.is_zero() or b1.is_zero():
            continue
        try:
            v = rotor(a1, b1)
            a, b = random_multivector(rng, max_terms=3), random_multivector(rng, max_terms=3)
            assert sandwich(v, a ^ b) == (sandwich(v, a) ^ sandwich(v, b))
        except NotInvertibleError:
            continue


def test_inversor_involution_on_random_points(rng):
    from cga import inversor, normalize_point

    origin = point(RATIONAL, 0, 0, 0)
    for _ in range(200):
        coords = [random_fraction(rng) for _ in range(3)]
        if all(c == 0 for c in coords):
            continue
        p = point(RATIONAL, *coords)
        r = abs(random_fraction(rng)) + 1
        back = inversor(inversor(p, origin, r), origin, r)
        assert normalize_point(back) == p


def test_embedding_round_trip_with_to_vector(rng):
    from cga import to_vector

    for _ in range(200):
        coords = tuple(random_fraction(rng) for _ in range(3))
        assert to_vector(point(RATIONAL, *coords)) == coords
