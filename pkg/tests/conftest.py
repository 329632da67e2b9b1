"""Shared helpers for random exact multivectors and oracle conversions."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cga import Multivector, RATIONAL


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_multivector(rng: random.Random, backend=RATIONAL, max_terms=6) -> Multivector:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        coeff = random_fraction(rng)
        terms[rng.randrange(32)] = backend.coerce(coeff)
    return Multivector(backend, terms)


def random_float_multivector(rng: random.Random, backend, max_terms=6) -> Multivector:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randrange(32)] = rng.uniform(-2.0, 2.0)
    return Multivector(backend, terms)


def mv_to_dict(a: Multivector) -> dict:
    """Rational multivector as a {mask: Fraction} dict for the oracles."""
    return dict(a.terms)


def dict_to_mv(terms: dict) -> Multivector:
    return Multivector(RATIONAL, {m: Fraction(c) for m, c in terms.items()})


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20170405)
