"""Seeded random generators for exact property campaigns.

Numerators and denominators stay small (default |num| <= 9, den <= 9) to keep
expression swell in check.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .gaussian import GaussRational
from .matrix import Matrix

__all__ = [
    "rng_from",
    "rand_rational",
    "rand_scalar",
    "rand_matrix",
    "rand_invertible",
    "rand_poly_of",
    "rand_commuting_pair",
]


def rng_from(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def rand_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_scalar(rng: random.Random, bound: int = 9, complex_prob: float = 0.25) -> GaussRational:
    im = rand_rational(rng, bound) if rng.random() < complex_prob else 0
    return GaussRational(rand_rational(rng, bound), im)


def rand_matrix(rng: random.Random, l: int, bound: int = 9, complex_prob: float = 0.25) -> Matrix:
    return Matrix([[rand_scalar(rng, bound, complex_prob) for _ in range(l)] for _ in range(l)])


def rand_invertible(rng: random.Random, l: int, bound: int = 9, complex_prob: float = 0.25) -> Matrix:
    while True:
        m = rand_matrix(rng, l, bound, complex_prob)
        if m.is_invertible():
            return m


def rand_poly_of(rng: random.Random, A: Matrix, degree: int = 2, bound: int = 5) -> Matrix:
    """c_0 I + c_1 A + ... + c_d A^d with small random rational c_k."""
    out = Matrix.zero(A.l)
    power = Matrix.identity(A.l)
    for _ in range(degree + 1):
        out = out + rand_rational(rng, bound) * power
        power = power * A
    return out


def rand_commuting_pair(rng: random.Random, l: int, invertible: bool = True, bound: int = 5):
    """(A, poly(A)); commuting by construction."""
    while True:
        A = rand_matrix(rng, l, bound, complex_prob=0.2)
        B = rand_poly_of(rng, A, degree=rng.randint(1, 2), bound=bound)
        if not invertible or (A.is_invertible() and B.is_invertible()):
            return A, B
