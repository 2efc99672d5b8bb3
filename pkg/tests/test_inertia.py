"""Exact inertia: the congruence and characteristic-polynomial routes,
their agreement, and congruence invariance."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_symmetric
from tropicert.inertia import (
    Signature,
    check_sylvester,
    inertia_charpoly,
    inertia_congruence,
)
from tropicert.errors import NotSymmetricError, SingularError


def diag(*entries):
    n = len(entries)
    return tuple(tuple(Fraction(entries[i]) if i == j else Fraction(0)
                       for j in range(n)) for i in range(n))


def test_congruence_examples():
    assert inertia_congruence(diag(1, 1, 1, 1, 1)) == Signature(5, 0, 0)
    assert inertia_congruence(diag(2, -3, 0)) == Signature(1, 1, 1)
    hyperbolic = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
    assert inertia_congruence(hyperbolic) == Signature(1, 1, 0)


def test_charpoly_examples():
    assert inertia_charpoly(diag(1, 1, -1)) == Signature(2, 1, 0)
    assert inertia_charpoly(diag(0, 0, 0)) == Signature(0, 0, 3)
    hyperbolic = ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))
    assert inertia_charpoly(hyperbolic) == Signature(1, 1, 0)


def test_empty_matrix():
    assert inertia_congruence(()) == Signature(0, 0, 0)
    assert inertia_charpoly(()) == Signature(0, 0, 0)


def test_rejects_asymmetric():
    bad = ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(4)))
    with pytest.raises(NotSymmetricError):
        inertia_congruence(bad)
    with pytest.raises(NotSymmetricError):
        inertia_charpoly(bad)


def test_agreement_random():
    rng = random.Random(10)
    for _ in range(80):
        S = random_symmetric(rng, rng.randint(1, 8))
        assert inertia_congruence(S) == inertia_charpoly(S)


def test_signature_sums_to_dimension():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 8)
        sig = inertia_congruence(random_symmetric(rng, n))
        assert sig.dim == n


def test_positive_scaling_preserves_negative_scaling_swaps():
    rng = random.Random(12)
    for _ in range(40):
        S = random_symmetric(rng, rng.randint(1, 7))
        sig = inertia_congruence(S)
        scaled = tuple(tuple(3 * x for x in row) for row in S)
        assert inertia_congruence(scaled) == sig
        negated = tuple(tuple(-x for x in row) for row in S)
        assert inertia_congruence(negated) == Signature(sig.n_minus, sig.n_plus, sig.n_zero)


def test_block_diagonal_adds():
    rng = random.Random(13)
    for _ in range(30):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        A = random_symmetric(rng, a)
        B = random_symmetric(rng, b)
        block = [[Fraction(0)] * (a + b) for _ in range(a + b)]
        for i in range(a):
            for j in range(a):
                block[i][j] = A[i][j]
        for i in range(b):
            for j in range(b):
                block[a + i][a + j] = B[i][j]
        sa, sb = inertia_congruence(A), inertia_congruence(B)
        total = inertia_congruence(tuple(tuple(r) for r in block))
        assert total == Signature(sa.n_plus + sb.n_plus, sa.n_minus + sb.n_minus,
                                  sa.n_zero + sb.n_zero)


def _random_invertible(rng, n):
    from tropicert.inertia import _det_fraction
    while True:
        A = tuple(tuple(Fraction(rng.randint(-4, 4)) for _ in range(n)) for _ in range(n))
        if _det_fraction([list(r) for r in A]) != 0:
            return A


def test_sylvester_examples():
    ident = diag(1, 1, 1)
    assert check_sylvester(ident, diag(2, -1, 5))
    assert check_sylvester(diag(1, -1), diag(2, 3))
    with pytest.raises(SingularError):
        check_sylvester(diag(1, -1), diag(1, 0))


def test_sylvester_random():
    rng = random.Random(14)
    for _ in range(40):
        n = rng.randint(1, 6)
        S = random_symmetric(rng, n)
        A = _random_invertible(rng, n)
        assert check_sylvester(S, A)
