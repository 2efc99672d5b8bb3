"""Shared fixtures: the bundled example fan, its surgered form, the golden
Laplacian, and generators for randomized fans used by the property tests."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tropicert import paper_k44, tilde, weighted_fan
from tropicert.fan import WeightedCone, WeightedFan
from tropicert.surgery import is_general_position, op_minus, op_plus

# The published 14x14 tropical Laplacian of the surgered example, in the
# vertex order +e1..+e4, +f1..+f4, -e2, -e3, -e4, -f2, -f3, -f4.
GOLDEN_TILDE_LAPLACIAN = (
    (3, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0),
    (0, 3, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, -1),
    (0, 0, 3, 0, -1, 0, 0, -1, 0, 0, 0, -1, 0, 0),
    (0, 0, 0, 3, -1, -1, 0, 0, 0, 0, 0, 0, -1, 0),
    (0, -1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (-1, 0, 0, -1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0),
    (-1, -1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0),
    (-1, 0, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1),
    (0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0),
    (0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0),
    (0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0),
    (0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0),
    (0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0),
)


@pytest.fixture(scope="session")
def k44() -> WeightedFan:
    return paper_k44()


@pytest.fixture(scope="session")
def k44_tilde() -> WeightedFan:
    return tilde(paper_k44())


def cross_fan() -> WeightedFan:
    """The complete fan in R^2 on the four coordinate half-axes, weight 1."""
    rays = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    cones = [((0, 1), 1), ((1, 2), 1), ((2, 3), 1), ((0, 3), 1)]
    return weighted_fan(2, 2, rays, cones)


def nonzero_edges(fan: WeightedFan) -> list[tuple[int, int]]:
    return [cone.rays for cone in fan.cones if cone.weight]


def apply_random_surgery(rng: random.Random, fan: WeightedFan):
    """One random op_plus or (when in general position) op_minus.

    Returns (new_fan, kind, edge) or None when the chosen move is not
    applicable.
    """
    edges = nonzero_edges(fan)
    i, j = edges[rng.randrange(len(edges))]
    if rng.random() < 0.5:
        return op_plus(fan, i, j), "plus", (i, j)
    if not is_general_position(fan, i, j):
        return None
    return op_minus(fan, i, j), "minus", (i, j)


def random_surgery_fan(rng: random.Random, steps: int) -> WeightedFan:
    fan = paper_k44()
    done = 0
    while done < steps:
        result = apply_random_surgery(rng, fan)
        if result is None:
            continue
        fan, _, _ = result
        done += 1
    return fan


def subdivided_cross_fan(rng: random.Random, steps: int) -> WeightedFan:
    """A complete unimodular fan in R^2: random edge splits of the cross fan.
    Splits preserve balancing, so the result is balanced."""
    fan = cross_fan()
    for _ in range(steps):
        edges = nonzero_edges(fan)
        i, j = edges[rng.randrange(len(edges))]
        fan = op_plus(fan, i, j)
    return fan


def bump_one_weight(rng: random.Random, fan: WeightedFan) -> WeightedFan:
    """Add 1 to one cone's weight; for a complete 2-dim fan this always
    breaks balancing at the bumped cone's boundary rays."""
    k = rng.randrange(len(fan.cones))
    cones = list(fan.cones)
    cones[k] = WeightedCone(cones[k].rays, cones[k].weight + Fraction(1))
    return WeightedFan(fan.ambient_dim, fan.dim, fan.rays, tuple(cones),
                       fan.allow_isolated_rays)


def relabel_fan(rng: random.Random, fan: WeightedFan) -> WeightedFan:
    """Permute the ray table and the cone list; the same fan, relabeled."""
    perm = list(range(len(fan.rays)))
    rng.shuffle(perm)
    position = {old: new for new, old in enumerate(perm)}
    rays = [None] * len(fan.rays)
    for old, new in position.items():
        rays[new] = fan.rays[old]
    cones = [WeightedCone(tuple(sorted(position[i] for i in c.rays)), c.weight)
             for c in fan.cones]
    rng.shuffle(cones)
    return WeightedFan(fan.ambient_dim, fan.dim, tuple(rays), tuple(cones),
                       fan.allow_isolated_rays)


def scale_weights(fan: WeightedFan, factor) -> WeightedFan:
    cones = tuple(WeightedCone(c.rays, c.weight * Fraction(factor)) for c in fan.cones)
    return WeightedFan(fan.ambient_dim, fan.dim, fan.rays, cones, fan.allow_isolated_rays)


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_symmetric(rng: random.Random, n: int):
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = random_fraction(rng)
    return tuple(tuple(row) for row in M)
