"""Edge surgeries on 2-dimensional weighted fans.

Two local operations: splitting an edge across its sum direction (op_plus),
and replacing an edge in general position by the three cones through the
negated endpoints (op_minus). Applying op_minus to every negative edge of a
suitable fan produces a positive fan while adding one negative eigenvalue
per surgery to the tropical Laplacian; that is the route to the bundled
counterexample fan.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    NoSuchEdgeError,
    NotGeneralPositionError,
    NotUnimodularEdgeError,
    PreconditionFailedError,
    WrongDimensionError,
)
from .fan import WeightedFan, WeightedCone, is_balanced, is_nondegenerate, is_unimodular
from .graph import balance_coefficients, graph_of_fan, quadratic_form
from .lattice import rank, smith_normal_form


def _find_edge(fan: WeightedFan, i: int, j: int) -> int:
    if fan.dim != 2:
        raise WrongDimensionError(f"edge surgery needs a 2-dimensional fan, got dim {fan.dim}")
    key = tuple(sorted((i, j)))
    for idx, cone in enumerate(fan.cones):
        if cone.rays == key:
            if cone.weight == 0:
                raise NoSuchEdgeError(f"cone {key} has weight zero, so it is not an edge")
            return idx
    raise NoSuchEdgeError(f"no 2-cone on rays {key}")


def _with_ray(fan: WeightedFan, vector) -> tuple[tuple, int]:
    """Ray table containing `vector`, reusing an existing entry if present."""
    vec = tuple(int(x) for x in vector)
    if vec in fan.rays:
        return fan.rays, fan.rays.index(vec)
    return fan.rays + (vec,), len(fan.rays)


def op_plus(fan: WeightedFan, i: int, j: int) -> WeightedFan:
    """Split the edge (i, j) at the sum of its endpoints.

    The 2-cone on (u_i, u_j) must be unimodular, so u_i + u_j is primitive.
    It is removed and replaced by the cones (u_i, n) and (u_j, n) with
    n = u_i + u_j, both keeping the original weight. The new ray is
    appended at the end of the table.
    """
    edge_idx = _find_edge(fan, i, j)
    weight = fan.cones[edge_idx].weight
    gens = fan.ray_vectors(fan.cones[edge_idx].rays)
    S, _, _ = smith_normal_form(gens)
    if S[0][0] != 1 or S[1][1] != 1:
        raise NotUnimodularEdgeError(f"cone on rays {(i, j)} is not unimodular")
    new_vec = tuple(a + b for a, b in zip(fan.rays[i], fan.rays[j]))
    rays, n_idx = _with_ray(fan, new_vec)
    cones = [c for k, c in enumerate(fan.cones) if k != edge_idx]
    cones.append(WeightedCone(tuple(sorted((i, n_idx))), weight))
    cones.append(WeightedCone(tuple(sorted((j, n_idx))), weight))
    return WeightedFan(fan.ambient_dim, fan.dim, rays, tuple(cones), fan.allow_isolated_rays)


def is_general_position(fan: WeightedFan, i: int, j: int) -> bool:
    """True when span(u_i, u_j) meets the span of every other nonzero-weight
    2-cone only in the span of their shared rays."""
    edge_idx = _find_edge(fan, i, j)
    key = fan.cones[edge_idx].rays
    for idx, cone in enumerate(fan.cones):
        if idx == edge_idx or cone.weight == 0:
            continue
        shared = set(key) & set(cone.rays)
        union = sorted(set(key) | set(cone.rays))
        meet_dim = 4 - rank(fan.ray_vectors(union))
        if meet_dim != len(shared):
            return False
    return True


def op_minus(fan: WeightedFan, i: int, j: int) -> WeightedFan:
    """Replace the edge (i, j) by the three cones through -u_i and -u_j.

    Requires the edge to be in general position. The rays -u_i and -u_j are
    appended in that order; the cones (-u_i, -u_j), (-u_i, u_j) and
    (u_i, -u_j) are added, each with the negated weight.
    """
    edge_idx = _find_edge(fan, i, j)
    if not is_general_position(fan, i, j):
        raise NotGeneralPositionError(f"edge {(i, j)} is not in general position")
    weight = fan.cones[edge_idx].weight
    rays, n1 = _with_ray(fan, tuple(-x for x in fan.rays[i]))
    fan_tmp = WeightedFan(fan.ambient_dim, fan.dim, rays, fan.cones, fan.allow_isolated_rays)
    rays, n2 = _with_ray(fan_tmp, tuple(-x for x in fan.rays[j]))
    cones = [c for k, c in enumerate(fan.cones) if k != edge_idx]
    cones.append(WeightedCone(tuple(sorted((n1, n2))), -weight))
    cones.append(WeightedCone(tuple(sorted((n1, j))), -weight))
    cones.append(WeightedCone(tuple(sorted((i, n2))), -weight))
    return WeightedFan(fan.ambient_dim, fan.dim, rays, tuple(cones), fan.allow_isolated_rays)


def negative_edges(fan: WeightedFan) -> list[tuple[int, int]]:
    """All 2-cones with negative weight, as sorted ray-index pairs."""
    if fan.dim != 2:
        raise WrongDimensionError(f"negative edges need a 2-dimensional fan, got dim {fan.dim}")
    return sorted(cone.rays for cone in fan.cones if cone.weight < 0)


def tilde(fan: WeightedFan) -> WeightedFan:
    """Apply op_minus to every negative edge, in sorted edge order.

    Hypotheses checked up front: the fan is balanced, unimodular and
    non-degenerate, and its negative edges are pairwise vertex-disjoint.
    General position of each edge is re-checked in the fan at hand just
    before its surgery (the intermediate fans have more edges than the
    original). The result carries no negative weights.
    """
    if not is_balanced(fan)[0]:
        raise PreconditionFailedError("tilde requires a balanced fan")
    if not is_unimodular(fan):
        raise PreconditionFailedError("tilde requires a unimodular fan")
    if not is_nondegenerate(fan):
        raise PreconditionFailedError("tilde requires a non-degenerate fan")
    edges = negative_edges(fan)
    touched: set[int] = set()
    for a, b in edges:
        if a in touched or b in touched:
            raise PreconditionFailedError(
                f"negative edges are not pairwise disjoint: ray {a if a in touched else b} repeats")
        touched.update((a, b))
    result = fan
    for a, b in edges:
        if not is_general_position(result, a, b):
            raise PreconditionFailedError(
                f"negative edge {(a, b)} is not in general position at its surgery step")
        result = op_minus(result, a, b)
    return result


def _delta_of_surgery(fan: WeightedFan, larger: WeightedFan, point) -> Fraction:
    big = balance_coefficients(graph_of_fan(larger))
    small = balance_coefficients(graph_of_fan(fan))
    values = [Fraction(v) for v in point]
    if len(values) != len(big.graph.vertices):
        raise PreconditionFailedError(
            f"point must assign a value to each of the {len(big.graph.vertices)} vertices")
    lookup = dict(zip(big.graph.vertices, values))
    restricted = [lookup[v] for v in small.graph.vertices]
    return quadratic_form(big, values) - quadratic_form(small, restricted)


def quadratic_delta_plus(fan: WeightedFan, i: int, j: int, point) -> Fraction:
    """Change of the Laplacian quadratic form under op_plus.

    `point` assigns a rational to every vertex of the larger graph, in its
    vertex order. Closed form: w_ij * (y - x_i - x_j)^2, where y is the
    value at the new vertex.
    """
    return _delta_of_surgery(fan, op_plus(fan, i, j), point)


def quadratic_delta_minus(fan: WeightedFan, i: int, j: int, point) -> Fraction:
    """Change of the Laplacian quadratic form under op_minus.

    `point` assigns a rational to every vertex of the larger graph, in its
    vertex order. Closed form: 2 * w_ij * (y_1 + x_i) * (y_2 + x_j), where
    y_1, y_2 are the values at the new vertices -u_i and -u_j.
    """
    return _delta_of_surgery(fan, op_minus(fan, i, j), point)
