"""Geometric graphs, balancing coefficients, and the tropical Laplacian.

A geometric graph lives in R^n minus the origin: vertices are nonzero
integer vectors, edges carry rational weights. The tropical Laplacian of a
balanced graph has the balancing coefficients on the diagonal and minus the
edge weights off it; its kernel always contains the vertex-coordinate
matrix, which is the balancing condition restated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadOrderError,
    MismatchError,
    NotBalancedError,
    ValidationError,
    WrongDimensionError,
)
from .lattice import IntVec
from .fan import WeightedFan

RatMat = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class GeomGraph:
    vertices: tuple[IntVec, ...]
    edges: tuple[tuple[int, int, Fraction], ...]  # i < j, no duplicates


@dataclass(frozen=True)
class BalancedGraph:
    graph: GeomGraph
    coefficients: tuple[Fraction, ...]  # d_i with d_i u_i = sum_j w_ij u_j


@dataclass(frozen=True)
class TropicalLaplacian:
    order: tuple[int, ...]  # permutation of vertex indices
    matrix: RatMat


def geom_graph(vertices, edges) -> GeomGraph:
    verts = tuple(tuple(int(x) for x in v) for v in vertices)
    if any(not any(v) for v in verts):
        raise ValidationError("graph vertices must be nonzero")
    if len(set(verts)) != len(verts):
        raise ValidationError("graph vertices must be pairwise distinct")
    seen = set()
    table = []
    for i, j, w in edges:
        if i == j:
            raise ValidationError(f"self-loop at vertex {i}")
        if not (0 <= i < len(verts) and 0 <= j < len(verts)):
            raise ValidationError(f"edge ({i},{j}) references a missing vertex")
        if i > j:
            i, j = j, i
        if (i, j) in seen:
            raise ValidationError(f"duplicate edge ({i},{j})")
        seen.add((i, j))
        table.append((i, j, Fraction(w)))
    return GeomGraph(verts, tuple(table))


def graph_of_fan(fan: WeightedFan) -> GeomGraph:
    """The geometric graph of a 2-dimensional weighted fan.

    Vertices are the fan's primitive rays; edges are its 2-cones with
    nonzero weight, weighted by the cone weight.
    """
    if fan.dim != 2:
        raise WrongDimensionError(f"graph of a fan needs dim 2, got {fan.dim}")
    edges = sorted((cone.rays[0], cone.rays[1], cone.weight)
                   for cone in fan.cones if cone.weight)
    return GeomGraph(fan.rays, tuple(edges))


def balance_coefficients(graph: GeomGraph) -> BalancedGraph:
    """Solve d_i u_i = sum over neighbors of w_ij u_j at every vertex.

    The coefficient is unique because vertices are nonzero. Raises
    NotBalancedError carrying the vertex index and the residual vector
    s_i - d_i u_i when some weighted neighbor sum leaves the line R u_i.
    """
    n = len(graph.vertices[0]) if graph.vertices else 0
    sums = [[Fraction(0)] * n for _ in graph.vertices]
    for i, j, w in graph.edges:
        for k in range(n):
            sums[i][k] += w * graph.vertices[j][k]
            sums[j][k] += w * graph.vertices[i][k]
    coeffs = []
    for idx, (u, s) in enumerate(zip(graph.vertices, sums)):
        pivot = next(k for k in range(n) if u[k])
        d = s[pivot] / u[pivot]
        residual = tuple(s[k] - d * u[k] for k in range(n))
        if any(residual):
            raise NotBalancedError(
                f"graph is not balanced at vertex {idx}: residual {residual}",
                site=idx, residual=residual)
        coeffs.append(d)
    return BalancedGraph(graph, tuple(coeffs))


def tropical_laplacian(balanced: BalancedGraph, order) -> TropicalLaplacian:
    """The symmetric matrix with the balancing coefficients on the diagonal
    and -w_ij at the positions of the edges, rows/columns in the given
    vertex order."""
    graph = balanced.graph
    n = len(graph.vertices)
    perm = tuple(int(i) for i in order)
    if sorted(perm) != list(range(n)):
        raise BadOrderError(f"order must be a permutation of 0..{n - 1}")
    pos = {v: k for k, v in enumerate(perm)}
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for k, v in enumerate(perm):
        matrix[k][k] = balanced.coefficients[v]
    for i, j, w in graph.edges:
        a, b = pos[i], pos[j]
        matrix[a][b] = -w
        matrix[b][a] = -w
    return TropicalLaplacian(perm, tuple(tuple(row) for row in matrix))


def order_by_vectors(graph: GeomGraph, vectors) -> tuple[int, ...]:
    """Translate a sequence of vertex vectors into a vertex-index order."""
    lookup = {v: i for i, v in enumerate(graph.vertices)}
    order = []
    for vec in vectors:
        key = tuple(int(x) for x in vec)
        if key not in lookup:
            raise BadOrderError(f"vector {key} is not a vertex of the graph")
        order.append(lookup[key])
    if len(set(order)) != len(graph.vertices):
        raise BadOrderError("ordering does not list every vertex exactly once")
    return tuple(order)


def split_parts(laplacian: TropicalLaplacian, graph: GeomGraph) -> tuple[RatMat, RatMat]:
    """Split into combinatorial and geometric parts.

    The combinatorial part is the ordinary weighted graph Laplacian (diagonal
    = weighted degree); the geometric part is the diagonal matrix of weighted
    degree minus balancing coefficient. Their difference must reproduce the
    input, otherwise the Laplacian does not belong to this graph.
    """
    n = len(graph.vertices)
    if len(laplacian.matrix) != n:
        raise MismatchError("Laplacian size does not match the graph")
    pos = {v: k for k, v in enumerate(laplacian.order)}
    degree = [Fraction(0)] * n
    offdiag = [[Fraction(0)] * n for _ in range(n)]
    for i, j, w in graph.edges:
        degree[i] += w
        degree[j] += w
        a, b = pos[i], pos[j]
        offdiag[a][b] = -w
        offdiag[b][a] = -w
    combinatorial = [row[:] for row in offdiag]
    geometric = [[Fraction(0)] * n for _ in range(n)]
    for k, v in enumerate(laplacian.order):
        combinatorial[k][k] = degree[v]
        geometric[k][k] = degree[v] - laplacian.matrix[k][k]
    for a in range(n):
        for b in range(n):
            if combinatorial[a][b] - geometric[a][b] != laplacian.matrix[a][b]:
                raise MismatchError("Laplacian was not built from this graph")
    return (tuple(tuple(r) for r in combinatorial), tuple(tuple(r) for r in geometric))


def quadratic_form(balanced: BalancedGraph, point) -> Fraction:
    """Evaluate x^T L x for the graph's Laplacian without materializing L.

    `point` assigns a rational to each vertex, indexed like the vertices.
    """
    graph = balanced.graph
    x = [Fraction(v) for v in point]
    if len(x) != len(graph.vertices):
        raise BadOrderError("point must assign a value to every vertex")
    total = sum((d * xv * xv for d, xv in zip(balanced.coefficients, x)), Fraction(0))
    for i, j, w in graph.edges:
        total -= 2 * w * x[i] * x[j]
    return total


def vertex_matrix_product(laplacian: TropicalLaplacian, graph: GeomGraph) -> RatMat:
    """L @ U where the rows of U are the vertex coordinate vectors in the
    Laplacian's order; the balancing condition says this is exactly zero."""
    n = len(graph.vertices)
    dim = len(graph.vertices[0]) if n else 0
    U = [graph.vertices[v] for v in laplacian.order]
    out = []
    for a in range(n):
        row = laplacian.matrix[a]
        out.append(tuple(sum(row[b] * U[b][k] for b in range(n)) for k in range(dim)))
    return tuple(out)
