"""The bundled example: a balanced weighted fan on a bipartite geometric graph.

The fan lives in R^4. One side of the bipartition is the standard basis
e_1..e_4; the other side f_1..f_4 consists of the rows of the matrix M
below, whose columns form an orthogonal basis with squared length 3 and all
of whose 2x2 minors are nonzero. The 2-cones are spanned by one e and one f,
and the cone on (e_i, f_j) carries the weight M[j][i]. These weights balance
the fan; three of them are negative, sitting on pairwise disjoint edges in
general position, so the surgery pipeline applies and yields a positive fan
whose tropical Laplacian has signature (7, 3, 4).
"""

from __future__ import annotations

from fractions import Fraction

from .fan import WeightedFan, weighted_fan
from .graph import order_by_vectors, graph_of_fan

WEIGHT_MATRIX: tuple[tuple[int, ...], ...] = (
    (0, 1, 1, 1),
    (1, 0, -1, 1),
    (1, 1, 0, -1),
    (1, -1, 1, 0),
)


def paper_k44() -> WeightedFan:
    """Build the example fan: rays e_1..e_4 and f_1..f_4 (rows of
    WEIGHT_MATRIX), with the cone on (e_i, f_j) weighted by entry (j, i).

    All 16 bipartite 2-cones are present; the four on (e_i, f_i) carry
    weight zero.
    """
    basis = [tuple(int(i == k) for k in range(4)) for i in range(4)]
    rays = basis + [tuple(row) for row in WEIGHT_MATRIX]
    cones = []
    for i in range(4):
        for j in range(4):
            cones.append(((i, 4 + j), Fraction(WEIGHT_MATRIX[j][i])))
    cones.sort(key=lambda c: c[0])
    return weighted_fan(4, 2, rays, cones)


def reference_vertex_order(fan: WeightedFan) -> tuple[int, ...]:
    """The published vertex order for the surgered example's Laplacian:
    +e_1..+e_4, +f_1..+f_4, -e_2, -e_3, -e_4, -f_2, -f_3, -f_4."""
    base = paper_k44().rays
    negatives = [tuple(-x for x in base[i]) for i in (1, 2, 3, 5, 6, 7)]
    return order_by_vectors(graph_of_fan(fan), list(base) + negatives)
