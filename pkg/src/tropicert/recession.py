"""Recession cones of V-represented polyhedra and recession fans.

Cells are given by vertices plus rays, so the recession cone is exactly the
cone on the rays; no H-representation conversion happens here. Only cells
whose recession cone is simplicial (independent rays) are supported, which
covers fans and their translates.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonSimplicialRecessionError, NotCompatibleError, ValidationError
from .fan import WeightedCone, WeightedFan
from .lattice import IntVec, primitive, rank, vec_gcd


@dataclass(frozen=True)
class VPolyhedron:
    vertices: tuple[tuple[Fraction, ...], ...]  # nonempty
    rays: tuple[IntVec, ...]  # primitive


@dataclass(frozen=True)
class WeightedVComplex:
    ambient_dim: int
    dim: int
    cells: tuple[tuple[VPolyhedron, Fraction], ...]


def v_polyhedron(vertices, rays) -> VPolyhedron:
    verts = tuple(tuple(Fraction(x) for x in v) for v in vertices)
    if not verts:
        raise ValidationError("a V-polyhedron needs at least one vertex")
    widths = {len(v) for v in verts}
    ray_table = []
    for r in rays:
        vec = tuple(int(x) for x in r)
        widths.add(len(vec))
        if vec_gcd(vec) == 0:
            raise ValidationError("rays must be nonzero")
        ray_table.append(primitive(vec))
    if len(widths) != 1:
        raise ValidationError("vertices and rays must share one ambient dimension")
    return VPolyhedron(verts, tuple(ray_table))


def weighted_v_complex(ambient_dim, dim, cells) -> WeightedVComplex:
    table = []
    for poly, weight in cells:
        if len(poly.vertices[0]) != ambient_dim:
            raise ValidationError("cell does not live in the declared ambient space")
        table.append((poly, Fraction(weight)))
    return WeightedVComplex(int(ambient_dim), int(dim), tuple(table))


def recession_cone(poly: VPolyhedron) -> tuple[IntVec, ...]:
    """The recession cone, returned as its sorted set of primitive rays.

    For V-represented polyhedra this is the cone on the ray generators; a
    bounded cell recedes to the origin (empty ray set), and a cone (single
    vertex at the origin) is its own recession cone.
    """
    return tuple(sorted(set(poly.rays)))


def _simplicial_recession(poly: VPolyhedron, label) -> tuple[IntVec, ...]:
    rays = recession_cone(poly)
    if rays and rank(rays) != len(rays):
        raise NonSimplicialRecessionError(
            f"cell {label}: recession rays are linearly dependent; only simplicial "
            "recession cones are supported")
    return rays


def is_compatible(complex_: WeightedVComplex, sigma: WeightedFan) -> bool:
    """True when every cell's recession cone is a cone of the fan.

    For a simplicial fan the cones are exactly the subsets of the maximal
    cones' ray sets, so the test is set containment on primitive rays.
    """
    cone_rays = [frozenset(sigma.ray_vectors(c.rays)) for c in sigma.cones]
    for idx, (poly, _) in enumerate(complex_.cells):
        rays = set(_simplicial_recession(poly, idx))
        if not rays:
            continue  # the origin is a cone of every fan
        if not any(rays <= cone for cone in cone_rays):
            return False
    return True


def recession_fan(complex_: WeightedVComplex, sigma: WeightedFan) -> WeightedFan:
    """Accumulate cell weights on the fan cones equal to their recession cones.

    The result is a weighted fan on exactly the maximal cones of `sigma`,
    with zero weights kept explicitly. Weighted cells whose recession cone
    has dimension below the complex dimension contribute to no maximal cone;
    they are reported through a warning and excluded.
    """
    if not is_compatible(complex_, sigma):
        raise NotCompatibleError("complex is not compatible with the fan")
    totals = {cone.rays: Fraction(0) for cone in sigma.cones}
    by_rays = {frozenset(sigma.ray_vectors(c.rays)): c.rays for c in sigma.cones}
    for idx, (poly, weight) in enumerate(complex_.cells):
        rays = frozenset(_simplicial_recession(poly, idx))
        if len(rays) == complex_.dim and rays in by_rays:
            totals[by_rays[rays]] += weight
        elif weight:
            warnings.warn(
                f"cell {idx} has a recession cone of dimension {len(rays)} < "
                f"{complex_.dim}; its weight is excluded from the recession fan",
                stacklevel=2)
    cones = tuple(WeightedCone(c.rays, totals[c.rays]) for c in sigma.cones)
    return WeightedFan(sigma.ambient_dim, sigma.dim, sigma.rays, cones,
                       sigma.allow_isolated_rays)


def translate(complex_: WeightedVComplex, offset) -> WeightedVComplex:
    """Shift every cell by a fixed rational vector; recession is unchanged."""
    b = tuple(Fraction(x) for x in offset)
    cells = tuple(
        (VPolyhedron(tuple(tuple(x + dx for x, dx in zip(v, b)) for v in poly.vertices),
                     poly.rays), w)
        for poly, w in complex_.cells)
    return WeightedVComplex(complex_.ambient_dim, complex_.dim, cells)


def fan_as_complex(fan: WeightedFan) -> WeightedVComplex:
    """View a weighted fan as a V-complex: each maximal cone becomes a cell
    with the origin as its single vertex."""
    origin = (tuple(Fraction(0) for _ in range(fan.ambient_dim)),)
    cells = tuple((VPolyhedron(origin, tuple(fan.ray_vectors(c.rays))), c.weight)
                  for c in fan.cones)
    return WeightedVComplex(fan.ambient_dim, fan.dim, cells)
