"""Weighted simplicial rational fans and their structural predicates.

A fan stores a table of primitive rays and a list of maximal cones, each a
set of ray indices with a rational weight. Cones with weight zero are legal
input everywhere; predicates that depend on the support (local extremality,
connectedness, non-degeneracy) ignore them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

from .errors import NotBalancedError, ValidationError
from .lattice import (
    IntVec,
    apply_quotient,
    nullspace,
    primitive,
    quotient_map,
    rank,
    smith_normal_form,
    vec_gcd,
)


@dataclass(frozen=True)
class WeightedCone:
    rays: tuple[int, ...]  # sorted indices into the fan's ray table
    weight: Fraction


@dataclass(frozen=True)
class WeightedFan:
    ambient_dim: int
    dim: int
    rays: tuple[IntVec, ...]
    cones: tuple[WeightedCone, ...]
    allow_isolated_rays: bool = False

    def ray_vectors(self, indices) -> list[IntVec]:
        return [self.rays[i] for i in indices]


@dataclass(frozen=True)
class Face:
    """A codimension-1 face: its ray indices, and per incident maximal cone
    the primitive generator of the ray that cone casts past the face,
    written in quotient-lattice coordinates."""

    rays: tuple[int, ...]
    incident: tuple[tuple[int, IntVec, Fraction], ...]  # (cone index, normal, weight)


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    problems: tuple[str, ...]
    bad_pairs: tuple[tuple[int, int], ...]


def weighted_fan(ambient_dim, dim, rays, cones, allow_isolated_rays=False) -> WeightedFan:
    """Build a WeightedFan after checking the structural invariants.

    `rays` is a sequence of integer vectors (must be nonzero, primitive and
    pairwise distinct); `cones` a sequence of (ray_indices, weight) pairs.
    Geometric soundness (simpliciality, pairwise common faces) is checked
    separately by validate_fan.
    """
    if ambient_dim < 1:
        raise ValidationError("ambient_dim must be at least 1")
    if not 1 <= dim <= ambient_dim:
        raise ValidationError(f"dim must be in [1, {ambient_dim}], got {dim}")
    ray_table: list[IntVec] = []
    seen = set()
    for k, ray in enumerate(rays):
        v = tuple(int(x) for x in ray)
        if len(v) != ambient_dim:
            raise ValidationError(f"ray {k} has length {len(v)}, expected {ambient_dim}")
        g = vec_gcd(v)
        if g == 0:
            raise ValidationError(f"ray {k} is the zero vector")
        if g != 1:
            raise ValidationError(f"ray {k} is not primitive (gcd {g})")
        if v in seen:
            raise ValidationError(f"ray {k} duplicates an earlier ray")
        seen.add(v)
        ray_table.append(v)
    cone_table: list[WeightedCone] = []
    seen_cones = set()
    for k, (indices, weight) in enumerate(cones):
        idx = tuple(sorted(int(i) for i in indices))
        if len(idx) != dim or len(set(idx)) != dim:
            raise ValidationError(f"cone {k} must name {dim} distinct rays, got {indices}")
        if not all(0 <= i < len(ray_table) for i in idx):
            raise ValidationError(f"cone {k} references a ray outside the table")
        if idx in seen_cones:
            raise ValidationError(f"cone {k} duplicates the ray set {idx}")
        seen_cones.add(idx)
        cone_table.append(WeightedCone(idx, Fraction(weight)))
    return WeightedFan(ambient_dim, dim, tuple(ray_table), tuple(cone_table),
                       bool(allow_isolated_rays))


def _fraction_rays_to_primitive(vec) -> IntVec:
    denom = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * denom) for x in vec]
    return primitive(ints)


def _intersection_ray_generators(gens_a, gens_b) -> list[IntVec]:
    """Primitive generators of the extremal rays of cone(gens_a) & cone(gens_b).

    Both generator lists must be linearly independent (simplicial cones).
    Works by enumerating the extremal rays of the coefficient cone
    {(lam, mu) >= 0 : sum lam_i a_i == sum mu_j b_j}.
    """
    pa, pb = len(gens_a), len(gens_b)
    n = len(gens_a[0])
    coeff_rows = [[gens_a[i][r] for i in range(pa)] + [-gens_b[j][r] for j in range(pb)]
                  for r in range(n)]
    basis = nullspace(coeff_rows)
    d = len(basis)
    if d == 0:
        return []
    m = pa + pb
    constraint = [[basis[l][k] for l in range(d)] for k in range(m)]

    candidates = []
    if d == 1:
        candidates.append((Fraction(1),))
    else:
        for subset in combinations(range(m), d - 1):
            kern = nullspace([constraint[k] for k in subset])
            if len(kern) == 1:
                candidates.append(kern[0])
    rays = set()
    for t in candidates:
        z = [sum(constraint[k][l] * t[l] for l in range(d)) for k in range(m)]
        if all(x >= 0 for x in z):
            pass
        elif all(x <= 0 for x in z):
            z = [-x for x in z]
        else:
            continue
        if not any(z):
            continue
        lam = z[:pa]
        x = tuple(sum(lam[i] * gens_a[i][r] for i in range(pa)) for r in range(n))
        if any(x):
            rays.add(_fraction_rays_to_primitive([Fraction(v) for v in x]))
    return sorted(rays)


def validate_fan(fan: WeightedFan) -> ValidityReport:
    """Check that the cones are simplicial and pairwise intersect in common faces.

    Membership questions reduce to exact rational solves because the cones
    are simplicial; pairs whose spans overlap beyond their shared rays fall
    back to an exact enumeration of the intersection cone's extremal rays.
    The report lists every violation instead of stopping at the first.
    """
    problems: list[str] = []
    bad_pairs: list[tuple[int, int]] = []
    simplicial = []
    for idx, cone in enumerate(fan.cones):
        ok = rank(fan.ray_vectors(cone.rays)) == fan.dim
        simplicial.append(ok)
        if not ok:
            problems.append(f"cone {idx} is not simplicial: rays {cone.rays} are dependent")
    used = {i for cone in fan.cones for i in cone.rays}
    if not fan.allow_isolated_rays:
        for i in range(len(fan.rays)):
            if i not in used:
                problems.append(f"ray {i} is used by no cone")
    for (i, ca), (j, cb) in combinations(enumerate(fan.cones), 2):
        if not (simplicial[i] and simplicial[j]):
            continue
        shared = set(ca.rays) & set(cb.rays)
        union = sorted(set(ca.rays) | set(cb.rays))
        meet_dim = 2 * fan.dim - rank(fan.ray_vectors(union))
        if meet_dim == len(shared):
            continue  # spans meet exactly in the shared rays' span
        gens_a = fan.ray_vectors(ca.rays)
        gens_b = fan.ray_vectors(cb.rays)
        common = _intersection_ray_generators(gens_a, gens_b)
        set_a, set_b = set(gens_a), set(gens_b)
        if all(r in set_a and r in set_b for r in common):
            continue
        bad_pairs.append((i, j))
        problems.append(f"cones {i} and {j} do not intersect in a common face")
    return ValidityReport(not problems, tuple(problems), tuple(bad_pairs))


def is_unimodular(fan: WeightedFan) -> bool:
    """True when every maximal cone is generated by part of a lattice basis."""
    for cone in fan.cones:
        S, _, _ = smith_normal_form(fan.ray_vectors(cone.rays))
        if any(S[i][i] != 1 for i in range(fan.dim)):
            return False
    return True


@lru_cache(maxsize=256)
def _face_table(fan: WeightedFan) -> tuple[Face, ...]:
    buckets: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for c_idx, cone in enumerate(fan.cones):
        for pos in range(fan.dim):
            key = cone.rays[:pos] + cone.rays[pos + 1:]
            buckets.setdefault(key, []).append((c_idx, cone.rays[pos]))
    faces = []
    for key in sorted(buckets):
        Q = quotient_map([fan.rays[r] for r in key], fan.ambient_dim)
        incident = []
        for c_idx, rest in buckets[key]:
            coords = apply_quotient(Q, fan.rays[rest])
            if not any(coords):
                raise ValidationError(
                    f"cone {c_idx} is not simplicial: ray {rest} lies in the span of face {key}")
            incident.append((c_idx, primitive(coords), fan.cones[c_idx].weight))
        faces.append(Face(key, tuple(incident)))
    return tuple(faces)


def codim1_faces(fan: WeightedFan) -> list[Face]:
    """All codimension-1 faces, each with its incident maximal cones."""
    return list(_face_table(fan))


def is_balanced(fan: WeightedFan) -> tuple[bool, list[Face]]:
    """Exact per-face balancing test; returns every failing face."""
    failures = []
    for face in _face_table(fan):
        width = len(face.incident[0][1])
        total = [Fraction(0)] * width
        for _, normal, weight in face.incident:
            if weight:
                for k in range(width):
                    total[k] += weight * normal[k]
        if any(total):
            failures.append(face)
    return (not failures, failures)


def is_locally_extremal(fan: WeightedFan) -> bool:
    """True when, at every codimension-1 face, every proper subset of the
    distinct normals cast by nonzero-weight cones is linearly independent."""
    for face in _face_table(fan):
        normals = sorted({normal for _, normal, weight in face.incident if weight})
        k = len(normals)
        if k <= 1:
            continue
        if rank(normals) == k:
            continue
        for omit in range(k):
            sub = normals[:omit] + normals[omit + 1:]
            if rank(sub) != k - 1:
                return False
    return True


def is_connected_codim1(fan: WeightedFan) -> bool:
    """True when nonzero-weight maximal cones form one component under the
    relation of sharing a codimension-1 face."""
    nodes = [i for i, cone in enumerate(fan.cones) if cone.weight]
    if len(nodes) <= 1:
        return True
    parent = {i: i for i in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for face in _face_table(fan):
        live = [c for c, _, w in face.incident if w]
        for a, b in zip(live, live[1:]):
            parent[find(a)] = find(b)
    return len({find(i) for i in nodes}) == 1


def is_nondegenerate(fan: WeightedFan) -> bool:
    """True when the rays of nonzero-weight cones span the ambient space."""
    rays = {i for cone in fan.cones if cone.weight for i in cone.rays}
    if not rays:
        return False
    return rank([fan.rays[i] for i in sorted(rays)]) == fan.ambient_dim


def is_strongly_extremal_sufficient(fan: WeightedFan) -> bool:
    """Sufficient criterion only: locally extremal plus connected in
    codimension 1 implies strongly extremal for balanced fans."""
    balanced, failures = is_balanced(fan)
    if not balanced:
        face = failures[0]
        raise NotBalancedError(
            f"fan is not balanced at face {face.rays}", site=face.rays)
    return is_locally_extremal(fan) and is_connected_codim1(fan)
