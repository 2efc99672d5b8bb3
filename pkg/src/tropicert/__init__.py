"""Exact-arithmetic toolkit for weighted rational polyhedral fans.

Everything is computed over the integers and rationals: lattice normal
forms, balancing of weighted fans, tropical Laplacians and their exact
signatures, edge surgeries, recession fans, and an end-to-end certificate
for the bundled counterexample fan.
"""

__version__ = "0.1.0"

from .errors import TropicertError
from .fan import (
    Face,
    ValidityReport,
    WeightedCone,
    WeightedFan,
    codim1_faces,
    is_balanced,
    is_connected_codim1,
    is_locally_extremal,
    is_nondegenerate,
    is_strongly_extremal_sufficient,
    is_unimodular,
    validate_fan,
    weighted_fan,
)
from .graph import (
    BalancedGraph,
    GeomGraph,
    TropicalLaplacian,
    balance_coefficients,
    geom_graph,
    graph_of_fan,
    order_by_vectors,
    split_parts,
    tropical_laplacian,
)
from .inertia import Signature, check_sylvester, inertia_charpoly, inertia_congruence
from .k44 import paper_k44, reference_vertex_order
from .lattice import (
    det,
    hermite_normal_form,
    minors_2x2,
    primitive,
    quotient_primitive,
    smith_normal_form,
)
from .recession import (
    VPolyhedron,
    WeightedVComplex,
    fan_as_complex,
    is_compatible,
    recession_cone,
    recession_fan,
    translate,
    v_polyhedron,
    weighted_v_complex,
)
from .surgery import (
    is_general_position,
    negative_edges,
    op_minus,
    op_plus,
    quadratic_delta_minus,
    quadratic_delta_plus,
    tilde,
)
from .certificate import Certificate, certify, render_certificate
from .fanfile import (
    bundled_fan_text,
    canonical_fingerprint,
    format_fan,
    parse_fan,
    parse_fan_text,
    parse_v_complex,
    parse_v_complex_text,
)

__all__ = [name for name in dir() if not name.startswith("_")]
