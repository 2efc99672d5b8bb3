"""The end-to-end certification pipeline.

`certify` runs every structural check on a 2-dimensional weighted fan, in a
fixed order, computes the signature of its tropical Laplacian with two
independent algorithms that must agree, and emits a certificate that keeps
computed facts strictly separate from the cited facts it does not compute.
The conclusion is COUNTEREXAMPLE_WITNESS exactly when the fan is valid,
unimodular, balanced, positive, non-degenerate, locally extremal, connected
in codimension 1, and has at least two negative eigenvalues.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import __version__
from .errors import NotBalancedError, WrongDimensionError
from .fan import (
    WeightedFan,
    is_balanced,
    is_connected_codim1,
    is_locally_extremal,
    is_nondegenerate,
    is_unimodular,
    validate_fan,
)
from .fanfile import canonical_fingerprint
from .graph import balance_coefficients, graph_of_fan, tropical_laplacian, vertex_matrix_product
from .inertia import Signature, inertia_charpoly, inertia_congruence

WITNESS_CHECKS = (
    "valid_fan",
    "unimodular",
    "balanced",
    "positive_weights",
    "nondegenerate",
    "locally_extremal",
    "connected_codim1",
)

CITED_FACTS = (
    "A finite positive balanced weighted complex defines a strongly positive closed "
    "current on any compatible smooth projective toric variety, with integral "
    "cohomology class determined by its recession fan.",
    "For a balanced weighted fan, local extremality together with connectedness in "
    "codimension 1 implies strong extremality, and strong extremality transfers to "
    "the associated current when the fan is non-degenerate.",
    "If a strongly extremal strongly positive closed current were a weak limit of "
    "nonnegative combinations of integration currents along irreducible surfaces, "
    "the tropical Laplacian of its cohomology class would have at most one negative "
    "eigenvalue.",
    "Refining a weighted fan by unimodular edge subdivisions does not change the "
    "number of negative eigenvalues of its tropical Laplacian.",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: str  # "pass" or "fail"
    witness: str


@dataclass(frozen=True)
class Certificate:
    fingerprint: str
    checks: tuple[CheckResult, ...]
    signature: Signature | None
    conclusion: str
    tool_version: str

    @property
    def is_witness(self) -> bool:
        return self.conclusion == "COUNTEREXAMPLE_WITNESS"

    @property
    def all_passed(self) -> bool:
        return all(c.verdict == "pass" for c in self.checks)


def certify(fan: WeightedFan) -> Certificate:
    """Run the full pipeline on a 2-dimensional weighted fan.

    Gate checks (fan validity, balancing, graph balancing, agreement of the
    two inertia algorithms, the kernel identity) abort the pipeline when
    they fail; the remaining checks are recorded and the pipeline continues,
    since the signature is still well defined.
    """
    if fan.dim != 2:
        raise WrongDimensionError(f"certify needs a 2-dimensional fan, got dim {fan.dim}")
    checks: list[CheckResult] = []
    signature: Signature | None = None

    def record(name: str, ok: bool, witness: str = "") -> bool:
        checks.append(CheckResult(name, "pass" if ok else "fail", witness))
        return ok

    def finish() -> Certificate:
        failed = [c.name for c in checks if c.verdict == "fail"]
        if not failed and signature is not None and signature.n_minus >= 2:
            conclusion = "COUNTEREXAMPLE_WITNESS"
        elif not failed:
            conclusion = "ALL_CHECKS_PASSED"
        else:
            conclusion = "CHECK_FAILED:" + failed[0]
        return Certificate(canonical_fingerprint(fan), tuple(checks), signature,
                           conclusion, __version__)

    report = validate_fan(fan)
    if not record("valid_fan", report.valid, "; ".join(report.problems)):
        return finish()
    record("unimodular", is_unimodular(fan))
    balanced, failures = is_balanced(fan)
    if not record("balanced", balanced,
                  "" if balanced else "unbalanced at faces " +
                  ", ".join(str(f.rays) for f in failures)):
        return finish()
    negatives = [c.rays for c in fan.cones if c.weight < 0]
    record("positive_weights", not negatives,
           "" if not negatives else "negative weight on cones " +
           ", ".join(str(r) for r in negatives))
    record("nondegenerate", is_nondegenerate(fan))
    record("locally_extremal", is_locally_extremal(fan))
    record("connected_codim1", is_connected_codim1(fan))

    graph = graph_of_fan(fan)
    try:
        balanced_graph = balance_coefficients(graph)
    except NotBalancedError as err:
        record("graph_balancing", False, str(err))
        return finish()
    record("graph_balancing", True)

    laplacian = tropical_laplacian(balanced_graph, range(len(graph.vertices)))
    sig_a = inertia_congruence(laplacian.matrix)
    sig_b = inertia_charpoly(laplacian.matrix)
    agree = sig_a == sig_b
    record("inertia_agreement", agree,
           f"congruence {sig_a.as_tuple()}, charpoly {sig_b.as_tuple()}")
    if not agree:
        return finish()
    signature = sig_a

    product = vertex_matrix_product(laplacian, graph)
    kernel_ok = all(not any(row) for row in product)
    if not record("kernel_identity", kernel_ok, "L @ U == 0" if kernel_ok else
                  "L @ U has a nonzero row"):
        return finish()
    return finish()


def render_certificate(cert: Certificate) -> str:
    """Deterministic JSON rendering; computed facts and cited facts are
    separate sections, and the cited section is emitted only for a witness."""
    body = {
        "tool": "tropicert",
        "version": cert.tool_version,
        "input_fingerprint": cert.fingerprint,
        "computed_checks": [
            {"name": c.name, "verdict": c.verdict, "witness": c.witness}
            for c in cert.checks
        ],
        "signature": None if cert.signature is None else {
            "n_plus": cert.signature.n_plus,
            "n_minus": cert.signature.n_minus,
            "n_zero": cert.signature.n_zero,
        },
        "conclusion": cert.conclusion,
    }
    if cert.is_witness:
        body["cited_facts_not_computed"] = list(CITED_FACTS)
        body["interpretation"] = (
            "Every combinatorial hypothesis above is verified by exact arithmetic, "
            "and the tropical Laplacian has n_minus >= 2 negative eigenvalues. "
            "Together with the cited facts, the associated current is strongly "
            "positive, closed, and strongly extremal, yet it is not a weak limit "
            "of positive combinations of integration currents along surfaces."
        )
    return json.dumps(body, indent=2) + "\n"
