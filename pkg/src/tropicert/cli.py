"""Command-line interface.

Results go to stdout, diagnostics to stderr. Exit codes: 0 on success (or a
certified witness), 1 when a mathematical check fails, 2 on parse or usage
errors. All output is deterministic byte for byte for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .certificate import certify, render_certificate
from .errors import NotBalancedError, ParseError, TropicertError, ValidationError
from .fan import (
    is_balanced,
    is_connected_codim1,
    is_locally_extremal,
    is_nondegenerate,
    is_unimodular,
    validate_fan,
)
from .fanfile import format_fan, parse_fan, parse_v_complex
from .graph import balance_coefficients, graph_of_fan, order_by_vectors, tropical_laplacian
from .inertia import inertia_charpoly, inertia_congruence
from .k44 import paper_k44
from .recession import recession_fan
from .surgery import op_minus, op_plus, tilde

USAGE_EXIT = 2
CHECK_EXIT = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropicert",
        description="Exact checks and surgeries for weighted rational fans.")
    parser.add_argument("--version", action="version", version=f"tropicert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validity/balance/extremality report")
    p.add_argument("fan")

    p = sub.add_parser("laplacian", help="print the tropical Laplacian, row-major")
    p.add_argument("fan")
    p.add_argument("--order", help="JSON file: list of vertex vectors in the desired order")

    p = sub.add_parser("signature", help="print 'n+ n- n0' of the tropical Laplacian")
    p.add_argument("fan")

    for name in ("plus", "minus"):
        p = sub.add_parser(name, help=f"apply the {name} surgery to edge (I, J)")
        p.add_argument("fan")
        p.add_argument("-i", type=int, required=True)
        p.add_argument("-j", type=int, required=True)

    p = sub.add_parser("tilde", help="apply the minus surgery to every negative edge")
    p.add_argument("fan")

    p = sub.add_parser("paper-example", help="emit the built-in example fan")
    p.add_argument("--tilde", action="store_true", help="emit the surgered, positive fan")

    p = sub.add_parser("recession", help="recession fan of a V-complex inside a fan")
    p.add_argument("vcomplex")
    p.add_argument("--sigma", required=True, help="fan file providing the cones")

    p = sub.add_parser("certify", help="run the full pipeline and emit a certificate")
    p.add_argument("fan")
    p.add_argument("-o", "--output", help="also write the certificate to this file")
    return parser


def _balanced_laplacian(fan, order_path=None):
    graph = graph_of_fan(fan)
    balanced = balance_coefficients(graph)
    if order_path is None:
        order = range(len(graph.vertices))
    else:
        with open(order_path, encoding="utf-8") as handle:
            try:
                vectors = json.load(handle)
            except json.JSONDecodeError as err:
                raise ParseError(f"{order_path}: {err.msg}") from None
        order = order_by_vectors(graph, vectors)
    return tropical_laplacian(balanced, order)


def _cmd_check(args) -> int:
    fan = parse_fan(args.fan, require_valid=False)
    report = validate_fan(fan)
    results = [("valid_fan", report.valid)]
    results.append(("unimodular", is_unimodular(fan)))
    balanced = is_balanced(fan)[0] if report.valid else False
    results.append(("balanced", balanced))
    results.append(("nondegenerate", is_nondegenerate(fan)))
    if report.valid:
        locally = is_locally_extremal(fan)
        connected = is_connected_codim1(fan)
    else:
        locally = connected = False
    results.append(("locally_extremal", locally))
    results.append(("connected_codim1", connected))
    results.append(("strongly_extremal_sufficient", balanced and locally and connected))
    for name, ok in results:
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
    for problem in report.problems:
        print(f"note: {problem}", file=sys.stderr)
    return 0 if all(ok for _, ok in results) else CHECK_EXIT


def _cmd_laplacian(args) -> int:
    laplacian = _balanced_laplacian(parse_fan(args.fan), args.order)
    for row in laplacian.matrix:
        print(" ".join(str(x) for x in row))
    return 0


def _cmd_signature(args) -> int:
    laplacian = _balanced_laplacian(parse_fan(args.fan))
    sig = inertia_congruence(laplacian.matrix)
    other = inertia_charpoly(laplacian.matrix)
    if sig != other:
        print(f"inertia algorithms disagree: {sig.as_tuple()} vs {other.as_tuple()}",
              file=sys.stderr)
        return CHECK_EXIT
    print(f"{sig.n_plus} {sig.n_minus} {sig.n_zero}")
    return 0


def _cmd_transform(args, operation) -> int:
    fan = parse_fan(args.fan)
    sys.stdout.write(format_fan(operation(fan)))
    return 0


def _cmd_paper_example(args) -> int:
    fan = paper_k44()
    if args.tilde:
        fan = tilde(fan)
    sys.stdout.write(format_fan(fan))
    return 0


def _cmd_recession(args) -> int:
    complex_ = parse_v_complex(args.vcomplex)
    sigma = parse_fan(args.sigma)
    sys.stdout.write(format_fan(recession_fan(complex_, sigma)))
    return 0


def _cmd_certify(args) -> int:
    fan = parse_fan(args.fan, require_valid=False)
    cert = certify(fan)
    text = render_certificate(cert)
    sys.stdout.write(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0 if (cert.is_witness or cert.all_passed) else CHECK_EXIT


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "laplacian":
            return _cmd_laplacian(args)
        if args.command == "signature":
            return _cmd_signature(args)
        if args.command == "plus":
            return _cmd_transform(args, lambda fan: op_plus(fan, args.i, args.j))
        if args.command == "minus":
            return _cmd_transform(args, lambda fan: op_minus(fan, args.i, args.j))
        if args.command == "tilde":
            return _cmd_transform(args, tilde)
        if args.command == "paper-example":
            return _cmd_paper_example(args)
        if args.command == "recession":
            return _cmd_recession(args)
        if args.command == "certify":
            return _cmd_certify(args)
        raise AssertionError(f"unhandled command {args.command}")
    except NotBalancedError as err:
        print(f"error: {err}", file=sys.stderr)
        return CHECK_EXIT
    except (ParseError, ValidationError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_EXIT
    except TropicertError as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
