"""CLI contract: subcommands, exit codes, and byte-deterministic output."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from tropicert import op_plus, paper_k44, parse_fan_text, tilde
from tropicert.fanfile import format_fan


def run_cli(*args, **kwargs):
    return subprocess.run([sys.executable, "-m", "tropicert.cli", *args],
                          capture_output=True, text=True, check=False, **kwargs)


@pytest.fixture(scope="module")
def k44_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("fans") / "k44.fan"
    path.write_text(format_fan(paper_k44()), encoding="utf-8")
    return str(path)


@pytest.fixture(scope="module")
def tilde_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("fans") / "k44-tilde.fan"
    path.write_text(format_fan(tilde(paper_k44())), encoding="utf-8")
    return str(path)


def test_check_passes_on_example(k44_path):
    result = run_cli("check", k44_path)
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "valid_fan: PASS"
    assert "strongly_extremal_sufficient: PASS" in lines
    assert all(line.endswith("PASS") for line in lines)


def test_check_fails_on_unbalanced(tmp_path):
    path = tmp_path / "bad.fan"
    path.write_text('{"ambient_dim": 2, "dim": 2, "rays": [[1, 0], [0, 1]], '
                    '"cones": [{"rays": [0, 1], "weight": "1"}]}', encoding="utf-8")
    result = run_cli("check", str(path))
    assert result.returncode == 1
    assert "balanced: FAIL" in result.stdout


def test_signature_outputs(k44_path, tilde_path):
    assert run_cli("signature", k44_path).stdout == "4 0 4\n"
    assert run_cli("signature", tilde_path).stdout == "7 3 4\n"


def test_laplacian_with_order_file(tilde_path, tmp_path):
    base = paper_k44().rays
    order = list(base) + [tuple(-x for x in base[i]) for i in (1, 2, 3, 5, 6, 7)]
    order_path = tmp_path / "order.json"
    order_path.write_text(json.dumps([list(v) for v in order]), encoding="utf-8")
    result = run_cli("laplacian", tilde_path, "--order", str(order_path))
    assert result.returncode == 0
    rows = [line.split() for line in result.stdout.splitlines()]
    assert len(rows) == 14
    assert rows[0] == "3 0 0 0 0 -1 -1 -1 0 0 0 0 0 0".split()


def test_plus_writes_fan_to_stdout(k44_path):
    result = run_cli("plus", k44_path, "-i", "0", "-j", "5")
    assert result.returncode == 0
    assert parse_fan_text(result.stdout) == op_plus(paper_k44(), 0, 5)


def test_minus_rejects_missing_edge(k44_path):
    result = run_cli("minus", k44_path, "-i", "0", "-j", "1")
    assert result.returncode == 2
    assert "no 2-cone" in result.stderr


def test_tilde_command(k44_path):
    result = run_cli("tilde", k44_path)
    assert result.returncode == 0
    assert parse_fan_text(result.stdout) == tilde(paper_k44())


def test_paper_example_roundtrip():
    plain = run_cli("paper-example")
    assert plain.returncode == 0
    assert parse_fan_text(plain.stdout) == paper_k44()
    surgered = run_cli("paper-example", "--tilde")
    assert parse_fan_text(surgered.stdout) == tilde(paper_k44())


def test_recession_command(k44_path, tmp_path):
    fan = paper_k44()
    cells = []
    for cone in fan.cones:
        rays = [list(fan.rays[i]) for i in cone.rays]
        cells.append({"vertices": [["2", "-1", "0", "1/3"]], "rays": rays,
                      "weight": str(cone.weight)})
    path = tmp_path / "translate.vc"
    path.write_text(json.dumps({"ambient_dim": 4, "dim": 2, "cells": cells}),
                    encoding="utf-8")
    result = run_cli("recession", str(path), "--sigma", k44_path)
    assert result.returncode == 0
    assert parse_fan_text(result.stdout) == fan


def test_certify_witness_and_determinism(tilde_path, tmp_path):
    first = run_cli("certify", tilde_path, "-o", str(tmp_path / "cert.json"))
    second = run_cli("certify", tilde_path)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
    assert (tmp_path / "cert.json").read_text(encoding="utf-8") == first.stdout
    body = json.loads(first.stdout)
    assert body["conclusion"] == "COUNTEREXAMPLE_WITNESS"
    assert body["signature"] == {"n_plus": 7, "n_minus": 3, "n_zero": 4}


def test_certify_example_is_not_a_witness(k44_path):
    result = run_cli("certify", k44_path)
    assert result.returncode == 1
    body = json.loads(result.stdout)
    assert body["conclusion"] == "CHECK_FAILED:positive_weights"
    assert body["signature"] == {"n_plus": 4, "n_minus": 0, "n_zero": 4}


def test_certify_aborts_on_unbalanced(tmp_path):
    path = tmp_path / "bad.fan"
    path.write_text('{"ambient_dim": 2, "dim": 2, "rays": [[1, 0], [0, 1]], '
                    '"cones": [{"rays": [0, 1], "weight": "1"}]}', encoding="utf-8")
    result = run_cli("certify", str(path))
    assert result.returncode == 1
    body = json.loads(result.stdout)
    assert body["conclusion"] == "CHECK_FAILED:balanced"
    assert [c["name"] for c in body["computed_checks"]][-1] == "balanced"


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "garbage.fan"
    path.write_text("{broken", encoding="utf-8")
    for command in ("check", "signature", "certify"):
        result = run_cli(command, str(path))
        assert result.returncode == 2
        assert result.stdout == ""
        assert "error:" in result.stderr


def test_usage_error_exit_code():
    assert run_cli("plus").returncode == 2
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("signature", "/nonexistent/path.fan").returncode == 2
