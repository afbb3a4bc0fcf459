"""
Tests for the command line interface
"""

import json
from typing import List

import pytest
from click.testing import CliRunner
from pydantic import TypeAdapter

from heckedim import cmd_certify, cmd_dim
from heckedim.classes import (
    AsymptoticReport,
    CoverZeroReport,
    DimensionResult,
    IntervalBound,
    LadderReport,
    TableRow,
    ValidationReport,
)
from heckedim.cli import cli
from heckedim.errors import CertificationError, LadderError


@pytest.fixture
def runner():
    return CliRunner()


def test_dim_json(runner):
    result = runner.invoke(cli, ["dim", "--w", "6", "--format", "json"])
    assert result.exit_code == 0, result.output
    reports = TypeAdapter(List[LadderReport]).validate_json(result.output)
    assert len(reports) == 1
    assert reports[0].delta == pytest.approx(0.622970, abs=1e-6)


def test_dim_csv(runner):
    result = runner.invoke(cli, ["dim", "--w", "6", "--w", "8", "--k", "15", "--format", "csv"])
    assert result.exit_code == 0, result.output
    header, *rows = result.output.strip().splitlines()
    assert header == "w,k,delta,error_estimate,base_eigenvalue"
    deltas = [float(row.split(",")[2]) for row in rows]
    assert len(deltas) == 2
    assert deltas[0] > deltas[1]


def test_dim_rejects_small_w(runner):
    result = runner.invoke(cli, ["dim", "--w", "1.5"])
    assert result.exit_code == 2
    assert "w must exceed 2" in result.output


def test_dim_failure_exit_code(runner, monkeypatch):
    def fail(w, k=None):
        raise LadderError("differences grew twice in a row")

    monkeypatch.setattr(cmd_dim, "estimate_dimension", fail)
    result = runner.invoke(cli, ["dim", "--w", "6"])
    assert result.exit_code == 1
    assert "differences grew" in result.output


def test_dim_rejected_report_exit_code(runner, monkeypatch):
    def inconsistent(w, k=None):
        return DimensionResult(w=w, k=15, s_k=0.7, bracket=(0.7, 0.8), residual=0.0, iterations=1)

    monkeypatch.setattr(cmd_dim, "estimate_dimension", inconsistent)
    result = runner.invoke(cli, ["dim", "--w", "6"])
    assert result.exit_code == 1
    assert "outside its bracket" in result.output


def test_table(runner):
    result = runner.invoke(cli, ["table", "--format", "json"])
    assert result.exit_code == 0, result.output
    rows = TypeAdapter(List[TableRow]).validate_json(result.output)
    assert len(rows) == 9
    assert all(row.within_reference for row in rows)

    text = runner.invoke(cli, ["table"])
    assert "9/9 rows within reference" in text.output


def test_validate(runner):
    arguments = ["validate", "--w", "20", "--s", "0.9", "--k", "20", "--nmax", "3"]
    arguments += ["--m", "50", "--euler-nmax", "2", "--euler-m", "20", "--format", "json"]
    result = runner.invoke(cli, arguments)
    assert result.exit_code == 0, result.output
    (report,) = TypeAdapter(List[ValidationReport]).validate_json(result.output)
    assert report.det_vs_euler <= 1e-3
    assert complex(report.determinant).real > 0


def test_validate_rejects_small_s(runner):
    result = runner.invoke(cli, ["validate", "--w", "20", "--s", "0.4"])
    assert result.exit_code == 2
    assert "s must exceed 1/2" in result.output


def test_asympt(runner):
    result = runner.invoke(cli, ["asympt", "--w", "100", "--format", "json"])
    assert result.exit_code == 0, result.output
    (report,) = TypeAdapter(List[AsymptoticReport]).validate_json(result.output)
    assert report.expansion == pytest.approx(0.509279417381, abs=1e-4)
    assert len(report.polynomials) == 4

    text = runner.invoke(cli, ["asympt", "--w", "100"])
    assert "P_1(t) coefficients" in text.output


def test_asympt_rejects_small_w(runner):
    result = runner.invoke(cli, ["asympt", "--w", "5"])
    assert result.exit_code == 2


def test_certify(runner):
    result = runner.invoke(cli, ["certify", "--w", "3", "--format", "json"])
    assert result.exit_code == 0, result.output
    (bound,) = TypeAdapter(List[IntervalBound]).validate_json(result.output)
    assert 0.75 < bound.lower < bound.upper < 0.7533
    assert bound.reference == (0.75065, 0.75322)


def test_certify_rejects_small_w(runner):
    result = runner.invoke(cli, ["certify", "--w", "2.5"])
    assert result.exit_code == 2
    assert "certification needs w >= 3" in result.output


def test_certify_estimate_outside_interval(runner, monkeypatch):
    def misplaced(w, delta_prior=None, k=None):
        raise CertificationError("ladder estimate 0.9 for w=3.0 lies outside")

    monkeypatch.setattr(cmd_certify, "certify_interval", misplaced)
    result = runner.invoke(cli, ["certify", "--w", "3"])
    assert result.exit_code == 1
    assert "lies outside" in result.output


def test_covers(runner):
    result = runner.invoke(cli, ["covers", "--w", "5", "--n", "1", "--k", "15", "--format", "json"])
    assert result.exit_code == 0, result.output
    (report,) = TypeAdapter(List[CoverZeroReport]).validate_json(result.output)
    assert report.count >= 1
    assert len(report.factors) == 2

    text = runner.invoke(cli, ["covers", "--w", "5", "--n", "1", "--k", "15"])
    assert "a=0 sign=+1" in text.output


def test_verbose_flag(runner):
    result = runner.invoke(cli, ["-v", "dim", "--w", "100", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload[0]["w"] == 100.0
