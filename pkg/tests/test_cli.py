"""The command-line client, run against the in-process service."""

import io
import sys

import pytest

from lunefree.cli import cli
from lunefree.constructions import venn
from lunefree.medial import wheel
from lunefree.unitext import parse_uni, write_uni


@pytest.fixture
def venn_file(tmp_path):
    path = tmp_path / "venn.uni"
    path.write_text(write_uni(venn().map))
    return str(path)


def test_usage_errors(capsys):
    assert cli([]) == 2
    assert cli(["construct", "nope"]) == 2
    assert cli(["enumerate"]) == 2
    assert cli(["export", "x.uni", "--format", "pdf"]) == 2
    capsys.readouterr()
    assert cli(["construct", "family", "3"]) == 2
    assert "takes 2 arguments, got 1" in capsys.readouterr().err


def test_analyze_universe(venn_file, capsys):
    assert cli(["analyze", venn_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "v=6 e=12 f=8 genus=0 simple=true"
    assert lines[1] == "census=3:8"
    assert "mu=3 tight=true lune_free=true" in lines[2]
    assert "admissible=false" in lines[2]
    assert "lune_count=0" in lines[2]


def test_analyze_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(write_uni(venn().map)))
    assert cli(["analyze", "-"]) == 0
    assert "mu=3" in capsys.readouterr().out


def test_analyze_plain_map(tmp_path, capsys):
    path = tmp_path / "w4.uni"
    path.write_text(write_uni(wheel(4)))
    assert cli(["analyze", str(path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "v=5 e=8 f=5 genus=0 simple=true"
    assert len(lines) == 2  # no strand line for maps that are not universes


def test_analyze_missing_file(capsys):
    assert cli(["analyze", "no-such-file.uni"]) == 1
    assert capsys.readouterr().err.startswith("lunefree:")


def test_construct_round_trip(capsys):
    assert cli(["construct", "venn"]) == 0
    doc = capsys.readouterr().out
    assert parse_uni(doc).isomorphic(venn().map)
    assert cli(["construct", "wheel", "5"]) == 0
    assert parse_uni(capsys.readouterr().out).isomorphic(wheel(5))


def test_construct_domain_errors(capsys):
    assert cli(["construct", "tight", "12"]) == 1
    err = capsys.readouterr().err
    assert "Unrealizable" in err and "12" in err
    assert cli(["construct", "tight", "13"]) == 1
    assert cli(["construct", "lunefree", "7"]) == 1
    assert cli(["construct", "braid", "0", "0", "0"]) == 1


def test_enumerate_lists_the_three_twelve_knots(capsys):
    assert cli(["enumerate", "--v", "12", "--simple", "--mu", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("map v=12") == 3
    for chunk in out.split("\n\n"):
        u = parse_uni(chunk)
        assert u.nv == 12


def test_enumerate_census(capsys):
    assert cli(["enumerate", "--v", "8", "--simple", "--census"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert lines[5] == "v=6 lune_free=1 knots=0 tight=1 tight_knots=0"
    assert lines[7] == "v=8 lune_free=1 knots=1 tight=1 tight_knots=1"
    assert cli(["enumerate", "--v", "3", "--census"]) == 0
    assert capsys.readouterr().out.splitlines() == [
        "v=1 count=1",
        "v=2 count=3",
        "v=3 count=7",
    ]


def test_medial_and_inverse(tmp_path, venn_file, capsys):
    path = tmp_path / "w4.uni"
    path.write_text(write_uni(wheel(4)))
    assert cli(["medial", str(path)]) == 0
    doc = capsys.readouterr().out
    assert doc.startswith("map v=8 e=16")
    assert cli(["medial", venn_file, "--inverse"]) == 0
    assert capsys.readouterr().out.startswith("map v=4 e=6")


def test_export_formats(venn_file, capsys):
    assert cli(["export", venn_file, "--format", "uni"]) == 0
    echoed = capsys.readouterr().out
    assert parse_uni(echoed).isomorphic(venn().map)
    assert cli(["export", venn_file, "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("graph {")
    assert cli(["export", venn_file, "--format", "svg"]) == 0
    assert capsys.readouterr().out.startswith("<svg ")


def test_export_planar_code_bytes(venn_file, capsysbinary):
    assert cli(["export", venn_file, "--format", "planarcode"]) == 0
    raw = capsysbinary.readouterr().out
    assert len(raw) == 31
    assert raw[0] == 6


def test_export_rejects_multigraphs(tmp_path, capsys):
    assert cli(["construct", "family", "3", "1"]) == 0
    path = tmp_path / "trefoil.uni"
    path.write_text(capsys.readouterr().out)
    assert cli(["export", str(path), "--format", "planarcode"]) == 1
    assert "NotSimple" in capsys.readouterr().err


def test_verify_quick(capsys):
    assert cli(["verify", "--suite", "quick"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 7
    assert "all 7 checks passed" in out


def test_unreachable_server(monkeypatch, capsys):
    monkeypatch.setenv("LUNEFREE_SERVER", "http://127.0.0.1:9")
    assert cli(["enumerate", "--v", "3", "--census"]) == 1
    assert capsys.readouterr().err.startswith("lunefree:")
