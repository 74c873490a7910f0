import pytest

from cck.cli import (
    EXIT_INVARIANT,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_PARSE,
    CliParseError,
    cli_run,
    parse_arc_spec,
    parse_coeffs_file,
)
from cck.arcs import AnnulusArc, ExplicitBand, PolygonChord
from cck.harness import OCTAGON_EXPANSION, annulus_fixture, octagon_fixture
from cck.surface import write_surface_file


@pytest.fixture(scope="module")
def surfaces(tmp_path_factory):
    d = tmp_path_factory.mktemp("surfaces")
    octa = d / "octagon.cck"
    octa.write_text(write_surface_file(octagon_fixture()))
    ann = d / "annulus.cck"
    ann.write_text(write_surface_file(annulus_fixture()))
    return {"octagon": str(octa), "annulus": str(ann)}


def test_arc_spec_grammar():
    assert parse_arc_spec("chord 3 7") == PolygonChord(3, 7)
    assert parse_arc_spec("annarc 3 2 1") == AnnulusArc(3, 2, 1)
    assert parse_arc_spec("band 0 3") == ExplicitBand((), (), 3)
    band = parse_arc_spec("band 1 3 / 1 3 2 / 3 4 5")
    assert band == ExplicitBand((3,), ((1, 3, 2), (3, 4, 5)))
    for bad in ("chord 3", "annarc 1 2", "band 2 3 / 1 2 3", "lasso 1 2"):
        with pytest.raises(CliParseError):
            parse_arc_spec(bad)


def test_coeffs_file_grammar():
    semifield, assign = parse_coeffs_file("cck/1\nell 2\n1 0\n0 -3\n")
    assert semifield.ell == 2
    assert assign == {1: (1, 0), 2: (0, -3)}
    for bad in ("ell 2\n1 0\n", "cck/1\nell 2\n1\n", "cck/1\nell x\n"):
        with pytest.raises(CliParseError):
            parse_coeffs_file(bad)


def test_expand_command(surfaces):
    status, out = cli_run(
        ["expand", "--surface", surfaces["octagon"], "--arc", "chord 3 7"]
    )
    assert status == EXIT_OK
    assert out == "cck/1\n" + OCTAGON_EXPANSION + "\n"


def test_gvector_command(surfaces):
    status, out = cli_run(
        ["gvector", "--surface", surfaces["annulus"], "--arc", "annarc 3 2 1"]
    )
    assert status == EXIT_OK
    assert out.splitlines() == ["cck/1", "g 0 -1 1 -1", "I+ 3 5 8", "I- 2 4"]


def test_chi_command_sorted(surfaces):
    status, out = cli_run(
        ["chi", "--surface", surfaces["annulus"], "--arc", "annarc 3 2 1"]
    )
    assert status == EXIT_OK
    lines = out.splitlines()
    assert lines[:3] == ["cck/1", "theorematic yes", "paths 13"]
    dims = [tuple(map(int, ln.split()[1:-1])) for ln in lines[3:]]
    assert dims == sorted(dims)
    assert sum(int(ln.split()[-1]) for ln in lines[3:]) == 13


def test_oracle_command(surfaces):
    status, out = cli_run(
        ["oracle", "--surface", surfaces["octagon"], "--arc", "chord 3 7"]
    )
    assert status == EXIT_OK
    assert out.splitlines()[1] == OCTAGON_EXPANSION


def test_selftest_command():
    status, out = cli_run(["selftest"])
    assert status == EXIT_OK
    assert out.startswith("cck/1\nok")


def test_coeffs_expansion(surfaces, tmp_path):
    coeffs = tmp_path / "coeffs.cck"
    coeffs.write_text("cck/1\nell 1\n0\n0\n0\n0\n0\n")
    status, out = cli_run(
        [
            "expand",
            "--surface", surfaces["octagon"],
            "--arc", "chord 3 7",
            "--coeffs", str(coeffs),
        ]
    )
    assert status == EXIT_OK
    assert "y" not in out


def test_parse_error_exit_codes(surfaces, tmp_path):
    status, _ = cli_run(
        ["expand", "--surface", surfaces["octagon"], "--arc", "chord 3"]
    )
    assert status == EXIT_PARSE
    bad = tmp_path / "bad.cck"
    bad.write_text("cck/1\nsurface 0 1 8\nedges 5 8\ntri 1 2\n")
    status, out = cli_run(["expand", "--surface", str(bad), "--arc", "chord 3 7"])
    assert status == EXIT_PARSE
    assert "line 4" in out


def test_invariant_violation_exit_code(surfaces):
    status, _ = cli_run(
        [
            "oracle",
            "--surface", surfaces["annulus"],
            "--arc", "annarc 3 2 1",
            "--budget", "1",
        ]
    )
    assert status == EXIT_INVARIANT


def test_byte_stable_output(surfaces):
    args = ["fpoly", "--surface", surfaces["annulus"], "--arc", "annarc 3 2 1"]
    assert cli_run(args) == cli_run(args)
