import json

import pytest
from click.testing import CliRunner

from latticeknots import lattice
from latticeknots.cli import EXIT_BUDGET, EXIT_INVALID, EXIT_PARSE, EXIT_PRECONDITION, OBJ_HEADER, main
from latticeknots.constructions import catalog_entry


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, stdin=None):
        return runner.invoke(main, list(args), input=stdin)
    return invoke


def test_generate_torus_pipes_into_invariants(run):
    gen = run("generate", "torus", "--p", "3")
    assert gen.exit_code == 0
    c = lattice.loads(gen.output)
    assert lattice.stick_count(c).per_axis() == (6, 6, 6)
    inv = run("invariants", stdin=gen.output)
    assert inv.exit_code == 0
    assert "total=18" in inv.output and "components=1" in inv.output


def test_invariants_json(run):
    gen = run("generate", "catalog", "4_1^2")
    out = run("invariants", "--json", "--axis", "x", stdin=gen.output)
    d = json.loads(out.output)
    assert d["total"] == 13 and d["components"] == 2
    assert abs(d["linking"][0][1]) == 2


def test_invariants_reports_linking_lines(run):
    gen = run("generate", "two-braid", "--n", "4")
    out = run("invariants", stdin=gen.output)
    assert any(line in ("lk(0,1)=4", "lk(0,1)=-4") for line in out.output.splitlines())


def test_compose_chain(run):
    out = run("generate", "compose", "--a", "3_1", "--b", "3_1", "--b", "3_1")
    assert out.exit_code == 0
    assert lattice.stick_count(lattice.loads(out.output)).total == 24


def test_compose_from_file(run, tmp_path):
    f = tmp_path / "k.json"
    f.write_text(lattice.dumps(catalog_entry("3_1").conformation))
    out = run("generate", "compose", "--a", str(f), "--b", "4_1")
    assert out.exit_code == 0
    assert lattice.stick_count(lattice.loads(out.output)).total == 20


def test_satellite(run):
    out = run("generate", "satellite", "--knot", "3_1", "--n", "2", "--word", "1")
    c = lattice.loads(out.output)
    assert len(c.components) == 1 and lattice.stick_count(c).total == 24


def test_arc(run):
    out = run("generate", "arc", "--pages", "1-3 2-4 3-5 4-6 5-7 6-1 7-2")
    assert out.exit_code == 0
    assert lattice.stick_count(lattice.loads(out.output)).total <= 26


def test_validate_echo_is_byte_identical(run):
    text = run("generate", "catalog", "3_1").output
    out = run("validate", "--echo", stdin=text)
    assert out.exit_code == 0 and out.output == text


def test_project_pd(run):
    text = run("generate", "catalog", "3_1").output
    out = run("project", "--pd", stdin=text)
    assert out.exit_code == 0 and out.output.startswith("# latticeknots-pd v1")


def test_bounds_default_catalog(run):
    out = run("bounds", "--record", "3_1")
    assert out.exit_code == 0 and "minimal" in out.output


def test_export_obj(run):
    text = run("generate", "catalog", "2_1^2").output
    out = run("export", "--obj", stdin=text)
    lines = out.output.splitlines()
    assert lines[0] == OBJ_HEADER
    assert sum(1 for line in lines if line.startswith("v ")) == 8
    assert [line for line in lines if line.startswith("l ")] == ["l 1 2 3 4 1", "l 5 6 7 8 5"]


def test_search_streams_then_summarises(run):
    out = run("search", "--budget", "8")
    lines = out.output.splitlines()
    summary = json.loads(lines[-1])["summary"]
    assert summary["polygons"] == 28 == len(lines) - 1
    assert all(lattice.loads(line) for line in lines[:-1])


def test_search_summary_only_with_split(run):
    out = run("search", "--budget", "8", "--split", "2,3,3", "--summary-only")
    assert out.exit_code == 0 and len(out.output.splitlines()) == 1


# ------------------------------------------------------------- exit codes

def test_exit_parse(run):
    assert run("invariants", stdin="not json").exit_code == EXIT_PARSE
    assert run("invariants", "/nonexistent/file.json").exit_code == EXIT_PARSE
    assert run("generate", "compose", "--a", "nope", "--b", "3_1").exit_code == EXIT_PARSE
    assert run("search", "--budget", "8", "--split", "a,b").exit_code == EXIT_PARSE


def test_exit_invalid(run):
    bad = json.dumps({"format": "latticeknots/conformation", "version": 1,
                      "components": [[[0, 0, 0], [1, 0, 0], [2, 0, 0], [2, 1, 0], [0, 1, 0]]]})
    out = run("validate", stdin=bad)
    assert out.exit_code == EXIT_INVALID and "collinear" in out.output


def test_exit_precondition(run):
    assert run("generate", "two-braid", "--n", "2").exit_code == EXIT_PRECONDITION
    assert run("generate", "torus", "--p", "1").exit_code == EXIT_PRECONDITION
    assert run("generate", "catalog", "10_161").exit_code == EXIT_PRECONDITION
    assert run("bounds", "--record", "9_47").exit_code == EXIT_PRECONDITION


def test_exit_budget(run):
    assert run("search", "--budget", "40").exit_code == EXIT_BUDGET


def test_usage_error(run):
    assert run("frobnicate").exit_code == 2
    assert run("generate", "torus").exit_code == 2
