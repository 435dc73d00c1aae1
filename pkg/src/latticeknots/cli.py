"""Command-line front end: ``latticeknots <verb> ...``.

Conformations travel as JSON on stdin/stdout so verbs can be piped:

    latticeknots generate torus --p 3 | latticeknots invariants

Exit codes name the kind of failure:

    0  success
    2  usage error (unknown verb or flag)
    3  input could not be parsed
    4  conformation failed validation
    5  precondition of a generator or invariant violated
    6  a computation budget was exceeded
"""

from __future__ import annotations

import json
import sys

import click

from . import lattice
from .constructions import (ArcPresentation, PermutationWord, catalog, catalog_entry,
                            catalog_names, compose_chain, from_arc_presentation, satellite,
                            two_braid_link, torus_knot)
from .diagram import DiagramError, crossing_count, linking_matrix, pd_code, project, writhe
from .invariants import (CrossingBudgetExceeded, InvariantError, check_bounds, format_jones,
                         jones, knot_record)
from .lattice import Conformation, LatticeError
from .search import EnumerationSpec, SearchError, sweep

EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_PRECONDITION = 5
EXIT_BUDGET = 6

OBJ_HEADER = "# latticeknots-obj v1"


class Failure(click.ClickException):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.exit_code = code


def _fail_from(exc: Exception) -> Failure:
    if isinstance(exc, (CrossingBudgetExceeded, SearchError)) and "exceeds" in str(exc):
        return Failure(str(exc), EXIT_BUDGET)
    return Failure(str(exc), EXIT_PRECONDITION)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise Failure(f"cannot read {path}: {exc.strerror}", EXIT_PARSE)


def _parse(text: str) -> Conformation:
    try:
        return lattice.loads(text)
    except LatticeError as exc:
        raise Failure(f"cannot parse conformation: {exc}", EXIT_PARSE)


def _load_valid(path: str) -> Conformation:
    c = _parse(_read_text(path))
    rep = lattice.validate(c)
    if not rep.ok:
        raise Failure("invalid conformation:\n" + rep.summary(), EXIT_INVALID)
    return c


def _knot_arg(spec: str) -> Conformation:
    """A catalog name or a path to a conformation file."""
    if spec in catalog_names():
        return catalog(spec)[0]
    try:
        return _load_valid(spec)
    except Failure as exc:
        if exc.exit_code == EXIT_PARSE:
            raise Failure(f"{spec!r} is neither a catalog name ({', '.join(catalog_names())}) "
                          "nor a readable conformation file", EXIT_PARSE)
        raise


def _emit(c: Conformation) -> None:
    click.echo(lattice.dumps(c))


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Cubic-lattice stick conformations of knots and links."""


# ------------------------------------------------------------------ generate

@main.group()
def generate():
    """Build a conformation and print it as JSON."""


@generate.command("torus")
@click.option("--p", "p", type=int, required=True, help="T(p, p+1) with 6p sticks.")
def gen_torus(p):
    try:
        _emit(torus_knot(p))
    except (LatticeError, InvariantError) as exc:
        raise _fail_from(exc)


@generate.command("compose")
@click.option("--a", "a", required=True, help="Catalog name or conformation file.")
@click.option("--b", "b", required=True, multiple=True,
              help="Catalog name or file; repeat to build a chain a # b1 # b2 ...")
def gen_compose(a, b):
    knots = [_knot_arg(a)] + [_knot_arg(x) for x in b]
    try:
        _emit(compose_chain(knots))
    except LatticeError as exc:
        raise _fail_from(exc)


@generate.command("satellite")
@click.option("--knot", required=True, help="Catalog name or conformation file.")
@click.option("--n", "n", type=int, required=True, help="Number of strands.")
@click.option("--word", default="", help="Permutation word, e.g. '1 2' or '-1'; empty for identity.")
@click.option("--stick", type=int, default=None, help="Torsion stick index (default: first).")
def gen_satellite(knot, n, word, stick):
    j = _knot_arg(knot)
    try:
        _emit(satellite(j, n, PermutationWord.parse(n, word), stick))
    except LatticeError as exc:
        raise _fail_from(exc)


@generate.command("two-braid")
@click.option("--n", "n", type=int, required=True, help="Linking number.")
def gen_two_braid(n):
    try:
        _emit(two_braid_link(n))
    except LatticeError as exc:
        raise _fail_from(exc)


@generate.command("arc")
@click.option("--pages", required=True, help="Pages as 'a-b' pairs in angular order.")
def gen_arc(pages):
    try:
        a = ArcPresentation.parse(pages)
    except ValueError as exc:
        raise Failure(f"cannot parse arc presentation: {exc}", EXIT_PARSE)
    try:
        _emit(from_arc_presentation(a))
    except LatticeError as exc:
        raise _fail_from(exc)


@generate.command("catalog")
@click.argument("name")
def gen_catalog(name):
    try:
        _emit(catalog(name)[0])
    except (LatticeError, InvariantError) as exc:
        raise _fail_from(exc)


# ------------------------------------------------------------- inspection

@main.command("validate")
@click.argument("path", default="-")
@click.option("--echo", is_flag=True, help="Print the input unchanged when it is valid.")
def validate_cmd(path, echo):
    """Check a conformation; exit 4 with the violations if it is invalid."""
    text = _read_text(path)
    c = _parse(text)
    rep = lattice.validate(c)
    if not rep.ok:
        raise Failure("invalid conformation:\n" + rep.summary(), EXIT_INVALID)
    if echo:
        click.echo(text, nl=False)
    else:
        click.echo(rep.summary())


def _leveled_diagram(c: Conformation, axis: str):
    try:
        return project(lattice.properly_level(c), axis)
    except (DiagramError, LatticeError) as exc:
        raise _fail_from(exc)


@main.command("invariants")
@click.argument("path", default="-")
@click.option("--axis", type=click.Choice(["x", "y", "z"]), default="z")
@click.option("--json", "as_json", is_flag=True, help="Print one JSON object instead of lines.")
def invariants_cmd(path, axis, as_json):
    """Stick counts, crossing data, Jones polynomial and linking numbers."""
    c = _load_valid(path)
    counts = lattice.stick_count(c)
    d = _leveled_diagram(c, axis)
    try:
        v = jones(d)
    except InvariantError as exc:
        raise _fail_from(exc)
    lk = linking_matrix(d)
    if as_json:
        click.echo(json.dumps({
            "components": len(c.components), "total": counts.total,
            "per_axis": list(counts.per_axis()), "crossings": crossing_count(d),
            "writhe": writhe(d), "jones": v.to_dict(), "linking": lk}))
        return
    click.echo(f"components={len(c.components)}")
    click.echo(f"total={counts.total}")
    click.echo("px={} py={} pz={}".format(*counts.per_axis()))
    click.echo(f"crossings={crossing_count(d)} (axis {axis})")
    click.echo(f"writhe={writhe(d)}")
    click.echo(f"jones={format_jones(v)}")
    for i in range(len(lk)):
        for k in range(i + 1, len(lk)):
            click.echo(f"lk({i},{k})={lk[i][k]}")


@main.command("project")
@click.argument("path", default="-")
@click.option("--axis", type=click.Choice(["x", "y", "z"]), default="z")
@click.option("--pd", "as_pd", is_flag=True, help="Print the PD code.")
def project_cmd(path, axis, as_pd):
    """Project along an axis; print a crossing summary or the PD code."""
    d = _leveled_diagram(_load_valid(path), axis)
    if as_pd:
        click.echo(pd_code(d).to_text(), nl=False)
        return
    click.echo(f"axis={axis} crossings={crossing_count(d)} writhe={writhe(d)}")
    for x in d.crossings:
        click.echo(f"  {tuple(x.point)} over {x.over} under {x.under} sign {x.sign:+d}")


@main.command("bounds")
@click.option("--record", "name", required=True, help="Knot or link name in the record table.")
@click.argument("path", required=False)
def bounds_cmd(name, path):
    """Compare a conformation (default: the catalog entry) with the bounds of a record."""
    try:
        rec = knot_record(name)
    except InvariantError as exc:
        raise _fail_from(exc)
    if path is None:
        if name not in catalog_names():
            raise Failure(f"{name!r} has no catalog conformation; give a file", EXIT_PRECONDITION)
        c = catalog_entry(name).conformation
    else:
        c = _load_valid(path)
    rep = check_bounds(rec, c)
    for line in rep.lines():
        click.echo(line)
    if not rep.ok:
        raise Failure(f"{name}: a lower bound is violated", EXIT_PRECONDITION)


@main.command("search")
@click.option("--budget", type=int, required=True, help="Total stick count s.")
@click.option("--split", default=None, help="Per-axis split 'px,py,pz' (default: all).")
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--checkpoint", default=None, help="Resume file; finished tasks are skipped.")
@click.option("--summary-only", is_flag=True, help="Do not stream polygons.")
def search_cmd(budget, split, workers, checkpoint, summary_only):
    """Enumerate leveled polygons; one JSON polygon per line, then a summary."""
    try:
        sp = tuple(int(v) for v in split.split(",")) if split else None
    except ValueError:
        raise Failure(f"cannot parse split {split!r}", EXIT_PARSE)
    try:
        spec = EnumerationSpec(budget, sp)
        emit = None if summary_only else (lambda corners: _emit(Conformation([corners])))
        summary = sweep(spec, workers=workers, checkpoint=checkpoint, emit=emit)
    except SearchError as exc:
        raise _fail_from(exc)
    click.echo(json.dumps({"summary": {"budget": budget, "polygons": summary.count,
                                       "tasks": summary.tasks_done,
                                       "classes": summary.classes}}, sort_keys=True))


@main.command("export")
@click.argument("path", default="-")
@click.option("--obj", "as_obj", is_flag=True, required=True, help="Wavefront OBJ polylines.")
def export_cmd(path, as_obj):
    """Write corners as OBJ vertices and one closed ``l`` element per component."""
    c = _load_valid(path)
    click.echo(OBJ_HEADER)
    k = 1
    for comp in c.components:
        for p in comp:
            click.echo(f"v {p[0]} {p[1]} {p[2]}")
        idx = list(range(k, k + len(comp)))
        click.echo("l " + " ".join(map(str, idx + [k])))
        k += len(comp)


if __name__ == "__main__":
    main()
