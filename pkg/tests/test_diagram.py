import pytest
from hypothesis import given

from latticeknots.constructions import catalog_entry, two_braid_link
from latticeknots.diagram import (DiagramError, PDCode, crossing_count, linking_number, pd_code,
                                  project, reverse_orientation, writhe)
from latticeknots.lattice import Conformation, properly_level, stick_count, transform, Transform
from latticeknots.oracles import braid_closure_pd

from conftest import SQUARE
from strategies import catalog_conformations, isometries


def lev(c):
    return properly_level(c)


def test_square_has_no_crossings():
    d = project(lev(Conformation(SQUARE)), "z")
    assert crossing_count(d) == 0 and writhe(d) == 0
    assert pd_code(d).crossings == ()


def test_unleveled_input_rejected():
    c = Conformation([[(0, 0, 0), (4, 0, 0), (4, 4, 0), (0, 4, 0)]])
    with pytest.raises(DiagramError):
        project(c, "z")


def test_trefoil_projection(trefoil):
    d = project(lev(trefoil), "z")
    counts = stick_count(trefoil)
    assert 3 <= crossing_count(d) <= counts.px * counts.py
    pd = pd_code(d)
    assert len(pd.crossings) == crossing_count(d)
    assert pd.is_well_formed()


def test_standard_trefoil_pd():
    pd = braid_closure_pd([1, 1, 1], 2)
    assert len(pd.crossings) == 3 and pd.is_well_formed()
    assert pd.writhe() == 3
    assert pd.mirror().writhe() == -3


def test_mirrored_diagram_negates_writhe(trefoil):
    d = project(lev(trefoil), "z")
    assert writhe(d.mirror()) == -writhe(d)


def test_8_20_pd_is_well_formed():
    d = project(lev(catalog_entry("8_20").conformation), "z")
    assert pd_code(d).is_well_formed()


def test_pd_text_round_trip(trefoil):
    pd = pd_code(project(lev(trefoil), "z"))
    back = PDCode.from_text(pd.to_text())
    assert back == pd


def test_linking_numbers(all_catalog):
    split = project(lev(all_catalog["0_1^2"]), "z")
    assert linking_number(split, 0, 1) == 0
    hopf = project(lev(all_catalog["2_1^2"]), "z")
    assert abs(linking_number(hopf, 0, 1)) == 1
    assert abs(linking_number(project(lev(two_braid_link(6)), "z"), 0, 1)) == 6


def test_linking_number_needs_two_components(all_catalog):
    d = project(lev(all_catalog["2_1^2"]), "z")
    with pytest.raises(DiagramError):
        linking_number(d, 0, 0)
    with pytest.raises(DiagramError):
        linking_number(d, 0, 5)


def _multi(c):
    return len(c.components) > 1


@given(catalog_conformations.filter(_multi))
def test_linking_symmetric_and_antisymmetric_under_reversal(c):
    d = project(lev(c), "z")
    for a in range(len(c.components)):
        r = reverse_orientation(d, a)
        for b in range(len(c.components)):
            if a == b:
                continue
            assert linking_number(d, a, b) == linking_number(d, b, a)
            assert linking_number(r, a, b) == -linking_number(d, a, b)


@given(catalog_conformations.filter(_multi), isometries)
def test_linking_independent_of_axis(c, t):
    c = lev(transform(c, t))
    ds = [project(c, ax) for ax in "xyz"]
    n = len(c.components)
    for a in range(n):
        for b in range(a + 1, n):
            vals = {linking_number(d, a, b) for d in ds}
            assert len(vals) == 1


@given(catalog_conformations, isometries)
def test_crossings_bounded_by_axis_counts(c, t):
    c = lev(transform(c, t))
    counts = stick_count(c)
    per = {"x": (counts.py, counts.pz), "y": (counts.pz, counts.px), "z": (counts.px, counts.py)}
    for ax, (u, v) in per.items():
        assert crossing_count(project(c, ax)) <= u * v


@given(catalog_conformations)
def test_crossings_pair_x_and_y_sticks(c):
    c = lev(c)
    d = project(c, "z")
    for x in d.crossings:
        a = c.sticks(x.over[0])[x.over[1]].axis
        b = c.sticks(x.under[0])[x.under[1]].axis
        assert {a, b} == {0, 1}


def test_rotated_trefoil_projects(trefoil):
    c = lev(transform(trefoil, Transform(perm=(1, 2, 0))))
    assert crossing_count(project(c, "x")) >= 3
