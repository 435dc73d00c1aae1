import json

import pytest
from hypothesis import given, strategies as st

from latticeknots.constructions import torus_knot
from latticeknots.lattice import (Conformation, LatticeError, Transform, detect_clean_Ls,
                                  detect_exterior_Ls, dumps, expand_halfspace, is_properly_leveled,
                                  level_occupancy, loads, properly_level, reverse_component,
                                  rotation_about, rotations, simplify, stick_count, torsion_sticks,
                                  transform, validate)

from conftest import SIX, SQUARE
from strategies import catalog_conformations, catalog_knots, isometries, transforms


def test_square_is_valid():
    rep = validate(Conformation(SQUARE))
    assert rep.ok and rep.n_sticks == 4


def test_collinear_corner_reported():
    c = Conformation([[(0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0), (0, 1, 0)]])
    rep = validate(c)
    assert not rep.ok
    assert rep.violations[0].kind == "collinear consecutive sticks"
    assert rep.violations[0].sticks


@pytest.mark.parametrize("corners,kind", [
    ([(0, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 1)], "non-axis-parallel stick"),
    ([(0, 0, 0), (0, 0, 0), (1, 0, 0), (1, 1, 0)], "zero-length stick"),
    ([(0, 0, 0), (1, 0, 0), (1, 1, 0)], "too few corners"),
    ([(0, 0, 0), (2, 0, 0), (2, 2, 0), (1, 2, 0), (1, -1, 0), (0, -1, 0)], "self-intersection"),
])
def test_violation_kinds(corners, kind):
    rep = validate(Conformation([corners]))
    assert kind in {v.kind for v in rep.violations}


def test_components_intersect():
    a = [(0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0)]
    b = [(1, 0, 0), (1, 0, 3), (1, 3, 3), (1, 3, 0)]
    kinds = {v.kind for v in validate(Conformation([a, b])).violations}
    assert kinds == {"components intersect"}


def test_non_integer_corner_rejected():
    with pytest.raises(LatticeError):
        Conformation([[(0, 0, 0.5), (1, 0, 0), (1, 1, 0), (0, 1, 0)]])


def test_trefoil_valid(trefoil):
    assert validate(trefoil).ok


def test_stick_counts(trefoil):
    sq = stick_count(Conformation(SQUARE))
    assert sq.per_axis() == (2, 2, 0) and sq.total == 4 and sq.planar() == (0, 0, 1)
    assert stick_count(trefoil).total == 12
    assert stick_count(torus_knot(3)).total == 18


def test_stick_count_rejects_invalid():
    with pytest.raises(LatticeError):
        stick_count(Conformation([[(0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0), (0, 1, 0)]]))


def test_identity_transform(trefoil):
    assert transform(trefoil, Transform()) == trefoil


def test_scale_trefoil(trefoil):
    big = transform(trefoil, Transform(scale=(3, 1, 1)))
    assert validate(big).ok and stick_count(big).total == 12


def test_rotation_swaps_x_and_y(trefoil):
    c = Conformation([[(0, 0, 0), (3, 0, 0), (3, 1, 0), (3, 1, 1), (0, 1, 1), (0, 0, 1)]])
    before = stick_count(c)
    after = stick_count(transform(c, rotation_about(2)))
    assert (after.px, after.py, after.pz) == (before.py, before.px, before.pz)


@pytest.mark.parametrize("scale", [(0, 1, 1), (1, -2, 1)])
def test_bad_scale_rejected(scale):
    with pytest.raises(LatticeError):
        Transform(scale=scale)


def test_rotations_are_proper_and_distinct():
    rs = rotations()
    assert len(rs) == 24 and len(set(rs)) == 24
    assert all(r.det == 1 for r in rs)
    assert rs[0] == Transform()


def test_rotation_about_order_four():
    for axis in range(3):
        assert rotation_about(axis, 4) == Transform()
        assert rotation_about(axis, 1) != Transform()


def test_level_trefoil(trefoil):
    lv = properly_level(trefoil)
    assert all(1 <= v <= 4 for p in lv.corners() for v in p)
    for axis in range(3):
        assert all(n == 2 for n, _ in level_occupancy(lv, axis).values())
        assert sorted(level_occupancy(lv, axis)) == [1, 2, 3, 4]


def test_level_hopf_planar_component(all_catalog):
    lv = properly_level(all_catalog["2_1^2"])
    occ = level_occupancy(lv, 0)
    planar_levels = [k for k, (ends, planar) in occ.items() if planar]
    assert len(planar_levels) == 1
    assert occ[planar_levels[0]] == (0, 1)
    assert all(ends in (0, 2) for ends, _ in occ.values())


def test_level_separates_shared_levels():
    # two x-sticks share the level x = 0 with another run; leveling splits them
    c = Conformation([[(0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0), (0, 2, 2), (0, 0, 2)]])
    assert validate(c).ok
    lv = properly_level(c)
    assert is_properly_leveled(lv)
    assert stick_count(lv).total == 6


def test_expand_zero_is_identity(trefoil):
    assert expand_halfspace(trefoil, 2, 2, 1, 0) == trefoil


def test_expand_nothing_above_square():
    sq = Conformation(SQUARE)
    assert expand_halfspace(sq, 2, 1, 1, 5) == sq


def test_expand_trefoil(trefoil):
    lo, hi = trefoil.bounding_box()
    mid = (lo.z + hi.z) // 2
    out = expand_halfspace(trefoil, 2, mid, 1, 10)
    assert validate(out).ok and stick_count(out).total == 12
    assert out.extent()[2] == trefoil.extent()[2] + 10


def test_expand_rejects_bad_arguments(trefoil):
    with pytest.raises(LatticeError):
        expand_halfspace(trefoil, 2, 0, 0, 1)
    with pytest.raises(LatticeError):
        expand_halfspace(trefoil, 2, 0, 1, -1)


def test_torsion_sticks(trefoil):
    assert torsion_sticks(Conformation(SQUARE)) == []
    assert len(torsion_sticks(trefoil)) >= 2
    assert len(torsion_sticks(Conformation(SIX))) >= 2


def _lattice_points(p, q):
    a = next((i for i in range(3) if p[i] != q[i]), 0)
    lo, hi = sorted((p[a], q[a]))
    for v in range(lo, hi + 1):
        r = list(p)
        r[a] = v
        yield tuple(r)


def _brute_clean_windows(c):
    """Independent scan of every 4-stick window for the clean-L conditions."""
    out = set()
    for ci, comp in enumerate(c.components):
        n = len(comp)
        if n < 6:
            continue
        for i in range(n):
            X, A, B, C, Y = (comp[(i + k) % n] for k in range(5))
            axes = [next(k for k in range(3) if u[k] != v[k]) for u, v in ((X, A), (A, B), (B, C), (C, Y))]
            if axes[0] != axes[3] or len(set(axes[:3])) != 3:
                continue
            a = axes[0]
            if (X[a] - A[a]) * (Y[a] - C[a]) <= 0:
                continue
            box_lo = [min(A[k], B[k], C[k]) for k in range(3)]
            box_hi = [max(A[k], B[k], C[k]) for k in range(3)]
            own = {(ci, (i + k) % n) for k in range(4)}
            hit = False
            for cj, other in enumerate(c.components):
                m = len(other)
                for j in range(m):
                    if (cj, j) in own:
                        continue
                    for pt in _lattice_points(other[j], other[(j + 1) % m]):
                        if all(box_lo[k] <= pt[k] <= box_hi[k] for k in range(3)):
                            hit = True
                            break
                    if hit:
                        break
                if hit:
                    break
            if not hit:
                out.add((ci, i))
    return out


def test_no_Ls_in_square():
    sq = Conformation(SQUARE)
    assert detect_clean_Ls(sq) == [] and detect_exterior_Ls(sq) == []


def test_trefoil_Ls(trefoil):
    assert len(detect_clean_Ls(trefoil)) >= 1
    assert len(detect_exterior_Ls(trefoil)) >= 1


@pytest.mark.parametrize("p", [2, 3, 4])
def test_clean_Ls_match_brute_force(p):
    c = torus_knot(p)
    got = {(s.component, s.first_index) for s in detect_clean_Ls(c)}
    assert got == _brute_clean_windows(c)


def test_clean_Ls_match_brute_force_catalog(all_catalog):
    for name, c in all_catalog.items():
        got = {(s.component, s.first_index) for s in detect_clean_Ls(c)}
        assert got == _brute_clean_windows(c), name


def test_simplify_drops_straight_corners():
    pts = [(0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0), (2, 1, 0), (0, 1, 0)]
    assert simplify(pts) == [(0, 0, 0), (2, 0, 0), (2, 1, 0), (0, 1, 0)]


def test_json_round_trip(trefoil):
    text = dumps(trefoil)
    assert loads(text) == trefoil
    assert dumps(loads(text)) == text
    assert json.loads(text)["version"] == 1


@pytest.mark.parametrize("text", ["[1, 2]", '{"components": [[[0, 0]]]}', "{",
                                  '{"components": [], "version": 7}'])
def test_json_rejects_garbage(text):
    with pytest.raises(LatticeError):
        loads(text)


# ------------------------------------------------------------ properties

@given(catalog_conformations, transforms)
def test_transform_preserves_validity_and_count(c, t):
    out = transform(c, t)
    assert validate(out).ok
    assert stick_count(out).total == stick_count(c).total


@given(catalog_conformations, isometries)
def test_isometry_permutes_axis_counts(c, t):
    a = stick_count(c).per_axis()
    b = stick_count(transform(c, t)).per_axis()
    assert sorted(a) == sorted(b)
    assert b == tuple(a[t.perm[i]] for i in range(3))


@given(catalog_conformations, transforms)
def test_properly_level_idempotent(c, t):
    once = properly_level(transform(c, t))
    assert is_properly_leveled(once)
    assert properly_level(once) == once


@given(catalog_conformations)
def test_exterior_subset_of_clean(c):
    clean = {(s.component, s.first_index) for s in detect_clean_Ls(c)}
    ext = {(s.component, s.first_index) for s in detect_exterior_Ls(c)}
    assert ext <= clean


@given(catalog_conformations, st.integers(0, 2), st.integers(-3, 8), st.sampled_from([1, -1]),
       st.integers(0, 6))
def test_expand_preserves_count(c, axis, level, side, amount):
    out = expand_halfspace(c, axis, level, side, amount)
    assert validate(out).ok
    assert stick_count(out).total == stick_count(c).total


@given(catalog_conformations, st.integers(0, 2), st.integers(0, 4), st.integers(1, 5), st.integers(1, 5))
def test_disjoint_expansions_commute(c, axis, level, a, b):
    lo, hi = c.bounding_box()
    low = lo[axis] + level % max(1, hi[axis] - lo[axis])
    high = low + 1
    one = expand_halfspace(expand_halfspace(c, axis, high, 1, a), axis, low, -1, b)
    two = expand_halfspace(expand_halfspace(c, axis, low, -1, b), axis, high, 1, a)
    assert one == two


@given(catalog_knots.filter(lambda c: stick_count(c).total > 4))
def test_nontrivial_knots_have_torsion(c):
    assert len(torsion_sticks(c)) >= 2


@given(catalog_conformations, st.data())
def test_reverse_component_keeps_validity(c, data):
    i = data.draw(st.integers(0, len(c.components) - 1))
    r = reverse_component(c, i)
    assert validate(r).ok and reverse_component(r, i) == c
