"""The reference diagrams themselves, checked against standard knot-table values."""
import pytest
from hypothesis import given, strategies as st

from latticeknots.invariants import jones, same_up_to_mirror, unknot_jones
from latticeknots.laurent import LaurentPoly
from latticeknots.oracles import braid_closure_pd, grid_pd, is_planar, pretzel_pd, reference_pd


def t_poly(terms):
    """Jones polynomial given in t, stored in q = t^(1/2)."""
    return LaurentPoly({2 * e: c for e, c in terms.items()}, "q")


def det(v: LaurentPoly) -> int:
    # |V(-1)| with t = -1, i.e. q = i
    re = im = 0
    for e, c in v.items():
        k = e % 4
        re += c * (1 if k == 0 else -1 if k == 2 else 0)
        im += c * (1 if k == 1 else -1 if k == 3 else 0)
    return abs(complex(re, im))


TREFOIL = t_poly({1: 1, 3: 1, 4: -1})
FIGURE8 = t_poly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})


def test_braid_trefoil():
    assert jones(braid_closure_pd([1, 1, 1], 2)) == TREFOIL


def test_braid_figure8():
    assert jones(braid_closure_pd([1, -2, 1, -2], 3)) == FIGURE8


def test_braid_free_strand_is_split_unknot():
    pd = braid_closure_pd([1, 1, 1], 3)
    assert len(pd.components) == 1 and pd.free_loops == 1
    assert jones(pd) == TREFOIL * (-(LaurentPoly.monomial(1, var="q") + LaurentPoly.monomial(-1, var="q")))


@pytest.mark.parametrize("word,strands", [([3], 3), ([0], 2), ([1], 1)])
def test_braid_rejects(word, strands):
    with pytest.raises(ValueError):
        braid_closure_pd(word, strands)


def test_pretzels():
    assert jones(pretzel_pd(1, 1, 1)) in (TREFOIL, TREFOIL.mirror())
    assert jones(pretzel_pd(2, 1, 1)) == FIGURE8
    assert same_up_to_mirror(jones(pretzel_pd(-1, -1, -1)), TREFOIL)


@pytest.mark.parametrize("spec,d", [
    ({"braid": [1, 1, 1, 2, -1, -1, 2, 2], "strands": 3}, 15),  # 8_21
    ({"pretzel": [3, 3, -3]}, 9),                                # 9_46
    ({"braid": [1, 1, 1, -2, -1, -1, -1, -2], "strands": 3}, 9),  # 8_20
    ({"pretzel": [5, -1, -1]}, 9),                               # 6_1
    ({"braid": [1, 1, 1, 1, 1], "strands": 2}, 5),               # 5_1
])
def test_determinants(spec, d):
    assert det(jones(reference_pd(spec))) == d


def test_belts_give_different_links():
    a = reference_pd({"pretzel": [2, 1, 1], "belt": 0})
    b = reference_pd({"pretzel": [2, 1, 1], "belt": 1})
    assert len(a.components) == len(b.components) == 2
    assert not same_up_to_mirror(jones(a), jones(b))


def test_belt_one_matches_braid():
    belt = jones(reference_pd({"pretzel": [2, 1, 1], "belt": 1}))
    braid = jones(braid_closure_pd([1, 2, 2, 1, 2, -3, 2, -3], 4))
    assert same_up_to_mirror(belt, braid)


def test_pretzel_rejects():
    with pytest.raises(ValueError):
        pretzel_pd(2)
    with pytest.raises(ValueError):
        pretzel_pd(2, 0, 1)
    with pytest.raises(ValueError):
        reference_pd({"torus": [2, 3]})


def test_planarity_check():
    # a single kink: ports 0-1 and 2-3 joined
    assert is_planar(1, [((0, 0), (0, 1)), ((0, 2), (0, 3))])
    # ports 0-2 and 1-3: a figure that needs a handle
    assert not is_planar(1, [((0, 0), (0, 2)), ((0, 1), (0, 3))])


def test_grid_unknot():
    assert jones(grid_pd([(0, 1), (1, 0)])) == unknot_jones()


def test_grid_trefoil():
    # 5x5 grid of the trefoil
    pd = grid_pd([(0, 3), (1, 4), (2, 0), (3, 1), (4, 2)])
    assert same_up_to_mirror(jones(pd), TREFOIL)


def test_grid_rejects():
    with pytest.raises(ValueError):
        grid_pd([(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        grid_pd([(0, 1), (1, 2)])


@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=7), st.integers(0, 6))
def test_braid_conjugation_invariance(word, k):
    k %= len(word)
    assert jones(braid_closure_pd(word, 3)) == jones(braid_closure_pd(word[k:] + word[:k], 3))


@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=7), st.sampled_from([3, -3]))
def test_braid_markov_stabilization(word, g):
    assert jones(braid_closure_pd(word, 3)) == jones(braid_closure_pd(word + [g], 4))
