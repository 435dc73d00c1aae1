import itertools
import json

import pytest

from latticeknots.invariants import unknot_jones
from latticeknots.lattice import Conformation, is_properly_leveled, properly_level, stick_count, validate
from latticeknots.search import (CHECKPOINT_HEADER, EnumerationSpec, SearchError, canonical_words,
                                 classify, enumerate_polygons, feasible_split, load_checkpoint,
                                 minimality_certificate, sweep)

from conftest import SQUARE


def test_spec_rejects():
    with pytest.raises(SearchError, match="4-stick"):
        EnumerationSpec(3)
    with pytest.raises(SearchError, match="exceeds"):
        EnumerationSpec(30)
    with pytest.raises(SearchError, match="does not sum"):
        EnumerationSpec(8, (2, 2, 2))


@pytest.mark.parametrize("split,ok", [((2, 2, 0), True), ((4, 2, 0), False), ((1, 3, 2), False),
                                      ((2, 2, 6), False), ((2, 2, 2), True), ((0, 0, 4), False)])
def test_feasible_split(split, ok):
    assert feasible_split(split) == ok


def test_splits_one_per_axis_permutation():
    assert EnumerationSpec(8).splits() == [(0, 4, 4), (2, 2, 4), (2, 3, 3)]


def test_square_is_the_only_4_stick_polygon():
    polys = list(enumerate_polygons(EnumerationSpec(4)))
    assert len(polys) == 1 and stick_count(polys[0]).total == 4


@pytest.mark.parametrize("s", [6, 8])
def test_polygons_are_valid_and_leveled(s):
    for c in enumerate_polygons(EnumerationSpec(s)):
        assert validate(c).ok
        assert stick_count(c).total == s
        assert is_properly_leveled(c)


def test_canonical_words_cover_all_words():
    split = (2, 3, 3)
    reps = canonical_words(split)
    every = canonical_words(split, symmetry=False)
    assert sum(1 for _ in every) > len(reps)
    assert all(len(stab) >= 1 for _, stab in reps)


def _orbit(corners, split):
    """Images under level reflections, split-preserving axis permutations,
    start point and traversal direction, computed directly."""
    s = len(corners)
    out = set()
    perms = [p for p in itertools.permutations(range(3)) if all(split[p[a]] == split[a] for a in range(3))]
    for pi in perms:
        for flip in itertools.product((False, True), repeat=3):
            moved = []
            for c in corners:
                q = [0, 0, 0]
                for a in range(3):
                    v = split[a] + 1 - c[a] if flip[a] and split[a] else c[a]
                    q[pi[a]] = v
                moved.append(tuple(q))
            for seq in (moved, moved[::-1]):
                for k in range(s):
                    out.add(tuple(seq[k:] + seq[:k]))
    return out


@pytest.mark.parametrize("s,split", [(6, (2, 2, 2)), (8, (2, 2, 4)), (8, (2, 3, 3)), (8, (0, 4, 4)),
                                     (10, (2, 4, 4))])
def test_symmetry_reduction_matches_orbit_count(s, split):
    reduced = [tuple(c.components[0]) for c in enumerate_polygons(EnumerationSpec(s, split))]
    labelled = {tuple(c.components[0]) for c in enumerate_polygons(EnumerationSpec(s, split, symmetry=False))}
    orbits = [_orbit(r, split) for r in reduced]
    # orbits are disjoint and together give every labelled polygon
    assert sum(len(o) for o in orbits) == len(labelled)
    assert set().union(*orbits) == labelled


def test_known_counts():
    # frozen from a full run; the orbit test above certifies the reduction
    counts = {s: sweep(EnumerationSpec(s)).count for s in (4, 6, 8, 10)}
    assert counts == {4: 1, 6: 3, 8: 28, 10: 805}


@pytest.mark.parametrize("s", [4, 6, 8, 10])
def test_no_knots_below_12(s):
    summary = sweep(EnumerationSpec(s))
    assert summary.nontrivial() == {}


def test_classify_square():
    assert classify(properly_level(Conformation(SQUARE))) == unknot_jones()


def test_checkpoint_resume(tmp_path):
    path = tmp_path / "ck.txt"
    full = sweep(EnumerationSpec(10), checkpoint=str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == CHECKPOINT_HEADER and len(lines) == full.tasks_done + 1
    # drop the second half, resume, and get the same totals
    path.write_text("\n".join(lines[: 1 + len(lines) // 2]) + "\n")
    seen = []
    again = sweep(EnumerationSpec(10), checkpoint=str(path), progress=seen.append)
    assert again.count == full.count and again.classes == full.classes
    assert 0 < len(seen) < full.tasks_done
    assert len(load_checkpoint(str(path))) == full.tasks_done


def test_emit_streams_every_polygon():
    got = []
    summary = sweep(EnumerationSpec(8), emit=got.append)
    assert len(got) == summary.count
    assert all(stick_count(Conformation([c])).total == 8 for c in got)
    json.dumps(got)


def test_workers_do_not_change_totals():
    one = sweep(EnumerationSpec(10, (2, 4, 4)))
    two = sweep(EnumerationSpec(10, (2, 4, 4)), workers=2)
    assert one.count == two.count and one.classes == two.classes


def test_certificate_for_unknot_and_absent_target(trefoil):
    from latticeknots.invariants import jones_of
    cert = minimality_certificate(unknot_jones(), 6)
    assert cert.found and cert.budget == 4
    none = minimality_certificate(jones_of(trefoil), 10)
    assert not none.found and none.budget is None
    with pytest.raises(SearchError):
        minimality_certificate(unknot_jones(), 40)
