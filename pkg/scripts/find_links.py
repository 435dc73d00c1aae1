"""Find catalog links made of a knot polygon and one rectangular ring.

Usage:  python scripts/find_links.py

The knot is doubled so every odd level is free; a rectangle in an odd plane
with odd bounds then never touches it.  Every such rectangle around the
knot's box is tried, with both ring orientations, against a reference Jones
polynomial.  Results are printed as JSON component lists.
"""
import json
import sys

from latticeknots.invariants import jones, jones_of, same_up_to_mirror
from latticeknots.lattice import Conformation, Transform, reverse_component, transform, validate
from latticeknots.oracles import braid_closure_pd, pretzel_pd
from latticeknots.search import EnumerationSpec, enumerate_polygons

TREFOIL = [[2, 1, 2], [3, 1, 2], [3, 4, 2], [1, 4, 2], [1, 2, 2], [1, 2, 3], [4, 2, 3], [4, 3, 3],
           [4, 3, 1], [2, 3, 1], [2, 3, 4], [2, 1, 4]]
FIGURE8 = [[2, 1, 3], [3, 1, 3], [3, 5, 3], [1, 5, 3], [1, 3, 3], [1, 3, 2], [4, 3, 2], [4, 2, 2],
           [4, 2, 4], [2, 2, 4], [2, 2, 1], [2, 4, 1], [2, 4, 5], [2, 1, 5]]


def rings(box_lo, box_hi):
    for a in range(3):
        b, c = [x for x in range(3) if x != a]
        odd = lambda k: range(box_lo[k] - 1, box_hi[k] + 2, 2)
        for lvl in odd(a):
            for b0 in odd(b):
                for b1 in odd(b):
                    if b1 <= b0:
                        continue
                    for c0 in odd(c):
                        for c1 in odd(c):
                            if c1 <= c0:
                                continue
                            pts = []
                            for u, v in ((b0, c0), (b1, c0), (b1, c1), (b0, c1)):
                                p = [0, 0, 0]
                                p[a], p[b], p[c] = lvl, u, v
                                pts.append(tuple(p))
                            yield pts


def find(knot, target):
    k = transform(Conformation([knot]), Transform(scale=(2, 2, 2))).components[0]
    lo = [min(p[i] for p in k) for i in range(3)]
    hi = [max(p[i] for p in k) for i in range(3)]
    for ring in rings(lo, hi):
        c = Conformation([k, ring])
        for cc in (c, reverse_component(c, 1)):
            if same_up_to_mirror(jones_of(cc), target):
                assert validate(cc).ok
                return cc
    return None


def unknots9():
    for c in enumerate_polygons(EnumerationSpec(9)):
        yield [list(p) for p in c.components[0]]


TARGETS = {
    "4_1^2": (jones(braid_closure_pd([1, 1, 1, 1], 2)), None),
    "7_7^2": (jones(braid_closure_pd([1, 1, 1, 2, 1, 1, 2], 3)), [TREFOIL]),
    "8_15^2": (jones(pretzel_pd(2, 1, 1, belt_column=1)), [FIGURE8]),
    "8_16^2": (jones(pretzel_pd(2, 1, 1, belt_column=0)), [FIGURE8]),
}

if __name__ == "__main__":
    names = sys.argv[1:] or list(TARGETS)
    for name in names:
        target, knots = TARGETS[name]
        for knot in knots or unknots9():
            c = find(knot, target)
            if c is not None:
                print(name, json.dumps([[list(p) for p in comp] for comp in c.components]), flush=True)
                break
        else:
            print(name, "not found", flush=True)


def three_rings(target, box=6, tries=200000, seed=0):
    """Random triples of rectangles in a small box matched against ``target``."""
    import random
    rng = random.Random(seed)
    for _ in range(tries):
        comps = []
        for _r in range(3):
            a = rng.randrange(3)
            b, c = [x for x in range(3) if x != a]
            lvl = rng.randrange(box)
            b0, b1 = sorted(rng.sample(range(box), 2))
            c0, c1 = sorted(rng.sample(range(box), 2))
            pts = []
            for u, v in ((b0, c0), (b1, c0), (b1, c1), (b0, c1)):
                p = [0, 0, 0]
                p[a], p[b], p[c] = lvl, u, v
                pts.append(tuple(p))
            comps.append(pts)
        c = Conformation(comps)
        if not validate(c).ok:
            continue
        if same_up_to_mirror(jones_of(c), target):
            return c
        for i in (1, 2):
            cc = reverse_component(c, i)
            if same_up_to_mirror(jones_of(cc), target):
                return cc
    return None
