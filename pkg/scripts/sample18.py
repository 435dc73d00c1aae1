"""Look for 18-stick lattice conformations of the 3-bridge knots 8_20, 8_21, 9_46.

A 3-bridge knot with 18 sticks has 6 sticks along each axis, and a properly
leveled polygon visits the levels 1..6 of every axis once.  Such a polygon is an
axis word (which axis each stick runs along) plus one permutation of 1..6 per
axis.  Two modes:

    python scripts/sample18.py family Y0 [Y0 ...]
        every polygon with word (xyz)^6, starting at x = 1, y = Y0
    python scripts/sample18.py words SAMPLES SEED
        SAMPLES random level assignments for each of the 203 word classes

Polygons with fewer than 8 crossings in some axis projection are dropped
(crossing number 8 or 9 needs at least 8 everywhere); the rest are classified
by Jones polynomial and matches are printed as JSON corner lists.

Needs numba and numpy (the ``discover`` extra).
"""
import itertools
import json
import sys
import time

import numpy as np
from numba import njit

from latticeknots.diagram import pd_code, project
from latticeknots.invariants import jones, same_up_to_mirror
from latticeknots.lattice import Conformation
from latticeknots.oracles import reference_pd

S = 18
MIN_CROSSINGS = 8
TARGETS = {
    "8_20": {"braid": [1, 1, 1, -2, -1, -1, -1, -2], "strands": 3},
    "8_21": {"braid": [1, 1, 1, 2, -1, -1, 2, 2], "strands": 3},
    "9_46": {"pretzel": [3, 3, -3]},
}


@njit(cache=True, inline="always")
def _sticks(w, cor, lo, hi, fx):
    for i in range(S):
        a = w[i]
        j = (i + 1) % S
        lo[i] = min(cor[i, a], cor[j, a])
        hi[i] = max(cor[i, a], cor[j, a])
        for k in range(3):
            fx[i, k] = cor[i, k]
        fx[i, a] = 0


@njit(cache=True, inline="always")
def _min_crossings(w, lo, hi, fx):
    m = 1000
    for h in range(3):
        a = (h + 1) % 3
        b = (h + 2) % 3
        n = 0
        for i in range(S):
            if w[i] != a:
                continue
            for j in range(S):
                if w[j] == b and lo[i] < fx[j, a] < hi[i] and lo[j] < fx[i, b] < hi[j]:
                    n += 1
        m = min(m, n)
    return m


@njit(cache=True)
def _seed(seed):
    # numba keeps its own generator; seeding numpy from Python does not reach it
    np.random.seed(seed)


@njit(cache=True)
def _sample_word(w, n_iter, out, nout):
    cor = np.zeros((S, 3), np.int64)
    lv = np.zeros((3, 6), np.int64)
    lo = np.zeros(S, np.int64)
    hi = np.zeros(S, np.int64)
    fx = np.zeros((S, 3), np.int64)
    for _ in range(n_iter):
        for a in range(3):
            lv[a] = np.random.permutation(6) + 1
        cnt = np.zeros(3, np.int64)
        for i in range(S):
            for a in range(3):
                cor[i, a] = lv[a, cnt[a] % 6]
            cnt[w[i]] += 1
        _sticks(w, cor, lo, hi, fx)
        # touch test written out inline: this loop dominates the run
        ok = True
        for i in range(S):
            if not ok:
                break
            for j in range(i + 2, S):
                if i == 0 and j == S - 1:
                    continue
                ax = w[i]
                bx = w[j]
                if ax == bx:
                    same = True
                    for k in range(3):
                        if k != ax and fx[i, k] != fx[j, k]:
                            same = False
                    if same and lo[i] <= hi[j] and lo[j] <= hi[i]:
                        ok = False
                        break
                else:
                    t = 3 - ax - bx
                    if fx[i, t] == fx[j, t] and lo[i] <= fx[j, ax] <= hi[i] and lo[j] <= fx[i, bx] <= hi[j]:
                        ok = False
                        break
        if ok and _min_crossings(w, lo, hi, fx) >= MIN_CROSSINGS and nout < out.shape[0]:
            out[nout] = cor
            nout += 1
    return nout


@njit(cache=True)
def _family(y0, out):
    """All (xyz)^6 polygons from (1, y0, z0); each level assignment is valid."""
    w = np.array([0, 1, 2] * 6, np.int64)
    cor = np.zeros((S, 3), np.int64)
    lo = np.zeros(S, np.int64)
    hi = np.zeros(S, np.int64)
    fx = np.zeros((S, 3), np.int64)
    nout = 0
    rest = np.zeros((3, 5), np.int64)
    perm = np.zeros((3, 6), np.int64)
    for z0 in range(1, 7):
        start = (1, y0, z0)
        for a in range(3):
            k = 0
            for v in range(1, 7):
                if v != start[a]:
                    rest[a, k] = v
                    k += 1
        # iterate the 5! orders of the remaining levels on each axis
        px = _perms5()
        for ix in range(120):
            for iy in range(120):
                for iz in range(120):
                    for a, idx in ((0, ix), (1, iy), (2, iz)):
                        perm[a, 0] = start[a]
                        for k in range(5):
                            perm[a, k + 1] = rest[a, px[idx, k]]
                    cnt = np.zeros(3, np.int64)
                    for i in range(S):
                        for a in range(3):
                            cor[i, a] = perm[a, cnt[a] % 6]
                        cnt[w[i]] += 1
                    _sticks(w, cor, lo, hi, fx)
                    if _min_crossings(w, lo, hi, fx) >= MIN_CROSSINGS and nout < out.shape[0]:
                        out[nout] = cor
                        nout += 1
    return nout


@njit(cache=True)
def _perms5():
    out = np.zeros((120, 5), np.int64)
    a = np.arange(5)
    n = 0
    while True:
        out[n] = a
        n += 1
        i = 3
        while i >= 0 and a[i] > a[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = 4
        while a[j] < a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = a[i + 1:][::-1].copy()


def word_classes():
    """Cyclic (6,6,6) axis words without equal neighbours, up to rotation,
    reversal and axis relabelling."""
    seen, reps = set(), []

    def rec(w, c):
        if len(w) == S:
            if w[-1] != w[0]:
                yield tuple(w)
            return
        for a in range(3):
            if c[a] < 6 and w[-1] != a:
                c[a] += 1
                w.append(a)
                yield from rec(w, c)
                w.pop()
                c[a] -= 1

    for w in rec([0], [1, 0, 0]):
        if w in seen:
            continue
        reps.append(w)
        for pi in itertools.permutations(range(3)):
            for seq in (w, w[::-1]):
                s = [pi[a] for a in seq]
                for r in range(S):
                    seen.add(tuple(s[r:] + s[:r]))
    return reps


def determinant(pd) -> int:
    """|det| of the Fox colouring matrix with one row and column removed."""
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for _a, b, _c, d in pd.crossings:
        parent[find(b)] = find(d)
    arcs: dict[int, int] = {}
    for x in pd.label_counts():
        arcs.setdefault(find(x), len(arcs))
    n = len(pd.crossings)
    if n < 3:
        return 1
    m = np.zeros((n, len(arcs)))
    for i, (a, b, c, _d) in enumerate(pd.crossings):
        m[i, arcs[find(b)]] += 2
        m[i, arcs[find(a)]] -= 1
        m[i, arcs[find(c)]] -= 1
    return abs(round(np.linalg.det(m[1:, 1:])))


def jones_determinant(v) -> int:
    # |V(-1)|: t = -1 is q = i
    z = sum(c * 1j ** (e % 4) for e, c in v.items())
    return round(abs(z))


def classify(polys, found):
    refs = {name: jones(reference_pd(spec)) for name, spec in TARGETS.items()}
    dets = {jones_determinant(v) for v in refs.values()}
    for poly in polys:
        pts = [tuple(int(v) for v in p) for p in poly]
        pd = pd_code(project(Conformation([pts]), "z"))
        if determinant(pd) not in dets:
            continue
        v = jones(pd)
        for name, ref in refs.items():
            if same_up_to_mirror(v, ref):
                found[name] = found.get(name, 0) + 1
                if found[name] == 1:
                    print(name, json.dumps([list(p) for p in pts]), flush=True)


def main(argv):
    out = np.zeros((1_000_000, S, 3), np.int64)
    found: dict[str, int] = {}
    t = time.time()
    if argv[0] == "family":
        for y0 in map(int, argv[1:]):
            n = _family(y0, out)
            classify(out[:n], found)
            print(f"y0={y0}: {n} kept, {time.time() - t:.0f}s", file=sys.stderr)
    elif argv[0] == "words":
        samples, seed = int(argv[1]), int(argv[2])
        _seed(seed)
        n = 0
        for w in word_classes():
            n = _sample_word(np.array(w, np.int64), samples, out, n)
        print(f"sampled, {n} kept, {time.time() - t:.0f}s", file=sys.stderr)
        classify(out[:n], found)
        print(f"{n} kept, {time.time() - t:.0f}s", file=sys.stderr)
    else:
        raise SystemExit(__doc__)
    print("matches:", found, file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1:])
