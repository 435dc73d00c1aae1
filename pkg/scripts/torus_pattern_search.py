"""Search structured level patterns on the word (xyz)^(2p) for T(p, p+1).

Used once while writing the torus generator; kept for reproducibility.
"""
import sys
from math import gcd

from latticeknots.diagram import pd_code, project
from latticeknots.invariants import jones, same_up_to_mirror, torus_jones_oracle
from latticeknots.lattice import Conformation
from latticeknots.search import _stick, _touch


def family(n):
    p = n // 2
    bases = set()
    for m in range(1, n):
        if gcd(m, n) == 1:
            for c in range(n):
                bases.add(tuple((m * i + c) % n + 1 for i in range(n)))
    inter = [v for k in range(p) for v in (k + 1, k + p + 1)]
    zig = [v for k in range(p) for v in (k + 1, n - k)]
    for b in (inter, zig):
        for r in range(n):
            rot = b[r:] + b[:r]
            for seq in (rot, rot[::-1]):
                bases.add(tuple(seq))
                bases.add(tuple(n + 1 - v for v in seq))
    return sorted(bases)


def polygon(xs, ys, zs):
    pts = []
    n = len(xs)
    x, y, z = xs[-1], ys[-1], zs[-1]
    for i in range(n):
        x = xs[i]; pts.append((x, y, z))
        y = ys[i]; pts.append((x, y, z))
        z = zs[i]; pts.append((x, y, z))
    return pts


def ok(pts):
    s = len(pts)
    st = [_stick(pts[i], pts[(i + 1) % s], next(a for a in range(3) if pts[i][a] != pts[(i + 1) % s][a])) for i in range(s)]
    for i in range(s):
        for j in range(i + 2, s):
            if i == 0 and j == s - 1:
                continue
            if _touch(st[i], st[j]):
                return False
    return True


p = int(sys.argv[1])
fam = family(2 * p)
target = torus_jones_oracle(p, p + 1)
hits = 0
for xs in fam:
    for ys in fam:
        for zs in fam:
            pts = polygon(xs, ys, zs)
            if not ok(pts):
                continue
            d = project(Conformation([pts]), "z")
            if len(d.crossings) < (p - 1) * (p + 1):
                continue
            if same_up_to_mirror(jones(pd_code(d)), target):
                print(xs, ys, zs, flush=True)
                hits += 1
                if hits > 40:
                    sys.exit()
