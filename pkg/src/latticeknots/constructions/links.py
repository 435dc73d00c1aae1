"""Two-component links made of a planar rectangle and a coil through it."""

from __future__ import annotations

from graphlib import CycleError, TopologicalSorter

from ..lattice import Conformation, LatticeError, validate


def _inner_polygon(n: int) -> list[tuple[int, int]]:
    """Closed rectilinear walk p_0 .. p_{n-1} inside the rectangle.

    A staircase with two vertices per grid line, scaled by 2; for odd n the
    first edge is split by an extra vertex at its midpoint.
    """
    steps = (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2
    pts = [(0, 0), (steps, 0)]
    x, y = steps, 0
    for _ in range(steps - 1):
        y += 1
        pts.append((x, y))
        x -= 1
        pts.append((x, y))
    pts += [(x, y + 1), (0, y + 1)]
    pts = [(2 * a, 2 * b) for a, b in pts]
    if n % 2:
        pts.insert(1, (1, 0))
    return pts


def _patterns(n: int):
    yield {n - 1}
    yield {0, n - 1}
    yield {n - 2, n - 1}
    for k in range(n):
        yield {k}


def _layout(pts, ahead: set[int], lo: int, hi: int):
    """Exit points and a height order for one choice of exit sides, or None."""
    n = len(pts)
    exits = []
    used: dict[tuple, int] = {}
    for k in range(n):
        p, q = pts[k], pts[(k + 1) % n]
        axis = 0 if p[1] == q[1] else 1
        direction = 1 if q[axis] > p[axis] else -1
        side = direction if k in ahead else -direction
        key = (axis, p[1 - axis], side)
        t = used.get(key, 0)
        used[key] = t + 1
        out = list(p)
        out[axis] = hi + 1 + t if side > 0 else lo - 1 - t
        exits.append((tuple(out), axis))

    # obstacles: ("p", j) spans [floor_j, top_j]; ("e", j) spans [floor_{j+1}, top_j]
    obstacles = [(pts[j], ("p", j)) for j in range(n)] + [(exits[j][0], ("e", j)) for j in range(n)]
    up, down = TopologicalSorter(), TopologicalSorter()
    for k in range(n):
        up.add(k)
        down.add(k)
    for k in range(n):
        e, axis = exits[k]
        p, q = pts[k], pts[(k + 1) % n]
        for pt, (kind, j) in obstacles:
            # open segments, so a stick's own endpoints never count
            if _between(pt, p, e, axis):
                up.add(k, j)                       # top of edge k above top of j
            if _between(pt, e, q, axis):
                down.add((k + 1) % n, (j + 1) % n if kind == "e" else j)
    try:
        u_order = list(up.static_order())
        d_order = list(down.static_order())
    except CycleError:
        return None
    top = {k: i + 1 for i, k in enumerate(u_order)}
    floor = {k: -(i + 1) for i, k in enumerate(d_order)}
    return exits, top, floor


def two_braid_link(n: int) -> Conformation:
    """Planar rectangle plus a coil winding ``n`` times through it: 4n+4 sticks.

    The coil alternates z-sticks with 2n horizontal sticks, each of which
    crosses the rectangle's boundary once in the z projection.  n = 2 and 3
    cannot be done with 4n+4 sticks and are refused.

    The coil is a closed n-braid around the rectangle.  For n = 1 the link is
    the Hopf link; for n >= 4 the braid found here has one crossing of the
    opposite sign, so the link is not T(2, 2n) (compare the Jones polynomial).
    """
    if not isinstance(n, int) or n < 1:
        raise LatticeError(f"two_braid_link needs n >= 1, got {n!r}")
    if n in (2, 3):
        raise LatticeError(f"n={n} needs 4n+5 sticks; use the catalog entry for 4_1^2 (n=2)")
    if n == 1:
        rect = [(-1, -1, 0), (1, -1, 0), (1, 1, 0), (-1, 1, 0)]
        coil = [(0, 0, -1), (0, 0, 1), (2, 0, 1), (2, 0, -1)]
        return Conformation([rect, coil])

    pts = _inner_polygon(n)
    m = max(max(p) for p in pts)
    lo, hi = -1, m + 1
    for ahead in _patterns(n):
        laid = _layout(pts, ahead, lo, hi)
        if laid is None:
            continue
        exits, top, floor = laid
        coil = []
        for k in range(n):
            p, e = pts[k], exits[k][0]
            coil += [(p[0], p[1], floor[k]), (p[0], p[1], top[k]),
                     (e[0], e[1], top[k]), (e[0], e[1], floor[(k + 1) % n])]
        rect = [(lo, lo, 0), (hi, lo, 0), (hi, hi, 0), (lo, hi, 0)]
        c = Conformation([rect, coil])
        if validate(c).ok:
            return c
    raise LatticeError(f"no coil layout found for n={n}")


def _between(pt, a, b, axis) -> bool:
    """``pt`` lies on the open segment from ``a`` to ``b`` along ``axis``."""
    other = 1 - axis
    if pt[other] != a[other]:
        return False
    lo, hi = sorted((a[axis], b[axis]))
    return lo < pt[axis] < hi
