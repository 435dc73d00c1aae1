"""Connected sum of two knot conformations at the cost of six sticks.

The clean L of ``k2`` is laid flat in the plane z = 0 with its outer sticks
hanging below; the exterior L of ``k1`` is laid on the same square from above.
Everything of ``k2`` that could meet ``k1`` is pushed out of the way by
half-space expansions, the two middle pairs of L sticks are dropped, and the
outer sticks merge into two z-sticks.
"""

from __future__ import annotations

from math import lcm
from typing import Sequence

from ..lattice import (Conformation, LatticeError, LSite, Transform, detect_clean_Ls,
                       detect_exterior_Ls, expand_halfspace, rotation_about, rotations,
                       transform, validate)


def _l_corners(c: Conformation, site: LSite):
    """Corners X, A, B, C, Y of an L: s1 = X->A, s2 = A->B, s3 = B->C, s4 = C->Y."""
    comp = c.components[site.component]
    n = len(comp)
    i = site.first_index
    return tuple(comp[(i + k) % n] for k in range(5))


def _lay_flat(c: Conformation, site: LSite, outward: int):
    """Rotate, translate and scale ``c`` so the L's rectangle is [0,w]x[0,h] at
    z = 0 and its outer sticks point to ``outward`` (+1 up, -1 down)."""
    a = site.rectangle.normal
    v = [0, 0, 0]
    v[a] = site.side
    rot = next(t for t in rotations() if t.apply_vector(v) == (0, 0, outward))
    c = transform(c, rot)
    _, A, B, C, _ = _l_corners(c, site)
    lo = [min(p[k] for p in (A, B, C)) for k in range(3)]
    return transform(c, Transform(shift=tuple(-x for x in lo)))


def _square(c: Conformation, site: LSite, side: int) -> Conformation:
    _, A, B, C, _ = _l_corners(c, site)
    w = max(p[0] for p in (A, B, C))
    h = max(p[1] for p in (A, B, C))
    return transform(c, Transform(scale=(side // w, side // h, 1)))


def _rect_dims(site: LSite) -> tuple[int, int]:
    return site.rectangle.size


def _join(k1: Conformation, s1: LSite, k2: Conformation, s2: LSite) -> Conformation | None:
    side = lcm(*_rect_dims(s1), *_rect_dims(s2))
    base = _square(_lay_flat(k2, s2, -1), s2, side)
    top = _square(_lay_flat(k1, s1, 1), s1, side)

    # push k2 clear of the region k1 occupies: up above it, and out sideways
    ext = max(top.extent()) + 2
    base = expand_halfspace(base, 2, 0, 1, ext)
    for axis in (0, 1):
        base = expand_halfspace(base, axis, side, 1, ext)
        base = expand_halfspace(base, axis, 0, -1, ext)

    _, A, _, C, _ = _l_corners(base, s2)
    quarter = rotation_about(2, 1)
    for _turn in range(4):
        _, A1, _, C1, _ = _l_corners(top, s1)
        if tuple(A1) == tuple(C) and tuple(C1) == tuple(A):
            break
        top = transform(top, quarter)
        lo = [min(p[k] for p in _l_corners(top, s1)[1:4]) for k in range(3)]
        top = transform(top, Transform(shift=(-lo[0], -lo[1], 0)))
    else:
        return None

    def walk(c: Conformation, site: LSite) -> list:
        comp = c.components[site.component]
        n = len(comp)
        i = site.first_index
        # from Y = corner i+4 around to X = corner i
        return [comp[(i + 4 + k) % n] for k in range(n - 3)]

    out = Conformation([walk(base, s2) + walk(top, s1)])
    return out if validate(out).ok else None


def compose(k1: Conformation, k2: Conformation, l1: LSite | None = None,
            l2: LSite | None = None) -> Conformation:
    """Connected sum ``k1 # k2`` with ``n1 + n2 - 6`` sticks.

    ``l1`` must be an exterior L of ``k1`` and ``l2`` a clean L of ``k2``; when
    omitted every available choice is tried in order.
    """
    for name, k in (("k1", k1), ("k2", k2)):
        if len(k.components) != 1:
            raise LatticeError(f"{name} must be a knot (one component)")
        rep = validate(k)
        if not rep.ok:
            raise LatticeError(f"{name} is not a valid conformation: {rep.summary()}")
    ext = [l1] if l1 is not None else detect_exterior_Ls(k1)
    clean = [l2] if l2 is not None else detect_clean_Ls(k2)
    if not ext:
        raise LatticeError("k1 has no exterior L")
    if not clean:
        raise LatticeError("k2 has no clean L")
    for a in ext:
        if not a.exterior:
            raise LatticeError("l1 must be an exterior L of k1")
        for b in clean:
            out = _join(k1, a, k2, b)
            if out is not None:
                return out
    raise LatticeError("no choice of L sites gave a valid connected sum")


def compose_chain(knots: Sequence[Conformation]) -> Conformation:
    """Connected sum of several knots, folded from the right: k1 # (k2 # (...))."""
    if not knots:
        raise LatticeError("compose_chain needs at least one knot")
    acc = knots[-1]
    for k in reversed(knots[:-1]):
        acc = compose(k, acc)
    return acc
