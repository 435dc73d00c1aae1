"""Torus knots T(p, p+1) with 6p sticks, 2p along each axis."""

from __future__ import annotations

from ..lattice import Conformation, LatticeError


def torus_levels(p: int) -> tuple[list[int], list[int], list[int]]:
    """Level sequences visited by the x-, y- and z-sticks, in order.

    x interleaves the lower and upper halves, y zigzags in from both ends,
    z descends through the lower half while stepping up the upper half one
    place out of phase.
    """
    n = 2 * p
    xs = [v for k in range(p) for v in (k + 1, k + p + 1)]
    ys = [v for k in range(p) for v in (k + 1, n - k)]
    zs = []
    for k in range(p):
        zs += [p - k, p + 2 + k if k < p - 1 else p + 1]
    return xs, ys, zs


def torus_knot(p: int) -> Conformation:
    """A properly leveled conformation of T(p, p+1) with exactly ``6p`` sticks.

    The sticks run x, y, z, x, y, z, ... and the ``i``-th stick along each
    axis moves to the ``i``-th entry of :func:`torus_levels`.
    """
    if not isinstance(p, int) or p < 2:
        raise LatticeError(f"torus_knot needs p >= 2, got {p!r}")
    xs, ys, zs = torus_levels(p)
    x, y, z = xs[-1], ys[-1], zs[-1]
    corners = []
    for i in range(2 * p):
        x = xs[i]
        corners.append((x, y, z))
        y = ys[i]
        corners.append((x, y, z))
        z = zs[i]
        corners.append((x, y, z))
    return Conformation([corners])
