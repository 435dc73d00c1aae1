"""Planar diagrams of lattice conformations.

Projecting a properly leveled conformation straight down an axis stacks
parallel sticks on the same line.  Sticks sharing a line are pulled apart by
infinitesimal offsets ordered by height, and the connecting sticks along the
projection axis shrink to points or tiny segments.  Coordinates are kept as
``(integer, offset rank)`` pairs compared lexicographically, which is exact
arithmetic for an offset of any sufficiently small epsilon.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lattice import (Conformation, Transform, X, Y, Z,
                      is_properly_leveled, require_valid, transform)

AXES = {"x": X, "y": Y, "z": Z, X: X, Y: Y, Z: Z}

# Cyclic relabelings put the chosen axis last without mirroring.
_TO_TOP = {Z: Transform(), X: Transform(perm=(1, 2, 0)), Y: Transform(perm=(2, 0, 1))}

PD_HEADER = "# latticeknots-pd v1"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    index: int
    over: tuple[int, int]    # (component, stick index) of the over strand
    under: tuple[int, int]
    sign: int
    point: tuple[tuple[int, int], tuple[int, int]]

    @property
    def components(self) -> tuple[int, int]:
        return (self.over[0], self.under[0])


@dataclass(frozen=True)
class PlanarDiagram:
    """Oriented link diagram.

    ``strands[k]`` lists, in traversal order, the crossings met by component
    ``k`` as ``(crossing index, is_over)`` pairs.
    """

    crossings: tuple[Crossing, ...]
    strands: tuple[tuple[tuple[int, bool], ...], ...]
    axis: int = Z

    @property
    def n_components(self) -> int:
        return len(self.strands)

    def mirror(self) -> "PlanarDiagram":
        flipped = tuple(Crossing(c.index, c.under, c.over, -c.sign, c.point) for c in self.crossings)
        strands = tuple(tuple((i, not over) for i, over in s) for s in self.strands)
        return PlanarDiagram(flipped, strands, self.axis)


# ----------------------------------------------------------------- projection

def _offsets(sticks, line_axis_a: int, line_axis_b: int, height_axis: int):
    """Rank sticks sharing a projected line by height (1-based)."""
    groups: dict[int, list] = {}
    for key, s in sticks:
        groups.setdefault(s.start[line_axis_a], []).append((s.start[height_axis], key))
    rank = {}
    for members in groups.values():
        members.sort()
        for r, (_, key) in enumerate(members, start=1):
            rank[key] = r
    return rank


def project(c: Conformation, axis="z") -> PlanarDiagram:
    """Project down ``axis`` into a valid diagram (see module docstring)."""
    axis = AXES[axis]
    require_valid(c)
    if not is_properly_leveled(c):
        raise DiagramError("conformation is not properly leveled; call properly_level first")
    k = transform(c, _TO_TOP[axis])
    comps = k.components
    sticks = {ci: k.sticks(ci) for ci in range(len(comps))}
    xs = [((ci, s.index), s) for ci in sticks for s in sticks[ci] if s.axis == X]
    ys = [((ci, s.index), s) for ci in sticks for s in sticks[ci] if s.axis == Y]
    yoff = _offsets(xs, Y, X, Z)   # x-sticks on the line y = const
    xoff = _offsets(ys, X, Y, Z)   # y-sticks on the line x = const

    # 2D corner positions: corner i sits between stick i-1 and stick i.
    corner2d: dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]] = {}
    for ci, comp in enumerate(comps):
        st = sticks[ci]
        n = len(st)
        for i in range(n):
            before, after = st[i - 1], st[i]
            p = comp[i]

            def coord(kind_axis, offsets, base_axis):
                for s in (before, after):
                    if s.axis == kind_axis:
                        return (p[base_axis], offsets[(ci, s.index)])
                # look across the adjacent stick along the projection axis
                if before.axis == Z:
                    far = st[(i - 2) % n]
                else:
                    far = st[(i + 1) % n]
                if far.axis == kind_axis:
                    return (p[base_axis], offsets[(ci, far.index)])
                return (p[base_axis], 0)

            corner2d[(ci, i)] = (coord(Y, xoff, X), coord(X, yoff, Y))

    horizontal, vertical = [], []
    for ci in range(len(comps)):
        st = sticks[ci]
        n = len(st)
        for s in st:
            a, b = corner2d[(ci, s.index)], corner2d[(ci, (s.index + 1) % n)]
            if a == b:
                continue
            height = s.start[Z]
            if a[1] == b[1]:
                horizontal.append(((ci, s.index), a, b, height, s.axis))
            elif a[0] == b[0]:
                vertical.append(((ci, s.index), a, b, height, s.axis))
            else:
                raise DiagramError(f"stick {s} projects to a slanted segment")

    def adjacent(k1, k2) -> bool:
        # consecutive sticks, or two sticks joined through a point-like image
        if k1[0] != k2[0]:
            return False
        ci, n = k1[0], len(comps[k1[0]])
        d = (k2[1] - k1[1]) % n
        if d in (1, n - 1):
            return True
        if d == 2:
            mid = (k1[1] + 1) % n
        elif d == n - 2:
            mid = (k2[1] + 1) % n
        else:
            return False
        return corner2d[(ci, mid)] == corner2d[(ci, (mid + 1) % n)]

    found = []
    for hkey, ha, hb, hz, hax in horizontal:
        hx0, hx1 = sorted((ha[0], hb[0]))
        hy = ha[1]
        for vkey, va, vb, vz, vax in vertical:
            vx = va[0]
            vy0, vy1 = sorted((va[1], vb[1]))
            if not (hx0 <= vx <= hx1 and vy0 <= hy <= vy1):
                continue
            if adjacent(hkey, vkey):
                continue
            if not (hx0 < vx < hx1 and vy0 < hy < vy1):
                raise DiagramError(f"degenerate contact between sticks {hkey} and {vkey}")
            if hax == Z or vax == Z:
                raise DiagramError(f"projection-axis stick involved in a crossing ({hkey}, {vkey})")
            if hz == vz:
                raise DiagramError(f"sticks {hkey} and {vkey} cross at equal height")
            hdir = (1 if hb[0] > ha[0] else -1, 0)
            vdir = (0, 1 if vb[1] > va[1] else -1)
            if hz > vz:
                over, under, o, u = hkey, vkey, hdir, vdir
            else:
                over, under, o, u = vkey, hkey, vdir, hdir
            sign = 1 if o[0] * u[1] - o[1] * u[0] > 0 else -1
            found.append((over, under, sign, (vx, hy)))

    crossings = tuple(Crossing(i, o, u, s, p) for i, (o, u, s, p) in enumerate(found))

    # order the passes along each component
    passes: dict[tuple[int, int], list] = {}
    for cr in crossings:
        for key, is_over in ((cr.over, True), (cr.under, False)):
            passes.setdefault(key, []).append((cr, is_over))
    strands = []
    for ci in range(len(comps)):
        seq = []
        n = len(comps[ci])
        for s in sticks[ci]:
            here = passes.get((ci, s.index), [])
            if not here:
                continue
            a = corner2d[(ci, s.index)]
            b = corner2d[(ci, (s.index + 1) % n)]
            horiz = a[1] == b[1]
            forward = (b[0] > a[0]) if horiz else (b[1] > a[1])

            def param(item):
                x, y = item[0].point
                return x if horiz else y

            here.sort(key=param, reverse=not forward)
            seq.extend((cr.index, is_over) for cr, is_over in here)
        strands.append(tuple(seq))
    return PlanarDiagram(crossings, tuple(strands), axis)


# ------------------------------------------------------------- measurements

def crossing_count(d: PlanarDiagram) -> int:
    return len(d.crossings)


def writhe(d: PlanarDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def linking_number(d: PlanarDiagram, a: int, b: int) -> int:
    if a == b:
        raise DiagramError("linking number needs two distinct components")
    for k in (a, b):
        if not 0 <= k < d.n_components:
            raise DiagramError(f"no component {k}")
    total = sum(c.sign for c in d.crossings if {c.over[0], c.under[0]} == {a, b})
    if total % 2:
        raise DiagramError("odd inter-component crossing sum")
    return total // 2


def linking_matrix(d: PlanarDiagram) -> list[list[int]]:
    n = d.n_components
    return [[0 if i == j else linking_number(d, i, j) for j in range(n)] for i in range(n)]


def reverse_orientation(d: PlanarDiagram, component: int) -> PlanarDiagram:
    """Same picture with one component traversed backwards."""
    crossings = []
    for c in d.crossings:
        involved = (c.over[0] == component) + (c.under[0] == component)
        sign = -c.sign if involved == 1 else c.sign
        crossings.append(Crossing(c.index, c.over, c.under, sign, c.point))
    strands = list(d.strands)
    strands[component] = tuple(reversed(strands[component]))
    return PlanarDiagram(tuple(crossings), tuple(strands), d.axis)


# ------------------------------------------------------------------ PD codes

@dataclass(frozen=True)
class PDCode:
    """Crossings as ``(a, b, c, d)`` edge labels, counterclockwise from the
    incoming under-edge.  ``components`` gives each component's label range
    ``(first, last)`` in traversal order; ``free_loops`` counts components
    with no crossings at all.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    components: tuple[tuple[int, int], ...] = ()
    free_loops: int = 0
    signs: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.crossings)

    def label_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for x in self.crossings:
            for e in x:
                counts[e] = counts.get(e, 0) + 1
        return counts

    def is_well_formed(self) -> bool:
        return all(v == 2 for v in self.label_counts().values())

    def next_label(self, e: int) -> int:
        for first, last in self.components:
            if first <= e <= last:
                return first if e == last else e + 1
        raise DiagramError(f"label {e} not in any component range")

    def crossing_signs(self) -> tuple[int, ...]:
        if self.signs is not None:
            return self.signs
        out = []
        for a, b, c, d in self.crossings:
            if self.next_label(d) == b and self.next_label(b) != d:
                out.append(1)
            elif self.next_label(b) == d and self.next_label(d) != b:
                out.append(-1)
            else:
                raise DiagramError(f"crossing {(a, b, c, d)} has ambiguous orientation; give signs")
        return tuple(out)

    def writhe(self) -> int:
        return sum(self.crossing_signs())

    def mirror(self) -> "PDCode":
        """Swap over and under at every crossing."""
        out = []
        signs = []
        for (a, b, c, d), s in zip(self.crossings, self.crossing_signs()):
            # the old over strand becomes the under strand; its incoming edge
            # is d for a positive crossing and b for a negative one
            if s > 0:
                out.append((d, a, b, c))
            else:
                out.append((b, c, d, a))
            signs.append(-s)
        return PDCode(tuple(out), self.components, self.free_loops, tuple(signs))

    def to_text(self) -> str:
        lines = [PD_HEADER]
        for k, (first, last) in enumerate(self.components):
            lines.append(f"# component {k}: {first} -> {last}")
        lines.append(f"# free loops: {self.free_loops}")
        signs = self.signs or (None,) * len(self.crossings)
        for x, s in zip(self.crossings, signs):
            line = "X[" + ",".join(map(str, x)) + "]"
            if s is not None:
                line += f"  # {'+' if s > 0 else '-'}"
            lines.append(line)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PDCode":
        comps, crossings, signs = [], [], []
        free = 0
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            m = re.match(r"#\s*component\s+\d+:\s*(\d+)\s*->\s*(\d+)", line)
            if m:
                comps.append((int(m.group(1)), int(m.group(2))))
                continue
            m = re.match(r"#\s*free loops:\s*(\d+)", line)
            if m:
                free = int(m.group(1))
                continue
            if line.startswith("#"):
                continue
            m = re.match(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*(#\s*([+-]))?", line)
            if not m:
                raise DiagramError(f"cannot parse PD line {raw!r}")
            crossings.append(tuple(int(m.group(i)) for i in range(1, 5)))
            signs.append(None if m.group(6) is None else (1 if m.group(6) == "+" else -1))
        if any(s is None for s in signs):
            sign_t = None
        else:
            sign_t = tuple(signs)
        return cls(tuple(crossings), tuple(comps), free, sign_t)


def pd_code(d: PlanarDiagram) -> PDCode:
    label = 1
    edges_in: dict[tuple[int, bool], int] = {}
    edges_out: dict[tuple[int, bool], int] = {}
    comps = []
    free = 0
    for strand in d.strands:
        k = len(strand)
        if k == 0:
            free += 1
            continue
        first = label
        for j, (ci, is_over) in enumerate(strand):
            edges_in[(ci, is_over)] = first + j
            edges_out[(ci, is_over)] = first + (j + 1) % k
        label += k
        comps.append((first, label - 1))
    out = []
    signs = []
    for c in d.crossings:
        a = edges_in[(c.index, False)]
        cc = edges_out[(c.index, False)]
        oin = edges_in[(c.index, True)]
        oout = edges_out[(c.index, True)]
        out.append((a, oout, cc, oin) if c.sign > 0 else (a, oin, cc, oout))
        signs.append(c.sign)
    return PDCode(tuple(out), tuple(comps), free, tuple(signs))
