"""Exact-integer cubic lattice conformations.

A conformation is a list of closed components, each stored as its cyclic list
of corners.  Sticks are derived from consecutive corners, so "a stick is a
maximal segment" is an invariant checked by :func:`validate` rather than
something callers have to maintain.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

X, Y, Z = 0, 1, 2
AXIS_NAMES = "xyz"

FORMAT_NAME = "latticeknots/conformation"
FORMAT_VERSION = 1


class LatticeError(ValueError):
    """Raised when an operation receives a conformation it cannot accept."""


class LatticePoint(NamedTuple):
    x: int
    y: int
    z: int


class StickRef(NamedTuple):
    component: int
    index: int
    axis: int
    start: LatticePoint
    end: LatticePoint

    @property
    def lo(self) -> int:
        return min(self.start[self.axis], self.end[self.axis])

    @property
    def hi(self) -> int:
        return max(self.start[self.axis], self.end[self.axis])

    def __str__(self) -> str:
        return (f"c{self.component}s{self.index}({AXIS_NAMES[self.axis]}: "
                f"{tuple(self.start)}->{tuple(self.end)})")


@dataclass(frozen=True)
class Conformation:
    """Closed axis-parallel polygon(s) with integer corners."""

    components: tuple[tuple[LatticePoint, ...], ...]

    def __init__(self, components: Iterable[Iterable[Sequence[int]]]):
        comps = []
        for comp in components:
            pts = []
            for p in comp:
                if len(p) != 3 or not all(isinstance(v, int) and not isinstance(v, bool) for v in p):
                    raise LatticeError(f"corner {p!r} is not an integer triple")
                pts.append(LatticePoint(*p))
            comps.append(tuple(pts))
        if not comps:
            raise LatticeError("a conformation needs at least one component")
        object.__setattr__(self, "components", tuple(comps))

    def __len__(self) -> int:
        return len(self.components)

    @property
    def n_sticks(self) -> int:
        return sum(len(c) for c in self.components)

    def sticks(self, component: int | None = None) -> list[StickRef]:
        comps = range(len(self.components)) if component is None else [component]
        out = []
        for ci in comps:
            pts = self.components[ci]
            n = len(pts)
            for i in range(n):
                a, b = pts[i], pts[(i + 1) % n]
                out.append(StickRef(ci, i, _axis_of(a, b), a, b))
        return out

    def corners(self) -> Iterator[LatticePoint]:
        for comp in self.components:
            yield from comp

    def bounding_box(self) -> tuple[LatticePoint, LatticePoint]:
        pts = list(self.corners())
        lo = LatticePoint(*(min(p[i] for p in pts) for i in range(3)))
        hi = LatticePoint(*(max(p[i] for p in pts) for i in range(3)))
        return lo, hi

    def extent(self) -> tuple[int, int, int]:
        lo, hi = self.bounding_box()
        return tuple(h - l for l, h in zip(lo, hi))

    def to_json(self) -> str:
        return dumps(self)


def _axis_of(a: Sequence[int], b: Sequence[int]) -> int:
    diff = [i for i in range(3) if a[i] != b[i]]
    return diff[0] if len(diff) == 1 else -1


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    sticks: tuple[StickRef, ...] = ()

    def __str__(self) -> str:
        refs = ", ".join(str(s) for s in self.sticks)
        return f"{self.kind}: {self.message}" + (f" [{refs}]" if refs else "")


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    n_sticks: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"ok ({self.n_sticks} sticks)"
        return "\n".join(str(v) for v in self.violations)


def segments_meet(a0, a1, b0, b1) -> bool:
    """Exact test for two axis-parallel closed segments sharing a point."""
    for i in range(3):
        lo = max(min(a0[i], a1[i]), min(b0[i], b1[i]))
        hi = min(max(a0[i], a1[i]), max(b0[i], b1[i]))
        if lo > hi:
            return False
    return True


def validate(c: Conformation) -> ValidationReport:
    violations: list[Violation] = []
    for ci, comp in enumerate(c.components):
        if len(comp) < 4:
            violations.append(Violation("too few corners",
                                        f"component {ci} has {len(comp)} corners (need at least 4)"))
    if violations:
        return ValidationReport(tuple(violations), c.n_sticks)

    sticks = c.sticks()
    for s in sticks:
        if s.axis < 0:
            kind = "zero-length stick" if s.start == s.end else "non-axis-parallel stick"
            violations.append(Violation(kind, "consecutive corners must differ in exactly one coordinate", (s,)))
    if violations:
        return ValidationReport(tuple(violations), c.n_sticks)

    for ci, comp in enumerate(c.components):
        comp_sticks = [s for s in sticks if s.component == ci]
        n = len(comp_sticks)
        for i in range(n):
            s, t = comp_sticks[i], comp_sticks[(i + 1) % n]
            if s.axis == t.axis:
                violations.append(Violation("collinear consecutive sticks",
                                            f"corner {tuple(s.end)} is not a true corner", (s, t)))
    if violations:
        return ValidationReport(tuple(violations), c.n_sticks)

    sizes = [len(comp) for comp in c.components]
    for i, j in itertools.combinations(range(len(sticks)), 2):
        s, t = sticks[i], sticks[j]
        if s.component == t.component:
            n = sizes[s.component]
            if (t.index - s.index) % n in (1, n - 1):
                continue  # consecutive perpendicular sticks meet only at their shared corner
        if segments_meet(s.start, s.end, t.start, t.end):
            kind = "self-intersection" if s.component == t.component else "components intersect"
            violations.append(Violation(kind, "non-adjacent sticks share a point", (s, t)))
    return ValidationReport(tuple(violations), c.n_sticks)


def require_valid(c: Conformation) -> None:
    report = validate(c)
    if not report.ok:
        raise LatticeError("invalid conformation: " + report.summary())


# ------------------------------------------------------------------ counting

@dataclass(frozen=True)
class AxisStickCounts:
    px: int
    py: int
    pz: int
    cx: int = 0
    cy: int = 0
    cz: int = 0

    @property
    def total(self) -> int:
        return self.px + self.py + self.pz

    def per_axis(self) -> tuple[int, int, int]:
        return (self.px, self.py, self.pz)

    def planar(self) -> tuple[int, int, int]:
        return (self.cx, self.cy, self.cz)


def planar_axis(comp: Sequence[LatticePoint]) -> int | None:
    """Axis perpendicular to the plane containing ``comp``, if it is planar."""
    for a in range(3):
        if len({p[a] for p in comp}) == 1:
            return a
    return None


def stick_count(c: Conformation) -> AxisStickCounts:
    require_valid(c)
    p = [0, 0, 0]
    for s in c.sticks():
        p[s.axis] += 1
    planes = [0, 0, 0]
    for comp in c.components:
        a = planar_axis(comp)
        if a is not None:
            planes[a] += 1
    return AxisStickCounts(*p, *planes)


def component_counts(c: Conformation) -> list[AxisStickCounts]:
    return [stick_count(Conformation([comp])) for comp in c.components]


# ---------------------------------------------------------------- transforms

@dataclass(frozen=True)
class Transform:
    """``out[i] = scale[i] * sign[i] * p[perm[i]] + shift[i]``."""

    perm: tuple[int, int, int] = (0, 1, 2)
    signs: tuple[int, int, int] = (1, 1, 1)
    scale: tuple[int, int, int] = (1, 1, 1)
    shift: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise LatticeError(f"perm {self.perm} is not a permutation of the axes")
        if any(s not in (1, -1) for s in self.signs):
            raise LatticeError("signs must be +1 or -1")
        if any((not isinstance(k, int)) or k < 1 for k in self.scale):
            raise LatticeError(f"scale factors must be positive integers, got {self.scale}")

    @property
    def det(self) -> int:
        parity = 1
        p = list(self.perm)
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    parity = -parity
        return parity * self.signs[0] * self.signs[1] * self.signs[2]

    @property
    def orientation_preserving(self) -> bool:
        return self.det == 1

    def apply(self, p: Sequence[int]) -> LatticePoint:
        return LatticePoint(*(self.scale[i] * self.signs[i] * p[self.perm[i]] + self.shift[i]
                              for i in range(3)))

    def apply_vector(self, v: Sequence[int]) -> tuple[int, int, int]:
        return tuple(self.scale[i] * self.signs[i] * v[self.perm[i]] for i in range(3))

    def then(self, other: "Transform") -> "Transform":
        """Composite ``other ∘ self`` (only valid when self has unit scale)."""
        if self.scale != (1, 1, 1):
            raise LatticeError("compose only unit-scale transforms")
        perm = tuple(self.perm[other.perm[i]] for i in range(3))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(3))
        shift = tuple(other.scale[i] * other.signs[i] * self.shift[other.perm[i]] + other.shift[i]
                      for i in range(3))
        return Transform(perm, signs, other.scale, shift)


def signed_permutations(proper_only: bool = False) -> list[Transform]:
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            t = Transform(perm, signs)
            if not proper_only or t.orientation_preserving:
                out.append(t)
    return out


def rotations() -> list[Transform]:
    """The 24 orientation-preserving symmetries of the cube."""
    return signed_permutations(proper_only=True)


def rotation_about(axis: int, quarter_turns: int = 1) -> Transform:
    """Right-handed rotation by ``quarter_turns * 90°`` about a coordinate axis."""
    t = Transform()
    a, b = (axis + 1) % 3, (axis + 2) % 3
    one = Transform(perm=tuple(b if i == a else a if i == b else i for i in range(3)),
                    signs=tuple(-1 if i == a else 1 for i in range(3)))
    for _ in range(quarter_turns % 4):
        t = t.then(one)
    return t


def transform(c: Conformation, t: Transform) -> Conformation:
    # Scaling multiplies every stick length by a positive factor and the signed
    # permutation is an isometry, so validity and stick count are preserved.
    # A reflection (det < 0) gives the mirror image.
    return Conformation([[t.apply(p) for p in comp] for comp in c.components])


def translate(c: Conformation, v: Sequence[int]) -> Conformation:
    return transform(c, Transform(shift=tuple(v)))


def reverse_component(c: Conformation, index: int) -> Conformation:
    comps = list(c.components)
    comp = comps[index]
    comps[index] = (comp[0],) + tuple(reversed(comp[1:]))
    return Conformation(comps)


def simplify(points: Sequence[Sequence[int]]) -> list[LatticePoint]:
    """Drop repeated and straight-through corners from a closed corner list."""
    pts = [LatticePoint(*p) for p in points]
    changed = True
    while changed and len(pts) > 2:
        changed = False
        out: list[LatticePoint] = []
        for p in pts:
            if out and out[-1] == p:
                changed = True
                continue
            out.append(p)
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
            changed = True
        n = len(out)
        keep = []
        for i in range(n):
            a, b, cc = out[i - 1], out[i], out[(i + 1) % n]
            if n > 2 and _axis_of(a, b) == _axis_of(b, cc) and _axis_of(a, b) >= 0:
                ax = _axis_of(a, b)
                if (b[ax] - a[ax]) * (cc[ax] - b[ax]) > 0:
                    changed = True
                    continue
            keep.append(b)
        pts = keep
    return pts


# ------------------------------------------------------------ proper leveling

def _level_units(c: Conformation, axis: int):
    """Group corners into runs that must share one coordinate along ``axis``.

    A run is a maximal chain of corners joined by sticks not parallel to
    ``axis``; its two ends are endpoints of ``axis``-sticks.  A component with
    no ``axis``-sticks is a single planar unit.
    """
    units = []  # (level, first position, [(component, corner index), ...], planar?)
    for ci, comp in enumerate(c.components):
        n = len(comp)
        axes = [_axis_of(comp[i], comp[(i + 1) % n]) for i in range(n)]
        if axis not in axes:
            units.append((comp[0][axis], (ci, 0), [(ci, i) for i in range(n)], True))
            continue
        start = axes.index(axis)  # stick ``start`` is along axis; corner start+1 opens a run
        i = (start + 1) % n
        current = [(ci, i)]
        for _ in range(n):
            if axes[i] == axis:
                units.append((comp[current[0][1]][axis], current[0], current, False))
                i = (i + 1) % n
                current = [(ci, i)]
                if i == (start + 1) % n:
                    break
            else:
                i = (i + 1) % n
                current.append((ci, i))
    return units


def properly_level(c: Conformation) -> Conformation:
    """Monotone relabeling of every coordinate into consecutive levels from 1.

    Runs that illegally share a level (more than two stick endpoints on one
    plane) are separated; the earlier run keeps the lower level.  Because runs
    are disjoint and nothing else sits strictly between adjacent integer
    levels, this is an ambient isotopy.
    """
    require_valid(c)
    new = [list(map(list, comp)) for comp in c.components]
    for axis in range(3):
        units = _level_units(c, axis)
        units.sort(key=lambda u: (u[0], u[1]))
        for rank, (_, _, members, _) in enumerate(units, start=1):
            for ci, i in members:
                new[ci][i][axis] = rank
    return Conformation(new)


def is_properly_leveled(c: Conformation) -> bool:
    for axis in range(3):
        units = _level_units(c, axis)
        levels = sorted(u[0] for u in units)
        if levels != list(range(1, len(units) + 1)):
            return False
    return True


def level_occupancy(c: Conformation, axis: int) -> dict[int, tuple[int, int]]:
    """Map level -> (number of ``axis``-stick endpoints, number of planar components)."""
    occ: dict[int, list[int]] = {}
    for s in c.sticks():
        if s.axis == axis:
            for p in (s.start, s.end):
                occ.setdefault(p[axis], [0, 0])[0] += 1
    for comp in c.components:
        if planar_axis(comp) == axis:
            occ.setdefault(comp[0][axis], [0, 0])[1] += 1
    return {k: (v[0], v[1]) for k, v in sorted(occ.items())}


# ------------------------------------------------------------------- moves

def expand_halfspace(c: Conformation, axis: int, level: int, side: int, amount: int) -> Conformation:
    """Push every corner strictly beyond ``axis = level`` on ``side`` by ``amount``.

    Sticks crossing the plane are parallel to ``axis`` and get longer; nothing
    parallel to the plane is left inside the opened slab.
    """
    if side not in (1, -1):
        raise LatticeError("side must be +1 or -1")
    if not isinstance(amount, int) or amount < 0:
        raise LatticeError(f"expansion amount must be a nonnegative integer, got {amount!r}")
    require_valid(c)
    comps = []
    for comp in c.components:
        pts = []
        for p in comp:
            q = list(p)
            if (p[axis] - level) * side > 0:
                q[axis] += side * amount
            pts.append(q)
        comps.append(pts)
    out = Conformation(comps)
    report = validate(out)
    if not report.ok:  # a monotone stretch cannot create contacts; guard anyway
        raise LatticeError("expansion produced an invalid conformation: " + report.summary())
    return out


# ------------------------------------------------------ structural predicates

def torsion_sticks(c: Conformation, component: int = 0) -> list[StickRef]:
    """Sticks whose two neighbours look perpendicular when viewed along the stick."""
    require_valid(c)
    sticks = c.sticks(component)
    n = len(sticks)
    return [s for i, s in enumerate(sticks)
            if sticks[i - 1].axis != sticks[(i + 1) % n].axis]


@dataclass(frozen=True)
class Rectangle:
    """Closed axis-aligned rectangle lying in the plane ``normal = level``."""

    normal: int
    level: int
    lo: LatticePoint
    hi: LatticePoint

    @property
    def size(self) -> tuple[int, int]:
        a, b = [i for i in range(3) if i != self.normal]
        return (self.hi[a] - self.lo[a], self.hi[b] - self.lo[b])

    def meets(self, s: StickRef) -> bool:
        return segments_meet(self.lo, self.hi, s.start, s.end)


@dataclass(frozen=True)
class LSite:
    """Four consecutive sticks ``s1..s4`` forming a clean (or exterior) L."""

    sticks: tuple[StickRef, StickRef, StickRef, StickRef]
    rectangle: Rectangle
    side: int = 0  # side of the rectangle's plane holding s1 and s4
    exterior: bool = False

    @property
    def component(self) -> int:
        return self.sticks[0].component

    @property
    def first_index(self) -> int:
        return self.sticks[0].index


def _l_windows(c: Conformation):
    for ci in range(len(c.components)):
        sticks = c.sticks(ci)
        n = len(sticks)
        if n < 6:
            continue
        for i in range(n):
            s1, s2, s3, s4 = (sticks[(i + k) % n] for k in range(4))
            if s1.axis != s4.axis or len({s1.axis, s2.axis, s3.axis}) != 3:
                continue
            a = s1.axis
            level = s2.start[a]
            side1 = (s1.start[a] > level) - (s1.start[a] < level)
            side4 = (s4.end[a] > level) - (s4.end[a] < level)
            if side1 != side4:
                continue
            corners = [s2.start, s2.end, s3.end]
            lo = LatticePoint(*(min(p[k] for p in corners) for k in range(3)))
            hi = LatticePoint(*(max(p[k] for p in corners) for k in range(3)))
            yield ci, i, (s1, s2, s3, s4), Rectangle(a, level, lo, hi), side1


def detect_clean_Ls(c: Conformation) -> list[LSite]:
    require_valid(c)
    all_sticks = c.sticks()
    out = []
    for ci, i, window, rect, side in _l_windows(c):
        n = len(c.components[ci])
        own = {(ci, (i + k) % n) for k in range(4)}
        if any(rect.meets(s) for s in all_sticks if (s.component, s.index) not in own):
            continue
        out.append(LSite(window, rect, side, False))
    return out


def detect_exterior_Ls(c: Conformation) -> list[LSite]:
    out = []
    for site in detect_clean_Ls(c):
        a, level = site.rectangle.normal, site.rectangle.level
        if all((p[a] - level) * site.side >= 0 for p in c.corners()):
            out.append(LSite(site.sticks, site.rectangle, site.side, True))
    return out


# ---------------------------------------------------------------- JSON i/o

def to_dict(c: Conformation) -> dict:
    return {"format": FORMAT_NAME, "version": FORMAT_VERSION,
            "components": [[list(p) for p in comp] for comp in c.components]}


def from_dict(d: dict) -> Conformation:
    if not isinstance(d, dict) or "components" not in d:
        raise LatticeError("conformation JSON needs a 'components' field")
    version = d.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise LatticeError(f"unsupported conformation format version {version}")
    return Conformation(d["components"])


def dumps(c: Conformation) -> str:
    return json.dumps(to_dict(c), separators=(",", ":"))


def loads(text: str) -> Conformation:
    try:
        return from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise LatticeError(f"not valid JSON: {exc}") from exc
