"""Lattice conformations from arc presentations.

Page i of the presentation becomes a y-stick over x = i joining the rows of its
two binding levels; level l becomes an x-stick along y = l joining its two
pages.  Every y-stick passes over every x-stick it meets, exactly as in the
grid diagram of the presentation, and short z-sticks join the two heights at
the corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..lattice import Conformation, LatticeError, simplify, validate
from ..oracles import grid_pd
from ..diagram import PDCode

MIN_PAGES = 7


@dataclass(frozen=True)
class ArcPresentation:
    """Pages in angular order, each an unordered pair of binding levels 1..alpha."""

    pages: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pages = tuple((int(a), int(b)) for a, b in self.pages)
        object.__setattr__(self, "pages", pages)
        alpha = len(pages)
        if alpha < 2:
            raise LatticeError("an arc presentation needs at least two pages")
        uses: dict[int, int] = {}
        for i, (a, b) in enumerate(pages):
            if a == b:
                raise LatticeError(f"page {i + 1} joins level {a} to itself")
            for v in (a, b):
                if not 1 <= v <= alpha:
                    raise LatticeError(f"page {i + 1} uses level {v} outside 1..{alpha}")
                uses[v] = uses.get(v, 0) + 1
        bad = sorted(v for v in range(1, alpha + 1) if uses.get(v, 0) != 2)
        if bad:
            raise LatticeError(f"levels {bad} are not used by exactly two pages")

    @property
    def alpha(self) -> int:
        return len(self.pages)

    def components(self) -> int:
        """Number of link components traced out by the pages."""
        by_level: dict[int, list[int]] = {}
        for i, (a, b) in enumerate(self.pages):
            by_level.setdefault(a, []).append(i)
            by_level.setdefault(b, []).append(i)
        seen: set[int] = set()
        count = 0
        for i in range(self.alpha):
            if i in seen:
                continue
            count += 1
            stack = [i]
            while stack:
                j = stack.pop()
                if j in seen:
                    continue
                seen.add(j)
                for v in self.pages[j]:
                    stack.extend(by_level[v])
        return count

    def rotated(self, k: int) -> "ArcPresentation":
        k %= self.alpha
        return ArcPresentation(self.pages[k:] + self.pages[:k])

    def pd(self) -> PDCode:
        """PD code of the matching grid diagram (the independent oracle)."""
        return grid_pd(self.pages)

    @classmethod
    def parse(cls, text: str) -> "ArcPresentation":
        """Pages written as ``a-b`` or ``a,b`` separated by spaces or semicolons."""
        pages = []
        for tok in text.replace(";", " ").split():
            a, b = tok.replace(",", "-").split("-")
            pages.append((int(a), int(b)))
        return cls(tuple(pages))


def _shares_level(p: Sequence[int], q: Sequence[int]) -> bool:
    return bool(set(p) & set(q))


def normalize_rotation(a: ArcPresentation) -> ArcPresentation:
    """First cyclic rotation whose second page shares no level with pages 1 and 3."""
    for k in range(a.alpha):
        r = a.rotated(k)
        p1, p2, p3 = r.pages[0], r.pages[1], r.pages[2 % r.alpha]
        if not _shares_level(p2, p1) and not _shares_level(p2, p3):
            return r
    raise LatticeError("no cyclic rotation puts page 2 away from pages 1 and 3")


def from_arc_presentation(a: ArcPresentation) -> Conformation:
    """Conformation with ``4*alpha - 2`` sticks (at most ``6*alpha - 16`` for alpha >= 7)."""
    if a.alpha < MIN_PAGES:
        raise LatticeError(f"arc presentations need at least {MIN_PAGES} pages; "
                           "use the catalog for the trefoil and the figure-eight knot")
    if a.components() != 1:
        raise LatticeError("only knot presentations (one component) are converted")
    a = normalize_rotation(a)
    pages = a.pages
    alpha = a.alpha

    # page 2 and its two rows share the plane z = 0; rows it spans drop to -1
    lo, hi = sorted(pages[1])
    col_h = [1] * alpha
    col_h[1] = 0
    row_h = {v: (-1 if lo < v < hi else 0) for v in range(1, alpha + 1)}

    by_level: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(pages):
        by_level.setdefault(u, []).append(i)
        by_level.setdefault(v, []).append(i)

    # walk the knot: column i from row r to its other row, then along that row
    pts = []
    col, row = 0, pages[0][0]
    for _ in range(alpha):
        other = pages[col][1] if pages[col][0] == row else pages[col][0]
        x = col + 1
        # arrive at (x, row) along the row, climb to the column height
        if row_h[row] != col_h[col]:
            pts.append((x, row, row_h[row]))
        pts.append((x, row, col_h[col]))
        pts.append((x, other, col_h[col]))
        if row_h[other] != col_h[col]:
            pts.append((x, other, row_h[other]))
        c0, c1 = by_level[other]
        col = c1 if c0 == col else c0
        row = other
    out = Conformation([simplify(pts)])
    rep = validate(out)
    if not rep.ok:
        raise LatticeError("arc conversion produced an invalid conformation: " + rep.summary())
    return out
