"""Satellites of a knot conformation whose pattern is a permutation braid.

``satellite_base`` makes n parallel copies of a scaled knot, each shifted by
(1, 1, -1) from the previous.  ``satellite`` reroutes the copies at a torsion
stick: strand i keeps its incoming stick b_i, runs along it to the column of
c_pi(i), climbs a new stick parallel to the torsion stick and joins c_pi(i),
which is shortened or lengthened to meet it.  No sticks are added.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..lattice import (Conformation, LatticeError, StickRef, Transform, rotations,
                       torsion_sticks, transform, validate)

SHIFT = (1, 1, -1)


@dataclass(frozen=True)
class PermutationWord:
    """A positive or negative braid in which two strands cross at most once.

    ``word`` uses 1-based generators; a positive entry ``k`` crosses positions
    k and k+1.  An empty word is the identity on ``n`` strands.
    """

    n: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))
        if self.n < 1:
            raise LatticeError("a permutation word needs at least one strand")
        if any(g == 0 or abs(g) >= self.n for g in self.word):
            raise LatticeError(f"generator out of range for {self.n} strands in {list(self.word)}")
        if len({g > 0 for g in self.word}) > 1:
            raise LatticeError("a permutation word must be all positive or all negative")
        pos = list(range(self.n))
        seen = set()
        for g in self.word:
            k = abs(g) - 1
            pair = frozenset((pos[k], pos[k + 1]))
            if pair in seen:
                raise LatticeError(f"strands {sorted(pair)} cross twice in {list(self.word)}")
            seen.add(pair)
            pos[k], pos[k + 1] = pos[k + 1], pos[k]

    @property
    def sign(self) -> int:
        return -1 if self.word and self.word[0] < 0 else 1

    @property
    def permutation(self) -> tuple[int, ...]:
        """``perm[i]`` is the end position of the strand starting at position i."""
        pos = list(range(self.n))
        for g in self.word:
            k = abs(g) - 1
            pos[k], pos[k + 1] = pos[k + 1], pos[k]
        out = [0] * self.n
        for end, start in enumerate(pos):
            out[start] = end
        return tuple(out)

    @classmethod
    def identity(cls, n: int) -> "PermutationWord":
        return cls(n, ())

    @classmethod
    def parse(cls, n: int, text: str) -> "PermutationWord":
        parts = [p for p in text.replace(",", " ").split() if p]
        return cls(n, tuple(int(p) for p in parts))


def _scale_for(j: Conformation, n: int) -> int:
    return (n + 1) * max(1, max(j.extent()))


def satellite_base(j: Conformation, n: int) -> Conformation:
    """``n`` parallel copies of ``j``, scaled so they never meet."""
    if len(j.components) != 1:
        raise LatticeError("satellite_base needs a single-component conformation")
    if n < 1:
        raise LatticeError(f"need at least one copy, got n={n}")
    rep = validate(j)
    if not rep.ok:
        raise LatticeError("j is not valid: " + rep.summary())
    s = _scale_for(j, n)
    big = transform(j, Transform(scale=(s, s, s)))
    comp = big.components[0]
    return Conformation([[tuple(p[a] + i * SHIFT[a] for a in range(3)) for p in comp]
                         for i in range(n)])


def _direction(p, q) -> tuple[int, int, int]:
    return tuple((q[a] > p[a]) - (q[a] < p[a]) for a in range(3))


def _axis(p, q) -> int:
    return next(a for a in range(3) if p[a] != q[a])


def _det(u, v, w) -> int:
    return (u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def _site_fits(comp, k: int, sign: int) -> bool:
    """Whether rerouting at stick ``k`` yields crossings of the given sign."""
    m = len(comp)
    eb = _direction(comp[k - 1], comp[k])
    ea = _direction(comp[k], comp[(k + 1) % m])
    ec = _direction(comp[(k + 1) % m], comp[(k + 2) % m])
    h = 1 if _det(eb, ea, ec) > 0 else -1
    flat = sum((eb[a] + ec[a]) * SHIFT[a] for a in range(3)) == 0
    return sign == (h if flat else -h)


def _stick_index(j: Conformation, t) -> int:
    if isinstance(t, StickRef):
        return t.index
    return int(t)


def satellite(j: Conformation, n: int, w: PermutationWord, t=None) -> Conformation:
    """Satellite of ``j`` with pattern the closure of ``w`` inserted at torsion
    stick ``t`` (a StickRef or stick index; default the first torsion stick)."""
    if t is None:
        ts = torsion_sticks(j)
        if not ts:
            raise LatticeError("j has no torsion stick")
        t = ts[0]
    return satellite_sites(j, n, [(t, w)])


def satellite_sites(j: Conformation, n: int, sites: Sequence[tuple]) -> Conformation:
    """Insert one permutation word per listed torsion stick.

    Sites must be pairwise non-adjacent (indices at least three apart around
    the polygon) so that no stick is rerouted twice.
    """
    if len(j.components) != 1:
        raise LatticeError("satellites are built over a single-component conformation")
    torsion = {s.index for s in torsion_sticks(j)}
    m = len(j.components[0])
    plan = []
    for t, w in sites:
        k = _stick_index(j, t)
        if k not in torsion:
            raise LatticeError(f"stick {k} is not a torsion stick of j (torsion: {sorted(torsion)})")
        if not isinstance(w, PermutationWord):
            raise LatticeError("each site needs a PermutationWord")
        if w.n != n:
            raise LatticeError(f"word has {w.n} strands but n={n}")
        plan.append((k, w))
    ks = sorted(k for k, _ in plan)
    for a, b in zip(ks, ks[1:] + [ks[0] + m] if ks else []):
        if len(ks) > 1 and b - a < 3:
            raise LatticeError(f"torsion sticks {a % m} and {b % m} are too close to both carry words")

    # a proper rotation of j decides the crossing sign at every site at once
    for rot in rotations():
        jr = transform(j, rot)
        comp = jr.components[0]
        if all(not w.word or _site_fits(comp, k, w.sign) for k, w in plan):
            break
    else:
        raise LatticeError("no rotation of j gives every word its required sign")

    base = satellite_base(jr, n)
    return _reroute(base, n, plan)


def _reroute(base: Conformation, n: int, plan) -> Conformation:
    comps = base.components
    m = len(comps[0])
    at = {k: w.permutation for k, w in plan}
    skip = set()
    for k in at:
        skip.update({k % m, (k + 1) % m})
    start = next(i for i in range(m) if i not in skip)

    def new_corners(copy: int, k: int, target: int):
        P, Q = comps[copy][k], comps[target][(k + 1) % m]
        A = _axis(P, comps[copy][(k + 1) % m])
        B = _axis(comps[copy][k - 1], P)
        C = 3 - A - B
        p2 = list(P)
        p2[B] = Q[B]
        q2 = list(Q)
        q2[C] = P[C]
        return tuple(p2), tuple(q2)

    done: set[tuple[int, int]] = set()
    out = []
    for first in range(n):
        if (first, start) in done:
            continue
        copy, i = first, start
        pts = []
        while (copy, i) not in done:
            done.add((copy, i))
            if i in at:
                target = at[i][copy]
                p2, q2 = new_corners(copy, i, target)
                pts += [p2, q2]
                copy, i = target, (i + 2) % m
                continue
            pts.append(tuple(comps[copy][i]))
            i = (i + 1) % m
        out.append(pts)
    c = Conformation(out)
    rep = validate(c)
    if not rep.ok:
        raise LatticeError("rerouted satellite is not valid: " + rep.summary())
    return c
