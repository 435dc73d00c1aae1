"""Kauffman bracket / Jones polynomial and the stick-number bounds.

Jones polynomials are returned as Laurent polynomials in ``q = t^(1/2)`` so
that knots and links share one representation; use :func:`format_jones` to
print them in ``t``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .diagram import PDCode, PlanarDiagram, pd_code, writhe
from .laurent import LaurentPoly

JONES_VAR = "q"          # q = t^(1/2)
STATE_SUM_LIMIT = 25

_A = LaurentPoly.monomial(1)
_AINV = LaurentPoly.monomial(-1)
DELTA = LaurentPoly({2: -1, -2: -1})   # -A^2 - A^-2


class InvariantError(ValueError):
    pass


class CrossingBudgetExceeded(InvariantError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"state sum over {count} crossings exceeds the budget of {limit}")
        self.count = count
        self.limit = limit


# --------------------------------------------------------------- state sum

def _state_sum(pd: PDCode) -> LaurentPoly:
    n = len(pd.crossings)
    labels = sorted({e for x in pd.crossings for e in x})
    index = {e: i for i, e in enumerate(labels)}
    # Smoothing at X[a,b,c,d]: A joins (a,b)(c,d), B joins (a,d)(b,c).
    pairs_a = [((index[a], index[b]), (index[c], index[d])) for a, b, c, d in pd.crossings]
    pairs_b = [((index[a], index[d]), (index[b], index[c])) for a, b, c, d in pd.crossings]
    counts: dict[tuple[int, int], int] = {}
    m = len(labels)
    for state in range(1 << n):
        parent = list(range(m))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        comps = m
        n_a = 0
        for k in range(n):
            if state >> k & 1:
                pp = pairs_b[k]
            else:
                pp = pairs_a[k]
                n_a += 1
            for u, v in pp:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        key = (2 * n_a - n, comps)
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPoly.zero()
    for (aexp, loops), mult in counts.items():
        total = total + LaurentPoly.monomial(aexp, mult) * DELTA ** (loops - 1)
    return total


# ------------------------------------------------------- frontier contraction

def _crossing_order(crossings: Sequence[tuple[int, int, int, int]]) -> list[int]:
    """Greedy order keeping the set of dangling edges small."""
    n = len(crossings)
    where: dict[int, list[int]] = {}
    for i, x in enumerate(crossings):
        for e in x:
            where.setdefault(e, []).append(i)
    done = [False] * n
    open_edges: dict[int, int] = {}
    order = []
    for _ in range(n):
        best, best_score = None, None
        candidates = {j for e in open_edges for j in where[e] if not done[j]} or \
            {next(i for i in range(n) if not done[i])}
        for j in candidates:
            closes = sum(1 for e in crossings[j] if e in open_edges)
            score = (-(2 * closes - 4), j)
            if best_score is None or score < best_score:
                best, best_score = j, score
        order.append(best)
        done[best] = True
        for e in crossings[best]:
            if e in open_edges:
                del open_edges[e]
            else:
                open_edges[e] = 1
    return order


def _add_arc(match: dict[int, int], u: int, v: int) -> tuple[dict[int, int], int]:
    """Join edge ends ``u`` and ``v``; return the new matching and closed loops."""
    if u == v:
        return match, 1
    m = dict(match)
    if u in m and m[u] == v:
        del m[u], m[v]
        return m, 1
    end_u = m.pop(u) if u in m else u
    if end_u != u:
        del m[end_u]
    end_v = m.pop(v) if v in m else v
    if end_v != v:
        del m[end_v]
    if u in match:
        if v in match:
            m[end_u], m[end_v] = end_v, end_u
        else:
            m[end_u], m[v] = v, end_u
    else:
        if v in match:
            m[u], m[end_v] = end_v, u
        else:
            m[u], m[v] = v, u
    return m, 0


def _contract(pd: PDCode) -> LaurentPoly:
    states: dict[tuple, tuple[dict[int, int], LaurentPoly]] = {(): ({}, LaurentPoly.one())}
    for i in _crossing_order(pd.crossings):
        a, b, c, d = pd.crossings[i]
        nxt: dict[tuple, tuple[dict[int, int], LaurentPoly]] = {}
        for match, poly in states.values():
            for weight, arcs in ((_A, ((a, b), (c, d))), (_AINV, ((a, d), (b, c)))):
                m, loops = match, 0
                for u, v in arcs:
                    m, closed = _add_arc(m, u, v)
                    loops += closed
                term = poly * weight
                if loops:
                    term = term * DELTA ** loops
                key = tuple(sorted((k, w) for k, w in m.items() if k < w))
                if key in nxt:
                    nxt[key] = (m, nxt[key][1] + term)
                else:
                    nxt[key] = (m, term)
        states = {k: v for k, v in nxt.items() if not v[1].is_zero()}
    total = LaurentPoly.zero()
    for match, poly in states.values():
        if match:
            raise InvariantError("PD code has dangling edges")
        total = total + poly
    # every loop was counted with a factor delta; normalize so the unknot is 1
    return total.exact_div(DELTA) if not total.is_zero() else total


def kauffman_bracket(pd: PDCode, method: str = "auto") -> LaurentPoly:
    """Bracket in ``A`` normalized so a crossingless circle is 1.

    ``method`` is ``"state_sum"`` (all 2^c states, limited to 25 crossings),
    ``"contraction"`` (crossing-by-crossing sum over boundary matchings) or
    ``"auto"`` (state sum for small codes).
    """
    n = len(pd.crossings)
    extra = pd.free_loops
    if n == 0:
        return DELTA ** max(extra - 1, 0)
    if method == "auto":
        method = "state_sum" if n <= 10 else "contraction"
    if method == "state_sum":
        if n > STATE_SUM_LIMIT:
            raise CrossingBudgetExceeded(n, STATE_SUM_LIMIT)
        core = _state_sum(pd)
    elif method == "contraction":
        core = _contract(pd)
    else:
        raise InvariantError(f"unknown bracket method {method!r}")
    return core * DELTA ** extra if extra else core


# -------------------------------------------------- skein recursion (oracle)

def skein_bracket(pd: PDCode) -> LaurentPoly:
    """Naive recursive evaluation, kept independent of the fast paths.

    Smooths the first crossing both ways and recurses on the resulting
    ``(crossings, arcs)`` system; with no crossings left the arcs are closed
    into loops by following label identifications.
    """
    return _skein(tuple(pd.crossings), (), pd.free_loops)


def _skein(crossings, arcs, free) -> LaurentPoly:
    if not crossings:
        loops = _count_loops(arcs) + free
        if loops == 0:
            return LaurentPoly.one()
        result = LaurentPoly.one()
        for _ in range(loops - 1):
            result = result * DELTA
        return result
    (a, b, c, d), rest = crossings[0], crossings[1:]
    left = _skein(rest, arcs + ((a, b), (c, d)), free)
    right = _skein(rest, arcs + ((a, d), (b, c)), free)
    return _A * left + _AINV * right


def _count_loops(arcs) -> int:
    adj: dict[int, list[int]] = {}
    for u, v in arcs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = set()
    loops = 0
    for start in adj:
        if start in seen:
            continue
        loops += 1
        stack = [start]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(adj[u])
    return loops


# ------------------------------------------------------------------- Jones

def jones_from_bracket(bracket: LaurentPoly, w: int) -> LaurentPoly:
    """``(-A^3)^(-w) <D>`` rewritten in ``q = t^(1/2) = A^(-2)``."""
    sign = -1 if w % 2 else 1
    poly = bracket.shift(-3 * w) * sign
    if any(e % 2 for e, _ in poly.items()):
        raise InvariantError("normalized bracket has odd powers of A")
    return LaurentPoly({-e // 2: c for e, c in poly.items()}, JONES_VAR)


def jones(d: PlanarDiagram | PDCode, method: str = "auto") -> LaurentPoly:
    pd = d if isinstance(d, PDCode) else pd_code(d)
    w = pd.writhe() if isinstance(d, PDCode) else writhe(d)
    return jones_from_bracket(kauffman_bracket(pd, method), w)


def jones_of(conformation, axis="z", method: str = "auto") -> LaurentPoly:
    """Jones polynomial of a lattice conformation (leveled internally)."""
    from .diagram import project
    from .lattice import properly_level
    return jones(project(properly_level(conformation), axis), method)


def mirror_jones(v: LaurentPoly) -> LaurentPoly:
    return v.mirror()


def same_up_to_mirror(u: LaurentPoly, v: LaurentPoly) -> bool:
    return u == v or u == v.mirror()


def format_jones(v: LaurentPoly) -> str:
    return v.format("t", denominator=2)


def unknot_jones() -> LaurentPoly:
    return LaurentPoly.one(JONES_VAR)


def torus_jones_oracle(p: int, q: int) -> LaurentPoly:
    """Closed formula ``t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)``."""
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise InvariantError(f"T({p},{q}) needs coprime p, q >= 2")
    t = lambda k: LaurentPoly.monomial(k, 1, "t")
    num = (t(0) - t(p + 1) - t(q + 1) + t(p + q)) * t((p - 1) * (q - 1) // 2)
    v = num.exact_div(t(0) - t(2))
    return v.substitute_power(2, JONES_VAR)


def jones_from_json(d: dict) -> LaurentPoly:
    return LaurentPoly.from_dict(d, JONES_VAR)


# -------------------------------------------------------------------- bounds

def bound_bridge_lower(b: int) -> int:
    if b < 1:
        raise InvariantError("bridge index is at least 1")
    return 6 * b


def bound_crossing_lower(c: int) -> int:
    """Smallest integer s with s >= 3*sqrt(c + 2), computed exactly."""
    if c < 0:
        raise InvariantError("crossing index is nonnegative")
    # s >= 3 sqrt(c+2)  <=>  s^2 >= 9 (c + 2)
    s = math.isqrt(9 * (c + 2))
    return s if s * s == 9 * (c + 2) else s + 1


def bound_arc_upper(alpha: int) -> int:
    if alpha < 7:
        raise InvariantError(f"the 6*alpha-16 construction needs at least seven pages (got {alpha}); "
                             "with fewer pages only the trefoil and figure-eight arise, see the catalog")
    return 6 * alpha - 16


def bound_crossing_upper(c: int) -> int:
    if c < 0:
        raise InvariantError("crossing index is nonnegative")
    return 6 * c - 4


def bound_link_planar(n: int) -> int:
    """Stick lower bound for a 2-component link with |lk| = n and a planar component."""
    n = abs(n)
    return 4 * n + 5 if n in (2, 3) else 4 * n + 4


# ------------------------------------------------------------- knot records

@dataclass(frozen=True)
class KnotRecord:
    name: str
    components: int = 1
    bridge: int | None = None
    crossing: int | None = None
    arc: int | None = None
    stick_index: int | None = None
    linking: int | None = None
    source: str = ""

    def __post_init__(self):
        if self.bridge is not None and self.bridge < 1:
            raise InvariantError(f"{self.name}: bridge index must be >= 1")
        if self.crossing is not None and self.crossing < 0:
            raise InvariantError(f"{self.name}: crossing index must be >= 0")
        if self.arc is not None and self.arc < 2:
            raise InvariantError(f"{self.name}: arc index must be >= 2")


@lru_cache(maxsize=1)
def _record_table() -> dict:
    text = resources.files("latticeknots.data").joinpath("knots.json").read_text()
    return json.loads(text)


def record_table_version() -> int:
    return _record_table()["version"]


def knot_records() -> dict[str, KnotRecord]:
    out = {}
    for row in _record_table()["records"]:
        out[row["name"]] = KnotRecord(**{k: row.get(k) for k in
                                         ("name", "components", "bridge", "crossing", "arc",
                                          "stick_index", "linking", "source") if k in row})
    return out


def knot_record(name: str) -> KnotRecord:
    table = knot_records()
    if name not in table:
        raise InvariantError(f"no record for {name!r}; known: {', '.join(sorted(table))}")
    return table[name]


@dataclass
class BoundReport:
    name: str
    sticks: int
    checks: list[tuple[str, int, bool]] = field(default_factory=list)
    minimal: bool = False

    @property
    def ok(self) -> bool:
        return all(ok for _, _, ok in self.checks)

    def lines(self) -> list[str]:
        out = [f"{self.name}: {self.sticks} sticks"]
        for label, value, ok in self.checks:
            out.append(f"  {'ok  ' if ok else 'FAIL'} {label} = {value}")
        out.append(f"  minimal: {'yes' if self.minimal else 'no'}")
        return out


def check_bounds(record: KnotRecord, conformation) -> BoundReport:
    from .lattice import stick_count
    s = stick_count(conformation).total
    rep = BoundReport(record.name, s)
    if record.components == 1 and record.bridge is not None and record.bridge >= 2:
        v = bound_bridge_lower(record.bridge)
        rep.checks.append(("6b <= s", v, v <= s))
    if record.components == 1 and record.crossing is not None and record.crossing > 0:
        v = bound_crossing_lower(record.crossing)
        rep.checks.append(("ceil(3 sqrt(c+2)) <= s", v, v <= s))
    if record.stick_index is not None:
        rep.checks.append(("s_CL <= s", record.stick_index, record.stick_index <= s))
        rep.minimal = s == record.stick_index
    return rep
