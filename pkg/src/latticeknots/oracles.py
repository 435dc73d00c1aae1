"""Reference planar diagrams built without any lattice geometry.

Closed braids and grid diagrams are turned straight into PD codes.  These are
the independent sides of the Jones-polynomial certificates used for the
catalog, the torus generator and the arc-presentation converter.
"""

from __future__ import annotations

from typing import Sequence

from .diagram import PDCode


def _relabel(crossings, nxt, signs) -> PDCode:
    """Renumber raw edge ids so labels run consecutively along each component.

    ``crossings`` holds raw ``(under_in, under_out, over_in, over_out)`` ids and
    ``nxt`` maps each raw edge to the edge following it.
    """
    label: dict[int, int] = {}
    comps = []
    k = 1
    for start in sorted(nxt):
        if start in label:
            continue
        first = k
        e = start
        while e not in label:
            label[e] = k
            k += 1
            e = nxt[e]
        comps.append((first, k - 1))
    out = []
    for (ui, uo, oi, oo), s in zip(crossings, signs):
        a, c, oin, oout = label[ui], label[uo], label[oi], label[oo]
        out.append((a, oout, c, oin) if s > 0 else (a, oin, c, oout))
    return PDCode(tuple(out), tuple(comps), 0, tuple(signs))


def braid_closure_pd(word: Sequence[int], strands: int) -> PDCode:
    """PD code of the closure of a braid word.

    Generator ``k`` (1-based) crosses positions ``k`` and ``k+1``; a positive
    entry is a positive crossing, a negative entry a negative one.  Strands
    that take part in no crossing become free loops.
    """
    if strands < 1:
        raise ValueError("a braid needs at least one strand")
    bottom = list(range(strands))
    current = list(bottom)
    next_id = strands
    nxt: dict[int, int] = {}
    crossings, signs = [], []
    for g in word:
        k = abs(g) - 1
        if g == 0 or not 0 <= k < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        left_in, right_in = current[k], current[k + 1]
        left_out, right_out = next_id, next_id + 1
        next_id += 2
        nxt[left_in] = right_out
        nxt[right_in] = left_out
        # strands run upward; for a positive crossing the strand moving
        # left to right passes over
        if g > 0:
            crossings.append((right_in, left_out, left_in, right_out))
        else:
            crossings.append((left_in, right_out, right_in, left_out))
        signs.append(1 if g > 0 else -1)
        current[k], current[k + 1] = left_out, right_out
    # close up: the top edge at each position is the bottom edge there
    alias = {t: b for b, t in zip(bottom, current) if t != b}
    free = sum(1 for b, t in zip(bottom, current) if t == b)
    r = lambda e: alias.get(e, e)
    nxt = {r(e): r(f) for e, f in nxt.items()}
    raw = [tuple(r(e) for e in x) for x in crossings]
    pd = _relabel(raw, nxt, signs)
    return PDCode(pd.crossings, pd.components, free, pd.signs)


def grid_pd(columns: Sequence[tuple[int, int]]) -> PDCode:
    """PD code of the grid diagram whose column ``i`` has a vertical segment
    joining rows ``columns[i]``; vertical segments pass over horizontal ones.

    Every row must be used by exactly two columns.
    """
    n = len(columns)
    rows: dict[int, list[int]] = {}
    for i, (a, b) in enumerate(columns):
        if a == b:
            raise ValueError(f"column {i} joins row {a} to itself")
        rows.setdefault(a, []).append(i)
        rows.setdefault(b, []).append(i)
    if any(len(v) != 2 for v in rows.values()):
        raise ValueError("every row must meet exactly two columns")

    # traverse: each component alternates vertical and horizontal segments
    seen_cols = set()
    comps = []
    for start in range(n):
        if start in seen_cols:
            continue
        comp = []
        col = start
        row = columns[col][0]
        while True:
            a, b = columns[col]
            other_row = b if row == a else a
            comp.append(("v", col, row, other_row))
            seen_cols.add(col)
            c0, c1 = rows[other_row]
            next_col = c1 if c0 == col else c0
            comp.append(("h", other_row, col, next_col))
            col, row = next_col, other_row
            if col == start:
                break
        comps.append(comp)

    # crossings between vertical segment of column i and horizontal of row r
    events: dict[tuple[int, int], list] = {}   # (component, segment index) -> passes
    cross_list = []
    for ci, comp in enumerate(comps):
        for si, seg in enumerate(comp):
            if seg[0] != "v":
                continue
            _, col, r0, r1 = seg
            for cj, comp2 in enumerate(comps):
                for sj, seg2 in enumerate(comp2):
                    if seg2[0] != "h":
                        continue
                    _, row, c0, c1 = seg2
                    if min(r0, r1) < row < max(r0, r1) and min(c0, c1) < col < max(c0, c1):
                        k = len(cross_list)
                        vdir = (0, 1 if r1 > r0 else -1)
                        hdir = (1 if c1 > c0 else -1, 0)
                        o, u = vdir, hdir
                        sign = 1 if o[0] * u[1] - o[1] * u[0] > 0 else -1
                        cross_list.append(sign)
                        events.setdefault((ci, si), []).append((row, k, True))
                        events.setdefault((cj, sj), []).append((col, k, False))
    # order passes along the traversal and assign edges
    edge_in: dict[tuple[int, bool], int] = {}
    edge_out: dict[tuple[int, bool], int] = {}
    nxt: dict[int, int] = {}
    eid = 0
    free = 0
    for ci, comp in enumerate(comps):
        seq = []
        for si, seg in enumerate(comp):
            passes = events.get((ci, si), [])
            start, end = seg[2], seg[3]
            passes.sort(key=lambda p: p[0], reverse=end < start)
            seq.extend((k, over) for _, k, over in passes)
        if not seq:
            free += 1
            continue
        ids = list(range(eid, eid + len(seq)))
        eid += len(seq)
        for j, (k, over) in enumerate(seq):
            edge_in[(k, over)] = ids[j]
            edge_out[(k, over)] = ids[(j + 1) % len(ids)]
            nxt[ids[j]] = ids[(j + 1) % len(ids)]
    raw = [(edge_in[(k, False)], edge_out[(k, False)], edge_in[(k, True)], edge_out[(k, True)])
           for k in range(len(cross_list))]
    pd = _relabel(raw, nxt, cross_list)
    return PDCode(pd.crossings, pd.components, free, pd.signs)


def wired_pd(n_crossings: int, over: Sequence[int], wires: Sequence[tuple[tuple[int, int], tuple[int, int]]]) -> PDCode:
    """PD code of a diagram given as crossings plus the wires joining them.

    Each crossing has four ports numbered counterclockwise; strands pass
    0-2 and 1-3.  ``over[k]`` is the port (0 or 1) whose strand passes over
    at crossing ``k``.  ``wires`` pairs ``(crossing, port)`` endpoints.
    Orientations come from traversal, so the result has honest signs.
    """
    partner: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in wires:
        if a in partner or b in partner:
            raise ValueError(f"port used twice near {a} / {b}")
        partner[a] = b
        partner[b] = a
    if len(partner) != 4 * n_crossings:
        raise ValueError("every port must carry exactly one wire")
    entered: dict[tuple[int, int], int] = {}   # (crossing, port) -> edge entering there
    left: dict[tuple[int, int], int] = {}      # (crossing, port) -> edge leaving there
    nxt: dict[int, int] = {}
    eid = 0
    done = set()
    for k in range(n_crossings):
        for port in range(4):
            if (k, port) in done:
                continue
            # walk the component that leaves crossing k through ``port``
            first = eid
            cur = (k, port)
            while True:
                done.add(cur)
                left[cur] = eid
                tgt = partner[cur]
                entered[tgt] = eid
                done.add(tgt)
                cur = (tgt[0], (tgt[1] + 2) % 4)
                if cur == (k, port):
                    break
                nxt[eid] = eid + 1
                eid += 1
            nxt[eid] = first
            eid += 1
    raw, signs = [], []
    for k in range(n_crossings):
        o = over[k] % 2
        o_in = o if (k, o) in entered else o + 2
        u_in = (1 - o) if (k, 1 - o) in entered else 3 - o
        # positive when the over strand leaves just counterclockwise of the
        # incoming under strand
        sign = 1 if (o_in + 2) % 4 == (u_in + 1) % 4 else -1
        raw.append((entered[(k, u_in)], left[(k, (u_in + 2) % 4)],
                    entered[(k, o_in)], left[(k, (o_in + 2) % 4)]))
        signs.append(sign)
    return _relabel(raw, nxt, signs)


def belt(n_crossings: int, over: list, wires: list, left, right):
    """Add a ring around two wires running side by side.

    ``left`` and ``right`` are ``(top_end, bottom_end)`` port pairs already in
    ``wires``.  The ring passes over both wires below and under both above,
    adding four crossings.  Returns the new ``(n_crossings, over, wires)``.
    """
    wires = [w for w in wires if set(w) not in ({*left}, {*right})]
    if len(wires) != len(set(map(tuple, wires))) or n_crossings < 0:
        raise ValueError("bad wiring")
    u1, u2, l1, l2 = range(n_crossings, n_crossings + 4)
    # ports: 0 E, 1 N, 2 W, 3 S; the belted strands run N-S
    wires += [(left[0], (u1, 1)), ((u1, 3), (l1, 1)), ((l1, 3), left[1]),
              (right[0], (u2, 1)), ((u2, 3), (l2, 1)), ((l2, 3), right[1]),
              ((u1, 0), (u2, 2)), ((l1, 0), (l2, 2)), ((u2, 0), (l2, 0)), ((u1, 2), (l1, 2))]
    return n_crossings + 4, list(over) + [1, 1, 0, 0], wires


def is_planar(n_crossings: int, wires) -> bool:
    """Euler check for a connected wiring with counterclockwise port order."""
    partner = {}
    for a, b in wires:
        partner[a] = b
        partner[b] = a
    seen = set()
    faces = 0
    for start in partner:
        if start in seen:
            continue
        faces += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            k, p = partner[cur]
            cur = (k, (p + 1) % 4)
    return n_crossings - 2 * n_crossings + faces == 2


def pretzel_pd(*twists: int, belt_column: int | None = None) -> PDCode:
    """PD code of the pretzel link P(a1, ..., ak); each column of ``|ai|``
    half twists is stacked vertically and columns are joined side by side.

    ``belt_column`` adds a ring around the top of that column.
    """
    if len(twists) < 2 or any(t == 0 for t in twists):
        raise ValueError("pretzel diagrams need at least two nonzero columns")
    # ports: 0 NE, 1 NW, 2 SW, 3 SE
    over, wires, cols = [], [], []
    k = 0
    for t in twists:
        ids = list(range(k, k + abs(t)))
        k += abs(t)
        over.extend([0 if t > 0 else 1] * abs(t))
        for a, b in zip(ids, ids[1:]):
            wires.append(((a, 2), (b, 1)))
            wires.append(((a, 3), (b, 0)))
        cols.append(ids)
    m = len(cols)
    for i in range(m):
        top_right, bot_right = (cols[i][0], 0), (cols[i][-1], 3)
        j = (i + 1) % m
        wires.append((top_right, (cols[j][0], 1)))
        wires.append((bot_right, (cols[j][-1], 2)))
    if belt_column is not None:
        top = cols[belt_column][0]
        prev = (belt_column - 1) % m
        left = ((cols[prev][0], 0), (top, 1))
        right = ((cols[(belt_column + 1) % m][0], 1), (top, 0))
        k, over, wires = belt(k, over, wires, left, right)
    if not is_planar(k, wires):
        raise ValueError("wiring is not planar")
    return wired_pd(k, over, wires)


def reference_pd(spec: dict) -> PDCode:
    """Build a reference diagram from a small description.

    ``{"braid": [1, 1, 1], "strands": 2}`` is a closed braid and
    ``{"pretzel": [2, 1, 1], "belt": 1}`` a pretzel diagram with an optional
    belt around one column.
    """
    if "braid" in spec:
        return braid_closure_pd(spec["braid"], spec["strands"])
    if "pretzel" in spec:
        return pretzel_pd(*spec["pretzel"], belt_column=spec.get("belt"))
    raise ValueError(f"unknown reference description {spec!r}")
