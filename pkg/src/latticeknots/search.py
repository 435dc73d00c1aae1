"""Exhaustive enumeration of properly leveled single-component lattice polygons.

A leveled polygon with stick budget ``s`` is fully described by

* its axis word: the cyclic sequence of stick axes (no two neighbours equal),
* for each axis ``a`` a cyclic assignment of the levels ``1..p_a`` to the runs
  of non-``a`` sticks, in traversal order.

We walk the axis words up to rotation, reversal and axis permutation, and for
each word backtrack over level assignments one stick at a time, rejecting a
partial polygon as soon as its newest stick touches an earlier one.  Each
complete polygon is emitted only if it is the smallest coordinate sequence in
its orbit under the word's stabilizer combined with level reflections, so every
class is produced exactly once.
"""

from __future__ import annotations

import itertools
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .diagram import pd_code, project
from .invariants import jones, unknot_jones
from .laurent import LaurentPoly
from .lattice import Conformation

MAX_BUDGET = 14

CHECKPOINT_HEADER = "# latticeknots-checkpoint v1"


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    """Stick budget ``s`` with either one per-axis split or all of them.

    With ``split=None`` every split is swept, one representative per axis
    permutation.  ``symmetry=False`` turns off canonical-form deduplication
    (each class is then emitted once per labelled representation).
    """

    s: int
    split: tuple[int, int, int] | None = None
    symmetry: bool = True

    def __post_init__(self):
        if self.s < 4:
            raise SearchError(f"stick budget {self.s} is below the 4-stick minimum")
        if self.s > MAX_BUDGET:
            raise SearchError(f"stick budget {self.s} exceeds the supported maximum {MAX_BUDGET}")
        if self.split is not None:
            split = tuple(int(v) for v in self.split)
            if len(split) != 3 or sum(split) != self.s or min(split) < 0:
                raise SearchError(f"split {self.split} does not sum to {self.s}")
            object.__setattr__(self, "split", split)

    def splits(self) -> list[tuple[int, int, int]]:
        if self.split is not None:
            return [self.split] if feasible_split(self.split) else []
        out = []
        for a in range(self.s + 1):
            for b in range(a, self.s + 1):
                c = self.s - a - b
                if c >= b and feasible_split((a, b, c)):
                    out.append((a, b, c))
        return out


def feasible_split(split: Sequence[int]) -> bool:
    """Necessary conditions for a closed polygon with these per-axis counts."""
    s = sum(split)
    if any(p == 1 for p in split):
        return False
    if any(2 * p > s for p in split):
        return False
    nonzero = [p for p in split if p]
    if len(nonzero) < 2:
        return False
    if len(nonzero) == 2 and nonzero[0] != nonzero[1]:
        return False
    return True


# ---------------------------------------------------------------------------
# axis words

def _words(split: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All cyclic words with the given letter counts, no equal neighbours."""
    s = sum(split)
    left = list(split)
    word: list[int] = []

    def rec():
        if len(word) == s:
            if word[-1] != word[0]:
                yield tuple(word)
            return
        for a in range(3):
            if left[a] and (not word or word[-1] != a):
                left[a] -= 1
                word.append(a)
                yield from rec()
                word.pop()
                left[a] += 1

    yield from rec()


def _axis_perms(split: Sequence[int], symmetry: bool):
    perms = [p for p in itertools.permutations(range(3))
             if all(split[p[a]] == split[a] for a in range(3))]
    return perms if symmetry else [(0, 1, 2)]


def _word_images(word: Sequence[int], perms) -> Iterator[tuple[tuple[int, ...], tuple]]:
    s = len(word)
    for pi in perms:
        for rev in (False, True):
            for k in range(s):
                if rev:
                    img = tuple(pi[word[(k - j - 1) % s]] for j in range(s))
                else:
                    img = tuple(pi[word[(j + k) % s]] for j in range(s))
                yield img, (pi, rev, k)


def canonical_words(split: Sequence[int], symmetry: bool = True) -> list[tuple[tuple[int, ...], list]]:
    """Orbit representatives of axis words, each with its stabilizer."""
    perms = _axis_perms(split, symmetry)
    seen = set()
    out = []
    for w in _words(split):
        if w in seen:
            continue
        if not symmetry:
            out.append((w, [((0, 1, 2), False, 0)]))
            seen.add(w)
            continue
        stab = []
        for img, g in _word_images(w, perms):
            seen.add(img)
            if img == w:
                stab.append(g)
        out.append((w, stab))
    return out


# ---------------------------------------------------------------------------
# level assignment

def _touch(a, b) -> bool:
    """Exact intersection test for two axis-parallel sticks given as
    ``(axis, lo, hi, fixed_coords)`` tuples."""
    ax, alo, ahi, ap = a
    bx, blo, bhi, bp = b
    if ax == bx:
        return ap == bp and alo <= bhi and blo <= ahi
    # the third axis must agree, and each stick must reach the other's line
    third = 3 - ax - bx
    if ap[third] != bp[third]:
        return False
    return alo <= bp[ax] <= ahi and blo <= ap[bx] <= bhi


def _stick(p, q, axis):
    lo, hi = (p[axis], q[axis]) if p[axis] < q[axis] else (q[axis], p[axis])
    fixed = (p[0], p[1], p[2])
    fixed = tuple(fixed[i] if i != axis else 0 for i in range(3))
    return axis, lo, hi, fixed


def _assignments(word: Sequence[int], split: Sequence[int]) -> Iterator[list[tuple[int, int, int]]]:
    """Backtrack over level choices; yields corner lists of valid polygons."""
    s = len(word)
    used = [set() for _ in range(3)]
    first_level = [0, 0, 0]
    corners: list[list[int]] = []
    sticks: list[tuple] = []
    run = [0, 0, 0]

    def place(i):
        if i == s:
            yield [tuple(c) for c in corners]
            return
        a = word[i]
        cur = corners[-1]
        run[a] += 1
        closing = run[a] == split[a]
        choices = [first_level[a]] if closing else [v for v in range(1, split[a] + 1) if v not in used[a]]
        for v in choices:
            nxt = list(cur)
            nxt[a] = v
            if i == s - 1 and nxt != corners[0]:
                continue
            st = _stick(cur, nxt, a)
            ok = True
            stop = i - 1
            start = 1 if i == s - 1 else 0
            for j in range(start, stop):
                if _touch(st, sticks[j]):
                    ok = False
                    break
            if not ok:
                continue
            if not closing:
                used[a].add(v)
            sticks.append(st)
            if i < s - 1:
                corners.append(nxt)
            yield from place(i + 1)
            if i < s - 1:
                corners.pop()
            sticks.pop()
            if not closing:
                used[a].discard(v)
        run[a] -= 1

    ranges = [range(1, p + 1) if p else (1,) for p in split]
    for start in itertools.product(*ranges):
        for a in range(3):
            used[a] = {start[a]} if split[a] else set()
            first_level[a] = start[a]
        corners[:] = [list(start)]
        yield from place(0)


def _key_images(corners, split, stab, symmetry: bool):
    """Coordinate sequences of the images of ``corners`` under the stabilizer
    of its word combined with per-axis level reflections."""
    s = len(corners)
    flips = list(itertools.product((False, True), repeat=3)) if symmetry else [(False, False, False)]
    for pi, rev, k in stab:
        for flip in flips:
            img = []
            for j in range(s):
                src = corners[(k - j) % s] if rev else corners[(j + k) % s]
                q = [0, 0, 0]
                for a in range(3):
                    v = src[a]
                    if flip[a] and split[a]:
                        v = split[a] + 1 - v
                    q[pi[a]] = v
                img.append(tuple(q))
            yield tuple(img)


def _is_canonical(corners, split, stab, symmetry: bool) -> bool:
    key = tuple(corners)
    for img in _key_images(corners, split, stab, symmetry):
        if img < key:
            return False
    return True


def _enumerate_word(word, stab, split, symmetry) -> Iterator[Conformation]:
    for corners in _assignments(word, split):
        if _is_canonical(corners, split, stab, symmetry):
            yield Conformation([corners])


def _tasks(spec: EnumerationSpec) -> list[tuple]:
    tasks = []
    for split in spec.splits():
        for w, stab in canonical_words(split, spec.symmetry):
            tid = f"{spec.s}:{''.join(map(str, split))}:{''.join('xyz'[a] for a in w)}"
            tasks.append((tid, split, w, stab, spec.symmetry))
    return tasks


def enumerate_polygons(spec: EnumerationSpec) -> Iterator[Conformation]:
    """Every properly leveled single-component polygon for ``spec``, once per
    symmetry class (signed coordinate permutations, level relabelling, start
    point and direction of traversal)."""
    for _tid, split, w, stab, _sym in _tasks(spec):
        yield from _enumerate_word(w, stab, split, spec.symmetry)


# ---------------------------------------------------------------------------
# classification

def classify(c: Conformation) -> LaurentPoly:
    """Jones polynomial of a leveled polygon, taken from the z projection."""
    d = project(c, "z")
    if len(d.crossings) < 3:
        return unknot_jones()
    return jones(pd_code(d))


def _class_key(v: LaurentPoly) -> str:
    """Mirror-independent text key for a Jones polynomial."""
    a, b = json.dumps(v.to_dict()), json.dumps(v.mirror().to_dict())
    return min(a, b)


@dataclass
class TaskResult:
    task: str
    count: int
    classes: dict[str, int]
    examples: dict[str, list] = field(default_factory=dict)
    polygons: list | None = None


def run_task(task, keep: bool = False) -> TaskResult:
    """Enumerate and classify one (split, axis word) task.

    With ``keep`` the corner lists of every polygon are returned as well.
    """
    tid, split, w, stab, symmetry = task
    counts: Counter = Counter()
    examples: dict[str, list] = {}
    kept = [] if keep else None
    n = 0
    for c in _enumerate_word(w, stab, split, symmetry):
        n += 1
        key = _class_key(classify(c))
        counts[key] += 1
        corners = [list(p) for p in c.components[0]]
        examples.setdefault(key, corners)
        if keep:
            kept.append(corners)
    return TaskResult(tid, n, dict(counts), examples, kept)


def _run_kept(task) -> TaskResult:
    return run_task(task, keep=True)


@dataclass
class SweepSummary:
    budget: int
    count: int
    classes: dict[str, int]
    examples: dict[str, list]
    tasks_done: int

    def jones_classes(self) -> dict[LaurentPoly, int]:
        return {LaurentPoly.from_dict(json.loads(k), "q"): v for k, v in self.classes.items()}

    def nontrivial(self) -> dict[str, int]:
        trivial = _class_key(unknot_jones())
        return {k: v for k, v in self.classes.items() if k != trivial}


def load_checkpoint(path: str) -> dict[str, TaskResult]:
    done: dict[str, TaskResult] = {}
    if not path or not os.path.exists(path):
        return done
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rec = json.loads(line)
            done[rec["task"]] = TaskResult(rec["task"], rec["count"], rec["classes"], rec.get("examples", {}))
    return done


def _append_checkpoint(path: str, r: TaskResult) -> None:
    new = not os.path.exists(path)
    with open(path, "a") as fh:
        if new:
            fh.write(CHECKPOINT_HEADER + "\n")
        fh.write(json.dumps({"task": r.task, "count": r.count, "classes": r.classes,
                             "examples": r.examples}, sort_keys=True) + "\n")


def sweep(spec: EnumerationSpec, workers: int = 1, checkpoint: str | None = None,
          progress=None, emit=None) -> SweepSummary:
    """Enumerate and classify every polygon of ``spec``.

    Work is split into one task per (split, axis word).  Finished tasks are
    appended to ``checkpoint`` and skipped on a rerun.  Totals do not depend
    on ``workers``.  ``emit`` is called with the corner list of every polygon
    of every task run (tasks restored from a checkpoint are not re-emitted).
    """
    tasks = _tasks(spec)
    done = load_checkpoint(checkpoint) if checkpoint else {}
    todo = [t for t in tasks if t[0] not in done]
    results = dict(done)

    def record(r):
        if emit is not None:
            for corners in r.polygons or ():
                emit(corners)
            r.polygons = None
        results[r.task] = r
        if checkpoint:
            _append_checkpoint(checkpoint, r)
        if progress:
            progress(r)

    if workers > 1 and len(todo) > 1:
        import multiprocessing as mp
        with mp.get_context("spawn").Pool(workers) as pool:
            fn = run_task if emit is None else _run_kept
            for r in pool.imap_unordered(fn, todo):
                record(r)
    else:
        for t in todo:
            record(run_task(t, keep=emit is not None))

    total = 0
    classes: Counter = Counter()
    examples: dict[str, list] = {}
    for t in tasks:
        r = results[t[0]]
        total += r.count
        classes.update(r.classes)
        for k, v in r.examples.items():
            examples.setdefault(k, v)
    return SweepSummary(spec.s, total, dict(sorted(classes.items())), examples, len(tasks))


@dataclass(frozen=True)
class Certificate:
    found: bool
    budget: int | None
    max_budget: int
    example: Conformation | None = None


def minimality_certificate(target: LaurentPoly, max_budget: int, workers: int = 1,
                           checkpoint: str | None = None) -> Certificate:
    """Least stick budget at which an enumerated polygon has Jones ``target``
    (up to mirror image), sweeping budgets upward from 4."""
    if max_budget > MAX_BUDGET:
        raise SearchError(f"stick budget {max_budget} exceeds the supported maximum {MAX_BUDGET}")
    want = _class_key(target)
    for s in range(4, max_budget + 1):
        spec = EnumerationSpec(s)
        if not spec.splits():
            continue
        summary = sweep(spec, workers=workers, checkpoint=checkpoint)
        if want in summary.classes:
            ex = Conformation([summary.examples[want]])
            return Certificate(True, s, max_budget, ex)
    return Certificate(False, None, max_budget)
