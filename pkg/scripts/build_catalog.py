"""Write src/latticeknots/data/catalog.json.

Coordinates come from the searches in find_catalog.py and find_links.py.  The
stored Jones polynomial of each entry is computed from its reference diagram
only; the coordinates are checked against it before anything is written.

Usage:  python scripts/build_catalog.py
"""
import json
import re
from pathlib import Path

from latticeknots.invariants import jones, jones_of, same_up_to_mirror
from latticeknots.lattice import Conformation, validate
from latticeknots.oracles import reference_pd

VERSION = 1

ENTRIES = {
    "0_1": ([[[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]]], {"braid": [], "strands": 1}),
    "3_1": ([[[2, 1, 2], [3, 1, 2], [3, 4, 2], [1, 4, 2], [1, 2, 2], [1, 2, 3], [4, 2, 3], [4, 3, 3],
              [4, 3, 1], [2, 3, 1], [2, 3, 4], [2, 1, 4]]], {"braid": [1, 1, 1], "strands": 2}),
    "4_1": ([[[2, 1, 3], [3, 1, 3], [3, 5, 3], [1, 5, 3], [1, 3, 3], [1, 3, 2], [4, 3, 2], [4, 2, 2],
              [4, 2, 4], [2, 2, 4], [2, 2, 1], [2, 4, 1], [2, 4, 5], [2, 1, 5]]],
            {"braid": [1, -2, 1, -2], "strands": 3}),
    "8_20": ([[[1, 5, 2], [1, 3, 2], [5, 3, 2], [5, 3, 6], [5, 4, 6], [2, 4, 6], [2, 4, 1], [4, 4, 1],
               [4, 2, 1], [4, 2, 5], [4, 6, 5], [3, 6, 5], [3, 6, 3], [3, 1, 3], [6, 1, 3], [6, 5, 3],
               [6, 5, 4], [1, 5, 4]]], {"braid": [1, 1, 1, -2, -1, -1, -1, -2], "strands": 3}),
    "8_21": ([[[4, 2, 4], [1, 2, 4], [1, 6, 4], [5, 6, 4], [5, 3, 4], [2, 3, 4], [2, 3, 2], [6, 3, 2],
               [6, 5, 2], [6, 5, 5], [3, 5, 5], [3, 5, 3], [3, 1, 3], [3, 1, 6], [4, 1, 6], [4, 4, 6],
               [4, 4, 1], [4, 2, 1]]], {"braid": [1, 1, 1, 2, -1, -1, 2, 2], "strands": 3}),
    "9_46": ([[[4, 4, 4], [2, 4, 4], [2, 1, 4], [5, 1, 4], [5, 5, 4], [1, 5, 4], [1, 5, 2], [1, 3, 2],
               [6, 3, 2], [6, 3, 6], [3, 3, 6], [3, 3, 3], [3, 6, 3], [4, 6, 3], [4, 6, 5], [4, 2, 5],
               [4, 2, 1], [4, 4, 1]]], {"pretzel": [3, 3, -3]}),
    "0_1^2": ([[[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]],
               [[3, 0, 0], [4, 0, 0], [4, 1, 0], [3, 1, 0]]], {"braid": [], "strands": 2}),
    "2_1^2": ([[[0, 0, 1], [2, 0, 1], [2, 2, 1], [0, 2, 1]],
               [[1, 1, 0], [1, 3, 0], [1, 3, 2], [1, 1, 2]]], {"braid": [1, 1], "strands": 2}),
    "4_1^2": ([[[2, 2, 2], [4, 2, 2], [4, 4, 2], [4, 4, 6], [2, 4, 6], [2, 4, 4], [2, 6, 4], [2, 6, 8],
                [2, 2, 8]], [[1, 1, 5], [3, 1, 5], [3, 5, 5], [1, 5, 5]]],
              {"braid": [1, 1, 1, 1], "strands": 2}),
    "7_7^2": ([[[4, 2, 4], [6, 2, 4], [6, 8, 4], [2, 8, 4], [2, 4, 4], [2, 4, 6], [8, 4, 6], [8, 6, 6],
                [8, 6, 2], [4, 6, 2], [4, 6, 8], [4, 2, 8]], [[5, 1, 1], [5, 5, 1], [5, 5, 7], [5, 1, 7]]],
              {"braid": [1, 1, 1, 2, 1, 1, 2], "strands": 3}),
    "8_15^2": ([[[4, 2, 6], [6, 2, 6], [6, 10, 6], [2, 10, 6], [2, 6, 6], [2, 6, 4], [8, 6, 4], [8, 4, 4],
                 [8, 4, 8], [4, 4, 8], [4, 4, 2], [4, 8, 2], [4, 8, 10], [4, 2, 10]],
                [[5, 1, 1], [5, 1, 7], [5, 7, 7], [5, 7, 1]]], {"pretzel": [2, 1, 1], "belt": 1}),
    "8_16^2": ([[[4, 2, 6], [6, 2, 6], [6, 10, 6], [2, 10, 6], [2, 6, 6], [2, 6, 4], [8, 6, 4], [8, 4, 4],
                 [8, 4, 8], [4, 4, 8], [4, 4, 2], [4, 8, 2], [4, 8, 10], [4, 2, 10]],
                [[5, 1, 1], [5, 5, 1], [5, 5, 9], [5, 1, 9]]], {"pretzel": [2, 1, 1], "belt": 0}),
    "6_2^3": ([[[-2, -1, 0], [2, -1, 0], [2, 1, 0], [-2, 1, 0]], [[0, -2, -1], [0, 2, -1], [0, 2, 1], [0, -2, 1]],
               [[-1, 0, -2], [-1, 0, 2], [1, 0, 2], [1, 0, -2]]], {"braid": [1, -2, 1, -2, 1, -2], "strands": 3}),
    "6_3^3": ([[[2, 0, 0], [2, 3, 0], [2, 3, 3], [2, 0, 3]], [[0, 2, 1], [3, 2, 1], [3, 2, 4], [0, 2, 4]],
               [[1, 1, 2], [4, 1, 2], [4, 4, 2], [1, 4, 2]]], {"braid": [1, 2, 1, 2, 1, 2], "strands": 3}),
}


def main():
    out = []
    for name, (comps, ref) in ENTRIES.items():
        c = Conformation(comps)
        assert validate(c).ok, name
        v = jones(reference_pd(ref))
        assert same_up_to_mirror(jones_of(c), v), name
        out.append({"name": name, "components": comps, "reference": ref, "jones": v.to_dict()})
    path = Path(__file__).resolve().parent.parent / "src/latticeknots/data/catalog.json"
    doc = {"format": "latticeknots/catalog", "version": VERSION, "entries": out}
    text = json.dumps(doc, indent=1)
    # keep each corner on one line
    text = re.sub(r"\[\s*(-?\d+),\s*(-?\d+),\s*(-?\d+)\s*\]", r"[\1, \2, \3]", text)
    path.write_text(text + "\n")
    print("wrote", len(out), "entries to", path)


if __name__ == "__main__":
    main()
