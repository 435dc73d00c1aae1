"""Find the 14-stick figure-eight conformation shipped in the catalog.

Usage:  python scripts/find_catalog.py

Walks the 14-stick splits with the exhaustive enumerator and stops at the
first polygon whose Jones polynomial is that of 4_1, printed as a JSON corner
list.  For the 18-stick knots see sample18.py.
"""
import json
import sys
import time

from latticeknots.invariants import jones, same_up_to_mirror
from latticeknots.oracles import braid_closure_pd
from latticeknots.search import EnumerationSpec, classify, enumerate_polygons


def figure8():
    target = jones(braid_closure_pd([1, -2, 1, -2], 3))
    for split in EnumerationSpec(14).splits()[::-1]:
        t = time.time()
        for c in enumerate_polygons(EnumerationSpec(14, split)):
            if same_up_to_mirror(classify(c), target):
                print(json.dumps([list(p) for p in c.components[0]]))
                return
        print("split", split, "none", round(time.time() - t, 1), file=sys.stderr)


if __name__ == "__main__":
    figure8()
