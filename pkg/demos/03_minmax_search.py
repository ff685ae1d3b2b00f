"""Exact min-max monochromatic component values by pruned search.

The searcher enumerates colorings edge by edge with one rollback union-find
per color, cutting any branch whose partial coloring already owns a
component at the target order.  The returned witness is always the
lexicographically least optimal coloring, so reruns and parallel runs agree
byte for byte.
"""

import time

from monocomp import complete, exists_coloring_below, min_max_mono_component

# K_{4,4}, two colors: the classical bound (m+n)/r = 4 is met exactly, and
# the canonical witness is the 2x2 block coloring.
start = time.perf_counter()
out = min_max_mono_component(complete(4, 4), 2)
print(f"K44, r=2: min-max = {out.value}  ({out.examined} nodes, "
      f"{time.perf_counter() - start:.3f}s)")
print("  witness colors:", [c for _, _, c in out.witness.edges()])

# K_{3,3}, three colors: the cyclic 1-factorization is optimal.
out = min_max_mono_component(complete(3, 3), 3)
print(f"\nK33, r=3: min-max = {out.value}")
print("  witness colors:", [c for _, _, c in out.witness.edges()])

# K_{3,3}, two colors: divisibility blocks the clean (m+n)/r = 3, and the
# true value turns out to be 4 (a K22 block plus a pendant edge per color).
out = min_max_mono_component(complete(3, 3), 2)
print(f"\nK33, r=2: min-max = {out.value}")

# The decision form: is there a 2-coloring of K44 with all components
# below 4?  No; below 5?  Yes.
for t in (4, 5):
    res = exists_coloring_below(complete(4, 4), 2, t)
    print(f"\nexists 2-coloring of K44 with all components < {t}? {res.kind}")
