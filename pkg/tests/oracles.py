"""Independent brute-force oracles used to check the library's fast paths.

Everything here works on plain edge lists with dict-based BFS and full
product enumeration, sharing no code with the bitmask or union-find
implementations under test.
"""

import itertools
from fractions import Fraction


def bfs_components(m, n, edges):
    """Components as (frozenset of x, frozenset of y) pairs, plain BFS."""
    adj = {}
    for x, y in edges:
        adj.setdefault(("x", x), []).append(("y", y))
        adj.setdefault(("y", y), []).append(("x", x))
    seen = set()
    comps = []
    for v in sorted(adj):
        if v in seen:
            continue
        stack = [v]
        comp = {v}
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(
            (
                frozenset(i for side, i in comp if side == "x"),
                frozenset(i for side, i in comp if side == "y"),
            )
        )
    return comps


def max_mono_order(m, n, edges, colors, r):
    """Largest monochromatic component order of one colored edge list."""
    best = 0
    for c in range(r):
        class_edges = [e for e, col in zip(edges, colors) if col == c]
        for xs, ys in bfs_components(m, n, class_edges):
            best = max(best, len(xs) + len(ys))
    return best


def brute_exists_below(host, r, t):
    """Full r^E enumeration: does a coloring keep all components below t?"""
    edges = host.edges()
    t = Fraction(t)
    for colors in itertools.product(range(r), repeat=len(edges)):
        if max_mono_order(host.m, host.n, edges, colors, r) < t:
            return True
    return False


def brute_minmax(host, r):
    edges = host.edges()
    return min(
        max_mono_order(host.m, host.n, edges, colors, r)
        for colors in itertools.product(range(r), repeat=len(edges))
    )


def brute_double_star_order(m, n, edges):
    """Max over edges of deg(x) + deg(y), degrees recounted from the list."""
    best = 0
    for x, y in edges:
        dx = sum(1 for a, _ in edges if a == x)
        dy = sum(1 for _, b in edges if b == y)
        best = max(best, dx + dy)
    return best
