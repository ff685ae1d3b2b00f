"""Bipartite graphs, edge colorings, monochromatic components, double stars.

X-side vertices are 0..m-1 and Y-side vertices 0..n-1, kept as disjoint
namespaces.  Adjacency is stored as one Python int per X-vertex, used as a
bitmask over Y, which keeps neighborhood unions, component sweeps and degree
counts cheap even when a side has a few thousand vertices.

Every threshold predicate is exact (integers and fractions.Fraction, never
floats): the extremal examples sit exactly on their bounds, so rounding
would misclassify them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


class GraphError(Exception):
    """Base class for graph construction and query errors."""


class IndexOutOfRange(GraphError):
    """An endpoint index falls outside [0, m) x [0, n)."""


class DuplicateEdge(GraphError):
    """The same edge was supplied twice (multi-edges are rejected)."""


class ColoringMismatch(GraphError):
    """A coloring does not partition the host graph's edge set."""


class EmptyGraph(GraphError):
    """The operation needs at least one edge (or one vertex per side)."""


def bit_indices(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def rat_str(value) -> str:
    """Exact rendering of an int or Fraction: "3", "-7/2"."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple (X,Y)-bipartite graph with |X| = m, |Y| = n.

    ``rows[x]`` is the neighborhood of x as a bitmask over Y.  Instances are
    immutable and safe to share between threads/processes.
    """

    m: int
    n: int
    rows: tuple[int, ...]
    edge_count: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise IndexOutOfRange(f"negative side size ({self.m}, {self.n})")
        if len(self.rows) != self.m:
            raise IndexOutOfRange("row count does not match m")
        full = (1 << self.n) - 1
        total = 0
        for x, row in enumerate(self.rows):
            if row & ~full:
                raise IndexOutOfRange(f"row {x} has a neighbor outside [0, {self.n})")
            total += row.bit_count()
        if total != self.edge_count:
            raise GraphError("edge_count does not match adjacency rows")

    def degree(self, x: int) -> int:
        return self.rows[x].bit_count()

    def neighbors(self, x: int) -> list[int]:
        return bit_indices(self.rows[x])

    def has_edge(self, x: int, y: int) -> bool:
        return 0 <= x < self.m and (self.rows[x] >> y) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges sorted by (x, y)."""
        out = []
        for x, row in enumerate(self.rows):
            while row:
                low = row & -row
                out.append((x, low.bit_length() - 1))
                row ^= low
        return out

    def y_degrees(self) -> list[int]:
        degs = [0] * self.n
        for row in self.rows:
            while row:
                low = row & -row
                degs[low.bit_length() - 1] += 1
                row ^= low
        return degs

    def transpose(self) -> "BipartiteGraph":
        """Swap the roles of X and Y."""
        cols = [0] * self.n
        for x, row in enumerate(self.rows):
            bit = 1 << x
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= bit
                row ^= low
        return BipartiteGraph(self.n, self.m, tuple(cols), self.edge_count)

    def is_complete(self) -> bool:
        return self.edge_count == self.m * self.n

    def to_json_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "edges": [[x, y] for x, y in self.edges()]}


def from_rows(m: int, n: int, rows) -> BipartiteGraph:
    """Build a graph directly from per-X bitmask rows (validated)."""
    rows = tuple(rows)
    return BipartiteGraph(m, n, rows, sum(r.bit_count() for r in rows))


def from_edge_list(m: int, n: int, edges) -> BipartiteGraph:
    """Build a graph from (x, y) pairs; rejects out-of-range and duplicates."""
    rows = [0] * m
    count = 0
    for x, y in edges:
        if not (0 <= x < m) or not (0 <= y < n):
            raise IndexOutOfRange(f"edge ({x}, {y}) outside [0, {m}) x [0, {n})")
        bit = 1 << y
        if rows[x] & bit:
            raise DuplicateEdge(f"edge ({x}, {y}) given twice")
        rows[x] |= bit
        count += 1
    return BipartiteGraph(m, n, tuple(rows), count)


def to_edge_list(g: BipartiteGraph) -> list[tuple[int, int]]:
    return g.edges()


def complete(m: int, n: int) -> BipartiteGraph:
    """The complete bipartite graph K_{m,n}."""
    if m < 1 or n < 1:
        raise EmptyGraph("complete bipartite graph needs m, n >= 1")
    full = (1 << n) - 1
    return BipartiteGraph(m, n, (full,) * m, m * n)


@dataclass(frozen=True)
class DegreeProfile:
    """Exact minimum and average degrees in both directions."""

    delta_xy: int
    delta_yx: int
    avg_xy: Fraction
    avg_yx: Fraction


def degree_profile(g: BipartiteGraph) -> DegreeProfile:
    if g.m < 1 or g.n < 1:
        raise EmptyGraph("degree profile needs both sides non-empty")
    delta_xy = min(row.bit_count() for row in g.rows)
    delta_yx = min(g.y_degrees())
    return DegreeProfile(
        delta_xy=delta_xy,
        delta_yx=delta_yx,
        avg_xy=Fraction(g.edge_count, g.m),
        avg_yx=Fraction(g.edge_count, g.n),
    )


@dataclass(frozen=True)
class EdgeColoring:
    """A partition of a host's edges into r color classes.

    ``classes[c]`` is a BipartiteGraph on the same vertex sets holding
    exactly the color-c edges.  Classes must be pairwise edge-disjoint;
    equality of the union with a specific host is checked separately by
    :meth:`validate_against`.
    """

    r: int
    classes: tuple[BipartiteGraph, ...]

    def __post_init__(self):
        if self.r < 1:
            raise ColoringMismatch("need at least one color")
        if len(self.classes) != self.r:
            raise ColoringMismatch("class count does not match r")
        m, n = self.classes[0].m, self.classes[0].n
        for cls in self.classes:
            if (cls.m, cls.n) != (m, n):
                raise ColoringMismatch("color classes disagree on (m, n)")
        for x in range(m):
            seen = 0
            for cls in self.classes:
                row = cls.rows[x]
                if seen & row:
                    y = (seen & row).bit_length() - 1
                    raise DuplicateEdge(f"edge ({x}, {y}) appears in two colors")
                seen |= row

    @property
    def m(self) -> int:
        return self.classes[0].m

    @property
    def n(self) -> int:
        return self.classes[0].n

    def union_host(self) -> BipartiteGraph:
        """The underlying host graph (union of the classes)."""
        rows = [0] * self.m
        for cls in self.classes:
            for x, row in enumerate(cls.rows):
                rows[x] |= row
        return from_rows(self.m, self.n, rows)

    def validate_against(self, host: BipartiteGraph) -> None:
        if (host.m, host.n) != (self.m, self.n):
            raise ColoringMismatch("host and coloring disagree on (m, n)")
        for x in range(self.m):
            merged = 0
            for cls in self.classes:
                merged |= cls.rows[x]
            if merged != host.rows[x]:
                raise ColoringMismatch(f"colors do not cover exactly row {x}")

    def color_of(self, x: int, y: int) -> int | None:
        for c, cls in enumerate(self.classes):
            if cls.has_edge(x, y):
                return c
        return None

    def edges(self) -> list[tuple[int, int, int]]:
        """All colored edges sorted by (x, y)."""
        out = []
        for x in range(self.m):
            for c, cls in enumerate(self.classes):
                row = cls.rows[x]
                while row:
                    low = row & -row
                    out.append((x, low.bit_length() - 1, c))
                    row ^= low
        out.sort()
        return out

    def transpose(self) -> "EdgeColoring":
        return EdgeColoring(self.r, tuple(cls.transpose() for cls in self.classes))

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "edges": [[x, y, c] for x, y, c in self.edges()],
        }


def coloring_from_triples(m: int, n: int, r: int, triples) -> EdgeColoring:
    """Build an EdgeColoring from (x, y, color) triples."""
    rows = [[0] * m for _ in range(r)]
    counts = [0] * r
    seen = [0] * m
    for x, y, c in triples:
        if not (0 <= c < r):
            raise ColoringMismatch(f"color {c} outside [0, {r})")
        if not (0 <= x < m) or not (0 <= y < n):
            raise IndexOutOfRange(f"edge ({x}, {y}) outside [0, {m}) x [0, {n})")
        bit = 1 << y
        if seen[x] & bit:
            raise DuplicateEdge(f"edge ({x}, {y}) given twice")
        seen[x] |= bit
        rows[c][x] |= bit
        counts[c] += 1
    classes = tuple(
        BipartiteGraph(m, n, tuple(rows[c]), counts[c]) for c in range(r)
    )
    return EdgeColoring(r, classes)


def coloring_from_assignment(host: BipartiteGraph, r: int, colors) -> EdgeColoring:
    """Build an EdgeColoring from one color per host edge, in (x, y) order."""
    edges = host.edges()
    if len(colors) != len(edges):
        raise ColoringMismatch("one color per host edge required")
    return coloring_from_triples(
        host.m, host.n, r, ((x, y, c) for (x, y), c in zip(edges, colors))
    )


@dataclass(frozen=True)
class Component:
    """A maximal connected set of one color class (order >= 2)."""

    color: int
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.xs) + len(self.ys)

    @property
    def min_x(self) -> int:
        return self.xs[0]

    def to_json_dict(self) -> dict:
        return {
            "color": self.color,
            "order": self.order,
            "xs": list(self.xs),
            "ys": list(self.ys),
        }


@dataclass(frozen=True)
class DoubleStar:
    """Two stars joined by the edge (center_x, center_y) in one color."""

    color: int
    center_x: int
    center_y: int
    order: int

    def to_json_dict(self) -> dict:
        return {
            "color": self.color,
            "center_x": self.center_x,
            "center_y": self.center_y,
            "order": self.order,
        }


def graph_components(g: BipartiteGraph, color: int = 0) -> list[Component]:
    """Connected components of a single (color class) graph.

    Isolated vertices are not emitted.  Components come out ordered by their
    smallest X-index.
    """
    remaining = 0
    for x, row in enumerate(g.rows):
        if row:
            remaining |= 1 << x
    comps = []
    while remaining:
        xbit = remaining & -remaining
        remaining ^= xbit
        comp_x = xbit
        comp_y = g.rows[xbit.bit_length() - 1]
        while True:
            grew = 0
            rx = remaining
            while rx:
                b = rx & -rx
                rx ^= b
                if g.rows[b.bit_length() - 1] & comp_y:
                    grew |= b
            if not grew:
                break
            remaining &= ~grew
            comp_x |= grew
            new_y = comp_y
            gx = grew
            while gx:
                b = gx & -gx
                gx ^= b
                new_y |= g.rows[b.bit_length() - 1]
            if new_y == comp_y:
                break
            comp_y = new_y
        comps.append(
            Component(color=color, xs=tuple(bit_indices(comp_x)), ys=tuple(bit_indices(comp_y)))
        )
    return comps


def mono_components(host: BipartiteGraph, col: EdgeColoring) -> list[Component]:
    """Monochromatic components, ordered by (color, smallest X-index)."""
    col.validate_against(host)
    out = []
    for c, cls in enumerate(col.classes):
        out.extend(graph_components(cls, color=c))
    return out


def largest_mono_component(host: BipartiteGraph, col: EdgeColoring) -> Component:
    """A maximum-order monochromatic component; ties go to the first one in
    (color, smallest X-index) order."""
    if host.edge_count == 0:
        raise EmptyGraph("host has no edges")
    best = None
    for comp in mono_components(host, col):
        if best is None or comp.order > best.order:
            best = comp
    return best


def _largest_double_star_in_class(g: BipartiteGraph, color: int) -> DoubleStar | None:
    if g.edge_count == 0:
        return None
    ydeg = g.y_degrees()
    best = None
    for x, row in enumerate(g.rows):
        dx = row.bit_count()
        while row:
            low = row & -row
            y = low.bit_length() - 1
            row ^= low
            order = dx + ydeg[y]
            if best is None or order > best.order:
                best = DoubleStar(color=color, center_x=x, center_y=y, order=order)
    return best


def largest_double_star(host: BipartiteGraph, col: EdgeColoring) -> DoubleStar:
    """The double star maximizing deg_c(x) + deg_c(y) over colored edges."""
    col.validate_against(host)
    if host.edge_count == 0:
        raise EmptyGraph("host has no edges")
    best = None
    for c, cls in enumerate(col.classes):
        cand = _largest_double_star_in_class(cls, c)
        if cand is not None and (best is None or cand.order > best.order):
            best = cand
    return best


def uncolored_largest_double_star(g: BipartiteGraph) -> DoubleStar:
    """Largest double star of a single graph (one implicit color)."""
    star = _largest_double_star_in_class(g, 0)
    if star is None:
        raise EmptyGraph("graph has no edges")
    return star


def meets_conjecture_degrees(g: BipartiteGraph, r: int) -> bool:
    """True iff delta(X,Y) > (1 - 1/(r+1)) n and delta(Y,X) > (1 - 1/(r+1)) m,
    both strictly, compared in exact integer arithmetic."""
    if r < 2:
        raise ValueError("need r >= 2")
    prof = degree_profile(g)
    return (
        prof.delta_xy * (r + 1) > r * g.n
        and prof.delta_yx * (r + 1) > r * g.m
    )


# --- canonical JSON -------------------------------------------------------

def graph_json(host: BipartiteGraph, col: EdgeColoring | None = None) -> dict:
    """Canonical JSON form; triples carry colors, pairs are uncolored."""
    if col is None:
        return host.to_json_dict()
    col.validate_against(host)
    return col.to_json_dict()


def dumps_canonical(obj) -> str:
    """Byte-stable JSON text (sorted keys, no whitespace)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_graph_json(data: dict) -> tuple[BipartiteGraph, EdgeColoring | None]:
    """Inverse of :func:`graph_json`. Returns (host, coloring-or-None)."""
    try:
        m = int(data["m"])
        n = int(data["n"])
        raw = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    if "r" in data:
        r = int(data["r"])
        triples = []
        for item in raw:
            if len(item) != 3:
                raise GraphError("colored graph needs [x, y, c] triples")
            triples.append((int(item[0]), int(item[1]), int(item[2])))
        col = coloring_from_triples(m, n, r, triples)
        return col.union_host(), col
    pairs = []
    for item in raw:
        if len(item) != 2:
            raise GraphError("uncolored graph needs [x, y] pairs")
        pairs.append((int(item[0]), int(item[1])))
    return from_edge_list(m, n, pairs), None
