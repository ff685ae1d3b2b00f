"""Checkable predicates for the component theorems and their support lemmas.

Each checker returns a Verdict (applicability, conclusion, witness, margin)
or a structured report, always computed in exact arithmetic.  Cube-root
thresholds such as alpha^(1/3) n are irrational, so they are compared by
cubing both sides as Fractions; no floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigraph import (
    BipartiteGraph,
    ColoringMismatch,
    Component,
    DuplicateEdge,
    EdgeColoring,
    GraphError,
    IndexOutOfRange,
    coloring_from_triples,
    degree_profile,
    graph_components,
    largest_mono_component,
    mono_components,
    rat_str,
    uncolored_largest_double_star,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one theorem check on one instance.

    ``holds`` is evaluated even when ``applicable`` is false (the sharpness
    examples are exactly such instances and the miss is worth recording).
    ``margin`` is the achieved component order minus the target.
    """

    check: str
    applicable: bool
    holds: bool
    target: Fraction
    witness: object | None = None
    margin: Fraction = Fraction(0)
    detail: dict | None = None

    def to_json_dict(self) -> dict:
        out = {
            "check": self.check,
            "applicable": self.applicable,
            "holds": self.holds,
            "target": rat_str(self.target),
            "margin": rat_str(self.margin),
            "witness": self.witness.to_json_dict() if self.witness is not None else None,
        }
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def _largest_component_or_none(host, col):
    if host.edge_count == 0:
        return None
    return largest_mono_component(host, col)


def check_theorem_two_colors(host: BipartiteGraph, col: EdgeColoring) -> Verdict:
    """Two colors: strict 2/3 minimum degrees force a component of order
    at least (m + n)/2."""
    if col.r != 2:
        raise ColoringMismatch("this check needs exactly 2 colors")
    col.validate_against(host)
    prof = degree_profile(host)
    applicable = prof.delta_xy * 3 > 2 * host.n and prof.delta_yx * 3 > 2 * host.m
    target = Fraction(host.m + host.n, 2)
    witness = _largest_component_or_none(host, col)
    achieved = witness.order if witness is not None else 0
    return Verdict(
        check="r2",
        applicable=applicable,
        holds=achieved >= target,
        target=target,
        witness=witness,
        margin=achieved - target,
    )


def check_conjecture_instance(
    host: BipartiteGraph, col: EdgeColoring, r: int, refined: bool = False
) -> Verdict:
    """General r: strict (1 - 1/(r+1)) degrees aim at a component of order
    (m + n)/r.

    ``refined=True`` relaxes the degree bounds to weak inequalities as long
    as equality does not hold on both sides.  No theorem backs that mode; it
    records, never certifies.
    """
    if r < 2:
        raise ColoringMismatch("need r >= 2")
    if col.r != r:
        raise ColoringMismatch(f"coloring has {col.r} colors, expected {r}")
    col.validate_against(host)
    prof = degree_profile(host)
    lhs_x = prof.delta_xy * (r + 1)
    lhs_y = prof.delta_yx * (r + 1)
    if refined:
        applicable = (
            lhs_x >= r * host.n
            and lhs_y >= r * host.m
            and not (lhs_x == r * host.n and lhs_y == r * host.m)
        )
    else:
        applicable = lhs_x > r * host.n and lhs_y > r * host.m
    target = Fraction(host.m + host.n, r)
    witness = _largest_component_or_none(host, col)
    achieved = witness.order if witness is not None else 0
    detail = {"recorded_only": True} if refined else None
    return Verdict(
        check="conjecture-refined" if refined else "conjecture",
        applicable=applicable,
        holds=achieved >= target,
        target=target,
        witness=witness,
        margin=achieved - target,
        detail=detail,
    )


def check_tetel_instance(host: BipartiteGraph, col: EdgeColoring, r: int) -> Verdict:
    """All r: degrees within a (m/n)^3 / (128 r^5) sliver of complete force a
    component of order (m + n)/r.  Sides are swapped internally if m > n."""
    if r < 2:
        raise ColoringMismatch("need r >= 2")
    if col.r != r:
        raise ColoringMismatch(f"coloring has {col.r} colors, expected {r}")
    col.validate_against(host)
    work_host, work_col = host, col
    if host.m > host.n:
        work_host, work_col = host.transpose(), col.transpose()
    m, n = work_host.m, work_host.n
    gamma = Fraction(m**3, 128 * r**5 * n**3)
    prof = degree_profile(work_host)
    applicable = (
        Fraction(prof.delta_xy) > (1 - gamma) * n
        and Fraction(prof.delta_yx) > (1 - gamma) * m
    )
    target = Fraction(m + n, r)
    witness = _largest_component_or_none(host, col)
    achieved = witness.order if witness is not None else 0
    return Verdict(
        check="tetel",
        applicable=applicable,
        holds=achieved >= target,
        target=target,
        witness=witness,
        margin=achieved - target,
        detail={"gamma": rat_str(gamma)},
    )


def _additive_qualifying(host, col):
    best = None
    for comp in mono_components(host, col):
        if 2 * len(comp.xs) >= host.m and 2 * len(comp.ys) >= host.n:
            if best is None or comp.order > best.order:
                best = comp
    return best


def check_additive_theorem(host: BipartiteGraph, col: EdgeColoring) -> Verdict:
    """Two colors, additive degrees: with N = m + n total vertices,
    |Y| >= |X| > N/4, delta(X,Y) >= |Y| - N/8 and delta(Y,X) >= |X| - N/8
    force a component holding half of each side."""
    if col.r != 2:
        raise ColoringMismatch("this check needs exactly 2 colors")
    col.validate_against(host)
    total = host.m + host.n
    prof = degree_profile(host)
    applicable = (
        host.n >= host.m
        and 4 * host.m > total
        and Fraction(prof.delta_xy) >= host.n - Fraction(total, 8)
        and Fraction(prof.delta_yx) >= host.m - Fraction(total, 8)
    )
    target = Fraction(total, 2)
    witness = _additive_qualifying(host, col)
    if witness is not None:
        achieved = witness.order
        holds = True
    else:
        largest = _largest_component_or_none(host, col)
        achieved = largest.order if largest is not None else 0
        holds = False
    return Verdict(
        check="additive",
        applicable=applicable,
        holds=holds,
        target=target,
        witness=witness,
        margin=achieved - target,
    )


# --- stability machinery ---------------------------------------------------

def _above_cuberoot(d: Fraction, bound: Fraction, scale: int) -> bool:
    """d > bound^(1/3) * scale, exactly (bound >= 0)."""
    if d <= 0:
        return False
    return d**3 > bound * scale**3


def _at_most_cuberoot(d, bound: Fraction, scale: int) -> bool:
    """d <= bound^(1/3) * scale, exactly (bound >= 0)."""
    d = Fraction(d)
    if d <= 0:
        return True
    return d**3 <= bound * scale**3


def density_deficiency(g: BipartiteGraph, r: int) -> Fraction:
    """The delta with e(G) = (1 - delta) mn / r, clamped at zero for classes
    denser than mn/r."""
    delta = 1 - Fraction(r * g.edge_count, g.m * g.n)
    return delta if delta > 0 else Fraction(0)


@dataclass(frozen=True)
class StabilityReport:
    """Either a double star of order (m+n)/r exists (case i) or all but a few
    exceptional vertices have near-average degrees (case ii)."""

    delta: Fraction
    alpha: Fraction
    beta: Fraction
    exceptional_x: tuple[int, ...]
    exceptional_y: tuple[int, ...]
    k_x: int
    k_y: int
    defect_x: Fraction
    defect_y: Fraction
    double_star_order: int
    case_i: bool
    case_ii: bool

    @property
    def dichotomy(self) -> bool:
        return self.case_i or self.case_ii

    def to_json_dict(self) -> dict:
        return {
            "delta": rat_str(self.delta),
            "alpha": rat_str(self.alpha),
            "beta": rat_str(self.beta),
            "exceptional_x": list(self.exceptional_x),
            "exceptional_y": list(self.exceptional_y),
            "k_x": self.k_x,
            "k_y": self.k_y,
            "defect_x": rat_str(self.defect_x),
            "defect_y": rat_str(self.defect_y),
            "double_star_order": self.double_star_order,
            "case_i": self.case_i,
            "case_ii": self.case_ii,
            "dichotomy": self.dichotomy,
        }


def stability_report(
    g: BipartiteGraph,
    r: int,
    m: int | None = None,
    n: int | None = None,
    delta: Fraction | None = None,
) -> StabilityReport:
    """Evaluate the stability dichotomy on one color class.

    With ``delta=None`` the deficiency is derived from e(g) = (1 - delta)mn/r
    and clamped at zero; passing a larger admissible delta evaluates the same
    dichotomy with the correspondingly looser exceptional-vertex thresholds.
    """
    m = g.m if m is None else m
    n = g.n if n is None else n
    if (m, n) != (g.m, g.n):
        raise ColoringMismatch("m, n disagree with the class graph")
    if m > n:
        raise ColoringMismatch("stability expects m <= n")
    if g.edge_count == 0:
        raise GraphError("stability needs at least one edge")
    if delta is None:
        delta = density_deficiency(g, r)
    else:
        delta = Fraction(delta)
        if delta < density_deficiency(g, r):
            raise ValueError("delta below the deficiency forced by e(g)")
    alpha = Fraction(m + n, r**2 * n) * delta
    beta = Fraction(m + n, r**2 * m) * delta
    avg_xy = Fraction(g.edge_count, m)
    avg_yx = Fraction(g.edge_count, n)

    exc_x = []
    for x in range(m):
        if _above_cuberoot(avg_xy - g.degree(x), alpha, n):
            exc_x.append(x)
    exc_y = []
    ydegs = g.y_degrees()
    for y in range(n):
        if _above_cuberoot(avg_yx - ydegs[y], beta, m):
            exc_y.append(y)

    defect_x = sum(g.degree(x) for x in exc_x) - len(exc_x) * avg_xy
    defect_y = sum(ydegs[y] for y in exc_y) - len(exc_y) * avg_yx
    star = uncolored_largest_double_star(g).order
    case_i = star * r >= m + n
    case_ii = _at_most_cuberoot(len(exc_x), alpha, m) and _at_most_cuberoot(
        len(exc_y), beta, n
    )
    return StabilityReport(
        delta=delta,
        alpha=alpha,
        beta=beta,
        exceptional_x=tuple(exc_x),
        exceptional_y=tuple(exc_y),
        k_x=len(exc_x),
        k_y=len(exc_y),
        defect_x=Fraction(defect_x),
        defect_y=Fraction(defect_y),
        double_star_order=star,
        case_i=case_i,
        case_ii=case_ii,
    )


@dataclass(frozen=True)
class MainComponentsReport:
    """The r largest components of a sparse-deficiency class and the five
    structural properties they must satisfy when no component reaches
    (m + n)/r."""

    components: tuple[Component, ...]
    z_x: tuple[int, ...]
    z_y: tuple[int, ...]
    a: bool
    b: bool
    c: bool
    d: bool
    e: bool
    precondition_ok: bool
    hypothesis_ok: bool
    delta: Fraction
    alpha: Fraction
    beta: Fraction

    @property
    def all_properties(self) -> bool:
        return self.a and self.b and self.c and self.d and self.e

    def to_json_dict(self) -> dict:
        return {
            "components": [c.to_json_dict() for c in self.components],
            "z_x": list(self.z_x),
            "z_y": list(self.z_y),
            "flags": {
                "a": self.a,
                "b": self.b,
                "c": self.c,
                "d": self.d,
                "e": self.e,
            },
            "precondition_ok": self.precondition_ok,
            "hypothesis_ok": self.hypothesis_ok,
            "delta": rat_str(self.delta),
            "alpha": rat_str(self.alpha),
            "beta": rat_str(self.beta),
        }


def main_lemma_report(
    g: BipartiteGraph, r: int, m: int | None = None, n: int | None = None
) -> MainComponentsReport:
    """Rank the components of one color class and evaluate properties (a)-(e).

    The flags are recomputed from the component list; they carry the lemma's
    meaning only when both ``precondition_ok`` (deficiency small enough) and
    ``hypothesis_ok`` (no component of order (m+n)/r) are true, but they are
    reported regardless.
    """
    m = g.m if m is None else m
    n = g.n if n is None else n
    if (m, n) != (g.m, g.n):
        raise ColoringMismatch("m, n disagree with the class graph")
    if g.edge_count == 0:
        raise GraphError("main lemma needs at least one edge")
    delta = density_deficiency(g, r)
    alpha = Fraction(m + n, r**2 * n) * delta
    beta = Fraction(m + n, r**2 * m) * delta
    precondition_ok = delta <= min(
        Fraction(n, 64 * r**4 * (m + n)), Fraction(m, 64 * r * (m + n))
    )
    comps = graph_components(g)
    hypothesis_ok = all(comp.order * r < m + n for comp in comps)
    ranked = sorted(comps, key=lambda comp: (-comp.order, comp.min_x))
    top = tuple(ranked[:r])
    avg_xy = Fraction(g.edge_count, m)
    avg_yx = Fraction(g.edge_count, n)

    flag_a = all(comp.order * r < m + n for comp in top)
    flag_b = all(
        _at_most_cuberoot(avg_yx - len(comp.xs), beta, m) for comp in top
    )
    flag_c = all(
        _at_most_cuberoot(avg_xy - len(comp.ys), alpha, n) for comp in top
    )
    covered_x = set()
    covered_y = set()
    for comp in top:
        covered_x.update(comp.xs)
        covered_y.update(comp.ys)
    z_x = tuple(x for x in range(m) if x not in covered_x)
    z_y = tuple(y for y in range(n) if y not in covered_y)
    flag_d = _at_most_cuberoot(len(z_x), alpha, m)
    flag_e = _at_most_cuberoot(len(z_y), beta, n)
    return MainComponentsReport(
        components=top,
        z_x=z_x,
        z_y=z_y,
        a=flag_a,
        b=flag_b,
        c=flag_c,
        d=flag_d,
        e=flag_e,
        precondition_ok=precondition_ok,
        hypothesis_ok=hypothesis_ok,
        delta=delta,
        alpha=alpha,
        beta=beta,
    )


# --- general graphs and the bipartition reduction --------------------------

@dataclass(frozen=True)
class GeneralGraph:
    """Simple undirected graph with a total r-edge-coloring."""

    n: int
    r: int
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise IndexOutOfRange("need at least one vertex")
        if self.r < 1:
            raise ColoringMismatch("need at least one color")
        if len(self.edges) != len(self.colors):
            raise ColoringMismatch("coloring must be total on the edges")
        seen = set()
        for (u, v), c in zip(self.edges, self.colors):
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise IndexOutOfRange(f"edge ({u}, {v}) not normalized in range")
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u}, {v}) given twice")
            if not (0 <= c < self.r):
                raise ColoringMismatch(f"color {c} outside [0, {self.r})")
            seen.add((u, v))

    def min_degree(self) -> int:
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return min(degs)

    def to_json_dict(self) -> dict:
        triples = sorted([u, v, c] for (u, v), c in zip(self.edges, self.colors))
        return {"n": self.n, "r": self.r, "edges": triples}


def general_from_edge_list(n: int, r: int, triples) -> GeneralGraph:
    """Build a GeneralGraph from (u, v, color) triples; endpoints may come in
    either order."""
    edges = []
    colors = []
    for u, v, c in triples:
        if u > v:
            u, v = v, u
        edges.append((u, v))
        colors.append(c)
    order = sorted(range(len(edges)), key=lambda i: edges[i])
    return GeneralGraph(
        n=n,
        r=r,
        edges=tuple(edges[i] for i in order),
        colors=tuple(colors[i] for i in order),
    )


def parse_general_json(data: dict) -> GeneralGraph:
    try:
        n = int(data["n"])
        r = int(data["r"])
        triples = [(int(a), int(b), int(c)) for a, b, c in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed general graph JSON: {exc}") from exc
    return general_from_edge_list(n, r, triples)


@dataclass(frozen=True)
class GeneralComponent:
    color: int
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def to_json_dict(self) -> dict:
        return {"color": self.color, "order": self.order, "vertices": list(self.vertices)}


def general_mono_components(gg: GeneralGraph) -> list[GeneralComponent]:
    """Monochromatic components of a general graph, by (color, min vertex)."""
    out = []
    for c in range(gg.r):
        adj: dict[int, list[int]] = {}
        for (u, v), col in zip(gg.edges, gg.colors):
            if col != c:
                continue
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen: set[int] = set()
        for start in sorted(adj):
            if start in seen:
                continue
            stack = [start]
            comp = {start}
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(GeneralComponent(color=c, vertices=tuple(sorted(comp))))
    return out


@dataclass(frozen=True)
class BipartitionReduction:
    """A split of a general graph avoiding one color across the cut.

    ``side_a[i]`` is the original vertex playing X-index i in the induced
    bipartite instance, and likewise ``side_b`` for Y.
    """

    avoided_color: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    host: BipartiteGraph
    coloring: EdgeColoring

    def to_json_dict(self) -> dict:
        return {
            "avoided_color": self.avoided_color,
            "side_a": list(self.side_a),
            "side_b": list(self.side_b),
            "induced": self.coloring.to_json_dict(),
        }


def bipartition_avoiding_color(
    gg: GeneralGraph, color: int, min_side: int
) -> BipartitionReduction | None:
    """Group the components of ``color`` into two sides of size >= min_side.

    Pieces (components plus untouched vertices as singletons) go largest
    first into the lighter side; if that split falls short, a single piece
    big enough on its own is tried against its complement.  Returns None
    when both fail.  The returned split never cuts an edge of the avoided
    color and its induced coloring uses at most r - 1 colors.
    """
    pieces = [
        list(comp.vertices)
        for comp in general_mono_components(gg)
        if comp.color == color
    ]
    covered = {v for piece in pieces for v in piece}
    pieces.extend([v] for v in range(gg.n) if v not in covered)
    pieces.sort(key=lambda p: (-len(p), p[0]))

    side_a: list[int] = []
    side_b: list[int] = []
    for piece in pieces:
        if len(side_a) <= len(side_b):
            side_a.extend(piece)
        else:
            side_b.extend(piece)
    if len(side_a) < min_side or len(side_b) < min_side:
        side_a = side_b = []
        for piece in pieces:
            rest = gg.n - len(piece)
            if len(piece) >= min_side and rest >= min_side:
                side_a = list(piece)
                in_a = set(side_a)
                side_b = [v for v in range(gg.n) if v not in in_a]
                break
        else:
            return None

    side_a = sorted(side_a)
    side_b = sorted(side_b)
    pos_a = {v: i for i, v in enumerate(side_a)}
    pos_b = {v: i for i, v in enumerate(side_b)}
    triples = []
    for (u, v), c in zip(gg.edges, gg.colors):
        crossing = (u in pos_a) != (v in pos_a)
        if not crossing:
            continue
        if c == color:
            raise RuntimeError("avoided-color edge crosses the split")
        x, y = (u, v) if u in pos_a else (v, u)
        triples.append((pos_a[x], pos_b[y], c if c < color else c - 1))
    col = coloring_from_triples(len(side_a), len(side_b), max(gg.r - 1, 1), triples)
    return BipartitionReduction(
        avoided_color=color,
        side_a=tuple(side_a),
        side_b=tuple(side_b),
        host=col.union_host(),
        coloring=col,
    )


def check_corollary(gg: GeneralGraph, r: int, variant: str = "general") -> Verdict:
    """Minimum-degree corollaries on general graphs.

    ``variant="general"``: delta(G) >= (1 - 1/(3072 (r-1)^5)) n aims at a
    monochromatic component of order n/(r-1) (r >= 3).
    ``variant="seven-eighths"``: r = 3 and delta(G) >= 7n/8 aims at n/2.

    When no color's component reaches the reduction threshold the checker
    also performs the bipartition reduction and runs the matching bipartite
    check on the induced instance, recording the whole chain in ``detail``.
    """
    if r < 3:
        raise ColoringMismatch("corollaries need r >= 3")
    if gg.r != r:
        raise ColoringMismatch(f"coloring has {gg.r} colors, expected {r}")
    n = gg.n
    delta = gg.min_degree()
    if variant == "seven-eighths":
        if r != 3:
            raise ColoringMismatch("the 7n/8 variant is for r = 3")
        applicable = 8 * delta >= 7 * n
        target = Fraction(n, 2)
        threshold = Fraction(3 * n, 4)
        min_side = n // 4 + 1
    elif variant == "general":
        bound = 3072 * (r - 1) ** 5
        applicable = bound * delta >= (bound - 1) * n
        target = Fraction(n, r - 1)
        threshold = Fraction(2 * n, 3)
        min_side = -(-n // 3)
    else:
        raise ValueError(f"unknown corollary variant {variant!r}")

    comps = general_mono_components(gg)
    witness = None
    for comp in comps:
        if witness is None or comp.order > witness.order:
            witness = comp
    achieved = witness.order if witness is not None else 0
    holds = achieved >= target

    detail: dict = {"variant": variant, "threshold": rat_str(threshold)}
    avoided = None
    for c in range(gg.r):
        if all(comp.order < threshold for comp in comps if comp.color == c):
            avoided = c
            break
    if avoided is not None:
        reduction = bipartition_avoiding_color(gg, avoided, min_side)
        if reduction is None:
            detail["reduction"] = None
        else:
            detail["reduction"] = {
                "avoided_color": avoided,
                "side_sizes": [len(reduction.side_a), len(reduction.side_b)],
            }
            if variant == "seven-eighths":
                sub = check_additive_theorem(reduction.host, reduction.coloring)
            else:
                sub = check_tetel_instance(reduction.host, reduction.coloring, r - 1)
            detail["bipartite_check"] = sub.to_json_dict()
    return Verdict(
        check=f"corollary-{variant}",
        applicable=applicable,
        holds=holds,
        target=target,
        witness=witness,
        margin=achieved - target,
        detail=detail,
    )
