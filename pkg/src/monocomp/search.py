"""Adversarial search over r-colorings of a host graph.

Exhaustive enumeration walks the edges in sorted (x, y) order, keeps one
union-find per color with an undo trail so backtracking never recomputes
components, and prunes a branch the moment any partial color class reaches
the component-order target (orders only grow as edges are added).  Color
canonicalization forces new colors to appear in increasing order along the
edge sequence, cutting the tree by up to r! without changing any decision.

Parallel runs split the enumeration tree at a fixed edge-prefix depth into
independent tasks and merge results by prefix rank, so the outcome (decision,
canonical lexicographically-least witness, examined count) is identical for
every worker count.  Random sampling is blocked the same way: block i always
draws the same colorings from its derived seed, whoever executes it.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

from .bigraph import (
    BipartiteGraph,
    EdgeColoring,
    EmptyGraph,
    coloring_from_assignment,
    degree_profile,
    largest_mono_component,
    meets_conjecture_degrees,
    mono_components,
    rat_str,
)
from .constructions import complete_minus_circulant

_UNBOUNDED = 1 << 62
_RANDOM_BLOCK = 2048
DEFAULT_SPLIT_DEPTH = 4


class PreconditionViolated(Exception):
    """The host does not meet the checker's degree precondition."""


@dataclass
class SearchConfig:
    """Knobs shared by the search operations."""

    mode: str = "exhaustive"
    seed: int = 0
    canonicalize_colors: bool = True
    split_depth: int = DEFAULT_SPLIT_DEPTH
    budget: int = _UNBOUNDED
    target: Fraction | None = None

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.split_depth < 0:
            raise ValueError("split_depth must be >= 0")


@dataclass
class SearchOutcome:
    """Result of one search run.

    ``elapsed`` is wall time and deliberately stays out of the JSON form so
    reruns with the same seed are byte-identical; run manifests carry it.
    """

    kind: str
    value: int | None
    witness: EdgeColoring | None
    examined: int
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "examined": self.examined,
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


class _RollbackDSU:
    """Union by size with an undo trail; no path compression so every union
    is reversible in O(1)."""

    __slots__ = ("parent", "size", "trail")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.trail: list[int] = []

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            v = parent[v]
        return v

    def union(self, a: int, b: int) -> int:
        """Merge and return the resulting component size."""
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            self.trail.append(-1)
            return self.size[ra]
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.trail.append(rb)
        return self.size[ra]

    def undo(self) -> None:
        rb = self.trail.pop()
        if rb >= 0:
            ra = self.parent[rb]
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]


def _ceil_frac(value) -> int:
    f = Fraction(value)
    return -((-f.numerator) // f.denominator)


def _below_task(args) -> tuple[tuple[int, ...] | None, int, bool]:
    """Search the subtree under one color prefix for a coloring whose
    monochromatic components all have order < t_int.

    Returns (lex-least witness or None, nodes visited, budget exhausted).
    """
    m, n, edges, r, t_int, canonicalize, budget, prefix = args
    total = m + n
    num_edges = len(edges)
    dsus = [_RollbackDSU(total) for _ in range(r)]
    for i, c in enumerate(prefix):
        x, y = edges[i]
        dsus[c].union(x, m + y)
    assign = list(prefix) + [0] * (num_edges - len(prefix))
    used = (max(prefix) + 1) if prefix else 0
    state = {"nodes": 0, "exhausted": False}

    def rec(idx: int, used: int) -> bool:
        if idx == num_edges:
            return True
        x, y = edges[idx]
        hi = min(r - 1, used) if canonicalize else r - 1
        for c in range(hi + 1):
            state["nodes"] += 1
            if state["nodes"] > budget:
                state["exhausted"] = True
                return False
            dsu = dsus[c]
            if dsu.union(x, m + y) < t_int:
                assign[idx] = c
                if rec(idx + 1, used if c < used else c + 1):
                    dsu.undo()
                    return True
            dsu.undo()
            if state["exhausted"]:
                return False
        return False

    found = rec(len(prefix), used)
    witness = tuple(assign) if found else None
    return witness, state["nodes"], state["exhausted"]


def _enum_prefixes(
    m: int, n: int, edges, r: int, t_int: int, canonicalize: bool, depth: int
) -> tuple[list[tuple[int, ...]], int]:
    """All surviving color prefixes of the first ``depth`` edges, in lex
    order, plus the node count spent finding them."""
    dsus = [_RollbackDSU(m + n) for _ in range(r)]
    prefixes: list[tuple[int, ...]] = []
    assign = [0] * depth
    nodes = 0

    def rec(idx: int, used: int) -> None:
        nonlocal nodes
        if idx == depth:
            prefixes.append(tuple(assign))
            return
        x, y = edges[idx]
        hi = min(r - 1, used) if canonicalize else r - 1
        for c in range(hi + 1):
            nodes += 1
            dsu = dsus[c]
            if dsu.union(x, m + y) < t_int:
                assign[idx] = c
                rec(idx + 1, used if c < used else c + 1)
            dsu.undo()

    rec(0, 0)
    return prefixes, nodes


def _merge_below_tasks(results) -> tuple[tuple[int, ...] | None, int, bool]:
    """Fold task results in prefix rank order.

    Tasks after the first hit (or first budget exhaustion) do not count, so
    the merged outcome is identical however the tasks were scheduled."""
    examined = 0
    for witness, nodes, exhausted in results:
        examined += nodes
        if witness is not None:
            return witness, examined, False
        if exhausted:
            return None, examined, True
    return None, examined, False


def exists_coloring_below(
    host: BipartiteGraph,
    r: int,
    target,
    cfg: SearchConfig | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Decide whether some r-coloring keeps every monochromatic component
    below ``target`` (a rational; integer orders compare against its
    ceiling).

    Counterexample means such a coloring exists and the witness is the
    lexicographically least one; AllSatisfy means every coloring has a
    component of order >= target.
    """
    if host.edge_count == 0:
        raise EmptyGraph("host has no edges")
    if r < 1:
        raise ValueError("need r >= 1")
    cfg = cfg or SearchConfig()
    t_int = _ceil_frac(target)
    if t_int < 2:
        raise ValueError("target must be at least 2")
    start = time.perf_counter()
    edges = tuple(host.edges())
    depth = min(cfg.split_depth, len(edges))
    prefixes, pre_nodes = _enum_prefixes(
        host.m, host.n, edges, r, t_int, cfg.canonicalize_colors, depth
    )
    tasks = [
        (host.m, host.n, edges, r, t_int, cfg.canonicalize_colors, cfg.budget, p)
        for p in prefixes
    ]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_below_task, tasks))
        witness_colors, examined, exhausted = _merge_below_tasks(results)
    else:
        def run_serial():
            for t in tasks:
                yield _below_task(t)

        witness_colors, examined, exhausted = _merge_below_tasks(run_serial())
    examined += pre_nodes
    elapsed = time.perf_counter() - start
    if witness_colors is not None:
        witness = coloring_from_assignment(host, r, witness_colors)
        return SearchOutcome("Counterexample", None, witness, examined, elapsed)
    if exhausted:
        return SearchOutcome("BudgetExhausted", None, None, examined, elapsed)
    return SearchOutcome("AllSatisfy", None, None, examined, elapsed)


def min_max_mono_component(
    host: BipartiteGraph,
    r: int,
    cfg: SearchConfig | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Exact min over r-colorings of the largest monochromatic component
    order, with a coloring achieving it (the canonical lex-least one)."""
    if host.edge_count == 0:
        raise EmptyGraph("host has no edges")
    cfg = cfg or SearchConfig()
    start = time.perf_counter()
    examined = 0
    cache: dict[int, SearchOutcome] = {}

    def below(t: int) -> SearchOutcome:
        nonlocal examined
        if t not in cache:
            cache[t] = exists_coloring_below(host, r, t, cfg, workers)
            examined += cache[t].examined
        return cache[t]

    lo, hi = 2, host.m + host.n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        out = below(mid)
        if out.kind == "BudgetExhausted":
            return SearchOutcome(
                "BudgetExhausted", lo - 1, None, examined, time.perf_counter() - start
            )
        if out.kind == "Counterexample":
            hi = mid
        else:
            lo = mid + 1
    final = below(lo)
    if final.kind == "BudgetExhausted":
        return SearchOutcome(
            "BudgetExhausted", lo - 1, None, examined, time.perf_counter() - start
        )
    return SearchOutcome(
        "MinMaxValue", lo - 1, final.witness, examined, time.perf_counter() - start
    )


# --- coloring checkers ------------------------------------------------------

@dataclass(frozen=True)
class ComponentTargetChecker:
    """Largest monochromatic component reaches ``target`` (default (m+n)/r).

    ``require_complete`` pins the complete-host hypothesis of the classical
    bound; host families with degree conditions switch it off.
    """

    target: Fraction | None = None
    require_complete: bool = True
    name: str = "gy1"

    def bound_target(self, host: BipartiteGraph, r: int) -> Fraction:
        if self.target is not None:
            return Fraction(self.target)
        return Fraction(host.m + host.n, r)

    def precondition_error(self, host: BipartiteGraph, r: int) -> str | None:
        if self.require_complete and not host.is_complete():
            return "host is not a complete bipartite graph"
        return None

    def component_threshold(self, host, r) -> Fraction:
        return self.bound_target(host, r)

    def satisfied(self, host: BipartiteGraph, col: EdgeColoring, r: int) -> bool:
        return largest_mono_component(host, col).order >= self.bound_target(host, r)

    def make_context(self, host: BipartiteGraph, r: int):
        t = self.bound_target(host, r)
        return (host.m, host.n, tuple(host.edges()), t.numerator, t.denominator)

    def satisfied_colors(self, ctx, colors) -> bool:
        m, n, edges, p, q = ctx
        return _max_component_reaches(m, n, edges, colors, p, q)


@dataclass(frozen=True)
class TwoColorChecker:
    """Two colors with strict 2/3 degrees: a component of order (m+n)/2."""

    name: str = "r2"

    def bound_target(self, host, r) -> Fraction:
        return Fraction(host.m + host.n, 2)

    def precondition_error(self, host, r) -> str | None:
        if r != 2:
            return "this check is for exactly 2 colors"
        prof = degree_profile(host)
        if not (prof.delta_xy * 3 > 2 * host.n and prof.delta_yx * 3 > 2 * host.m):
            return "minimum degrees are not strictly above two thirds"
        return None

    component_threshold = ComponentTargetChecker.component_threshold
    satisfied = ComponentTargetChecker.satisfied
    make_context = ComponentTargetChecker.make_context
    satisfied_colors = ComponentTargetChecker.satisfied_colors


@dataclass(frozen=True)
class ConjectureChecker:
    """Strict (1 - 1/(r+1)) degrees: a component of order (m+n)/r."""

    name: str = "conjecture"

    def bound_target(self, host, r) -> Fraction:
        return Fraction(host.m + host.n, r)

    def precondition_error(self, host, r) -> str | None:
        if r < 2:
            return "need r >= 2"
        if not meets_conjecture_degrees(host, r):
            return "minimum degrees do not strictly clear (1 - 1/(r+1))"
        return None

    component_threshold = ComponentTargetChecker.component_threshold
    satisfied = ComponentTargetChecker.satisfied
    make_context = ComponentTargetChecker.make_context
    satisfied_colors = ComponentTargetChecker.satisfied_colors


@dataclass(frozen=True)
class AdditiveChecker:
    """Two colors with additive degree slack: some component holds half of
    X and half of Y."""

    name: str = "additive"

    def precondition_error(self, host, r) -> str | None:
        if r != 2:
            return "this check is for exactly 2 colors"
        total = host.m + host.n
        prof = degree_profile(host)
        if host.n < host.m:
            return "expected |Y| >= |X|"
        if 4 * host.m <= total:
            return "|X| must exceed a quarter of the vertices"
        if 8 * prof.delta_xy < 8 * host.n - total:
            return "delta(X,Y) below |Y| - (m+n)/8"
        if 8 * prof.delta_yx < 8 * host.m - total:
            return "delta(Y,X) below |X| - (m+n)/8"
        return None

    def component_threshold(self, host, r):
        return None

    def satisfied(self, host: BipartiteGraph, col: EdgeColoring, r: int) -> bool:
        for comp in mono_components(host, col):
            if 2 * len(comp.xs) >= host.m and 2 * len(comp.ys) >= host.n:
                return True
        return False

    def make_context(self, host, r):
        return (host.m, host.n, tuple(host.edges()))

    def satisfied_colors(self, ctx, colors) -> bool:
        m, n, edges = ctx
        return _has_half_half_component(m, n, edges, colors)


CHECKERS = {
    "gy1": ComponentTargetChecker,
    "r2": TwoColorChecker,
    "conjecture": ConjectureChecker,
    "additive": AdditiveChecker,
}


def _max_component_reaches(m, n, edges, colors, p, q) -> bool:
    """True iff some monochromatic component has order * q >= p."""
    total = m + n
    parents = {}
    sizes = {}
    for (x, y), c in zip(edges, colors):
        key_a = c * total + x
        key_b = c * total + m + y
        ra = key_a
        while ra in parents:
            ra = parents[ra]
        rb = key_b
        while rb in parents:
            rb = parents[rb]
        if ra == rb:
            continue
        sa = sizes.get(ra, 1)
        sb = sizes.get(rb, 1)
        if sa < sb:
            ra, rb = rb, ra
            sa, sb = sb, sa
        parents[rb] = ra
        sizes[ra] = sa + sb
        if (sa + sb) * q >= p:
            return True
    return False


def _has_half_half_component(m, n, edges, colors) -> bool:
    """True iff some monochromatic component has >= m/2 X-vertices and
    >= n/2 Y-vertices."""
    total = m + n
    parents = {}
    xs = {}
    ys = {}
    for (x, y), c in zip(edges, colors):
        key_a = c * total + x
        key_b = c * total + m + y
        ra = key_a
        while ra in parents:
            ra = parents[ra]
        rb = key_b
        while rb in parents:
            rb = parents[rb]
        if ra == rb:
            continue
        ax = xs.get(ra, 1 if ra % total < m else 0)
        ay = ys.get(ra, 0 if ra % total < m else 1)
        bx = xs.get(rb, 1 if rb % total < m else 0)
        by = ys.get(rb, 0 if rb % total < m else 1)
        if ax + ay < bx + by:
            ra, rb = rb, ra
        parents[rb] = ra
        xs[ra] = ax + bx
        ys[ra] = ay + by
        if 2 * (ax + bx) >= m and 2 * (ay + by) >= n:
            return True
    return False


def _enum_assignments(edges, r, canonicalize):
    """All (canonical) complete color assignments, lexicographically."""
    num_edges = len(edges)
    assign = [0] * num_edges

    def rec(idx, used):
        if idx == num_edges:
            yield tuple(assign)
            return
        hi = min(r - 1, used) if canonicalize else r - 1
        for c in range(hi + 1):
            assign[idx] = c
            yield from rec(idx + 1, used if c < used else c + 1)

    yield from rec(0, 0)


def exhaustive_verify(
    host: BipartiteGraph,
    r: int,
    target=None,
    checker=None,
    cfg: SearchConfig | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Run a checker over every (canonical) r-coloring of the host.

    Checkers whose predicate is "largest component reaches t" go through the
    pruned branch-and-bound search for the complement; the decision and the
    lex-least counterexample are the same as plain enumeration's.  Other
    checkers are evaluated on each enumerated coloring.
    """
    cfg = cfg or SearchConfig()
    if checker is None:
        checker = ComponentTargetChecker(
            Fraction(target) if target is not None else None
        )
    elif target is not None and isinstance(checker, ComponentTargetChecker):
        checker = replace(checker, target=Fraction(target))
    err = checker.precondition_error(host, r)
    if err:
        raise PreconditionViolated(err)
    if host.edge_count == 0:
        raise EmptyGraph("host has no edges")
    threshold = checker.component_threshold(host, r)
    start = time.perf_counter()
    if threshold is not None:
        out = exists_coloring_below(host, r, threshold, cfg, workers)
        out.elapsed = time.perf_counter() - start
        return out
    edges = tuple(host.edges())
    ctx = checker.make_context(host, r)
    examined = 0
    for colors in _enum_assignments(edges, r, cfg.canonicalize_colors):
        examined += 1
        if examined > cfg.budget:
            return SearchOutcome(
                "BudgetExhausted", None, None, examined - 1, time.perf_counter() - start
            )
        if not checker.satisfied_colors(ctx, colors):
            witness = coloring_from_assignment(host, r, colors)
            return SearchOutcome(
                "Counterexample", None, witness, examined, time.perf_counter() - start
            )
    return SearchOutcome("AllSatisfy", None, None, examined, time.perf_counter() - start)


def _child_seed(seed: int, block: int) -> int:
    mixed = (seed * 0x9E3779B97F4A7C15 + (block + 1) * 0xBF58476D1CE4E5B9) % (1 << 64)
    return mixed ^ (mixed >> 31)


def _random_task(args):
    """Check one block of samples.  Returns (offset-of-first-violation or
    None, colors-of-that-violation or None)."""
    m, n, edges, r, checker, seed, block_index, count = args
    rng = random.Random(_child_seed(seed, block_index))
    ctx = checker.make_context(_HostView(m, n, edges), r)
    num_edges = len(edges)
    for i in range(count):
        colors = [rng.randrange(r) for _ in range(num_edges)]
        if not checker.satisfied_colors(ctx, colors):
            return i, tuple(colors)
    return None, None


class _HostView:
    """Just enough of a BipartiteGraph for Checker.make_context."""

    __slots__ = ("m", "n", "_edges")

    def __init__(self, m, n, edges):
        self.m = m
        self.n = n
        self._edges = edges

    def edges(self):
        return self._edges

    def is_complete(self):
        return len(self._edges) == self.m * self.n


def random_search(
    host: BipartiteGraph,
    r: int,
    target=None,
    checker=None,
    cfg: SearchConfig | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Sample ``cfg.budget`` colorings (each edge independently uniform over
    the r colors) and report the first violation of the checker.

    Sampling is blocked so the stream is a pure function of the seed: block i
    always holds the same colorings, whichever worker runs it.  No host
    precondition is enforced here; callers decide applicability.
    """
    cfg = cfg or SearchConfig()
    if checker is None:
        checker = ComponentTargetChecker(
            Fraction(target) if target is not None else None, require_complete=False
        )
    elif target is not None and isinstance(checker, ComponentTargetChecker):
        checker = replace(checker, target=Fraction(target))
    if host.edge_count == 0:
        raise EmptyGraph("host has no edges")
    start = time.perf_counter()
    edges = tuple(host.edges())
    budget = cfg.budget
    blocks = []
    offset = 0
    index = 0
    while offset < budget:
        count = min(_RANDOM_BLOCK, budget - offset)
        blocks.append((host.m, host.n, edges, r, checker, cfg.seed, index, count))
        offset += count
        index += 1

    hit = None  # (global sample index, colors)
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for block_index, (local, colors) in enumerate(pool.map(_random_task, blocks)):
                if local is not None:
                    hit = (block_index * _RANDOM_BLOCK + local, colors)
                    break
    else:
        for block_index, block in enumerate(blocks):
            local, colors = _random_task(block)
            if local is not None:
                hit = (block_index * _RANDOM_BLOCK + local, colors)
                break
    elapsed = time.perf_counter() - start
    if hit is not None:
        g_index, colors = hit
        witness = coloring_from_assignment(host, r, colors)
        return SearchOutcome("Counterexample", None, witness, g_index + 1, elapsed)
    return SearchOutcome("AllSatisfy", None, None, budget, elapsed)


# --- degree-slack frontier ---------------------------------------------------

_EXHAUSTIVE_EDGE_LIMIT = 16


def alpha_frontier(
    total_n: int,
    alphas,
    r: int = 2,
    cfg: SearchConfig | None = None,
    workers: int = 1,
) -> dict:
    """Scan slack values alpha for the additive-degree problem.

    For each alpha, builds circulant hosts with delta(X,Y) >= |Y| - alpha n
    and delta(Y,X) >= |X| - alpha n and searches for a 2-coloring with no
    monochromatic component of order n/2 (exhaustively when the host is tiny,
    by seeded sampling otherwise).  The output is labeled exploratory
    evidence: a clean row is not a proof and a counterexample row only speaks
    for its family members.
    """
    cfg = cfg or SearchConfig()
    rows = []
    for alpha in alphas:
        alpha = Fraction(alpha)
        if not (0 < alpha < 1):
            raise ValueError("alpha grid values must lie in (0, 1)")
        slack = alpha * total_n
        d = math.floor(slack)
        half = total_n // 2
        strict_floor = math.floor(2 * slack)
        candidates = sorted({half, min(strict_floor + 1, half)})
        hosts = []
        hypothesis_ok = False
        for m_x in candidates:
            n_y = total_n - m_x
            if m_x < 1 or m_x > n_y or d > n_y:
                continue
            host = complete_minus_circulant(m_x, n_y, d)
            if host.edge_count == 0:
                continue
            meets_hypothesis = Fraction(m_x) > 2 * slack
            hypothesis_ok = hypothesis_ok or meets_hypothesis
            target = Fraction(total_n, 2)
            if host.edge_count <= _EXHAUSTIVE_EDGE_LIMIT:
                out = exists_coloring_below(host, 2, target, cfg, workers)
                mode = "exhaustive"
            else:
                out = random_search(
                    host,
                    2,
                    checker=ComponentTargetChecker(target, require_complete=False),
                    cfg=cfg,
                    workers=workers,
                )
                mode = "random"
            hosts.append(
                {
                    "m": m_x,
                    "n": n_y,
                    "d": d,
                    "edges": host.edge_count,
                    "meets_hypothesis": meets_hypothesis,
                    "mode": mode,
                    "kind": out.kind,
                    "examined": out.examined,
                    "witness": out.witness.to_json_dict() if out.witness else None,
                }
            )
        verdict = (
            "counterexample"
            if any(h["kind"] == "Counterexample" for h in hosts)
            else "no-counterexample-found"
        )
        rows.append(
            {
                "alpha": rat_str(alpha),
                "hypothesis_satisfiable": hypothesis_ok,
                "hosts": hosts,
                "verdict": verdict,
            }
        )
    return {"exploratory": True, "total_n": total_n, "r": r, "rows": rows}
