"""Exact extendability decisions and adversarial non-extendable instances.

``decide_extendable`` is the ground truth the constructive pipeline is
cross-validated against: a complete backtracking search over proper
palette-colorings agreeing with the prescription. The adversarial side
builds the classical obstruction: precolor, in one color, an induced
matching covering the neighborhood of a maximum-degree product vertex;
that vertex needs every palette color on its incident edges, yet none of
them may take the reserved color.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .coloring import EdgeColoring, verify_proper
from .errors import (
    BadParameterError,
    BudgetExceededError,
    InapplicableError,
    ProofInvariantError,
)
from .extension import Precoloring, validate_precoloring
from .families import ProductGraph, cartesian_product, complete_bipartite
from .graph import (
    Edge,
    Graph,
    bipartition,
    canonical_edge,
    distances_from,
    max_degree,
)


def decide_extendable(
    g: Graph,
    pre: Precoloring,
    palette: int,
    budget: int | None = None,
) -> EdgeColoring | None:
    """Exact decision: a proper palette-coloring extending pre, or None.

    Complete backtracking with minimum-remaining-values ordering, forward
    checking and canonical tie-breaking; the witness is re-verified before
    being returned. With a node budget, exhausting it raises
    BudgetExceededError: an inconclusive outcome, never a "no".
    """
    entries = {g.check_edge(e): c for e, c in pre.entries.items()}
    for e, c in entries.items():
        if not 1 <= c <= palette:
            raise BadParameterError(f"prescribed color {c} on {e} outside 1..{palette}")

    neighbors: dict[Edge, list[Edge]] = {}
    for e in g.edges:
        adj = []
        for v in e:
            adj.extend(f for f in g.incident_edges(v) if f != e)
        neighbors[e] = adj

    domains: dict[Edge, set[int]] = {}
    for e in g.edges:
        domains[e] = {entries[e]} if e in entries else set(range(1, palette + 1))
    assignment: dict[Edge, int] = {}
    # pin the prescription first; a dead end here means the prescription
    # itself is improper or strangled, hence not extendable
    for e in sorted(entries):
        c = entries[e]
        if c not in domains[e]:
            return None
        assignment[e] = c
        for f in neighbors[e]:
            if f not in assignment:
                domains[f].discard(c)
                if not domains[f]:
                    return None
            elif assignment[f] == c:
                return None

    nodes = 0

    def solve() -> bool:
        nonlocal nodes
        if len(assignment) == len(g.edges):
            return True
        e = min(
            (e for e in g.edges if e not in assignment),
            key=lambda e: (len(domains[e]), e),
        )
        for c in sorted(domains[e]):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(nodes - 1)
            assignment[e] = c
            trimmed = []
            wipeout = False
            for f in neighbors[e]:
                if f not in assignment and c in domains[f]:
                    domains[f].discard(c)
                    trimmed.append(f)
                    if not domains[f]:
                        wipeout = True
            if not wipeout and solve():
                return True
            for f in trimmed:
                domains[f].add(c)
            del assignment[e]
        return False

    if not solve():
        return None
    witness = EdgeColoring(palette_size=palette, assignment=dict(assignment))
    report = verify_proper(g, witness)
    if not report.ok or any(witness.assignment[e] != c for e, c in entries.items()):
        raise ProofInvariantError(f"search produced an invalid witness: {report}")
    return witness


def find_covering_induced_matching(g: Graph, v: int) -> list[Edge] | None:
    """An induced matching avoiding v whose endpoints cover N(v), or None.

    Edges through v never qualify: with deg(v) >= 2 they break the induced
    condition against any edge covering another neighbor, and the obstruction
    argument needs the reserved color to stay off the covered vertex. Exact
    search over candidate subsets, smallest size first, lexicographically
    first within a size.
    """
    g.check_vertex(v)
    hood = set(g.adjacency[v])
    if not hood:
        return []
    candidates = sorted(
        e for e in g.edges if v not in e and not hood.isdisjoint(e)
    )
    compatible = _distance2_table(g, candidates)
    lo = (len(hood) + 1) // 2
    for size in range(lo, len(hood) + 1):
        for combo in itertools.combinations(candidates, size):
            if not hood <= {x for e in combo for x in e}:
                continue
            if all(compatible[a][b] for a, b in itertools.combinations(combo, 2)):
                return list(combo)
    return None


def _distance2_table(g: Graph, edges: list[Edge]) -> dict[Edge, dict[Edge, bool]]:
    """Pairwise edge-distance >= 2 predicate over the given edges."""
    dist = {}
    for e in edges:
        for x in e:
            if x not in dist:
                dist[x] = distances_from(g, x)
    table: dict[Edge, dict[Edge, bool]] = {e: {} for e in edges}
    for e, f in itertools.combinations(edges, 2):
        ok = min(dist[x][y] for x in e for y in f) >= 2
        table[e][f] = ok
        table[f][e] = ok
    return table


@dataclass(frozen=True)
class BlockedHubInstance:
    """A provably non-extendable one-color prescription around a hub."""

    product: ProductGraph
    precoloring: Precoloring
    hub: int
    g_matching: tuple[Edge, ...]
    h_matching: tuple[Edge, ...]


@dataclass(frozen=True)
class ObstructionCertificate:
    """A search-free proof of non-extendability at a saturated vertex.

    The hub has exactly palette-many incident edges, so each palette color
    must appear on one of them; yet every incident edge is adjacent to a
    prescribed edge of the blocked color and none of them is prescribed
    that color itself.
    """

    hub: int
    blocked_color: int
    witnesses: dict[Edge, Edge] = field(repr=False)


def build_blocked_hub_instance(g: Graph, h: Graph) -> BlockedHubInstance:
    """Construct the non-extendable prescription in G box H.

    Needs, in both factors, a maximum-degree vertex whose neighborhood is
    covered by an induced matching; the lowest-index qualifying vertex and
    the smallest covering matching are used, all entries get color 1.
    """
    bipartition(g)
    bipartition(h)
    a, mg = _hub_and_cover(g, "left factor")
    b, mh = _hub_and_cover(h, "right factor")
    product = cartesian_product(g, h)
    width = h.n
    hub = a * width + b
    entries: dict[Edge, int] = {}
    for (c, d) in mg:
        entries[canonical_edge(c * width + b, d * width + b)] = 1
    for (k, l) in mh:
        entries[canonical_edge(a * width + k, a * width + l)] = 1
    palette = max_degree(g) + max_degree(h)
    pre = Precoloring(palette_size=palette, entries=entries)

    if product.graph.degree(hub) != palette:
        raise ProofInvariantError("hub degree differs from the palette size")
    if not validate_precoloring(product, pre).ok:
        raise ProofInvariantError("blocked-hub instance is not a distance-2 matching")
    return BlockedHubInstance(
        product=product,
        precoloring=pre,
        hub=hub,
        g_matching=tuple(mg),
        h_matching=tuple(mh),
    )


def _hub_and_cover(g: Graph, which: str) -> tuple[int, list[Edge]]:
    delta = max_degree(g)
    for v in range(g.n):
        if g.degree(v) != delta:
            continue
        cover = find_covering_induced_matching(g, v)
        if cover is not None:
            return v, cover
    raise InapplicableError(
        f"{which}: no maximum-degree vertex has a covering induced matching"
    )


def check_local_obstruction(
    p: ProductGraph | Graph, pre: Precoloring
) -> ObstructionCertificate | None:
    """Search saturated vertices for a color blocked on every incident edge."""
    g = p.graph if isinstance(p, ProductGraph) else p
    entries = {g.check_edge(e): c for e, c in pre.entries.items()}
    by_color: dict[int, list[Edge]] = {}
    for e, c in sorted(entries.items()):
        by_color.setdefault(c, []).append(e)
    for w in range(g.n):
        if g.degree(w) != pre.palette_size:
            continue
        incident = g.incident_edges(w)
        for color, colored in sorted(by_color.items()):
            if any(entries.get(e) == color for e in incident):
                continue
            witnesses: dict[Edge, Edge] = {}
            for e in incident:
                witness = next(
                    (f for f in colored if f != e and not set(e).isdisjoint(f)), None
                )
                if witness is None:
                    break
                witnesses[e] = witness
            else:
                return ObstructionCertificate(hub=w, blocked_color=color, witnesses=witnesses)
    return None


@dataclass(frozen=True)
class ExplorationReport:
    """Outcome of an extendability sweep over one product."""

    instances: int
    extendable: int
    counterexamples: tuple[dict, ...]
    budget_used: int
    seed: int
    exhaustive: bool


def explore_bipartite_factor(
    g: Graph,
    n: int,
    m: int,
    budget: int,
    seed: int = 0,
) -> ExplorationReport:
    """Sweep precolored distance-2 matchings of G box K_{n,m} (n >= m) with
    palette max_degree(G) + n, deciding each exactly.

    Exhaustive when the instance count fits the budget; otherwise a seeded
    uniform sample of budget instances (weighted by colorings per matching),
    flagged non-exhaustive. Counterexamples are returned serialized.
    """
    if n < m or m < 1:
        raise BadParameterError("needs n >= m >= 1")
    if budget < 1:
        raise BadParameterError("budget must be positive")
    bipartition(g)
    product = cartesian_product(g, complete_bipartite(n, m))
    palette = max_degree(g) + n
    matchings = _all_distance2_matchings(product.graph)
    total = sum(palette ** len(mt) for mt in matchings)

    decided = 0
    extendable = 0
    counterexamples: list[dict] = []

    def run(matching: tuple[Edge, ...], colors: tuple[int, ...]) -> None:
        nonlocal decided, extendable
        pre = Precoloring(palette_size=palette, entries=dict(zip(matching, colors)))
        witness = decide_extendable(product.graph, pre, palette)
        decided += 1
        if witness is not None:
            extendable += 1
        else:
            counterexamples.append(
                {
                    "palette_size": palette,
                    "entries": [
                        {"u": e[0], "v": e[1], "color": c}
                        for e, c in sorted(pre.entries.items())
                    ],
                }
            )

    exhaustive = total <= budget
    if exhaustive:
        for matching in matchings:
            for colors in itertools.product(range(1, palette + 1), repeat=len(matching)):
                run(matching, colors)
    else:
        rng = random.Random(seed)
        weights = [palette ** len(mt) for mt in matchings]
        for matching in rng.choices(matchings, weights=weights, k=budget):
            colors = tuple(rng.randint(1, palette) for _ in matching)
            run(matching, colors)
    return ExplorationReport(
        instances=decided,
        extendable=extendable,
        counterexamples=tuple(counterexamples),
        budget_used=decided,
        seed=seed,
        exhaustive=exhaustive,
    )


def _all_distance2_matchings(g: Graph) -> list[tuple[Edge, ...]]:
    """Every distance-2 matching of g, the empty one included."""
    edges = list(g.edges)
    compatible = _distance2_table(g, edges)
    out: list[tuple[Edge, ...]] = []

    def grow(prefix: list[Edge], start: int) -> None:
        out.append(tuple(prefix))
        for i in range(start, len(edges)):
            e = edges[i]
            if all(compatible[f][e] for f in prefix):
                prefix.append(e)
                grow(prefix, i + 1)
                prefix.pop()

    grow([], 0)
    return out
