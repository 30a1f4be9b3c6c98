"""Shared test machinery: small-graph catalogs, brute-force oracles, seeded
instance generators.

The brute-force searchers here are deliberately primitive (fixed edge order,
no pruning heuristics) so they stay independent of the library's engines.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from edgex import (
    Graph,
    ListAssignment,
    Precoloring,
    build_graph,
    canonical_edge,
    max_degree,
)
from edgex.graph import distances_from


# ---------------------------------------------------------------------------
# catalog of small connected bipartite graphs, one per isomorphism class


def _canonical_form(n: int, edges: tuple) -> tuple:
    """Minimum relabeled edge tuple over refinement-respecting permutations."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(color[v], tuple(sorted(color[w] for w in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[sig[v]] for v in range(n)]
        if new == color:
            break
        color = new
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(color[v], []).append(v)
    ordered = [classes[c] for c in sorted(classes)]
    starts = []
    pos = 0
    for cls in ordered:
        starts.append(pos)
        pos += len(cls)
    best = None
    for parts in itertools.product(*(itertools.permutations(cls) for cls in ordered)):
        mapping = {}
        for start, part in zip(starts, parts):
            for off, v in enumerate(part):
                mapping[v] = start + off
        relabeled = tuple(sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in edges))
        if best is None or relabeled < best:
            best = relabeled
    return (n, best)


def _is_bipartite(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [None] * n
    for root in range(n):
        if side[root] is not None:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] is None:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def connected_bipartite_catalog(max_edges: int = 7) -> list[Graph]:
    """All connected bipartite graphs with 1..max_edges edges, one graph per
    isomorphism class, grown edge by edge from K_2."""
    seed = (2, ((0, 1),))
    seen = {_canonical_form(*seed): seed}
    frontier = [seed]
    for _ in range(max_edges - 1):
        next_frontier = []
        for (n, edges) in frontier:
            have = set(edges)
            candidates = []
            for u in range(n):
                for v in range(u + 1, n):
                    if (u, v) not in have:
                        candidates.append((n, tuple(sorted(have | {(u, v)}))))
                candidates.append((n + 1, tuple(sorted(have | {(u, n)}))))
            for n2, edges2 in candidates:
                if not _is_bipartite(n2, edges2):
                    continue
                key = _canonical_form(n2, edges2)
                if key not in seen:
                    seen[key] = (n2, edges2)
                    next_frontier.append((n2, edges2))
        frontier = next_frontier
    return [build_graph([f"v{i}" for i in range(n)], edges) for (n, edges) in sorted(seen.values())]


def small_bipartite_graphs(max_vertices: int = 5) -> list[Graph]:
    """Every labeled bipartite graph on up to max_vertices vertices."""
    out = []
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for of in range(1 << len(pairs)):
            edges = tuple(pairs[i] for i in range(len(pairs)) if of >> i & 1)
            if _is_bipartite(n, edges):
                out.append(build_graph([f"v{i}" for i in range(n)], edges))
    return out


# ---------------------------------------------------------------------------
# brute-force oracles (fixed canonical edge order, no heuristics)


def brute_force_list_coloring(g: Graph, lists: ListAssignment):
    """First proper in-list coloring in lexicographic order, or None."""
    edges = list(g.edges)

    def ok(assignment, e, c):
        return all(
            assignment.get(f) != c
            for v in e
            for f in g.incident_edges(v)
            if f != e
        )

    def walk(i, assignment):
        if i == len(edges):
            return dict(assignment)
        e = edges[i]
        for c in lists.lists[e]:
            if ok(assignment, e, c):
                assignment[e] = c
                found = walk(i + 1, assignment)
                if found is not None:
                    return found
                del assignment[e]
        return None

    return walk(0, {})


def enumerate_all_list_colorings(g: Graph, lists: ListAssignment):
    """Every proper in-list coloring, by full cartesian enumeration."""
    edges = list(g.edges)
    out = []
    for combo in itertools.product(*(lists.lists[e] for e in edges)):
        assignment = dict(zip(edges, combo))
        proper = all(
            assignment[e] != assignment[f]
            for e in edges
            for v in e
            for f in g.incident_edges(v)
            if f != e
        )
        if proper:
            out.append(assignment)
    return out


def brute_force_extendable(g: Graph, pre: Precoloring, palette: int):
    """First proper palette-coloring extending pre, canonical order, or None."""
    lists = {
        e: (pre.entries[e],) if e in pre.entries else tuple(range(1, palette + 1))
        for e in g.edges
    }
    demand = {e: 1 for e in g.edges}
    return brute_force_list_coloring(g, ListAssignment(lists=lists, demand=demand))


# ---------------------------------------------------------------------------
# seeded random instance generators


def random_connected_bipartite(rng: random.Random, max_n: int = 12, max_degree_cap: int = 4) -> Graph:
    """Random connected bipartite graph: random tree plus a few cross edges."""
    n = rng.randint(2, max_n)
    side = [0] * n
    edges = set()
    degree = [0] * n
    for v in range(1, n):
        candidates = [u for u in range(v) if degree[u] < max_degree_cap]
        if not candidates:
            candidates = list(range(v))
        u = rng.choice(candidates)
        edges.add(canonical_edge(u, v))
        degree[u] += 1
        degree[v] += 1
        side[v] = 1 - side[u]
    extra = rng.randint(0, n // 2)
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        e = canonical_edge(u, v)
        if (
            u != v
            and side[u] != side[v]
            and e not in edges
            and degree[u] < max_degree_cap
            and degree[v] < max_degree_cap
        ):
            edges.add(e)
            degree[u] += 1
            degree[v] += 1
    return build_graph([f"v{i}" for i in range(n)], sorted(edges))


def random_tree(rng: random.Random, max_n: int = 8) -> Graph:
    n = rng.randint(2, max_n)
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    return build_graph([f"v{i}" for i in range(n)], pairs)


def random_distance2_matching(
    rng: random.Random, g: Graph, max_size: int
) -> list:
    """Greedy random distance-2 matching of at most max_size edges."""
    pool = list(g.edges)
    rng.shuffle(pool)
    chosen = []
    dist_cache = {}

    def dist_from(v):
        if v not in dist_cache:
            dist_cache[v] = distances_from(g, v)
        return dist_cache[v]

    for e in pool:
        if len(chosen) >= max_size:
            break
        if all(min(dist_from(x)[y] for x in f for y in e) >= 2 for f in chosen):
            chosen.append(e)
    return chosen


def random_valid_precoloring(
    rng: random.Random, g: Graph, palette: int, max_size: int
) -> Precoloring:
    matching = random_distance2_matching(rng, g, max_size)
    return Precoloring(
        palette_size=palette,
        entries={e: rng.randint(1, palette) for e in matching},
    )


def complete_factor_palette(g: Graph, m: int) -> int:
    return max_degree(g) + 2 * m - 1
