"""Immutable simple undirected graphs with the distance metrics used throughout.

Vertices are dense indices 0..n-1 carrying text labels. Edges are canonical
pairs (u, v) with u < v, kept in lexicographic order so every derived
structure (adjacency, colorings, serializations) is deterministic.

Infinite distance (between components) is represented by ``math.inf``, never
by a sentinel integer, so accidental arithmetic on disconnected inputs
surfaces as a float instead of a silently wrong count.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    DuplicateEdgeError,
    NotBipartiteError,
    SelfLoopError,
    UnknownEdgeError,
    VertexIndexError,
)

Edge = tuple[int, int]

SIDE_X = "X"
SIDE_Y = "Y"


def canonical_edge(u: int, v: int) -> Edge:
    """Return the unordered pair as (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; immutable after construction."""

    labels: tuple[str, ...]
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]
    edge_set: frozenset[Edge] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexIndexError(f"vertex {v} not in 0..{self.n - 1}")

    def check_edge(self, e: Edge) -> Edge:
        e = canonical_edge(*e)
        if e not in self.edge_set:
            raise UnknownEdgeError(f"edge {e} not in graph")
        return e

    def incident_edges(self, v: int) -> list[Edge]:
        return [canonical_edge(v, w) for w in self.adjacency[v]]


@dataclass(frozen=True)
class Bipartition:
    """Per-vertex side flags; the lowest vertex of each component sits in X."""

    side: tuple[str, ...]

    def is_x(self, v: int) -> bool:
        return self.side[v] == SIDE_X

    def x_vertices(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == SIDE_X]


def build_graph(labels, pairs) -> Graph:
    """Build a Graph from vertex labels and unordered index pairs.

    Pairs are canonicalized to (min, max); duplicates (in either order) and
    self-loops are rejected. Adjacency lists come out sorted, so identical
    input always yields an identical graph.
    """
    labels = tuple(str(x) for x in labels)
    n = len(labels)
    seen: set[Edge] = set()
    for u, v in pairs:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexIndexError(f"edge ({u}, {v}) out of range 0..{n - 1}")
        e = canonical_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"edge {e} supplied twice")
        seen.add(e)
    edges = tuple(sorted(seen))
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
    return Graph(labels=labels, edges=edges, adjacency=adjacency, edge_set=frozenset(edges))


def bipartition(g: Graph) -> Bipartition:
    """2-color the vertices, or raise NotBipartiteError with an odd cycle.

    Deterministic: components are scanned in index order and the lowest
    vertex of each lands in X.
    """
    side: list[str | None] = [None] * g.n
    parent: list[int] = [-1] * g.n
    for root in range(g.n):
        if side[root] is not None:
            continue
        side[root] = SIDE_X
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] is None:
                    side[w] = SIDE_Y if side[u] == SIDE_X else SIDE_X
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    raise NotBipartiteError(_odd_cycle(parent, u, w))
    return Bipartition(side=tuple(side))


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    """Reconstruct the odd cycle closed by the conflicting edge (u, w)."""
    path_u = _root_path(parent, u)
    path_w = _root_path(parent, w)
    shared = 0
    while shared < min(len(path_u), len(path_w)) and path_u[shared] == path_w[shared]:
        shared += 1
    # paths from the last common ancestor plus the closing edge u-w
    return path_u[shared - 1:][::-1] + path_w[shared:]


def _root_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path[::-1]


def vertex_distance(g: Graph, u: int, v: int) -> int | float:
    """BFS shortest-path length; math.inf across components."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adjacency[x]:
            if w not in dist:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return math.inf


def distances_from(g: Graph, u: int) -> list[int | float]:
    """Single-source BFS distances; math.inf where unreachable."""
    g.check_vertex(u)
    dist: list[int | float] = [math.inf] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adjacency[x]:
            if dist[w] == math.inf:
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


def edge_distance(g: Graph, e: Edge, f: Edge) -> int | float:
    """min over the four endpoint distances; 0 iff the edges share a vertex."""
    e = g.check_edge(e)
    f = g.check_edge(f)
    x, y = e
    z, w = f
    from_x = distances_from(g, x)
    from_y = distances_from(g, y)
    return min(from_x[z], from_x[w], from_y[z], from_y[w])


def max_degree(g: Graph) -> int:
    return max((len(ns) for ns in g.adjacency), default=0)


def adjacent_edges(e: Edge, f: Edge) -> bool:
    """True when the two canonical edges share an endpoint."""
    return not set(e).isdisjoint(f)
