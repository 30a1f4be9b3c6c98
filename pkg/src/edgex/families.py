"""Standard graph families, the Cartesian product, and the star-in-cube map.

Product vertices (u, w) are indexed u * |V(H)| + w and labeled "u|w" from the
factor labels, so layer/fiber bookkeeping and serialization stay stable.
Hypercube vertices are labeled by bitstrings; vertex index i carries the
label ``format(i, "0db")`` and bit t means the bit of value 2**t. Under this
convention Q_d and Q_{d-1} x K_2 (split on the least significant bit) are the
same indexed graph, which the extension pipeline relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameterError
from .graph import Edge, Graph, build_graph, canonical_edge


@dataclass(frozen=True)
class LayerEdge:
    """Product edge (u,w)-(v,w): a copy of base edge uv inside layer w."""

    base_edge: Edge
    right_vertex: int


@dataclass(frozen=True)
class FiberEdge:
    """Product edge (u,w)-(u,z): a copy of right edge wz inside u's fiber."""

    base_vertex: int
    right_edge: Edge


@dataclass(frozen=True)
class ProductGraph:
    """A Cartesian product graph plus the classification of every edge."""

    graph: Graph
    left_order: int
    right_order: int
    edge_kind: dict[Edge, LayerEdge | FiberEdge]

    def factors(self, i: int) -> tuple[int, int]:
        """Split product vertex index i into its (left, right) coordinates."""
        return divmod(i, self.right_order)

    def vertex(self, u: int, w: int) -> int:
        return u * self.right_order + w


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameterError("complete graph needs n >= 1")
    labels = [f"v{i}" for i in range(n)]
    return build_graph(labels, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(n: int, m: int) -> Graph:
    if n < 1 or m < 1:
        raise BadParameterError("complete bipartite graph needs n, m >= 1")
    labels = [f"x{i}" for i in range(n)] + [f"y{j}" for j in range(m)]
    return build_graph(labels, [(i, n + j) for i in range(n) for j in range(m)])


def star(m: int) -> Graph:
    """K_{1,m}: center index 0, leaves 1..m."""
    if m < 1:
        raise BadParameterError("star needs m >= 1")
    labels = ["c"] + [f"l{t}" for t in range(1, m + 1)]
    return build_graph(labels, [(0, t) for t in range(1, m + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadParameterError("path needs n >= 1")
    labels = [f"p{i}" for i in range(n)]
    return build_graph(labels, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameterError("cycle needs n >= 3")
    labels = [f"c{i}" for i in range(n)]
    return build_graph(labels, [(i, (i + 1) % n) for i in range(n)])


def hypercube(d: int) -> Graph:
    """Q_d with vertices labeled by d-bit strings (empty label for d = 0)."""
    if d < 0:
        raise BadParameterError("hypercube needs d >= 0")
    n = 1 << d
    labels = [format(i, f"0{d}b") if d else "" for i in range(n)]
    pairs = [(i, i | (1 << b)) for i in range(n) for b in range(d) if not i & (1 << b)]
    return build_graph(labels, pairs)


def spider(legs: int, leg_length: int) -> Graph:
    """Center index 0 with `legs` paths of `leg_length` vertices hanging off it.

    With leg_length >= 2 the center is a maximum-degree vertex not adjacent
    to any leaf, the canonical host for non-extendable instances.
    """
    if legs < 1 or leg_length < 1:
        raise BadParameterError("spider needs legs >= 1 and leg_length >= 1")
    labels = ["c"] + [f"s{t}.{k}" for t in range(legs) for k in range(1, leg_length + 1)]
    pairs = []
    for t in range(legs):
        first = 1 + t * leg_length
        pairs.append((0, first))
        pairs.extend((first + k, first + k + 1) for k in range(leg_length - 1))
    return build_graph(labels, pairs)


_FAMILY_ARITY = {
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "path": 1,
    "cycle": 1,
    "hypercube": 1,
    "spider": 2,
}


def standard_family(kind: str, *params: int) -> Graph:
    """Dispatch on a family name; used by the CLI's `build` subcommand."""
    if kind not in _FAMILY_ARITY:
        raise BadParameterError(f"unknown family {kind!r}; expected one of {sorted(_FAMILY_ARITY)}")
    if len(params) != _FAMILY_ARITY[kind]:
        raise BadParameterError(f"family {kind!r} takes {_FAMILY_ARITY[kind]} parameter(s)")
    return globals()[kind](*params)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """G box H with every edge classified as a layer or fiber edge."""
    k = h.n
    labels = [f"{lu}|{lw}" for lu in g.labels for lw in h.labels]
    pairs: list[Edge] = []
    kind: dict[Edge, LayerEdge | FiberEdge] = {}
    for (u, v) in g.edges:
        for w in range(k):
            e = canonical_edge(u * k + w, v * k + w)
            pairs.append(e)
            kind[e] = LayerEdge(base_edge=(u, v), right_vertex=w)
    for u in range(g.n):
        for (w, z) in h.edges:
            e = canonical_edge(u * k + w, u * k + z)
            pairs.append(e)
            kind[e] = FiberEdge(base_vertex=u, right_edge=(w, z))
    graph = build_graph(labels, pairs)
    return ProductGraph(graph=graph, left_order=g.n, right_order=k, edge_kind=kind)


@dataclass(frozen=True)
class StarEmbedding:
    """The canonical induced copy of K_{1,m} inside Q_m.

    The center goes to the all-zero string and leaf t to the unit bitstring
    with bit t-1 set, i.e. hypercube vertex index 2**(t-1). Leaves sit at
    pairwise Hamming distance 2, so the image is induced.
    """

    m: int
    vertex_map: tuple[int, ...]

    def image(self, star_vertex: int) -> int:
        return self.vertex_map[star_vertex]


def embed_star_in_hypercube(m: int) -> StarEmbedding:
    if m < 1:
        raise BadParameterError("embedding needs m >= 1")
    return StarEmbedding(m=m, vertex_map=tuple([0] + [1 << (t - 1) for t in range(1, m + 1)]))
