"""Graph data model and degree-based indices.

A ``Graph`` is an immutable simple undirected graph on the vertices
``0..n-1``. Edges are stored as a sorted tuple of ``(u, v)`` pairs with
``u < v`` so two graphs with the same labeling compare equal.

All index values are exact Python integers.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

# Index values are exact, arbitrary precision integers; they cannot wrap.
IndexValue = int

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    Attributes:
        n: Number of vertices
        edges: Sorted tuple of (u, v) pairs with u < v
    """
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        """Validate the canonical edge representation."""
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"Vertex count must be a nonnegative integer, got {self.n!r}")
        prev = None
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"Edge ({u}, {v}) is not a canonical pair for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("Edges must be sorted and free of duplicates")
            prev = (u, v)

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """Degree of every vertex, indexed by vertex."""
        counts = [0] * self.n
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return tuple(counts)

    @cached_property
    def _adjacency(self) -> Tuple[frozenset, ...]:
        nbrs: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> frozenset:
        """Return the set of vertices adjacent to v."""
        _check_vertex(self, v)
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if u and v are adjacent."""
        _check_vertex(self, u)
        return v in self._adjacency[u]


@dataclass(frozen=True)
class RootedGraph:
    """A graph with one distinguished vertex."""
    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"Root {self.root} out of range for graph with {self.graph.n} vertices")

    @property
    def root_degree(self) -> int:
        return self.graph.degrees[self.root]


@dataclass(frozen=True)
class GraphSummary:
    """The invariants (n, m, M1, F) consumed by the closed-form evaluators."""
    n: int
    m: int
    m1: IndexValue
    f: IndexValue

    def __post_init__(self):
        for name in ('n', 'm', 'm1', 'f'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"Summary field '{name}' must be a nonnegative integer, got {value!r}")

    @classmethod
    def parse(cls, text: str) -> 'GraphSummary':
        """Parse the comma-separated form "n,m,M1,F"."""
        parts = [p.strip() for p in text.split(',')]
        if len(parts) != 4:
            raise ValueError(f"Summary must have the form n,m,M1,F, got '{text}'")
        try:
            n, m, m1, f = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"Summary fields must be integers, got '{text}'") from None
        return cls(n=n, m=m, m1=m1, f=f)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"Vertex {v} out of range [0, {g.n})")


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex pairs.

    Duplicate pairs are collapsed and every pair is stored smaller index first.

    Raises:
        ValueError: If an endpoint is out of range or a pair is a self-loop
    """
    if n < 0:
        raise ValueError(f"Vertex count must be nonnegative, got {n}")
    canonical = set()
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"Edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"Self-loop at vertex {u}")
        canonical.add((u, v) if u < v else (v, u))
    g = Graph(n=n, edges=tuple(sorted(canonical)))
    check_handshake(g)
    return g


def degree(g: Graph, v: int) -> int:
    """Return the number of edges incident to v."""
    _check_vertex(g, v)
    return g.degrees[v]


def f_index(g: Graph) -> IndexValue:
    """F-index (forgotten index): sum of cubed vertex degrees."""
    return sum(d ** 3 for d in g.degrees)


def f_index_edge_sum(g: Graph) -> IndexValue:
    """F-index computed over edges as the sum of d(u)^2 + d(v)^2."""
    deg = g.degrees
    return sum(deg[u] ** 2 + deg[v] ** 2 for u, v in g.edges)


def first_zagreb(g: Graph) -> IndexValue:
    """First Zagreb index M1.

    Computed both as the vertex sum of squared degrees and as the edge sum
    of d(u) + d(v); the two must agree.
    """
    deg = g.degrees
    vertex_sum = sum(d * d for d in deg)
    edge_sum = sum(deg[u] + deg[v] for u, v in g.edges)
    if vertex_sum != edge_sum:
        raise AssertionError(f"M1 vertex sum {vertex_sum} != edge sum {edge_sum}")
    return vertex_sum


def second_zagreb(g: Graph) -> IndexValue:
    """Second Zagreb index M2: sum over edges of d(u) * d(v)."""
    deg = g.degrees
    return sum(deg[u] * deg[v] for u, v in g.edges)


def summarize(g: Graph) -> GraphSummary:
    """Return (n, m, M1, F) of g."""
    return GraphSummary(n=g.n, m=g.m, m1=first_zagreb(g), f=f_index(g))


def to_networkx(g: Graph) -> nx.Graph:
    """Convert to a networkx graph with integer node labels 0..n-1."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_connected(g: Graph) -> bool:
    """True if g has a single connected component; the empty graph counts as connected."""
    if g.n == 0:
        return True
    return nx.is_connected(to_networkx(g))


def check_handshake(g: Graph) -> None:
    """Raise AssertionError unless the degree sum equals 2m."""
    total = sum(g.degrees)
    if total != 2 * g.m:
        raise AssertionError(f"Degree sum {total} != 2 * {g.m}")


def check_degrees(g: Graph, expected: Sequence[int], rule: str) -> None:
    """Compare every vertex degree of g against an expected degree rule.

    Args:
        g: Constructed graph
        expected: Expected degree per vertex
        rule: Name of the rule, used in the error message

    Raises:
        AssertionError: On the first vertex whose degree differs
    """
    if len(expected) != g.n:
        raise AssertionError(f"{rule}: expected {len(expected)} vertices, graph has {g.n}")
    for v, (actual, want) in enumerate(zip(g.degrees, expected)):
        if actual != want:
            raise AssertionError(f"{rule}: vertex {v} has degree {actual}, rule gives {want}")
