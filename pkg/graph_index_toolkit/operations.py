"""Explicit construction of graph operations.

Every constructor materializes the result graph and checks the operation's
degree rule on all of its vertices before returning it.

Vertex labeling:
    - Binary products: vertex (a, b) maps to a * n2 + b (row-major).
      k-ary products are left folds, so the row-major rule extends to
      tuples.
    - Union, join, link, bridge: operands are relabeled by offset, in
      argument order.
    - Corona: vertices of G1 keep their indices; vertex j of the i-th copy
      of G2 becomes n1 + i * n2 + j.
    - Splice: vertices of G1 keep their indices; vertices of G2 other than
      the root follow in index order.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, List, Sequence, Tuple

from .graph import Edge, Graph, RootedGraph, check_degrees, make_graph


@dataclass(frozen=True)
class PairIndexing:
    """Row-major bijection between [0, n1) x [0, n2) and [0, n1 * n2)."""
    n1: int
    n2: int

    def index(self, a: int, b: int) -> int:
        return a * self.n2 + b

    def pair(self, v: int) -> Tuple[int, int]:
        return divmod(v, self.n2)

    @property
    def size(self) -> int:
        return self.n1 * self.n2


@dataclass(frozen=True)
class VertexSubset:
    """Nonempty subset U of the second operand's vertices."""
    members: frozenset

    def __init__(self, members: Iterable[int]):
        members = frozenset(members)
        if not members:
            raise ValueError("Vertex subset must be nonempty")
        if any(v < 0 for v in members):
            raise ValueError(f"Vertex subset has negative members: {sorted(members)}")
        object.__setattr__(self, 'members', members)

    def check_within(self, n: int) -> None:
        """Raise ValueError if a member is not a vertex of an n-vertex graph."""
        outside = sorted(v for v in self.members if v >= n)
        if outside:
            raise ValueError(f"Vertex subset members {outside} out of range [0, {n})")

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)


def _require_operands(gs: Sequence, what: str) -> None:
    if not gs:
        raise ValueError(f"{what} needs at least one operand")


def _require_nonempty(*gs: Graph) -> None:
    for g in gs:
        if g.n == 0:
            raise ValueError("Operand graph must have at least one vertex")


def _offsets(gs: Sequence[Graph]) -> List[int]:
    offsets = []
    total = 0
    for g in gs:
        offsets.append(total)
        total += g.n
    return offsets


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Union of graphs with vertex sets made disjoint by offsetting."""
    _require_operands(gs, "Union")
    offsets = _offsets(gs)
    edges = [(u + off, v + off) for g, off in zip(gs, offsets) for u, v in g.edges]
    result = make_graph(sum(g.n for g in gs), edges)
    check_degrees(result, [d for g in gs for d in g.degrees], "union")
    return result


def join(gs: Sequence[Graph]) -> Graph:
    """Join: disjoint union plus every edge between different operands.

    Degree rule: d(v) = d_i(v) + n - n_i for v from operand i.
    """
    _require_operands(gs, "Join")
    offsets = _offsets(gs)
    n = sum(g.n for g in gs)
    edges = [(u + off, v + off) for g, off in zip(gs, offsets) for u, v in g.edges]
    for i, j in combinations(range(len(gs)), 2):
        for a in range(gs[i].n):
            for b in range(gs[j].n):
                edges.append((offsets[i] + a, offsets[j] + b))
    result = make_graph(n, edges)
    check_degrees(result, [d + n - g.n for g in gs for d in g.degrees], "join")
    return result


def _product(g1: Graph, g2: Graph,
             adjacent: Callable[[int, int, int, int], bool]) -> List[Edge]:
    """Enumerate product edges by testing every pair of product vertices."""
    idx = PairIndexing(g1.n, g2.n)
    edges = []
    for p, q in combinations(range(idx.size), 2):
        a, b = idx.pair(p)
        u, v = idx.pair(q)
        if adjacent(a, b, u, v):
            edges.append((p, q))
    return edges


def _cartesian2(g1: Graph, g2: Graph) -> Graph:
    idx = PairIndexing(g1.n, g2.n)
    edges = []
    for a in range(g1.n):
        for u, v in g2.edges:
            edges.append((idx.index(a, u), idx.index(a, v)))
    for b in range(g2.n):
        for u, v in g1.edges:
            edges.append((idx.index(u, b), idx.index(v, b)))
    result = make_graph(idx.size, edges)
    check_degrees(result, [d1 + d2 for d1 in g1.degrees for d2 in g2.degrees], "cartesian")
    return result


def cartesian_product(gs: Sequence[Graph]) -> Graph:
    """Cartesian product of one or more graphs, as a left fold."""
    _require_operands(gs, "Cartesian product")
    _require_nonempty(*gs)
    result = gs[0]
    for g in gs[1:]:
        result = _cartesian2(result, g)
    return result


def composition(g1: Graph, g2: Graph) -> Graph:
    """Composition (lexicographic product) G1[G2].

    Degree rule: d(a, b) = n2 * d1(a) + d2(b).
    """
    _require_nonempty(g1, g2)
    idx = PairIndexing(g1.n, g2.n)
    edges = []
    for u, v in g1.edges:
        for x in range(g2.n):
            for y in range(g2.n):
                edges.append((idx.index(u, x), idx.index(v, y)))
    for a in range(g1.n):
        for x, y in g2.edges:
            edges.append((idx.index(a, x), idx.index(a, y)))
    result = make_graph(idx.size, edges)
    check_degrees(result, [g2.n * d1 + d2 for d1 in g1.degrees for d2 in g2.degrees],
                  "composition")
    return result


def tensor_product(g1: Graph, g2: Graph) -> Graph:
    """Tensor (Kronecker) product; may be disconnected.

    Degree rule: d(a, b) = d1(a) * d2(b).
    """
    _require_nonempty(g1, g2)
    idx = PairIndexing(g1.n, g2.n)
    edges = []
    for u1, v1 in g1.edges:
        for u2, v2 in g2.edges:
            edges.append((idx.index(u1, u2), idx.index(v1, v2)))
            edges.append((idx.index(u1, v2), idx.index(v1, u2)))
    result = make_graph(idx.size, edges)
    check_degrees(result, [d1 * d2 for d1 in g1.degrees for d2 in g2.degrees], "tensor")
    return result


def strong_product(g1: Graph, g2: Graph) -> Graph:
    """Strong product: union of Cartesian and tensor adjacency.

    Degree rule: d(a, b) = d1(a) + d2(b) + d1(a) * d2(b).
    """
    _require_nonempty(g1, g2)
    edges = set(_cartesian2(g1, g2).edges) | set(tensor_product(g1, g2).edges)
    result = make_graph(g1.n * g2.n, edges)
    check_degrees(result, [d1 + d2 + d1 * d2 for d1 in g1.degrees for d2 in g2.degrees],
                  "strong")
    expected_m = g2.n * g1.m + g1.n * g2.m + 2 * g1.m * g2.m
    if result.m != expected_m:
        raise AssertionError(f"strong: {result.m} edges, expected {expected_m}")
    return result


def corona(g1: Graph, g2: Graph) -> Graph:
    """Corona G1 (.) G2: n1 copies of G2, copy i joined to vertex i of G1."""
    _require_nonempty(g1)
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges)
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + u, base + v) for u, v in g2.edges)
        edges.extend((i, base + j) for j in range(n2))
    result = make_graph(n1 * (n2 + 1), edges)
    expected_m = g1.m + n1 * g2.m + n1 * n2
    if result.m != expected_m:
        raise AssertionError(f"corona: {result.m} edges, expected {expected_m}")
    check_degrees(result,
                  [d + n2 for d in g1.degrees] + [d + 1 for d in g2.degrees] * n1,
                  "corona")
    return result


def t_thorn(g: Graph, t: int) -> Graph:
    """Attach t pendant vertices to every vertex of g.

    Raises:
        ValueError: If t < 1
    """
    if t < 1:
        raise ValueError(f"Thorn count must be at least 1, got {t}")
    return corona(g, make_graph(t, []))


def hierarchical(g1: Graph, g2: Graph, u: VertexSubset) -> Graph:
    """Generalized hierarchical product G1 Pi G2(U).

    (a, b) ~ (a, b') when bb' is an edge of G2; (a, b) ~ (a', b) when
    b is in U and aa' is an edge of G1. With U = V(G2) the result equals
    the Cartesian product, labeling included.
    """
    _require_nonempty(g1, g2)
    u.check_within(g2.n)
    idx = PairIndexing(g1.n, g2.n)
    edges = []
    for a in range(g1.n):
        for x, y in g2.edges:
            edges.append((idx.index(a, x), idx.index(a, y)))
    for b in sorted(u.members):
        for x, y in g1.edges:
            edges.append((idx.index(x, b), idx.index(y, b)))
    result = make_graph(idx.size, edges)
    check_degrees(result,
                  [d1 + d2 if b in u else d2
                   for d1 in g1.degrees
                   for b, d2 in enumerate(g2.degrees)],
                  "hierarchical")
    return result


def cluster(g1: Graph, g2: RootedGraph) -> Graph:
    """Cluster product G1{G2}: hierarchical product with U = {root}."""
    return hierarchical(g1, g2.graph, VertexSubset([g2.root]))


def disjunction(g1: Graph, g2: Graph) -> Graph:
    """Disjunction: (a, b) ~ (u, v) iff au in E1 or bv in E2.

    Degree rule: d(a, b) = n2 * d1(a) + n1 * d2(b) - d1(a) * d2(b).
    """
    _require_nonempty(g1, g2)
    edges = _product(g1, g2, lambda a, b, u, v: g1.has_edge(a, u) or g2.has_edge(b, v))
    result = make_graph(g1.n * g2.n, edges)
    check_degrees(result,
                  [g2.n * d1 + g1.n * d2 - d1 * d2 for d1 in g1.degrees for d2 in g2.degrees],
                  "disjunction")
    return result


def symmetric_difference(g1: Graph, g2: Graph) -> Graph:
    """Symmetric difference: (a, b) ~ (u, v) iff exactly one of au in E1, bv in E2.

    Degree rule: d(a, b) = n2 * d1(a) + n1 * d2(b) - 2 * d1(a) * d2(b).
    """
    _require_nonempty(g1, g2)
    edges = _product(g1, g2, lambda a, b, u, v: g1.has_edge(a, u) != g2.has_edge(b, v))
    result = make_graph(g1.n * g2.n, edges)
    check_degrees(result,
                  [g2.n * d1 + g1.n * d2 - 2 * d1 * d2 for d1 in g1.degrees for d2 in g2.degrees],
                  "symmetric difference")
    return result


def splice(r1: RootedGraph, r2: RootedGraph) -> Graph:
    """Identify the root of r2 with the root of r1."""
    g1, g2 = r1.graph, r2.graph
    relabel = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == r2.root:
            relabel[v] = r1.root
        else:
            relabel[v] = nxt
            nxt += 1
    edges = list(g1.edges) + [(relabel[u], relabel[v]) for u, v in g2.edges]
    result = make_graph(g1.n + g2.n - 1, edges)
    expected = list(g1.degrees)
    expected[r1.root] += r2.root_degree
    expected.extend(d for v, d in enumerate(g2.degrees) if v != r2.root)
    check_degrees(result, expected, "splice")
    return result


def link(r1: RootedGraph, r2: RootedGraph) -> Graph:
    """Join the root of r1 and the root of r2 by a new edge."""
    g1, g2 = r1.graph, r2.graph
    edges = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    edges.append((r1.root, g1.n + r2.root))
    result = make_graph(g1.n + g2.n, edges)
    if result.m != g1.m + g2.m + 1:
        raise AssertionError(f"link: {result.m} edges, expected {g1.m + g2.m + 1}")
    expected = list(g1.degrees) + list(g2.degrees)
    expected[r1.root] += 1
    expected[g1.n + r2.root] += 1
    check_degrees(result, expected, "link")
    return result


def bridge(rs: Sequence[RootedGraph]) -> Graph:
    """Chain rooted graphs, joining consecutive roots by an edge."""
    _require_operands(rs, "Bridge")
    if len(rs) == 1:
        return rs[0].graph
    gs = [r.graph for r in rs]
    offsets = _offsets(gs)
    edges = [(u + off, v + off) for g, off in zip(gs, offsets) for u, v in g.edges]
    roots = [off + r.root for r, off in zip(rs, offsets)]
    edges.extend(zip(roots, roots[1:]))
    result = make_graph(sum(g.n for g in gs), edges)
    if result.m != sum(g.m for g in gs) + len(rs) - 1:
        raise AssertionError(f"bridge: unexpected edge count {result.m}")
    expected = [d for g in gs for d in g.degrees]
    for i, root in enumerate(roots):
        expected[root] += 1 if i in (0, len(roots) - 1) else 2
    check_degrees(result, expected, "bridge")
    return result
