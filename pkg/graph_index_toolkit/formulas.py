"""Closed-form F-index and M1 evaluators for graph operations.

Evaluators work on ``GraphSummary`` values (n, m, M1, F) and a few extra
degree aggregates; they never look at the graphs themselves. The
verification harness compares them against direct computation on the
explicitly constructed operation graphs.

Sums over distinct indices run over ordered tuples: the pair (i, j) and
(j, i) both contribute.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Dict, Sequence, Tuple

from .graph import Graph, GraphSummary, IndexValue, summarize
from .generators import FamilySpec
from .operations import VertexSubset

K1 = GraphSummary(n=1, m=0, m1=0, f=0)
K2 = GraphSummary(n=2, m=1, m1=2, f=2)


def empty_summary(n: int) -> GraphSummary:
    """Summary of the edgeless graph on n vertices."""
    return GraphSummary(n=n, m=0, m1=0, f=0)


@dataclass(frozen=True)
class HierarchicalExtras:
    """Degree aggregates over the subset U of the second operand.

    Attributes:
        u_size: |U|
        s1: sum of d2(v) over v in U
        s2: sum of d2(v)^2 over v in U
    """
    u_size: int
    s1: int
    s2: int

    def __post_init__(self):
        if self.u_size < 1:
            raise ValueError(f"|U| must be at least 1, got {self.u_size}")
        if self.s1 < 0 or self.s2 < 0:
            raise ValueError("Degree sums over U must be nonnegative")

    @classmethod
    def full(cls, s2: GraphSummary) -> 'HierarchicalExtras':
        """Extras for U = V(G2)."""
        return cls(u_size=s2.n, s1=2 * s2.m, s2=s2.m1)

    @classmethod
    def singleton(cls, root_degree: int) -> 'HierarchicalExtras':
        return cls(u_size=1, s1=root_degree, s2=root_degree ** 2)


def hierarchical_extras(g2: Graph, u: VertexSubset) -> HierarchicalExtras:
    """Compute the extras of subset u in graph g2."""
    u.check_within(g2.n)
    degs = [g2.degrees[v] for v in u.members]
    return HierarchicalExtras(u_size=len(degs), s1=sum(degs), s2=sum(d * d for d in degs))


@dataclass(frozen=True)
class RootDegreePair:
    """Degrees of the two identified or linked root vertices."""
    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 0 or self.d2 < 0:
            raise ValueError(f"Root degrees must be nonnegative, got ({self.d1}, {self.d2})")


def _exact(value: Fraction, what: str) -> IndexValue:
    if value.denominator != 1:
        raise AssertionError(f"{what} evaluated to non-integer {value}")
    return int(value)


def _nonnegative(value: int, what: str) -> IndexValue:
    if value < 0:
        raise AssertionError(f"{what} evaluated to negative {value}")
    return value


def _require(ss: Sequence, what: str) -> None:
    if not ss:
        raise ValueError(f"{what} needs at least one operand")


def f_union(fs: Sequence[IndexValue]) -> IndexValue:
    _require(fs, "Union formula")
    return sum(fs)


def f_join(ss: Sequence[GraphSummary]) -> IndexValue:
    """F of the join of k graphs, with n_bar_i = n - n_i."""
    _require(ss, "Join formula")
    n = sum(s.n for s in ss)
    total = 0
    for s in ss:
        n_bar = n - s.n
        total += s.f + 3 * n_bar * s.m1 + 6 * n_bar ** 2 * s.m + s.n * n_bar ** 3
    return total


def f_join_pair(s1: GraphSummary, s2: GraphSummary) -> IndexValue:
    """Two-graph join expansion."""
    return (s1.f + s2.f + 3 * s2.n * s1.m1 + 3 * s1.n * s2.m1
            + 6 * s2.n ** 2 * s1.m + 6 * s1.n ** 2 * s2.m
            + s1.n * s2.n ** 3 + s2.n * s1.n ** 3)


def f_join_copies(s: GraphSummary, p: int) -> IndexValue:
    """F of the join of p copies of one graph."""
    if p < 1:
        raise ValueError(f"Copy count must be at least 1, got {p}")
    n, m = s.n, s.m
    return (p * s.f + 3 * n * p * (p - 1) * s.m1 + 6 * n ** 2 * m * p * (p - 1) ** 2
            + n ** 4 * p * (p - 1) ** 3)


def f_suspension(s: GraphSummary) -> IndexValue:
    """F of K1 + G."""
    return s.f + 3 * s.m1 + s.n ** 3 + 6 * s.m + s.n


def _ratios(ss: Sequence[GraphSummary]) -> Tuple[int, list, list, list]:
    if any(s.n < 1 for s in ss):
        raise ValueError("Cartesian product operands must have at least one vertex")
    n = 1
    for s in ss:
        n *= s.n
    edge_ratio = [Fraction(s.m, s.n) for s in ss]
    m1_ratio = [Fraction(s.m1, s.n) for s in ss]
    f_ratio = [Fraction(s.f, s.n) for s in ss]
    return n, edge_ratio, m1_ratio, f_ratio


def m1_cartesian(ss: Sequence[GraphSummary]) -> IndexValue:
    """M1 of the Cartesian product of k graphs."""
    _require(ss, "Cartesian M1 formula")
    n, edge_ratio, m1_ratio, _ = _ratios(ss)
    k = len(ss)
    value = n * sum(m1_ratio) + 4 * n * sum(
        edge_ratio[i] * edge_ratio[j] for i, j in permutations(range(k), 2))
    return _exact(value, "Cartesian M1")


def f_cartesian(ss: Sequence[GraphSummary]) -> IndexValue:
    """F of the Cartesian product of k graphs."""
    _require(ss, "Cartesian formula")
    n, edge_ratio, m1_ratio, f_ratio = _ratios(ss)
    k = len(ss)
    value = (n * sum(f_ratio)
             + 6 * n * sum(m1_ratio[i] * edge_ratio[j] for i, j in permutations(range(k), 2))
             + 8 * n * sum(edge_ratio[p] * edge_ratio[q] * edge_ratio[r]
                           for p, q, r in permutations(range(k), 3)))
    return _exact(value, "Cartesian F")


def f_composition(s1: GraphSummary, s2: GraphSummary) -> IndexValue:
    """F of G1[G2]; not symmetric."""
    return (s2.n ** 4 * s1.f + s1.n * s2.f
            + 6 * s2.n ** 2 * s2.m * s1.m1 + 6 * s2.n * s1.m * s2.m1)


def f_tensor(f1: IndexValue, f2: IndexValue) -> IndexValue:
    return f1 * f2


def f_strong(s1: GraphSummary, s2: GraphSummary) -> IndexValue:
    """F of the strong product."""
    return (s2.n * s1.f + s1.n * s2.f + s1.f * s2.f
            + 6 * s2.m * s1.m1 + 6 * s1.m * s2.m1
            + 6 * s2.m * s1.f + 6 * s1.m * s2.f
            + 3 * s2.f * s1.m1 + 3 * s1.f * s2.m1
            + 6 * s1.m1 * s2.m1)


def f_corona(s1: GraphSummary, s2: GraphSummary) -> IndexValue:
    """F of the corona G1 (.) G2; not symmetric."""
    if s1.n < 1:
        raise ValueError("Corona needs a nonempty first operand")
    n1, n2 = s1.n, s2.n
    return (s1.f + n1 * s2.f + 3 * n2 * s1.m1 + 3 * n1 * s2.m1
            + 6 * n2 ** 2 * s1.m + 6 * n1 * s2.m + n1 * n2 * (n2 ** 2 + 1))


def f_bottleneck(s: GraphSummary) -> IndexValue:
    """F of the bottleneck graph K2 (.) G."""
    return 2 * s.f + 6 * s.m1 + 2 * s.n ** 3 + 6 * s.n ** 2 + 8 * s.n + 12 * s.m + 2


def f_thorn(s: GraphSummary, t: int) -> IndexValue:
    """F of the t-thorny graph."""
    if t < 1:
        raise ValueError(f"Thorn count must be at least 1, got {t}")
    return s.f + 3 * t * s.m1 + 6 * s.m * t ** 2 + s.n * t ** 3 + s.n * t


def f_hierarchical(s1: GraphSummary, f2: IndexValue, extras: HierarchicalExtras) -> IndexValue:
    """F of the generalized hierarchical product G1 Pi G2(U)."""
    return extras.u_size * s1.f + s1.n * f2 + 3 * s1.m1 * extras.s1 + 6 * s1.m * extras.s2


def f_cluster(s1: GraphSummary, s2: GraphSummary, root_degree: int) -> IndexValue:
    """F of the cluster product, x being the root of G2."""
    if root_degree < 0:
        raise ValueError(f"Root degree must be nonnegative, got {root_degree}")
    return s1.f + s1.n * s2.f + 3 * s1.m1 * root_degree + 6 * s1.m * root_degree ** 2


def f_disjunction(s1: GraphSummary, s2: GraphSummary) -> IndexValue:
    """F of the disjunction."""
    n1, n2 = s1.n, s2.n
    value = (n2 ** 4 * s1.f + n1 ** 4 * s2.f - s1.f * s2.f
             + 6 * n1 * n2 ** 2 * s2.m * s1.m1 + 6 * n1 ** 2 * n2 * s1.m * s2.m1
             + 3 * n2 * s1.f * s2.m1 + 3 * n1 * s2.f * s1.m1
             - 6 * n2 ** 2 * s2.m * s1.f - 6 * n1 ** 2 * s1.m * s2.f
             - 6 * n1 * n2 * s1.m1 * s2.m1)
    return _nonnegative(value, "Disjunction F")


def f_symmetric_difference(s1: GraphSummary, s2: GraphSummary) -> IndexValue:
    """F of the symmetric difference."""
    n1, n2 = s1.n, s2.n
    value = (n2 ** 4 * s1.f + n1 ** 4 * s2.f - 8 * s1.f * s2.f
             + 6 * n1 * n2 ** 2 * s2.m * s1.m1 + 6 * n1 ** 2 * n2 * s1.m * s2.m1
             + 12 * n2 * s1.f * s2.m1 + 12 * n1 * s2.f * s1.m1
             - 12 * n2 ** 2 * s2.m * s1.f - 12 * n1 ** 2 * s1.m * s2.f
             - 12 * n1 * n2 * s1.m1 * s2.m1)
    return _nonnegative(value, "Symmetric difference F")


def f_splice(f1: IndexValue, f2: IndexValue, roots: RootDegreePair) -> IndexValue:
    d1, d2 = roots.d1, roots.d2
    return f1 + f2 + 3 * d1 * d2 * (d1 + d2)


def f_link(f1: IndexValue, f2: IndexValue, roots: RootDegreePair) -> IndexValue:
    d1, d2 = roots.d1, roots.d2
    return f1 + f2 + 3 * (d1 + d2) + 3 * (d1 ** 2 + d2 ** 2) + 2


def _prod(values: Sequence[int]) -> int:
    result = 1
    for v in values:
        result *= v
    return result


def _f_multipartite(p: Sequence[int]) -> int:
    total = sum(p)
    return sum(mi * (total - mi) ** 3 for mi in p)


@dataclass(frozen=True)
class FamilyFormula:
    """Closed form of a family together with the parameter domain it holds on."""
    minimums: Tuple[int, ...]
    evaluate: Callable[[FamilySpec], IndexValue]


FAMILY_FORMULAS: Dict[str, FamilyFormula] = {
    'path': FamilyFormula((2,), lambda s: 8 * s.params[0] - 14),
    'cycle': FamilyFormula((3,), lambda s: 8 * s.params[0]),
    'complete': FamilyFormula((1,), lambda s: s.params[0] * (s.params[0] - 1) ** 3),
    'empty': FamilyFormula((1,), lambda s: 0),
    'complete_multipartite': FamilyFormula((1,), lambda s: _f_multipartite(s.params)),
    'wheel': FamilyFormula((3,), lambda s: s.params[0] ** 3 + 27 * s.params[0]),
    'fan': FamilyFormula((2,), lambda s: s.params[0] ** 3 + 27 * s.params[0] - 38),
    'windmill': FamilyFormula((1,), lambda s: 8 * s.params[0] ** 3 + 16 * s.params[0]),
    'cone': FamilyFormula((3, 1), lambda s: _f_cone(*s.params)),
    'hypercube': FamilyFormula((1,), lambda s: 2 ** s.params[0] * s.params[0] ** 3),
    'hamming': FamilyFormula((1,), lambda s: (sum(s.params) - len(s.params)) ** 3 * _prod(s.params)),
    'torus': FamilyFormula((3,), lambda s: 8 * len(s.params) ** 3 * _prod(s.params)),
    'nanotube_c4': FamilyFormula((2, 3), lambda s: 64 * s.params[0] * s.params[1] - 74 * s.params[1]),
    'grid': FamilyFormula((2, 2), lambda s: _f_grid(*s.params)),
    'fence': FamilyFormula((2,), lambda s: 250 * s.params[0] - 392),
    'closed_fence': FamilyFormula((3,), lambda s: 250 * s.params[0]),
    'thorny_cycle': FamilyFormula((3, 1), lambda s: _f_thorny_cycle(*s.params)),
    'thorny_path': FamilyFormula((2, 1), lambda s: _f_thorny_path(*s.params)),
    'bottleneck': FamilyFormula((), lambda s: f_bottleneck(summarize(s.base))),
    'bridge_b': FamilyFormula((2,), lambda s: 66 * s.params[0] - 74),
    'bridge_t3': FamilyFormula((2,), lambda s: 80 * s.params[0] - 74),
    'comb': FamilyFormula((2,), lambda s: 8 * s.params[0] ** 2 + 12 * s.params[0] - 38),
    'sun': FamilyFormula((3, 1), lambda s: 4 * s.params[0] * (2 * s.params[1] + 5)),
    'tensor_paths': FamilyFormula((2, 2), lambda s: (8 * s.params[0] - 14) * (8 * s.params[1] - 14)),
    'tensor_cycles': FamilyFormula((3, 3), lambda s: 64 * s.params[0] * s.params[1]),
    'tensor_completes': FamilyFormula((1, 1), lambda s: _f_tensor_completes(*s.params)),
    'tensor_path_cycle': FamilyFormula((2, 3), lambda s: 8 * s.params[1] * (8 * s.params[0] - 14)),
    'tensor_path_complete': FamilyFormula(
        (2, 1), lambda s: s.params[1] * (8 * s.params[0] - 14) * (s.params[1] - 1) ** 3),
    'tensor_cycle_complete': FamilyFormula(
        (3, 1), lambda s: 8 * s.params[0] * s.params[1] * (s.params[1] - 1) ** 3),
}


def _f_cone(m: int, n: int) -> int:
    return m * n ** 3 + m ** 3 * n + 6 * m * n ** 2 + 12 * m * n + 8 * m


def _f_grid(n: int, m: int) -> int:
    return 64 * m * n - 74 * m - 74 * n + 72


def _f_thorny_cycle(n: int, t: int) -> int:
    return n * t ** 3 + 6 * n * t ** 2 + 13 * n * t + 8 * n


def _f_thorny_path(n: int, t: int) -> int:
    return n * t ** 3 + 6 * n * t ** 2 - 6 * t ** 2 + 13 * n * t - 18 * t + 8 * n - 14


def _f_tensor_completes(n: int, m: int) -> int:
    return n * m * (n - 1) ** 3 * (m - 1) ** 3


def f_family(spec: FamilySpec) -> IndexValue:
    """Closed-form F of a named family.

    Raises:
        ValueError: If a parameter lies outside the domain of the closed form
    """
    formula = FAMILY_FORMULAS.get(spec.family)
    if formula is None:
        raise ValueError(f"No closed form for family: {spec.family}")
    for i, value in enumerate(spec.params):
        bound = formula.minimums[min(i, len(formula.minimums) - 1)]
        if value < bound:
            raise ValueError(f"Closed form of '{spec.family}' needs parameter {i + 1} >= {bound}, got {value}")
    return formula.evaluate(spec)
