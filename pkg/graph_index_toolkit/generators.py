"""Base graphs and named parametric graph families.

Families are built by delegating to the operations module, so every
family graph is also a check of the constructor it is made from.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .graph import Graph, RootedGraph, make_graph
from . import operations as ops


def path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 0:
        raise ValueError(f"Path needs n >= 0, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"Cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 0:
        raise ValueError(f"Complete graph needs n >= 0, got {n}")
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 0:
        raise ValueError(f"Empty graph needs n >= 0, got {n}")
    return make_graph(n, [])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph, the join of edgeless graphs."""
    if len(parts) < 2:
        raise ValueError(f"Complete multipartite graph needs at least 2 parts, got {len(parts)}")
    if any(p < 1 for p in parts):
        raise ValueError(f"Every part must have at least one vertex: {list(parts)}")
    return ops.join([empty_graph(p) for p in parts])


def bottleneck(g: Graph) -> Graph:
    """Bottleneck graph of g: the corona of K2 and g."""
    return ops.corona(complete(2), g)


def _endpoint_rooted_path(n: int) -> RootedGraph:
    return RootedGraph(path(n), 0)


# Each builder receives the validated parameter tuple and the optional base graph.
_Builder = Callable[[Tuple[int, ...], Optional[Graph]], Graph]


@dataclass(frozen=True)
class FamilyInfo:
    """Construction contract of a named family.

    Attributes:
        arity: Exact parameter count, or None for one-or-more parameters
        minimums: Lower bound per parameter (the last bound repeats for
            variadic families)
        build: Builder function
        min_count: Minimum parameter count for variadic families
        needs_base: The family is built around a base graph
    """
    arity: Optional[int]
    minimums: Tuple[int, ...]
    build: _Builder
    min_count: int = 1
    needs_base: bool = False


FAMILIES: Dict[str, FamilyInfo] = {
    'path': FamilyInfo(1, (1,), lambda p, _: path(p[0])),
    'cycle': FamilyInfo(1, (3,), lambda p, _: cycle(p[0])),
    'complete': FamilyInfo(1, (1,), lambda p, _: complete(p[0])),
    'empty': FamilyInfo(1, (1,), lambda p, _: empty_graph(p[0])),
    'complete_multipartite': FamilyInfo(None, (1,), lambda p, _: complete_multipartite(p),
                                        min_count=2),
    'wheel': FamilyInfo(1, (3,), lambda p, _: ops.join([complete(1), cycle(p[0])])),
    'fan': FamilyInfo(1, (1,), lambda p, _: ops.join([complete(1), path(p[0])])),
    'windmill': FamilyInfo(1, (1,), lambda p, _: ops.join(
        [complete(1), ops.disjoint_union([complete(2)] * p[0])])),
    'cone': FamilyInfo(2, (3, 1), lambda p, _: ops.join([cycle(p[0]), empty_graph(p[1])])),
    'hypercube': FamilyInfo(1, (1,), lambda p, _: ops.cartesian_product([complete(2)] * p[0])),
    'hamming': FamilyInfo(None, (1,), lambda p, _: ops.cartesian_product([complete(k) for k in p])),
    'torus': FamilyInfo(None, (3,), lambda p, _: ops.cartesian_product([cycle(k) for k in p])),
    'nanotube_c4': FamilyInfo(2, (1, 3), lambda p, _: ops.cartesian_product([path(p[0]), cycle(p[1])])),
    'grid': FamilyInfo(2, (1, 1), lambda p, _: ops.cartesian_product([path(p[0]), path(p[1])])),
    'fence': FamilyInfo(1, (1,), lambda p, _: ops.composition(path(p[0]), path(2))),
    'closed_fence': FamilyInfo(1, (3,), lambda p, _: ops.composition(cycle(p[0]), path(2))),
    'thorny_cycle': FamilyInfo(2, (3, 1), lambda p, _: ops.t_thorn(cycle(p[0]), p[1])),
    'thorny_path': FamilyInfo(2, (1, 1), lambda p, _: ops.t_thorn(path(p[0]), p[1])),
    'bottleneck': FamilyInfo(0, (), lambda _, base: bottleneck(base), needs_base=True),
    'bridge_b': FamilyInfo(1, (1,), lambda p, _: ops.corona(path(p[0]), empty_graph(2))),
    'bridge_t3': FamilyInfo(1, (1,), lambda p, _: ops.corona(path(p[0]), complete(2))),
    'comb': FamilyInfo(1, (1,), lambda p, _: ops.cluster(path(p[0]), _endpoint_rooted_path(p[0]))),
    'sun': FamilyInfo(2, (3, 1), lambda p, _: ops.cluster(cycle(p[0]), _endpoint_rooted_path(p[1] + 1))),
    'tensor_paths': FamilyInfo(2, (1, 1), lambda p, _: ops.tensor_product(path(p[0]), path(p[1]))),
    'tensor_cycles': FamilyInfo(2, (3, 3), lambda p, _: ops.tensor_product(cycle(p[0]), cycle(p[1]))),
    'tensor_completes': FamilyInfo(2, (1, 1), lambda p, _: ops.tensor_product(complete(p[0]), complete(p[1]))),
    'tensor_path_cycle': FamilyInfo(2, (1, 3), lambda p, _: ops.tensor_product(path(p[0]), cycle(p[1]))),
    'tensor_path_complete': FamilyInfo(2, (1, 1), lambda p, _: ops.tensor_product(path(p[0]), complete(p[1]))),
    'tensor_cycle_complete': FamilyInfo(2, (3, 1), lambda p, _: ops.tensor_product(cycle(p[0]), complete(p[1]))),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its integer parameters.

    Attributes:
        family: Family name, a key of FAMILIES
        params: Integer parameters, interpreted per family
        base: Base graph for families built around one (bottleneck)
    """
    family: str
    params: Tuple[int, ...] = ()
    base: Optional[Graph] = field(default=None, compare=False)

    def __post_init__(self):
        """Validate parameter arity and bounds against the family contract."""
        object.__setattr__(self, 'params', tuple(self.params))
        info = FAMILIES.get(self.family)
        if info is None:
            raise ValueError(f"Unknown family: {self.family}")
        count = len(self.params)
        if info.arity is not None and count != info.arity:
            raise ValueError(f"Family '{self.family}' takes {info.arity} parameter(s), got {count}")
        if info.arity is None and count < info.min_count:
            raise ValueError(f"Family '{self.family}' takes at least {info.min_count} parameter(s), got {count}")
        for i, value in enumerate(self.params):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"Family '{self.family}' parameter {i + 1} must be an integer")
            bound = info.minimums[min(i, len(info.minimums) - 1)]
            if value < bound:
                raise ValueError(f"Family '{self.family}' parameter {i + 1} must be >= {bound}, got {value}")
        if info.needs_base and self.base is None:
            raise ValueError(f"Family '{self.family}' needs a base graph")

    @classmethod
    def from_dict(cls, *, data: Dict[str, Any]) -> 'FamilySpec':
        """Create a FamilySpec from a dictionary.

        Args:
            data: Dictionary with the required field 'family' and the
                optional fields 'params' (list of int) and 'base' (Graph)

        Raises:
            ValueError: If fields are missing, unknown or mistyped
        """
        unknown = set(data.keys()) - {'family', 'params', 'base'}
        if unknown:
            raise ValueError(f"Unknown fields in family spec: {', '.join(sorted(unknown))}")
        if 'family' not in data:
            raise ValueError("Missing required field 'family'")
        if not isinstance(data['family'], str):
            raise ValueError("Field 'family' must be of type str")
        params = data.get('params') or []
        if not isinstance(params, (list, tuple)):
            raise ValueError("Field 'params' must be of type list")
        base = data.get('base')
        if base is not None and not isinstance(base, Graph):
            raise ValueError("Field 'base' must be a Graph")
        return cls(family=data['family'], params=tuple(params), base=base)

    def label(self) -> str:
        """Short human-readable form, e.g. "wheel 6"."""
        return " ".join([self.family] + [str(p) for p in self.params])


def make_family(spec: FamilySpec) -> Graph:
    """Build the graph named by spec."""
    return FAMILIES[spec.family].build(spec.params, spec.base)


def family_names() -> List[str]:
    return sorted(FAMILIES)
