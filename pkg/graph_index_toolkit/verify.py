"""Randomized verification of closed-form formulas against direct computation.

For every identity the harness samples operand graphs, constructs the
operation graph explicitly, computes its index directly and compares the
result with the closed form evaluated on summaries. All comparisons are
exact integer equalities.

Per-trial randomness is derived from (suite seed, identity name, trial
index), so reports do not depend on thread count or scheduling.
"""

import hashlib
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from . import formulas as fm
from . import operations as ops
from .graph import (Graph, RootedGraph, f_index, first_zagreb, is_connected,
                    make_graph, summarize)
from .generators import complete

logger = logging.getLogger(__name__)

DEFAULT_EDGE_PROBABILITIES = (Fraction(1, 5), Fraction(1, 2), Fraction(4, 5))


@dataclass
class TrialConfig:
    """Settings of a verification run.

    Attributes:
        trials_per_identity: Trials run for each identity (0 skips all)
        max_vertices: Upper bound on operand vertex counts
        edge_probabilities: G(n, p) edge probabilities, each in (0, 1)
        seed: Suite seed, a 64-bit unsigned integer
        connected_only: Sample connected operands only
        max_workers: Thread pool size (None for the executor default)
        spanning_tree_retries: Resampling attempts before a connected
            sample is forced by adding a random spanning tree
    """
    trials_per_identity: int = 200
    max_vertices: int = 8
    edge_probabilities: Tuple[Fraction, ...] = DEFAULT_EDGE_PROBABILITIES
    seed: int = 42
    connected_only: bool = True
    max_workers: Optional[int] = None
    spanning_tree_retries: int = 16

    def __post_init__(self):
        """Validate field ranges."""
        self.edge_probabilities = tuple(Fraction(p) for p in self.edge_probabilities)
        if self.trials_per_identity < 0:
            raise ValueError(f"trials_per_identity must be >= 0, got {self.trials_per_identity}")
        if self.max_vertices < 1:
            raise ValueError(f"max_vertices must be >= 1, got {self.max_vertices}")
        if not self.edge_probabilities:
            raise ValueError("edge_probabilities must not be empty")
        for p in self.edge_probabilities:
            if not 0 < p < 1:
                raise ValueError(f"Edge probability {p} is not in the open interval (0, 1)")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.max_workers is not None and self.max_workers < 1:
            raise ValueError(f"max_workers must be >= 1, got {self.max_workers}")
        if self.spanning_tree_retries < 1:
            raise ValueError(f"spanning_tree_retries must be >= 1, got {self.spanning_tree_retries}")

    @classmethod
    def from_dict(cls, *, data: Dict[str, Any]) -> 'TrialConfig':
        """Create a TrialConfig from a dictionary, rejecting unknown fields."""
        valid_fields = {'trials_per_identity', 'max_vertices', 'edge_probabilities', 'seed',
                        'connected_only', 'max_workers', 'spanning_tree_retries'}
        unknown = set(data.keys()) - valid_fields
        if unknown:
            raise ValueError(f"Unknown fields in configuration: {', '.join(sorted(unknown))}")
        int_fields = ['trials_per_identity', 'max_vertices', 'seed', 'spanning_tree_retries']
        for name in int_fields:
            if name in data and (not isinstance(data[name], int) or isinstance(data[name], bool)):
                raise ValueError(f"Field '{name}' must be of type int")
        if 'connected_only' in data and not isinstance(data['connected_only'], bool):
            raise ValueError("Field 'connected_only' must be of type bool")
        if 'edge_probabilities' in data:
            probs = data['edge_probabilities']
            if not isinstance(probs, (list, tuple)):
                raise ValueError("Field 'edge_probabilities' must be of type list")
            data = {**data, 'edge_probabilities': tuple(Fraction(str(p)) for p in probs)}
        return cls(**data)


@dataclass(frozen=True)
class Counterexample:
    """Operands of a failing trial with both values."""
    operands: Tuple[str, ...]
    formula_value: int
    direct_value: int


@dataclass
class VerificationReport:
    """Outcome of all trials of one identity.

    Attributes:
        identity: Identity name
        trials: Trials run
        failures: Trials where formula and direct value differ
        informational: Discrepancies on disconnected operands for
            identities claimed only for connected graphs
        first_counterexample: First failing trial, if any
        duration: Wall-clock seconds, excluded from comparisons
    """
    identity: str
    trials: int = 0
    failures: int = 0
    informational: int = 0
    first_counterexample: Optional[Counterexample] = None
    duration: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class TrialOutcome:
    operands: Tuple[str, ...]
    formula_value: int
    direct_value: int


def random_graph(n: int, p: Any, seed: int, *, connected_only: bool = False,
                 retries: int = 16) -> Graph:
    """Sample G(n, p) deterministically from seed.

    With connected_only, the sample is redrawn up to `retries` times; if it
    is still disconnected a random spanning tree is added to the last draw.
    """
    if n < 1:
        raise ValueError(f"Random graph needs n >= 1, got {n}")
    if not 0 < p < 1:
        raise ValueError(f"Edge probability {p} is not in the open interval (0, 1)")
    rng = np.random.default_rng(seed)
    attempts = retries if connected_only else 1
    g = make_graph(n, [])
    for _ in range(attempts):
        sample = nx.gnp_random_graph(n, float(p), seed=int(rng.integers(2 ** 32)))
        g = make_graph(n, sample.edges())
        if not connected_only or is_connected(g):
            return g
    logger.debug("G(%d, %s) stayed disconnected after %d draws, adding a spanning tree", n, p, attempts)
    prufer = [int(x) for x in rng.integers(0, n, size=n - 2)]
    tree = nx.from_prufer_sequence(prufer)
    return make_graph(n, set(g.edges) | set(tree.edges()))


def trial_rng(seed: int, identity: str, trial: int) -> np.random.Generator:
    """Generator for one trial, keyed by suite seed, identity name and trial index."""
    key = int.from_bytes(hashlib.sha256(identity.encode('utf-8')).digest()[:8], 'big')
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(key, trial)))


class _Sampler:
    """Draws operands for one trial."""

    def __init__(self, config: TrialConfig, rng: np.random.Generator):
        self.config = config
        self.rng = rng

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return int(self.rng.integers(lo, hi + 1))

    def choice(self, values: Sequence[Any]) -> Any:
        return values[int(self.rng.integers(len(values)))]

    def graph(self, max_n: Optional[int] = None) -> Graph:
        cap = self.config.max_vertices if max_n is None else min(self.config.max_vertices, max_n)
        n = self.integer(1, cap)
        p = self.choice(self.config.edge_probabilities)
        return random_graph(n, p, int(self.rng.integers(2 ** 62)),
                            connected_only=self.config.connected_only,
                            retries=self.config.spanning_tree_retries)

    def graphs(self, arities: Sequence[int], tiny: int = 4) -> List[Graph]:
        """Draw k operands, k chosen from arities; k > 2 uses operands of at most `tiny` vertices."""
        k = self.choice(arities)
        max_n = None if k <= 2 else tiny
        return [self.graph(max_n) for _ in range(k)]

    def vertex(self, g: Graph) -> int:
        return self.integer(0, g.n - 1)

    def subset(self, g: Graph) -> ops.VertexSubset:
        """Uniform nonempty subset of the vertices of g."""
        while True:
            bits = self.rng.integers(0, 2, size=g.n)
            if bits.any():
                return ops.VertexSubset(int(v) for v in np.flatnonzero(bits))


def describe(g: Graph) -> str:
    return f"n={g.n} edges={list(g.edges)}"


# Trial functions receive the operand graphs, a sampler for any extra
# parameters, and the formula under test.
_Trial = Callable[[Sequence[Graph], _Sampler, Callable], TrialOutcome]


@dataclass(frozen=True)
class Identity:
    """A formula paired with the direct computation it must match.

    Attributes:
        name: Identity name used by the CLI and reports
        formula: Closed-form evaluator under test
        arities: Allowed operand counts
        trial: Runs one trial on given operands
        requires_connectivity: The formula is only claimed for connected
            operands; with disconnected sampling its discrepancies are
            informational
    """
    name: str
    formula: Callable
    arities: Tuple[int, ...]
    trial: _Trial
    requires_connectivity: bool = False


def _outcome(gs: Sequence[Graph], extras: Sequence[str], formula_value: int, direct_value: int) -> TrialOutcome:
    return TrialOutcome(tuple(describe(g) for g in gs) + tuple(extras), formula_value, direct_value)


def _union_trial(gs, s, formula):
    return _outcome(gs, (), formula([f_index(g) for g in gs]), f_index(ops.disjoint_union(gs)))


def _join_trial(gs, s, formula):
    return _outcome(gs, (), formula([summarize(g) for g in gs]), f_index(ops.join(gs)))


def _join_copies_trial(gs, s, formula):
    g = gs[0]
    p = s.integer(1, 4)
    return _outcome(gs, (f"p={p}",), formula(summarize(g), p), f_index(ops.join([g] * p)))


def _suspension_trial(gs, s, formula):
    g = gs[0]
    return _outcome(gs, (), formula(summarize(g)), f_index(ops.join([complete(1), g])))


def _m1_cartesian_trial(gs, s, formula):
    return _outcome(gs, (), formula([summarize(g) for g in gs]),
                    first_zagreb(ops.cartesian_product(gs)))


def _cartesian_trial(gs, s, formula):
    return _outcome(gs, (), formula([summarize(g) for g in gs]), f_index(ops.cartesian_product(gs)))


def _summary_pair_trial(build: Callable[[Graph, Graph], Graph]) -> _Trial:
    def trial(gs, s, formula):
        g1, g2 = gs
        return _outcome(gs, (), formula(summarize(g1), summarize(g2)), f_index(build(g1, g2)))
    return trial


def _tensor_trial(gs, s, formula):
    g1, g2 = gs
    return _outcome(gs, (), formula(f_index(g1), f_index(g2)), f_index(ops.tensor_product(g1, g2)))


def _thorn_trial(gs, s, formula):
    g = gs[0]
    t = s.integer(1, 4)
    return _outcome(gs, (f"t={t}",), formula(summarize(g), t), f_index(ops.t_thorn(g, t)))


def _hierarchical_trial(gs, s, formula):
    g1, g2 = gs
    u = s.subset(g2)
    extras = fm.hierarchical_extras(g2, u)
    return _outcome(gs, (f"U={sorted(u.members)}",),
                    formula(summarize(g1), f_index(g2), extras),
                    f_index(ops.hierarchical(g1, g2, u)))


def _cluster_trial(gs, s, formula):
    g1, g2 = gs
    root = s.vertex(g2)
    return _outcome(gs, (f"root={root}",),
                    formula(summarize(g1), summarize(g2), g2.degrees[root]),
                    f_index(ops.cluster(g1, RootedGraph(g2, root))))


def _rooted_pair_trial(build: Callable[[RootedGraph, RootedGraph], Graph]) -> _Trial:
    def trial(gs, s, formula):
        g1, g2 = gs
        r1 = RootedGraph(g1, s.vertex(g1))
        r2 = RootedGraph(g2, s.vertex(g2))
        roots = fm.RootDegreePair(r1.root_degree, r2.root_degree)
        return _outcome(gs, (f"roots=({r1.root}, {r2.root})",),
                        formula(f_index(g1), f_index(g2), roots),
                        f_index(build(r1, r2)))
    return trial


# Every closed form here holds for disconnected operands, so no entry sets
# requires_connectivity.
IDENTITIES: Dict[str, Identity] = {i.name: i for i in [
    Identity('union', fm.f_union, (2, 3, 4), _union_trial),
    Identity('join', fm.f_join, (2, 3, 4), _join_trial),
    Identity('join-copies', fm.f_join_copies, (1,), _join_copies_trial),
    Identity('suspension', fm.f_suspension, (1,), _suspension_trial),
    Identity('m1-cartesian', fm.m1_cartesian, (2, 3), _m1_cartesian_trial),
    Identity('cartesian', fm.f_cartesian, (2, 3), _cartesian_trial),
    Identity('composition', fm.f_composition, (2,), _summary_pair_trial(ops.composition)),
    Identity('tensor', fm.f_tensor, (2,), _tensor_trial),
    Identity('strong', fm.f_strong, (2,), _summary_pair_trial(ops.strong_product)),
    Identity('corona', fm.f_corona, (2,), _summary_pair_trial(ops.corona)),
    Identity('thorn', fm.f_thorn, (1,), _thorn_trial),
    Identity('hierarchical', fm.f_hierarchical, (2,), _hierarchical_trial),
    Identity('cluster', fm.f_cluster, (2,), _cluster_trial),
    Identity('disjunction', fm.f_disjunction, (2,), _summary_pair_trial(ops.disjunction)),
    Identity('symdiff', fm.f_symmetric_difference, (2,), _summary_pair_trial(ops.symmetric_difference)),
    Identity('splice', fm.f_splice, (2,), _rooted_pair_trial(ops.splice)),
    Identity('link', fm.f_link, (2,), _rooted_pair_trial(ops.link)),
]}


def check_identity(identity: str, config: TrialConfig, *,
                   operands: Optional[Sequence[Graph]] = None,
                   formula: Optional[Callable] = None) -> VerificationReport:
    """Run the trials of one identity.

    Args:
        identity: Identity name, a key of IDENTITIES
        config: Trial settings
        operands: Fixed operand graphs; every trial then reuses them and only
            the extra parameters (roots, subsets, counts) are sampled
        formula: Replacement for the identity's formula

    Raises:
        ValueError: If the identity is unknown or the operand count does not fit
    """
    spec = IDENTITIES.get(identity)
    if spec is None:
        raise ValueError(f"Unknown identity: {identity}")
    if operands is not None and len(operands) not in spec.arities:
        raise ValueError(f"Identity '{identity}' takes {' or '.join(map(str, spec.arities))} "
                         f"operand(s), got {len(operands)}")
    evaluate = formula or spec.formula
    report = VerificationReport(identity=identity)
    start_time = time.time()
    for trial in range(config.trials_per_identity):
        sampler = _Sampler(config, trial_rng(config.seed, identity, trial))
        gs = list(operands) if operands is not None else sampler.graphs(spec.arities)
        outcome = spec.trial(gs, sampler, evaluate)
        report.trials += 1
        if outcome.formula_value == outcome.direct_value:
            continue
        if spec.requires_connectivity and not all(is_connected(g) for g in gs):
            report.informational += 1
            logger.debug("%s: informational discrepancy on disconnected operands %s", identity, outcome.operands)
            continue
        report.failures += 1
        logger.debug("%s: trial %d formula=%d direct=%d operands=%s", identity, trial,
                     outcome.formula_value, outcome.direct_value, outcome.operands)
        if report.first_counterexample is None:
            report.first_counterexample = Counterexample(
                outcome.operands, outcome.formula_value, outcome.direct_value)
    report.duration = time.time() - start_time
    return report


def run_suite(config: TrialConfig, *,
              overrides: Optional[Mapping[str, Callable]] = None) -> List[VerificationReport]:
    """Run every identity, one report each, in registry order.

    Args:
        config: Trial settings
        overrides: Replacement formulas keyed by identity name

    Raises:
        ValueError: If an override names an unknown identity
    """
    overrides = dict(overrides or {})
    unknown = set(overrides) - set(IDENTITIES)
    if unknown:
        raise ValueError(f"Unknown identities in overrides: {', '.join(sorted(unknown))}")

    reports: Dict[str, VerificationReport] = {}
    with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
        future_to_name = {
            executor.submit(check_identity, name, config, formula=overrides.get(name)): name
            for name in IDENTITIES
        }
        for future in as_completed(future_to_name):
            name = future_to_name[future]
            reports[name] = future.result()
            logger.debug("%s: %d trials, %d failures", name, reports[name].trials, reports[name].failures)

    missing = set(IDENTITIES) - set(reports)
    if missing:
        raise AssertionError(f"Identities without a report: {', '.join(sorted(missing))}")
    return [reports[name] for name in IDENTITIES]
