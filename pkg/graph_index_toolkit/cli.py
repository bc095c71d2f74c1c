"""Command-line front end.

    graph-index gen <family> <params...> [--base FILE] [-o FILE]
    graph-index op <name> FILE... [--root1 V] [--root2 V] [--roots V,...]
                   [--subset V,...] [--thorns T] [-o FILE]
    graph-index index FILE
    graph-index formula <identity> [--g n,m,M1,F]... [--file FILE]... [...]
    graph-index formula family <name> <params...> [--file BASE]
    graph-index verify [--trials N] [--max-n K] [--seed S] [--disconnected-ok] [--workers W]
    graph-index table paper-examples

FILE may be '-' for standard input. Exit status is 0 on success, 1 when a
verification or table row fails, and 2 on usage or input errors.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

from typing_extensions import Final

from . import formulas as fm
from . import operations as ops
from .edgelist import parse_edge_list, write_edge_list
from .generators import FamilySpec, bottleneck, family_names, make_family
from .graph import (Graph, GraphSummary, RootedGraph, f_index, first_zagreb,
                    second_zagreb, summarize)
from .report import build_table, format_reports, format_table
from .utils import read_text, write_text
from .verify import IDENTITIES, TrialConfig, run_suite

logger = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_FAILURE: Final = 1
EXIT_USAGE: Final = 2


def _int_list(text: str) -> List[int]:
    """Parse a comma-separated list of integers, e.g. "0,2,3"."""
    try:
        return [int(p) for p in text.split(',') if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'") from None


def _int_params(values: Sequence[str], what: str) -> List[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise ValueError(f"{what} parameters must be integers, got {' '.join(values)}") from None


def _required(value: Any, flag: str, what: str) -> Any:
    if value is None:
        raise ValueError(f"{flag} is required for '{what}'")
    return value


def _read_graph(path: str) -> Graph:
    return parse_edge_list(read_text(path))


def _check_count(what: str, count: int, least: int, most: Optional[int]) -> None:
    if count < least or (most is not None and count > most):
        if most is None:
            expected = f"at least {least}"
        elif least == most:
            expected = f"exactly {least}"
        else:
            expected = f"{least} to {most}"
        raise ValueError(f"'{what}' takes {expected} operand(s), got {count}")


# ---------------------------------------------------------------------------
# op
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Operation:
    least: int
    most: Optional[int]
    apply: Callable[[List[Graph], argparse.Namespace], Graph]


def _bridge(gs: List[Graph], args: argparse.Namespace) -> Graph:
    roots = args.roots if args.roots is not None else [0] * len(gs)
    if len(roots) != len(gs):
        raise ValueError(f"--roots lists {len(roots)} vertices for {len(gs)} operands")
    return ops.bridge([RootedGraph(g, r) for g, r in zip(gs, roots)])


OPERATIONS: Dict[str, _Operation] = {
    'union': _Operation(1, None, lambda gs, a: ops.disjoint_union(gs)),
    'join': _Operation(1, None, lambda gs, a: ops.join(gs)),
    'cartesian': _Operation(1, None, lambda gs, a: ops.cartesian_product(gs)),
    'composition': _Operation(2, 2, lambda gs, a: ops.composition(*gs)),
    'tensor': _Operation(2, 2, lambda gs, a: ops.tensor_product(*gs)),
    'strong': _Operation(2, 2, lambda gs, a: ops.strong_product(*gs)),
    'corona': _Operation(2, 2, lambda gs, a: ops.corona(*gs)),
    'thorn': _Operation(1, 1, lambda gs, a: ops.t_thorn(gs[0], _required(a.thorns, '--thorns', 'thorn'))),
    'hierarchical': _Operation(2, 2, lambda gs, a: ops.hierarchical(
        gs[0], gs[1], ops.VertexSubset(_required(a.subset, '--subset', 'hierarchical')))),
    'cluster': _Operation(2, 2, lambda gs, a: ops.cluster(gs[0], RootedGraph(gs[1], a.root2))),
    'disjunction': _Operation(2, 2, lambda gs, a: ops.disjunction(*gs)),
    'symdiff': _Operation(2, 2, lambda gs, a: ops.symmetric_difference(*gs)),
    'splice': _Operation(2, 2, lambda gs, a: ops.splice(RootedGraph(gs[0], a.root1), RootedGraph(gs[1], a.root2))),
    'link': _Operation(2, 2, lambda gs, a: ops.link(RootedGraph(gs[0], a.root1), RootedGraph(gs[1], a.root2))),
    'bridge': _Operation(1, None, _bridge),
    'bottleneck': _Operation(1, 1, lambda gs, a: bottleneck(gs[0])),
}


def _cmd_op(args: argparse.Namespace) -> int:
    operation = OPERATIONS[args.name]
    _check_count(args.name, len(args.files), operation.least, operation.most)
    gs = [_read_graph(path) for path in args.files]
    result = operation.apply(gs, args)
    logger.debug("%s: %d operand(s) -> n=%d m=%d", args.name, len(gs), result.n, result.m)
    write_text(args.output, write_edge_list(result))
    return EXIT_OK


# ---------------------------------------------------------------------------
# gen / index
# ---------------------------------------------------------------------------

def _cmd_gen(args: argparse.Namespace) -> int:
    base = _read_graph(args.base) if args.base else None
    spec = FamilySpec(args.family, tuple(_int_params(args.params, args.family)), base=base)
    g = make_family(spec)
    write_text(args.output, write_edge_list(g, comment=spec.label()))
    return EXIT_OK


def _cmd_index(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    print(f"F={f_index(g)} M1={first_zagreb(g)} M2={second_zagreb(g)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# formula
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Formula:
    least: int
    most: Optional[int]
    evaluate: Callable[[List[GraphSummary], Optional[List[Graph]], argparse.Namespace], int]


def _hierarchical_extras(gs: Optional[List[Graph]], args: argparse.Namespace) -> fm.HierarchicalExtras:
    if args.subset is not None:
        if gs is None:
            raise ValueError("--subset needs the operands as --file")
        return fm.hierarchical_extras(gs[1], ops.VertexSubset(args.subset))
    if args.u_size is not None or args.s1 is not None or args.s2 is not None:
        return fm.HierarchicalExtras(u_size=_required(args.u_size, '--u-size', 'hierarchical'),
                                     s1=_required(args.s1, '--s1', 'hierarchical'),
                                     s2=_required(args.s2, '--s2', 'hierarchical'))
    raise ValueError("'hierarchical' needs --subset (with --file) or --u-size, --s1 and --s2")


def _cluster_root_degree(gs: Optional[List[Graph]], args: argparse.Namespace) -> int:
    if args.root_degree is not None:
        return args.root_degree
    if gs is None:
        raise ValueError("'cluster' needs --root-degree or the operands as --file")
    return RootedGraph(gs[1], args.root2).root_degree


def _root_degrees(gs: Optional[List[Graph]], args: argparse.Namespace, what: str) -> fm.RootDegreePair:
    if args.d1 is not None or args.d2 is not None:
        return fm.RootDegreePair(_required(args.d1, '--d1', what), _required(args.d2, '--d2', what))
    if gs is None:
        raise ValueError(f"'{what}' needs --d1 and --d2 or the operands as --file")
    return fm.RootDegreePair(RootedGraph(gs[0], args.root1).root_degree,
                             RootedGraph(gs[1], args.root2).root_degree)


FORMULAS: Dict[str, _Formula] = {
    'union': _Formula(1, None, lambda ss, gs, a: fm.f_union([s.f for s in ss])),
    'join': _Formula(1, None, lambda ss, gs, a: fm.f_join(ss)),
    'join-copies': _Formula(1, 1, lambda ss, gs, a: fm.f_join_copies(
        ss[0], _required(a.copies, '--copies', 'join-copies'))),
    'suspension': _Formula(1, 1, lambda ss, gs, a: fm.f_suspension(ss[0])),
    'm1-cartesian': _Formula(1, None, lambda ss, gs, a: fm.m1_cartesian(ss)),
    'cartesian': _Formula(1, None, lambda ss, gs, a: fm.f_cartesian(ss)),
    'composition': _Formula(2, 2, lambda ss, gs, a: fm.f_composition(*ss)),
    'tensor': _Formula(2, 2, lambda ss, gs, a: fm.f_tensor(ss[0].f, ss[1].f)),
    'strong': _Formula(2, 2, lambda ss, gs, a: fm.f_strong(*ss)),
    'corona': _Formula(2, 2, lambda ss, gs, a: fm.f_corona(*ss)),
    'thorn': _Formula(1, 1, lambda ss, gs, a: fm.f_thorn(ss[0], _required(a.thorns, '--thorns', 'thorn'))),
    'hierarchical': _Formula(2, 2, lambda ss, gs, a: fm.f_hierarchical(
        ss[0], ss[1].f, _hierarchical_extras(gs, a))),
    'cluster': _Formula(2, 2, lambda ss, gs, a: fm.f_cluster(ss[0], ss[1], _cluster_root_degree(gs, a))),
    'disjunction': _Formula(2, 2, lambda ss, gs, a: fm.f_disjunction(*ss)),
    'symdiff': _Formula(2, 2, lambda ss, gs, a: fm.f_symmetric_difference(*ss)),
    'splice': _Formula(2, 2, lambda ss, gs, a: fm.f_splice(ss[0].f, ss[1].f, _root_degrees(gs, a, 'splice'))),
    'link': _Formula(2, 2, lambda ss, gs, a: fm.f_link(ss[0].f, ss[1].f, _root_degrees(gs, a, 'link'))),
}


def _family_formula(args: argparse.Namespace) -> int:
    if not args.args:
        raise ValueError("'formula family' needs a family name")
    name, values = args.args[0], args.args[1:]
    if args.g:
        raise ValueError("'formula family' does not take --g")
    if args.file and len(args.file) > 1:
        raise ValueError("'formula family' takes at most one --file (the base graph)")
    base = _read_graph(args.file[0]) if args.file else None
    return fm.f_family(FamilySpec(name, tuple(_int_params(values, name)), base=base))


def _cmd_formula(args: argparse.Namespace) -> int:
    if args.identity == 'family':
        print(_family_formula(args))
        return EXIT_OK
    if args.args:
        raise ValueError(f"Unexpected arguments for '{args.identity}': {' '.join(args.args)}")
    if args.g and args.file:
        raise ValueError("Give operands either as --g summaries or as --file graphs, not both")

    gs: Optional[List[Graph]] = None
    if args.file:
        gs = [_read_graph(path) for path in args.file]
        ss = [summarize(g) for g in gs]
    else:
        ss = [GraphSummary.parse(text) for text in args.g or []]

    formula = FORMULAS[args.identity]
    _check_count(args.identity, len(ss), formula.least, formula.most)
    print(formula.evaluate(ss, gs, args))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / table
# ---------------------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace) -> int:
    data: Dict[str, Any] = {'connected_only': not args.disconnected_ok}
    if args.trials is not None:
        data['trials_per_identity'] = args.trials
    if args.max_n is not None:
        data['max_vertices'] = args.max_n
    if args.seed is not None:
        data['seed'] = args.seed
    if args.workers is not None:
        data['max_workers'] = args.workers
    config = TrialConfig.from_dict(data=data)

    print(f"Verifying {len(IDENTITIES)} identities, {config.trials_per_identity} trials each "
          f"(max {config.max_vertices} vertices, seed {config.seed})...")
    reports = run_suite(config)
    sys.stdout.write(format_reports(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


def _cmd_table(args: argparse.Namespace) -> int:
    rows = build_table()
    sys.stdout.write(format_table(rows))
    mismatches = [row for row in rows if not row.match]
    for row in mismatches:
        logger.debug("mismatch: %s %s formula=%d direct=%d expected=%d",
                     row.family, row.params, row.formula, row.direct, row.expected)
    return EXIT_FAILURE if mismatches else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='graph-index',
        description="F-index and Zagreb index toolkit for graph operations",
    )
    parser.add_argument('-v', '--verbose', action='store_true', help="enable debug logging")
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    gen = sub.add_parser('gen', help="write the edge list of a named family")
    gen.add_argument('family', choices=family_names(), metavar='FAMILY')
    gen.add_argument('params', nargs='*', help="integer parameters")
    gen.add_argument('--base', help="base graph file (bottleneck)")
    gen.add_argument('-o', '--output', help="output file (default: stdout)")
    gen.set_defaults(handler=_cmd_gen)

    op = sub.add_parser('op', help="apply a graph operation to edge-list files")
    op.add_argument('name', choices=sorted(OPERATIONS), metavar='NAME')
    op.add_argument('files', nargs='+', metavar='FILE')
    op.add_argument('--root1', type=int, default=0, help="root of the first operand")
    op.add_argument('--root2', type=int, default=0, help="root of the second operand")
    op.add_argument('--roots', type=_int_list, help="bridge roots, one per operand")
    op.add_argument('--subset', type=_int_list, help="hierarchical subset of the second operand")
    op.add_argument('--thorns', type=int, help="pendant vertices per vertex (thorn)")
    op.add_argument('-o', '--output', help="output file (default: stdout)")
    op.set_defaults(handler=_cmd_op)

    index = sub.add_parser('index', help="print F, M1 and M2 of an edge-list file")
    index.add_argument('file', metavar='FILE')
    index.set_defaults(handler=_cmd_index)

    formula = sub.add_parser('formula', help="evaluate a closed form")
    formula.add_argument('identity', choices=sorted(FORMULAS) + ['family'], metavar='IDENTITY')
    formula.add_argument('args', nargs='*', help="family name and parameters (formula family)")
    formula.add_argument('--g', action='append', metavar='n,m,M1,F', help="operand summary (repeatable)")
    formula.add_argument('--file', action='append', metavar='FILE', help="operand edge list (repeatable)")
    formula.add_argument('--copies', type=int, help="copy count (join-copies)")
    formula.add_argument('--thorns', type=int, help="pendant vertices per vertex (thorn)")
    formula.add_argument('--subset', type=_int_list, help="subset of the second operand (hierarchical)")
    formula.add_argument('--u-size', type=int, help="|U| (hierarchical)")
    formula.add_argument('--s1', type=int, help="sum of degrees over U (hierarchical)")
    formula.add_argument('--s2', type=int, help="sum of squared degrees over U (hierarchical)")
    formula.add_argument('--root-degree', type=int, help="root degree of the second operand (cluster)")
    formula.add_argument('--root1', type=int, default=0, help="root of the first operand file")
    formula.add_argument('--root2', type=int, default=0, help="root of the second operand file")
    formula.add_argument('--d1', type=int, help="root degree of the first operand (splice, link)")
    formula.add_argument('--d2', type=int, help="root degree of the second operand (splice, link)")
    formula.set_defaults(handler=_cmd_formula)

    verify = sub.add_parser('verify', help="check every closed form against direct computation")
    verify.add_argument('--trials', type=int, help="trials per identity")
    verify.add_argument('--max-n', type=int, help="maximum operand vertex count")
    verify.add_argument('--seed', type=int, help="suite seed")
    verify.add_argument('--disconnected-ok', action='store_true', help="also sample disconnected operands")
    verify.add_argument('--workers', type=int, help="thread pool size")
    verify.set_defaults(handler=_cmd_verify)

    table = sub.add_parser('table', help="print a golden table")
    table.add_argument('name', choices=['paper-examples'])
    table.set_defaults(handler=_cmd_table)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
