"""Text reports: the golden family table and verification progress lines."""

import csv
import io
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .formulas import f_family
from .generators import FamilySpec, make_family, path
from .graph import f_index
from .verify import VerificationReport


@dataclass(frozen=True)
class GoldenExample:
    """A family instance with its published F-index."""
    spec: FamilySpec
    expected: int
    base_label: Optional[str] = None

    @property
    def params_label(self) -> str:
        if self.base_label is not None:
            return self.base_label
        return " ".join(str(p) for p in self.spec.params)


def _example(family: str, params: Sequence[int], expected: int) -> GoldenExample:
    return GoldenExample(FamilySpec(family, tuple(params)), expected)


GOLDEN_EXAMPLES: List[GoldenExample] = [
    _example('wheel', (5,), 260),
    _example('wheel', (6,), 378),
    _example('fan', (5,), 222),
    _example('windmill', (2,), 96),
    _example('cone', (3, 2), 246),
    _example('complete_multipartite', (1, 3), 30),
    _example('hypercube', (3,), 216),
    _example('hypercube', (4,), 1024),
    _example('hamming', (2, 3), 162),
    _example('torus', (3, 3, 3), 5832),
    _example('torus', (4, 5), 1280),
    _example('nanotube_c4', (4, 5), 910),
    # 214 in the published table; the closed form and the construction agree on 204
    _example('grid', (3, 3), 204),
    _example('fence', (3,), 358),
    _example('closed_fence', (3,), 750),
    _example('tensor_paths', (3, 3), 100),
    _example('tensor_cycles', (4, 3), 768),
    _example('tensor_completes', (3, 3), 576),
    _example('tensor_path_cycle', (3, 4), 320),
    _example('tensor_path_complete', (3, 3), 240),
    _example('tensor_cycle_complete', (3, 3), 576),
    _example('thorny_cycle', (3, 2), 198),
    _example('thorny_path', (3, 2), 124),
    GoldenExample(FamilySpec('bottleneck', base=path(3)), 214, base_label="base=path 3"),
    _example('bridge_b', (2,), 58),
    _example('bridge_b', (3,), 124),
    _example('bridge_t3', (2,), 86),
    _example('comb', (3,), 70),
    _example('sun', (3, 2), 108),
]


@dataclass(frozen=True)
class TableRow:
    family: str
    params: str
    formula: int
    direct: int
    expected: int

    @property
    def match(self) -> bool:
        return self.formula == self.direct == self.expected


def build_table(examples: Sequence[GoldenExample] = GOLDEN_EXAMPLES) -> List[TableRow]:
    """Evaluate every example by closed form and by direct construction."""
    return [TableRow(family=ex.spec.family,
                     params=ex.params_label,
                     formula=f_family(ex.spec),
                     direct=f_index(make_family(ex.spec)),
                     expected=ex.expected)
            for ex in examples]


def format_table(rows: Sequence[TableRow]) -> str:
    """CSV with columns family, params, formula, direct, match."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(['family', 'params', 'formula', 'direct', 'match'])
    for row in rows:
        writer.writerow([row.family, row.params, row.formula, row.direct, "yes" if row.match else "no"])
    return buffer.getvalue()


def format_report_line(i: int, total: int, report: VerificationReport, name_width: int) -> str:
    """One progress line, e.g. "[ 3/17]  join-copies ... passed (0.2s)"."""
    counter_width = len(str(total))
    if report.passed:
        status = "passed"
    else:
        status = f"FAILED ({report.failures}/{report.trials})"
    line = f"[{i:{counter_width}d}/{total}]  {report.identity:<{name_width}} ... {status} ({report.duration:.1f}s)"
    if report.informational:
        line += f" [{report.informational} informational]"
    return line


def format_reports(reports: Sequence[VerificationReport]) -> str:
    """Progress lines for all reports, counterexamples, and a summary line."""
    if not reports:
        return "No identities to verify\n"
    name_width = min(max(max(len(r.identity) for r in reports) + 2, 14), 40)
    lines = []
    for i, report in enumerate(reports, 1):
        lines.append(format_report_line(i, len(reports), report, name_width))
        example = report.first_counterexample
        if example is not None:
            lines.append(f"    operands: {'; '.join(example.operands)}")
            lines.append(f"    formula={example.formula_value} direct={example.direct_value}")

    n_failed = sum(1 for r in reports if not r.passed)
    n_trials = sum(r.trials for r in reports)
    total_time = sum(r.duration for r in reports)
    lines.append("")
    if n_failed:
        lines.append(f"{n_failed} of {len(reports)} identities failed")
    else:
        lines.append(f"All {len(reports)} identities passed")
    lines.append(f"Total: {n_trials} trials in {total_time:.1f}s")
    return "\n".join(lines) + "\n"
