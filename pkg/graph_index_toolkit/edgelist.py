"""Edge-list document reading and writing.

Document format:
    n m           header: vertex count and edge count
    u v           exactly m lines, 0-based vertex indices

Lines starting with '#' and blank lines are ignored. Values are
whitespace-separated decimal integers.
"""

from typing import List, Optional, Tuple

from .graph import Graph, make_graph


class EdgeListError(ValueError):
    """Malformed edge-list document."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    """Return (1-based line number, fields) for every non-comment, non-blank line."""
    result = []
    for number, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        result.append((number, stripped.split()))
    return result


def _parse_ints(fields: List[str], line: int, what: str) -> List[int]:
    if len(fields) != 2:
        raise EdgeListError(f"{what} must have exactly 2 fields, got {len(fields)}", line)
    try:
        values = [int(f) for f in fields]
    except ValueError:
        raise EdgeListError(f"{what} fields must be decimal integers: {' '.join(fields)}", line) from None
    if any(v < 0 for v in values):
        raise EdgeListError(f"{what} fields must be nonnegative: {' '.join(fields)}", line)
    return values


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document.

    Duplicate edges are errors, not collapsed: documents are authored files.

    Raises:
        EdgeListError: On a malformed header, out-of-range endpoint,
            self-loop, duplicate edge or edge count mismatch
    """
    lines = _content_lines(text)
    if not lines:
        raise EdgeListError("Missing header line 'n m'")
    header_line, header = lines[0]
    n, m = _parse_ints(header, header_line, "Header")

    edges = []
    seen = set()
    for number, fields in lines[1:]:
        u, v = _parse_ints(fields, number, "Edge")
        if u >= n or v >= n:
            raise EdgeListError(f"Edge ({u}, {v}) has an endpoint outside [0, {n})", number)
        if u == v:
            raise EdgeListError(f"Self-loop at vertex {u}", number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"Duplicate edge ({u}, {v})", number)
        seen.add(key)
        edges.append(key)

    if len(edges) != m:
        raise EdgeListError(f"Header declares {m} edges, document lists {len(edges)}", header_line)
    return make_graph(n, edges)


def write_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    """Serialize g; parse_edge_list(write_edge_list(g)) == g."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
