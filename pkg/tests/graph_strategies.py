"""Hypothesis strategies shared by the test modules."""

from itertools import combinations

from hypothesis import strategies as st

from graph_index_toolkit.graph import Graph, make_graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12) -> Graph:
    """Simple graph on a drawn number of vertices with a drawn edge subset."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def rooted(draw, min_n: int = 1, max_n: int = 6):
    """(graph, root) pair."""
    g = draw(graphs(min_n=max(min_n, 1), max_n=max_n))
    root = draw(st.integers(min_value=0, max_value=g.n - 1))
    return g, root
