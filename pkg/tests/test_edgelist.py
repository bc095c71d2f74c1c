"""Tests for edge-list document parsing and writing."""

from textwrap import dedent

import pytest

from graph_index_toolkit.edgelist import EdgeListError, parse_edge_list, write_edge_list
from graph_index_toolkit.generators import complete, make_family, path
from graph_index_toolkit.graph import f_index, make_graph
from graph_index_toolkit.report import GOLDEN_EXAMPLES


def test_parse_examples():
    """Test small documents."""
    assert parse_edge_list("3 2\n0 1\n1 2\n") == path(3)
    assert parse_edge_list("# comment\n1 0\n") == complete(1)
    assert parse_edge_list("2 1\n1 0") == path(2)


def test_parse_ignores_comments_and_blank_lines():
    """Test comment and whitespace handling."""
    text = """
        # a triangle

        3 3
        0 1   # trailing text is not a comment
    """
    with pytest.raises(EdgeListError):
        parse_edge_list(dedent(text))

    text = """
        # a triangle
        3 3

        0 1
        # middle comment
          1 2
        0\t2
    """
    assert parse_edge_list(dedent(text)) == complete(3)


@pytest.mark.parametrize('text, message, line', [
    ("", "Missing header", None),
    ("# only a comment\n", "Missing header", None),
    ("3\n", "Header must have exactly 2 fields", 1),
    ("3 x\n", "decimal integers", 1),
    ("-3 0\n", "nonnegative", 1),
    ("2 1\n0 0\n", "Self-loop", 2),
    ("2 1\n0 2\n", "outside", 2),
    ("3 2\n0 1\n1 0\n", "Duplicate edge", 3),
    ("3 2\n0 1\n", "declares 2 edges", 1),
    ("3 1\n0 1\n1 2\n", "declares 1 edges", 1),
    ("3 1\n0 1 2\n", "Edge must have exactly 2 fields", 2),
])
def test_parse_errors(text, message, line):
    """Test malformed documents report a message and a line number."""
    with pytest.raises(EdgeListError, match=message) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert isinstance(info.value, ValueError)


def test_error_line_counts_comments():
    """Test that reported line numbers refer to the raw document."""
    with pytest.raises(EdgeListError) as info:
        parse_edge_list("# header follows\n3 1\n# edge follows\n2 2\n")
    assert info.value.line == 4
    assert str(info.value).startswith("line 4:")


def test_write_edge_list():
    """Test serialization format."""
    assert write_edge_list(path(3)) == "3 2\n0 1\n1 2\n"
    assert write_edge_list(make_graph(2, [])) == "2 0\n"
    assert write_edge_list(path(2), comment="path 2") == "# path 2\n2 1\n0 1\n"


def test_golden_families_survive_a_file():
    """Test that writing and re-reading keeps the F-index of every golden family."""
    for example in GOLDEN_EXAMPLES:
        g = make_family(example.spec)
        again = parse_edge_list(write_edge_list(g, comment=example.spec.label()))
        assert again == g
        assert f_index(again) == example.expected
