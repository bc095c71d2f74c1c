"""Tests for the command-line front end."""

import io
import os

import pytest

from graph_index_toolkit.cli import main
from graph_index_toolkit.edgelist import parse_edge_list, write_edge_list
from graph_index_toolkit.generators import cycle, path


def _write(directory, name: str, text: str) -> str:
    """Write a file and return its path."""
    file_path = os.path.join(str(directory), name)
    with open(file_path, 'w') as f:
        f.write(text)
    return file_path


def _run(capsys, *argv):
    """Run main and return (exit code, stdout, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_then_index(tmp_path, capsys):
    """Test generating a wheel and computing its indices."""
    out = str(tmp_path / "w6.el")
    code, _, _ = _run(capsys, 'gen', 'wheel', '6', '-o', out)
    assert code == 0
    code, stdout, _ = _run(capsys, 'index', out)
    assert code == 0
    assert stdout == "F=378 M1=90 M2=162\n"


def test_gen_to_stdout(capsys):
    """Test writing a family to standard output."""
    code, stdout, _ = _run(capsys, 'gen', 'path', '3')
    assert code == 0
    assert parse_edge_list(stdout) == path(3)
    assert stdout.startswith("# path 3\n")


def test_gen_output_creates_directories(tmp_path, capsys):
    """Test that -o creates missing parent directories."""
    out = str(tmp_path / "nested" / "dir" / "c5.el")
    code, _, _ = _run(capsys, 'gen', 'cycle', '5', '-o', out)
    assert code == 0
    with open(out) as f:
        assert parse_edge_list(f.read()) == cycle(5)


def test_gen_bottleneck_with_base(tmp_path, capsys):
    """Test the base-graph family."""
    base = _write(tmp_path, "p3.el", write_edge_list(path(3)))
    out = str(tmp_path / "b.el")
    assert _run(capsys, 'gen', 'bottleneck', '--base', base, '-o', out)[0] == 0
    assert _run(capsys, 'index', out)[1].startswith("F=214 ")
    code, _, stderr = _run(capsys, 'gen', 'bottleneck')
    assert code == 2
    assert "base graph" in stderr


def test_gen_errors(capsys):
    """Test bad family parameters."""
    assert _run(capsys, 'gen', 'wheel', '2')[0] == 2
    assert _run(capsys, 'gen', 'wheel', 'six')[0] == 2
    assert _run(capsys, 'gen', 'pentagon', '5')[0] == 2


def test_op_tensor(tmp_path, capsys):
    """Test applying a product to files."""
    p3 = _write(tmp_path, "p3.el", "3 2\n0 1\n1 2\n")
    out = str(tmp_path / "t.el")
    assert _run(capsys, 'op', 'tensor', p3, p3, '-o', out)[0] == 0
    assert _run(capsys, 'index', out)[1].startswith("F=100 ")


@pytest.mark.parametrize('argv, f_value', [
    (['op', 'union', 'P2', 'P3'], 12),
    (['op', 'join', 'P2', 'P2'], 108),
    (['op', 'cartesian', 'P4', 'C5'], 910),
    (['op', 'composition', 'P3', 'P2'], 358),
    (['op', 'strong', 'P3', 'P2'], 358),
    (['op', 'corona', 'P2', 'K2'], 86),
    (['op', 'thorn', 'C3', '--thorns', '2'], 198),
    (['op', 'hierarchical', 'C3', 'P3', '--subset', '0'], 108),
    (['op', 'cluster', 'P3', 'P3', '--root2', '0'], 70),
    (['op', 'disjunction', 'K2', 'K2'], 108),
    (['op', 'symdiff', 'K2', 'K2'], 32),
    (['op', 'splice', 'C3', 'C3'], 96),
    (['op', 'link', 'C3', 'C3'], 86),
    (['op', 'bridge', 'P3', 'P3', '--roots', '1,1'], 58),
    (['op', 'bottleneck', 'P3'], 214),
])
def test_op_every_operation(tmp_path, capsys, argv, f_value):
    """Test every operation name on small operands."""
    files = {
        'P2': "2 1\n0 1\n",
        'P3': "3 2\n0 1\n1 2\n",
        'P4': "4 3\n0 1\n1 2\n2 3\n",
        'C3': "3 3\n0 1\n1 2\n0 2\n",
        'C5': "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n",
        'K2': "2 1\n0 1\n",
    }
    args = [_write(tmp_path, f"{a}.el", files[a]) if a in files else a for a in argv]
    code, stdout, _ = _run(capsys, *args)
    assert code == 0
    assert _run(capsys, 'index', _write(tmp_path, "result.el", stdout))[1].startswith(f"F={f_value} ")


def test_op_usage_errors(tmp_path, capsys):
    """Test arity mismatches and missing parameters."""
    p3 = _write(tmp_path, "p3.el", "3 2\n0 1\n1 2\n")
    code, _, stderr = _run(capsys, 'op', 'splice', p3)
    assert code == 2
    assert "exactly 2" in stderr
    assert _run(capsys, 'op', 'thorn', p3)[0] == 2
    assert _run(capsys, 'op', 'hierarchical', p3, p3)[0] == 2
    assert _run(capsys, 'op', 'splice', p3, p3, '--root1', '7')[0] == 2
    assert _run(capsys, 'op', 'bridge', p3, p3, '--roots', '0')[0] == 2
    assert _run(capsys, 'op', 'warp', p3)[0] == 2
    assert _run(capsys, 'op', 'union', str(tmp_path / "missing.el"))[0] == 2


def test_index_reports_parse_errors(tmp_path, capsys):
    """Test that malformed files exit 2 with the line number."""
    bad = _write(tmp_path, "bad.el", "2 1\n0 0\n")
    code, stdout, stderr = _run(capsys, 'index', bad)
    assert code == 2
    assert stdout == ""
    assert "line 2" in stderr and "Self-loop" in stderr


def test_index_from_stdin(capsys, monkeypatch):
    """Test reading '-' from standard input."""
    monkeypatch.setattr('sys.stdin', io.StringIO("3 2\n0 1\n1 2\n"))
    assert _run(capsys, 'index', '-') == (0, "F=10 M1=6 M2=4\n", "")


@pytest.mark.parametrize('argv, expected', [
    (['formula', 'union', '--g', '2,1,2,2', '--g', '3,2,6,10'], 12),
    (['formula', 'join', '--g', '2,1,2,2', '--g', '2,1,2,2'], 108),
    (['formula', 'join-copies', '--g', '1,0,0,0', '--copies', '4'], 108),
    (['formula', 'suspension', '--g', '5,5,20,40'], 260),
    (['formula', 'm1-cartesian', '--g', '3,3,12,24', '--g', '3,3,12,24'], 144),
    (['formula', 'cartesian', '--g', '2,1,2,2', '--g', '2,1,2,2', '--g', '2,1,2,2'], 216),
    (['formula', 'composition', '--g', '3,2,6,10', '--g', '2,1,2,2'], 358),
    (['formula', 'tensor', '--g', '4,4,16,32', '--g', '3,3,12,24'], 768),
    (['formula', 'strong', '--g', '2,1,2,2', '--g', '2,1,2,2'], 108),
    (['formula', 'corona', '--g', '2,1,2,2', '--g', '2,0,0,0'], 58),
    (['formula', 'thorn', '--g', '3,3,12,24', '--thorns', '2'], 198),
    (['formula', 'hierarchical', '--g', '3,2,6,10', '--g', '3,2,6,10',
      '--u-size', '1', '--s1', '1', '--s2', '1'], 70),
    (['formula', 'cluster', '--g', '3,3,12,24', '--g', '3,2,6,10', '--root-degree', '1'], 108),
    (['formula', 'disjunction', '--g', '2,1,2,2', '--g', '2,0,0,0'], 32),
    (['formula', 'symdiff', '--g', '2,1,2,2', '--g', '2,1,2,2'], 32),
    (['formula', 'splice', '--g', '3,3,12,24', '--g', '3,3,12,24', '--d1', '2', '--d2', '2'], 96),
    (['formula', 'link', '--g', '3,3,12,24', '--g', '3,3,12,24', '--d1', '2', '--d2', '2'], 86),
    (['formula', 'family', 'wheel', '6'], 378),
    (['formula', 'family', 'sun', '3', '2'], 108),
])
def test_formula_from_summaries(capsys, argv, expected):
    """Test every identity on summaries given as flags."""
    assert _run(capsys, *argv) == (0, f"{expected}\n", "")


def test_formula_from_files(tmp_path, capsys):
    """Test formulas with summaries and extras computed from files."""
    p3 = _write(tmp_path, "p3.el", "3 2\n0 1\n1 2\n")
    c3 = _write(tmp_path, "c3.el", "3 3\n0 1\n1 2\n0 2\n")
    assert _run(capsys, 'formula', 'hierarchical', '--file', c3, '--file', p3, '--subset', '0')[1] == "108\n"
    assert _run(capsys, 'formula', 'cluster', '--file', p3, '--file', p3, '--root2', '0')[1] == "70\n"
    assert _run(capsys, 'formula', 'splice', '--file', c3, '--file', c3)[1] == "96\n"
    assert _run(capsys, 'formula', 'link', '--file', p3, '--file', p3, '--root1', '1', '--root2', '1')[1] == "58\n"
    assert _run(capsys, 'formula', 'family', 'bottleneck', '--file', p3)[1] == "214\n"


def test_formula_usage_errors(tmp_path, capsys):
    """Test missing extras, arity mismatches and mixed operand sources."""
    p3 = _write(tmp_path, "p3.el", "3 2\n0 1\n1 2\n")
    assert _run(capsys, 'formula', 'splice', '--g', '3,2,6,10', '--g', '3,2,6,10')[0] == 2
    assert _run(capsys, 'formula', 'corona', '--g', '3,2,6,10')[0] == 2
    assert _run(capsys, 'formula', 'thorn', '--g', '3,2,6,10')[0] == 2
    assert _run(capsys, 'formula', 'union', '--g', '3,2,6')[0] == 2
    assert _run(capsys, 'formula', 'union', '--g', '3,2,6,10', '--file', p3)[0] == 2
    assert _run(capsys, 'formula', 'hierarchical', '--g', '3,2,6,10', '--g', '3,2,6,10', '--subset', '0')[0] == 2
    assert _run(capsys, 'formula', 'family', 'path', '0')[0] == 2
    assert _run(capsys, 'formula', 'family')[0] == 2
    assert _run(capsys, 'formula', 'union', 'extra', '--g', '3,2,6,10')[0] == 2


def test_verify_command(capsys):
    """Test a short verification run."""
    code, stdout, _ = _run(capsys, 'verify', '--trials', '5', '--max-n', '5', '--seed', '9', '--workers', '2')
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0].startswith("Verifying 17 identities, 5 trials each")
    assert lines[1].startswith("[ 1/17]  union")
    assert "All 17 identities passed" in stdout


def test_verify_disconnected_ok(capsys):
    """Test verification with disconnected operands."""
    code, stdout, _ = _run(capsys, 'verify', '--trials', '5', '--disconnected-ok')
    assert code == 0
    assert "All 17 identities passed" in stdout


def test_verify_bad_settings(capsys):
    """Test configuration errors."""
    assert _run(capsys, 'verify', '--max-n', '0')[0] == 2
    assert _run(capsys, 'verify', '--trials', 'many')[0] == 2


def test_table_golden_examples(capsys):
    """Test the golden table command."""
    code, stdout, _ = _run(capsys, 'table', 'paper-examples')
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "family,params,formula,direct,match"
    assert "wheel,6,378,378,yes" in lines
    assert "grid,3 3,204,204,yes" in lines
    assert all(line.endswith(",yes") for line in lines[1:])


def test_verbose_and_usage(capsys):
    """Test the global flag and argparse usage errors."""
    assert _run(capsys, '--verbose', 'table', 'paper-examples')[0] == 0
    assert _run(capsys)[0] == 2
    assert _run(capsys, 'table', 'other')[0] == 2
    assert _run(capsys, '--help')[0] == 0
