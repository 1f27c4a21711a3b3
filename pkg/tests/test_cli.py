import io
from contextlib import redirect_stdout

import pytest

from latzd.claims import FIGURE1_TEXT, fixture_example_1_7
from latzd.cli import main


@pytest.fixture
def fig1_file(tmp_path):
    path = tmp_path / "fig1.lat"
    path.write_text(FIGURE1_TEXT)
    return str(path)


@pytest.fixture
def trunc_file(tmp_path):
    path = tmp_path / "trunc.lat"
    path.write_text(fixture_example_1_7(6).serialize())
    return str(path)


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_check_figure1(fig1_file):
    code, out = run_cli("check", fig1_file)
    assert code == 0
    assert "elements: 9" in out
    assert "distributive: yes" in out
    assert "modular: yes" in out


def test_check_truncation(trunc_file):
    code, out = run_cli("check", trunc_file)
    assert code == 0
    assert "distributive: no" in out
    assert "forbidden sublattice:" in out


def test_check_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.lat"
    bad.write_text("elements: a a\ncovers:")
    code, _ = run_cli("check", str(bad))
    assert code == 1


def test_check_missing_file():
    code, _ = run_cli("check", "/nonexistent/path.lat")
    assert code == 1


def test_ideals_prime(fig1_file):
    code, out = run_cli("ideals", fig1_file, "--prime")
    assert code == 0
    assert "total: 4" in out
    assert "{0,c,a}" in out


def test_zdgraph_default_ideal(fig1_file):
    code, out = run_cli("zdgraph", fig1_file)
    assert code == 0
    assert "|V| = 4" in out
    assert "girth: 4" in out


def test_zdgraph_classic(fig1_file):
    code, out = run_cli("zdgraph", fig1_file, "--gamma-classic")
    assert code == 0
    assert "|V| = 5" in out
    assert "girth: 3" in out
    assert "omega: 3" in out


def test_zdgraph_principal_z_empty(fig1_file):
    code, out = run_cli("zdgraph", fig1_file, "--ideal-principal", "z")
    assert code == 0
    assert "|V| = 0" in out


def test_zdgraph_explicit_ideal(fig1_file):
    code, out = run_cli("zdgraph", fig1_file, "--ideal", "0")
    assert code == 0
    assert "|V| = 4" in out


def test_zdgraph_rejects_non_ideal(fig1_file):
    code, _ = run_cli("zdgraph", fig1_file, "--ideal", "0,a")
    assert code == 1


def test_zdgraph_dot(fig1_file):
    code, out = run_cli("zdgraph", fig1_file, "--dot")
    assert code == 0
    assert out.startswith("graph zd {")
    assert out.count("--") == 4


def test_zdgraph_figure(fig1_file, tmp_path):
    fig = tmp_path / "g.png"
    code, out = run_cli("zdgraph", fig1_file, "--figure", str(fig))
    assert code == 0
    assert fig.exists() and fig.stat().st_size > 0


def test_radical_contained(fig1_file):
    code, out = run_cli(
        "radical", fig1_file, "--ideal-principal", "z", "--variant", "contained"
    )
    assert code == 0
    assert "radical = {0,c,a} != I" in out


def test_radical_containing(fig1_file):
    code, out = run_cli(
        "radical", fig1_file, "--ideal-principal", "z", "--variant", "containing"
    )
    assert code == 0
    assert "= I" in out and "!=" not in out


def test_radical_empty_family(fig1_file):
    code, out = run_cli("radical", fig1_file, "--ideal", "0")
    assert code == 0
    assert "family_size 0" in out


def test_verify_paper_passes():
    code, out = run_cli("verify-paper")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 30


def test_verify_paper_deterministic():
    _, first = run_cli("verify-paper")
    _, second = run_cli("verify-paper")
    assert first == second


def test_census_small():
    code, out = run_cli("census", "--max-size", "4", "--claims", "GAMMA0")
    assert code == 0
    assert "lattices" in out
    assert "GAMMA0" in out


def test_census_counterexample_exit_code():
    code, out = run_cli(
        "census", "--max-size", "3", "--claims", "P2.1-CONTAINED",
        "--distributive-only",
    )
    assert code == 2
    assert "counterexamples: " in out


def test_census_out_bundle(tmp_path):
    out_dir = tmp_path / "bundle"
    code, out = run_cli(
        "census", "--max-size", "4", "--claims", "P2.1-CONTAINED",
        "--out", str(out_dir),
    )
    assert code == 2
    assert (out_dir / "summary.txt").exists()
    assert (out_dir / "results.csv").exists()
    assert (out_dir / "claim_outcomes.png").exists()
    assert (out_dir / "lattice_counts.png").exists()
    assert list(out_dir.glob("counterexample_*.lat"))
    csv_text = (out_dir / "results.csv").read_text()
    assert csv_text.splitlines()[0] == "lattice_id,size,ideal,claim,status,witness"


def test_census_rejects_size_nine():
    code, _ = run_cli("census", "--max-size", "9")
    assert code == 1


def test_search_found(tmp_path):
    out_dir = tmp_path / "search"
    code, out = run_cli(
        "search", "P2.1-CONTAINED", "--max-size", "3", "--out", str(out_dir)
    )
    assert code == 2
    assert "counterexample for P2.1-CONTAINED" in out
    assert list(out_dir.glob("*.lat"))


def test_search_not_found():
    code, out = run_cli("search", "P2.1-CONTAINING", "--max-size", "5")
    assert code == 0
    assert "no counterexample" in out


def test_usage_error_exit_code():
    code, _ = run_cli("frobnicate")
    assert code == 1
