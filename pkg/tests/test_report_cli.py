"""The analyze report builder and the command-line surface end to end."""

import json

import pytest

from rooklab.cli import main
from rooklab.core import csr_spec, sr_spec
from rooklab.report import build_report, parse_oracle_selection


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- report builder ----------------------------------------------------------------


def test_report_sr32_all_certified():
    report = build_report(sr_spec(3, 2), parse_oracle_selection("all"))
    verdicts = {r.name: r.verdict for r in report.records}
    assert verdicts == {q: "certified" for q in ("alpha", "gamma", "omega", "chi", "diameter")}
    assert not report.has_discrepancy
    by_name = {r.name: r for r in report.records}
    assert by_name["alpha"].oracle == 2 and by_name["alpha"].constructed == 2
    assert by_name["gamma"].constructed == 2
    checks = {c.name: c for c in report.checks}
    assert checks["spectral-integrality"].passed
    assert checks["lambda-min"].passed
    assert checks["residue-coloring"].passed


def test_report_csr32_surfaces_gaps():
    report = build_report(csr_spec(3, 2), parse_oracle_selection("all"))
    assert report.has_discrepancy
    by_name = {r.name: r for r in report.records}
    assert by_name["omega"].verdict == "discrepancy"
    assert by_name["omega"].oracle == 4 and by_name["omega"].exact == 3
    assert by_name["chi"].verdict == "discrepancy"  # oracle 4 over the claimed p = 3
    checks = {c.name: c for c in report.checks}
    assert checks["residue-coloring"].passed is False
    assert checks["residue-coloring"].claimed


def test_report_without_oracles():
    report = build_report(sr_spec(3, 4), frozenset())
    by_name = {r.name: r for r in report.records}
    assert by_name["alpha"].verdict == "bound-consistent"
    assert by_name["alpha"].oracle is None
    assert by_name["omega"].verdict == "oracle-skipped"


def test_oracle_selection_parsing():
    assert parse_oracle_selection("none") == frozenset()
    assert parse_oracle_selection("alpha,chi") == {"alpha", "chi"}
    assert len(parse_oracle_selection("all")) == 5
    with pytest.raises(ValueError, match="unknown oracle"):
        parse_oracle_selection("alpha,beta")


# -- CLI ---------------------------------------------------------------------------


def test_cli_generate_matches_edges(capsys):
    code, out, _ = run_cli(capsys, "generate", "--family", "sr", "-m", "3", "-n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# family=SR m=3 n=2"
    assert len(lines) == 13
    assert lines[1] == "0,0,2;0,1,1"


def test_cli_generate_to_file(tmp_path, capsys):
    target = tmp_path / "edges.txt"
    code, out, _ = run_cli(
        capsys, "generate", "--family", "csr", "-m", "4", "-n", "2", "--edges-out", str(target)
    )
    assert code == 0
    content = target.read_text().splitlines()
    assert content[0] == "# family=CSR m=4 n=2"
    assert len(content) == 25


def test_cli_analyze_certified(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--family", "sr", "-m", "3", "-n", "2", "--oracle", "all"
    )
    assert code == 0
    assert "quantity name=alpha" in out and "verdict=certified" in out
    assert "summary discrepancy=no" in out


def test_cli_analyze_strict_discrepancy_exit(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--family", "csr", "-m", "3", "-n", "2", "--oracle", "all", "--strict"
    )
    assert code == 3
    assert "oracle 4 != formula 3" in out
    assert "proper=False" in out


def test_cli_analyze_json(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "analyze", "--family", "sr", "-m", "3", "-n", "2", "--json", str(path)
    )
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["spec"] == {"family": "SR", "m": 3, "n": 2, "vertices": 6, "degree": 4}
    assert doc["discrepancy"] is False
    names = [q["name"] for q in doc["quantities"]]
    assert names == ["alpha", "gamma", "omega", "chi", "diameter"]


def test_cli_deterministic_output(capsys):
    first = run_cli(capsys, "analyze", "--family", "csr", "-m", "4", "-n", "3", "--oracle", "all")
    second = run_cli(capsys, "analyze", "--family", "csr", "-m", "4", "-n", "3", "--oracle", "all")
    assert first == second


def test_cli_distance_with_witness(capsys):
    code, out, _ = run_cli(
        capsys, "distance", "--family", "csr", "-m", "4", "-n", "2",
        "--from", "0,0,0,0", "--to", "1,1,1,1",
    )
    assert code == 0
    assert "value=2" in out
    assert "blocks={1,2},{3,4}" in out


def test_cli_construct_hamiltonian_rejects(capsys):
    code, _, err = run_cli(capsys, "construct", "hamiltonian-cycle", "-m", "2", "-n", "1")
    assert code == 1
    assert "no Hamiltonian cycle" in err


def test_cli_construct_hamiltonian_export(tmp_path, capsys):
    path = tmp_path / "cycle.txt"
    code, out, _ = run_cli(
        capsys, "construct", "hamiltonian-cycle", "-m", "3", "-n", "2", "--out", str(path)
    )
    assert code == 0
    assert "verdict valid=yes" in out
    assert len(path.read_text().splitlines()) == 6


def test_cli_construct_coloring_strict(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "coloring", "--family", "csr", "-m", "3", "-n", "2", "--strict"
    )
    assert code == 3
    assert "proper=no" in out


def test_cli_construct_independent_set(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "independent-set", "--family", "sr", "-m", "3", "-n", "2"
    )
    assert code == 0
    assert "best index=0 size=2" in out
    assert "verdict proper-partition=yes" in out


def test_cli_construct_dominating_set(capsys):
    code, out, _ = run_cli(
        capsys, "construct", "dominating-set", "-m", "3", "-n", "4", "--oracle"
    )
    assert code == 0
    assert "size=3" in out and "verdict dominates=yes" in out and "oracle gamma=3" in out


def test_cli_aut_count_only(capsys):
    code, out, _ = run_cli(capsys, "aut", "-m", "3", "-n", "2", "--count-only", "--oracle")
    assert code == 0
    assert "formula-order=24" in out
    assert "enumerated count=24" in out
    assert "descriptor" not in out
    assert "oracle count=24" in out


def test_cli_aut_dumps_descriptors(capsys):
    code, out, _ = run_cli(capsys, "aut", "-m", "2", "-n", "2")
    assert code == 0
    assert out.count("descriptor ") == 4


def test_cli_reduce_3partition(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    path.write_text("2 10\n4 4 3 3 3 3\n")
    code, out, _ = run_cli(capsys, "reduce-3partition", "--instance", str(path))
    assert code == 0
    assert "distance value=4 target=4" in out
    assert "agree=yes" in out


def test_cli_aut_mismatch_outside_hypothesis_not_strict_failure(capsys):
    # CSR(4,2) has more symmetries than the parametrized maps; with m or n
    # at most 3 that is documented, not a discrepancy
    code, out, _ = run_cli(
        capsys, "aut", "-m", "4", "-n", "2", "--count-only", "--oracle", "--strict"
    )
    assert code == 0
    assert "formula-order=192" in out
    assert "oracle count=384" in out
    assert "outside-hypothesis=yes" in out


def test_cli_cap_exceeded_exit(capsys):
    code, _, err = run_cli(
        capsys, "generate", "--family", "sr", "-m", "6", "-n", "40", "--enum-cap", "100"
    )
    assert code == 2
    assert "cap" in err


def test_cli_requested_oracle_over_cap_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "analyze", "--family", "sr", "-m", "4", "-n", "20", "--oracle", "alpha"
    )
    assert code == 2
    assert "search cap" in err


def test_cli_env_fallback_for_caps(capsys, monkeypatch):
    monkeypatch.setenv("ROOKLAB_ENUM_CAP", "100")
    code, _, err = run_cli(capsys, "generate", "--family", "sr", "-m", "6", "-n", "40")
    assert code == 2
    assert "cap 100" in err
    # an explicit flag wins over the environment
    monkeypatch.setenv("ROOKLAB_ENUM_CAP", "1")
    code, out, _ = run_cli(
        capsys, "generate", "--family", "sr", "-m", "3", "-n", "2", "--enum-cap", "50"
    )
    assert code == 0


def test_cli_usage_error_exit():
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--family", "xx", "-m", "3", "-n", "2"])
    assert exc.value.code == 1


def test_cli_unknown_oracle_name_exit(capsys):
    code, _, err = run_cli(
        capsys, "analyze", "--family", "sr", "-m", "3", "-n", "2", "--oracle", "beta"
    )
    assert code == 1
    assert "unknown oracle" in err
