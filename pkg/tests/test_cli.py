"""CLI commands, file formats, exit codes."""

import json

import numpy as np
import pytest

from xtangle import cli
from xtangle import minset_state, random_density

from reference_states import M30A, M40, MAX_MIXED

EXPECTED_MEASURE_KEYS = {"purity", "concurrence", "entanglement_of_formation",
                         "negativity", "x_form", "rank", "separable"}


def write_json(path, matrix):
    cli.write_state(str(path), np.asarray(matrix, dtype=complex))
    return str(path)


def parse_report(captured):
    out = {}
    for line in captured.strip().split("\n"):
        key, _, value = line.partition(": ")
        out[key] = value
    return out


def test_measure_m40(tmp_path, capsys):
    path = write_json(tmp_path / "m40.json", M40)
    assert cli.main(["measure", "--in", path]) == 0
    rep = parse_report(capsys.readouterr().out)
    assert set(rep) == EXPECTED_MEASURE_KEYS
    assert float(rep["purity"]) == pytest.approx(0.54, abs=1e-12)
    assert float(rep["concurrence"]) == pytest.approx(0.4, abs=1e-12)
    assert rep["x_form"] == "false"
    assert rep["rank"] == "3"
    assert rep["separable"] == "false"


def test_measure_max_mixed(tmp_path, capsys):
    path = write_json(tmp_path / "mm.json", MAX_MIXED)
    assert cli.main(["measure", "--in", path]) == 0
    rep = parse_report(capsys.readouterr().out)
    assert float(rep["purity"]) == pytest.approx(0.25, abs=1e-12)
    assert float(rep["concurrence"]) == 0.0
    assert float(rep["negativity"]) == 0.0
    assert rep["separable"] == "true"


def test_counterpart_both_measures(tmp_path, capsys):
    path = write_json(tmp_path / "in.json", M40)
    for preserve in ("concurrence", "negativity"):
        out = str(tmp_path / f"out_{preserve}.json")
        code = cli.main(["counterpart", "--in", path,
                         "--preserve", preserve, "--out", out])
        assert code == 0
        rep = parse_report(capsys.readouterr().out)
        assert float(rep["measure_delta"]) < 1e-9
        assert float(rep["spectrum_delta"]) < 1e-9
        assert rep["measure"] == preserve
        # output file carries matrix and unitary and round-trips losslessly
        with open(out) as fh:
            obj = json.load(fh)
        assert "unitary" in obj
        matrix = cli.read_state(out)
        written = np.array([[complex(re, im) for re, im in row]
                            for row in obj["matrix"]])
        np.testing.assert_array_equal(matrix, written)


def test_counterpart_lossless_roundtrip(tmp_path):
    rho = random_density(42)
    path = write_json(tmp_path / "r.json", rho)
    np.testing.assert_array_equal(cli.read_state(path), rho)


def test_minset_matches_reference(tmp_path, capsys):
    out = str(tmp_path / "minset.json")
    assert cli.main(["minset", "--purity", "0.54", "--concurrence", "0.4",
                     "--out", out]) == 0
    capsys.readouterr()
    np.testing.assert_allclose(cli.read_state(out), M30A, atol=1e-12)


def test_minset_stdout(capsys):
    assert cli.main(["minset", "--purity", "0.54", "--concurrence", "0.4"]) == 0
    obj = json.loads(capsys.readouterr().out)
    got = np.array([[complex(re, im) for re, im in row] for row in obj["matrix"]])
    np.testing.assert_allclose(got, minset_state(0.54, 0.4), atol=0.0)


def test_classify(tmp_path, capsys):
    path = write_json(tmp_path / "x.json", M30A)
    assert cli.main(["classify", "--in", path]) == 0
    rep = parse_report(capsys.readouterr().out)
    assert rep["rank"] == "3"
    assert rep["kind"] == "1"
    assert rep["separable"] == "false"


def test_diagram(tmp_path, capsys):
    out = str(tmp_path / "d.csv")
    assert cli.main(["diagram", "--kind", "cp", "--grid", "4",
                     "--out", out]) == 0
    with open(out) as fh:
        lines = fh.read().split("\n")
    assert lines[0] == "p,c,negativity,rank,kind,u,v,q,r"
    assert len(lines) == 1 + 16 + 1
    capsys.readouterr()
    assert cli.main(["diagram", "--kind", "negativity_purity", "--grid", "3"]) == 0
    text = capsys.readouterr().out
    assert text.split("\n")[0] == "p,c,negativity,rank,kind"


def test_sweep_ok(capsys):
    assert cli.main(["sweep", "--count", "6", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    for name in cli.SWEEP_CHECKS:
        assert f"ok {name}" in out


def test_sweep_single_check(capsys):
    assert cli.main(["sweep", "measures", "--count", "4", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "ok measures" in out
    assert "classify" not in out


def test_sweep_failure_exit_and_seed(monkeypatch, capsys):
    from xtangle.ensemble import child_seed

    monkeypatch.setitem(cli._CHECK_FNS, "measures", lambda seed, tol: seed % 2)
    assert cli.main(["sweep", "measures", "--count", "3", "--seed", "7"]) == 4
    out = capsys.readouterr().out
    bad = [child_seed(7, i) for i in range(3) if child_seed(7, i) % 2 == 0]
    for seed in bad:
        assert f"FAIL measures seed={seed}" in out
    assert f"{len(bad)} failure(s)" in out


def test_exit_usage(capsys):
    assert cli.main(["measure"]) == 1  # --in required
    capsys.readouterr()
    assert cli.main(["sweep", "nonsense", "--count", "2"]) == 1
    capsys.readouterr()
    assert cli.main(["bogus-command"]) == 1
    capsys.readouterr()


def test_exit_parse(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["measure", "--in", str(bad)]) == 2
    capsys.readouterr()
    shape = tmp_path / "shape.json"
    shape.write_text(json.dumps({"matrix": [[[1.0, 0.0]] * 3] * 4}))
    assert cli.main(["measure", "--in", str(shape)]) == 2
    capsys.readouterr()
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"data": []}))
    assert cli.main(["measure", "--in", str(missing)]) == 2
    capsys.readouterr()


def test_exit_invalid_state(tmp_path, capsys):
    path = write_json(tmp_path / "notdensity.json",
                      np.diag([1.5, -0.5, 0.0, 0.0]))
    assert cli.main(["measure", "--in", str(path)]) == 3
    capsys.readouterr()
    # classify requires X form
    dense = write_json(tmp_path / "dense.json", M40)
    assert cli.main(["classify", "--in", dense]) == 3
    capsys.readouterr()
    # minset outside the admissible region
    assert cli.main(["minset", "--purity", "0.6", "--concurrence", "0.9"]) == 3
    capsys.readouterr()
    assert cli.main(["minset", "--purity", "0.1", "--concurrence", "0.0"]) == 3
    capsys.readouterr()


def test_file_not_found(capsys):
    assert cli.main(["measure", "--in", "/nonexistent/state.json"]) == 2
    capsys.readouterr()
