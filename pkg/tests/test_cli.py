from __future__ import annotations

import csv
import io
import math

import pytest

LN2 = math.log(2.0)


def _table(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


# ---------------------------------------------------------------------------
# ecd
# ---------------------------------------------------------------------------

def test_ecd_bernoulli_full_slope(run_cli):
    code, out, _ = run_cli("ecd", "--map", "bernoulli", "--param", "a=1.0", "-q")
    assert code == 0
    assert out.splitlines()[0] == "a,ecd,shannon_out,mutual_info,occupied_cells,overflow_fraction,status"
    row = _table(out)[0]
    assert float(row["ecd"]) == pytest.approx(LN2, abs=0.02)
    assert row["status"] == "ok"
    assert float(row["overflow_fraction"]) == 0.0


def test_ecd_bernoulli_contracting_is_zero(run_cli):
    code, out, _ = run_cli("ecd", "--map", "bernoulli", "--param", "a=0", "--n", "5000", "-q")
    assert code == 0
    assert float(_table(out)[0]["ecd"]) == 0.0


def test_ecd_log_base_two(run_cli):
    argv = ("ecd", "--map", "bernoulli", "--param", "a=1", "--n", "20000", "-q")
    _, nat, _ = run_cli(*argv)
    _, bits, _ = run_cli(*argv, "--log-base", "2")
    assert float(_table(bits)[0]["ecd"]) == pytest.approx(float(_table(nat)[0]["ecd"]) / LN2, rel=1e-12)


def test_ecd_divergent_orbit_exits_2(run_cli):
    code, out, _ = run_cli("ecd", "--map", "tinkerbell_a", "--param", "a=5.0", "-q")
    assert code == 2
    row = _table(out)[0]
    assert row["status"] == "diverged"
    assert row["ecd"] == ""


# ---------------------------------------------------------------------------
# lyapunov
# ---------------------------------------------------------------------------

def test_lyapunov_baker(run_cli):
    code, out, _ = run_cli("lyapunov", "--map", "baker", "--param", "a=1.0", "--n", "5000", "-q")
    assert code == 0
    assert out.splitlines()[0] == "a,lambda_1,lambda_2,numeric_jacobian,status"
    row = _table(out)[0]
    assert float(row["lambda_1"]) == pytest.approx(LN2, abs=1e-4)
    assert float(row["lambda_2"]) == pytest.approx(-LN2, abs=1e-4)
    assert row["numeric_jacobian"] == "false"


def test_lyapunov_zero_slope_is_minus_infinity(run_cli):
    code, out, _ = run_cli("lyapunov", "--map", "bernoulli", "--param", "a=0", "--n", "1000", "-q")
    assert code == 0
    assert _table(out)[0]["lambda_1"] == "-inf"


def test_lyapunov_logistic(run_cli):
    code, out, _ = run_cli("lyapunov", "--map", "logistic", "--param", "r=4", "-q")
    assert code == 0
    assert float(_table(out)[0]["lambda_1"]) == pytest.approx(LN2, abs=0.01)


def test_lyapunov_log_base_two(run_cli):
    _, out, _ = run_cli("lyapunov", "--map", "bernoulli", "--param", "a=1", "--n", "1000", "--log-base", "2", "-q")
    assert float(_table(out)[0]["lambda_1"]) == pytest.approx(1.0, abs=1e-12)


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def test_sweep_rejects_single_point(run_cli):
    code, out, err = run_cli("sweep", "--map", "bernoulli", "--sweep", "a=0:1", "--points", "1", "-q")
    assert code == 1
    assert out == ""
    assert "Błąd" in err


def test_sweep_table_shape(run_cli):
    code, out, _ = run_cli(
        "sweep", "--map", "baker", "--sweep", "a=0:1", "--points", "5",
        "--n", "500", "--transient", "10", "--workers", "1", "-q",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,a,ecd,lambda_1,lambda_2,numeric_jacobian,status,overflow_fraction"
    rows = _table(out)
    assert [r["index"] for r in rows] == ["0", "1", "2", "3", "4"]
    assert [float(r["a"]) for r in rows] == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_sweep_single_analysis_leaves_blank_columns(run_cli):
    _, out, _ = run_cli(
        "sweep", "--map", "bernoulli", "--sweep", "a=0.5:1", "--points", "3",
        "--n", "500", "--analyses", "lyapunov", "--workers", "1", "-q",
    )
    for row in _table(out):
        assert row["ecd"] == ""
        assert row["overflow_fraction"] == ""
        assert float(row["lambda_1"]) == pytest.approx(math.log(2.0 * float(row["a"])), abs=1e-9)


def test_sweep_output_does_not_depend_on_workers(run_cli):
    argv = (
        "sweep", "--map", "tinkerbell_a", "--sweep", "a=-0.4:0.9", "--points", "6",
        "--n", "1000", "--transient", "100", "-q",
    )
    _, serial, _ = run_cli(*argv, "--workers", "1")
    _, parallel, _ = run_cli(*argv, "--workers", "2")
    assert serial == parallel


def test_sweep_unknown_analysis(run_cli):
    code, _, _ = run_cli("sweep", "--map", "bernoulli", "--analyses", "entropy")
    assert code == 1


# ---------------------------------------------------------------------------
# orbit
# ---------------------------------------------------------------------------

def test_orbit_window(run_cli):
    code, out, _ = run_cli("orbit", "--map", "bernoulli", "--param", "a=0.4", "--from", "1001", "--to", "1005", "-q")
    assert code == 0
    rows = _table(out)
    assert [int(r["step"]) for r in rows] == [1001, 1002, 1003, 1004, 1005]
    for r in rows:
        assert abs(float(r["x1"])) < 1e-12
        assert r["cell"] == "0"


def test_orbit_default_window_length(run_cli):
    code, out, _ = run_cli("orbit", "--map", "tinkerbell_a", "--param", "a=0.9", "-q")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "step,x1,x2,cell"
    assert len(lines) == 1 + 3000


def test_orbit_reversed_window(run_cli):
    code, out, _ = run_cli("orbit", "--map", "bernoulli", "--from", "20", "--to", "10")
    assert code == 1
    assert out == ""


# ---------------------------------------------------------------------------
# Błędy użycia
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "argv",
    [
        ("ecd", "--map", "henon"),
        ("ecd", "--map", "bernoulli", "--bogus"),
        ("ecd",),
        ("ecd", "--map", "bernoulli", "--param", "c=1"),
        ("ecd", "--map", "bernoulli", "--param", "a"),
        ("ecd", "--map", "bernoulli", "--map-file", "x.map"),
        ("ecd", "--map", "baker", "--cells", "10,10,10"),
        ("ecd", "--map", "bernoulli", "--n", "0"),
        ("lyapunov", "--map", "bernoulli", "--x0", "0.1,0.2"),
        (),
    ],
)
def test_usage_errors_exit_1(run_cli, argv):
    code, out, _ = run_cli(*argv)
    assert code == 1
    assert out == ""


def test_missing_map_file_exits_1(run_cli, tmp_path):
    code, _, err = run_cli("ecd", "--map-file", str(tmp_path / "brak.map"))
    assert code == 1
    assert "Błąd" in err


def test_map_file_with_very_long_expression_exits_1(run_cli, tmp_path):
    path = tmp_path / "dluga.map"
    path.write_text(
        "dimension = 1\ndomain = 0:1\nf1 = " + "+".join(["0.0001*x1"] * 3000) + "\n",
        encoding="utf-8",
    )
    code, out, err = run_cli("ecd", "--map-file", str(path), "--n", "1000", "-q")
    assert code == 1
    assert out == ""
    assert "Traceback" not in err
    assert "Błąd" in err and "drzewa" in err


# ---------------------------------------------------------------------------
# Pliki, środowisko, mapy z pliku
# ---------------------------------------------------------------------------

def test_out_writes_csv_and_manifest(run_cli, tmp_path):
    target = tmp_path / "wynik.csv"
    code, out, _ = run_cli(
        "ecd", "--map", "tinkerbell_a", "--param", "a=0.9", "--n", "3000", "--out", str(target), "-q",
    )
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith("a,ecd,")

    manifest = dict(
        line.split("=", 1)
        for line in (tmp_path / "wynik.manifest").read_text(encoding="utf-8").splitlines()
    )
    assert manifest["command"] == "ecd"
    assert manifest["map"] == "tinkerbell_a"
    name, value = manifest["params"].split("=")
    assert (name, float(value)) == ("a", 0.9)
    assert manifest["cells"] == "160,100"
    assert manifest["n"] == "3000"
    assert "--out" in manifest["argv"]


@pytest.mark.parametrize("name", ["run.manifest", "RUN.MANIFEST"])
def test_out_with_manifest_suffix_is_rejected(run_cli, tmp_path, name):
    target = tmp_path / name
    code, out, err = run_cli("ecd", "--map", "bernoulli", "--n", "1000", "--out", str(target), "-q")
    assert code == 1
    assert out == ""
    assert ".manifest" in err
    assert not target.exists()


def test_env_orbit_length_is_used(clean_env, run_cli, tmp_path):
    clean_env.setenv("CDG_N", "4000")
    run_cli("ecd", "--map", "bernoulli", "-q", "--out", str(tmp_path / "a.csv"))
    manifest = (tmp_path / "a.manifest").read_text(encoding="utf-8")
    assert "n=4000" in manifest.splitlines()

    # flaga ma pierwszeństwo przed zmienną
    run_cli("ecd", "--map", "bernoulli", "--n", "3000", "-q", "--out", str(tmp_path / "b.csv"))
    assert "n=3000" in (tmp_path / "b.manifest").read_text(encoding="utf-8").splitlines()


def test_invalid_env_value_exits_1(clean_env, run_cli):
    clean_env.setenv("CDG_N", "dużo")
    code, out, err = run_cli("ecd", "--map", "bernoulli", "-q")
    assert code == 1
    assert out == ""
    assert "CDG_N" in err


def test_map_file_matches_builtin(run_cli, maps_dir):
    common = ("--param", "a=0.8", "--n", "4000", "-q")
    _, from_file, _ = run_cli("ecd", "--map-file", str(maps_dir / "bernoulli.map"), "--cells", "2000", *common)
    _, builtin_, _ = run_cli("ecd", "--map", "bernoulli", *common)
    assert float(_table(from_file)[0]["ecd"]) == pytest.approx(float(_table(builtin_)[0]["ecd"]), abs=1e-9)


def test_map_file_lyapunov_uses_numeric_jacobian(run_cli, maps_dir):
    code, out, _ = run_cli(
        "lyapunov", "--map-file", str(maps_dir / "baker.map"), "--param", "a=1", "--n", "2000", "-q",
    )
    assert code == 0
    row = _table(out)[0]
    assert row["numeric_jacobian"] == "true"
    assert float(row["lambda_1"]) == pytest.approx(LN2, abs=1e-6)


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------

def test_maps_lists_builtins(run_cli):
    code, out, _ = run_cli("maps")
    assert code == 0
    for name in ("bernoulli", "baker", "tinkerbell_a", "tinkerbell_b", "logistic"):
        assert name in out


def test_maps_describes_map_file(run_cli, maps_dir):
    code, out, _ = run_cli("maps", "--map-file", str(maps_dir / "tinkerbell_a.map"))
    assert code == 0
    assert "tinkerbell_a_dsl" in out
    assert "numeryczny" in out
