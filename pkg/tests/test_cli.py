import io
import json
import math

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from quantum_concepts_py.cli.main import cli
from quantum_concepts_py.config import load_config, parse_config_dict
from quantum_concepts_py.numerics import integrate


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(runner):
    def run(*args):
        return runner.invoke(cli, [str(a) for a in args])

    return run


def read_csv(text: str, **kwargs) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(text), **kwargs)


class TestClassify:
    def test_amphibious_tie(self, invoke, config_path):
        result = invoke("--config", config_path, "classify")
        assert result.exit_code == 0, result.output
        assert "0.536256" in result.stdout
        assert "0.500000" in result.stdout
        assert "winner: TIE{boat,car}" in result.stdout

    def test_bundled_config_matches(self, invoke, config_path):
        assert invoke("classify").stdout == invoke("--config", config_path, "classify").stdout

    def test_object_override(self, invoke, config_path):
        result = invoke("--config", config_path, "classify", "--object-mu", 4, "--object-sigma", 1)
        assert result.exit_code == 0, result.output
        assert "0.880797" in result.stdout
        assert "winner: car" in result.stdout

    def test_single_concept_equal_to_object(self, invoke, tmp_path):
        path = tmp_path / "single.yaml"
        path.write_text("concepts: [{name: car, mu: 3, sigma: 2}]\n")
        result = invoke("--config", str(path), "classify")
        assert result.exit_code == 0, result.output
        assert "1.000000" in result.stdout
        assert "winner: car" in result.stdout

    def test_invalid_sigma_names_entry(self, invoke, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("concepts:\n  - name: car\n    mu: 5\n    sigma: -1\n")
        result = invoke("--config", str(path), "classify")
        assert result.exit_code == 2
        assert "concepts[0] (car)" in result.output
        assert "line 2" in result.output

    def test_invalid_object_sigma(self, invoke, config_path):
        result = invoke("--config", config_path, "classify", "--object-sigma", -1)
        assert result.exit_code == 2

    def test_missing_config(self, invoke, tmp_path):
        result = invoke("--config", str(tmp_path / "absent.yaml"), "classify")
        assert result.exit_code == 2

    def test_quadrature_grid_matches_closed_form(self, invoke, config_path, tmp_path):
        path = tmp_path / "with_grid.yaml"
        path.write_text(
            "concepts:\n"
            "  - {name: car, mu: 5, sigma: 1}\n"
            "  - {name: boat, mu: 1, sigma: 1}\n"
            "object: {mu: 3, sigma: 2}\n"
            "grid: {x_min: -13, x_max: 19, n_points: 4097}\n"
        )
        result = invoke("--config", str(path), "classify")
        assert result.exit_code == 0, result.output
        assert "0.536256" in result.stdout
        assert "winner: TIE{boat,car}" in result.stdout

    def test_grid_too_narrow_is_a_computation_failure(self, invoke, tmp_path):
        path = tmp_path / "narrow_grid.yaml"
        path.write_text(
            "concepts: [{name: car, mu: 5, sigma: 1}]\n"
            "object: {mu: 3, sigma: 2}\n"
            "grid: {x_min: 0, x_max: 10, n_points: 1001}\n"
        )
        result = invoke("--config", str(path), "classify")
        assert result.exit_code == 1
        assert "GridTooNarrow" in result.output

    def test_json_round_trip(self, invoke, config_path):
        result = invoke("--config", config_path, "--format", "json", "classify")
        assert result.exit_code == 0, result.output
        doc = json.loads(result.stdout)
        assert doc["command"] == "classify"
        assert doc["result"]["winner"] == "TIE{boat,car}"
        assert [e["raw_score"] for e in doc["result"]["entries"]] == [0.536256, 0.536256]
        assert parse_config_dict(doc["config"]) == load_config(config_path)

    def test_output_file(self, invoke, config_path, tmp_path):
        output = tmp_path / "reports" / "classify.txt"
        result = invoke("--config", config_path, "--output", str(output), "classify")
        assert result.exit_code == 0, result.output
        assert result.stdout == ""
        assert "winner: TIE{boat,car}" in output.read_text()

    def test_deterministic(self, invoke, config_path):
        first = invoke("--config", config_path, "classify")
        second = invoke("--config", config_path, "classify")
        assert first.stdout == second.stdout


class TestReruns:
    @pytest.mark.parametrize(
        "command",
        [
            ["emit-figure"],
            ["emit-figure", "--which", "wavefunctions"],
            ["compare-fuzzy"],
            ["interference", "--sweep-points", 5],
            ["kernel-matrix"],
        ],
    )
    @pytest.mark.parametrize("output_format", ["table", "json"])
    def test_byte_identical(self, invoke, config_path, command, output_format):
        args = ["--config", config_path, "--format", output_format, *command]
        first, second = invoke(*args), invoke(*args)
        assert first.exit_code == 0, first.output
        assert first.stdout_bytes == second.stdout_bytes


class TestEmitFigure:
    def test_densities_integrate_to_one(self, invoke, config_path):
        result = invoke("--config", config_path, "emit-figure")
        assert result.exit_code == 0, result.output
        frame = read_csv(result.stdout)
        assert list(frame.columns) == [
            "x",
            "density_car",
            "density_boat",
            "density_object",
            "overlap_car",
            "overlap_boat",
        ]
        dx = frame.x[1] - frame.x[0]
        for column in ("density_car", "density_boat", "density_object"):
            assert abs(integrate(frame[column].to_numpy(), dx).real - 1.0) < 1e-9

    def test_density_peaks(self, invoke, config_path):
        frame = read_csv(invoke("--config", config_path, "emit-figure").stdout)
        car_peak = frame.loc[np.isclose(frame.x, 5.0), "density_car"].item()
        object_peak = frame.loc[np.isclose(frame.x, 3.0), "density_object"].item()
        assert car_peak == pytest.approx(1 / math.sqrt(2 * math.pi), abs=1e-9)
        assert object_peak == pytest.approx(1 / (2 * math.sqrt(2 * math.pi)), abs=1e-9)

    def test_overlap_column_integrates_to_amplitude(self, invoke, config_path):
        frame = read_csv(invoke("--config", config_path, "emit-figure").stdout)
        dx = frame.x[1] - frame.x[0]
        amplitude = integrate(frame["overlap_car"].to_numpy(), dx).real
        assert amplitude**2 == pytest.approx(0.536256, abs=1e-6)

    def test_wavefunctions(self, invoke, config_path):
        result = invoke("--config", config_path, "emit-figure", "--which", "wavefunctions")
        frame = read_csv(result.stdout)
        assert list(frame.columns) == ["x", "psi_car", "psi_boat", "psi_object"]
        peak = frame.loc[np.isclose(frame.x, 5.0), "psi_car"].item()
        assert peak == pytest.approx((2 * math.pi) ** -0.25, abs=1e-9)

    def test_unwritable_output(self, invoke, config_path, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        result = invoke("--config", config_path, "--output", blocker / "figure.csv", "emit-figure")
        assert result.exit_code == 1

    def test_empty_concepts(self, invoke, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("concepts: []\n")
        assert invoke("--config", str(path), "emit-figure").exit_code == 2

    def test_reserved_object_name(self, invoke, tmp_path):
        path = tmp_path / "reserved.yaml"
        path.write_text("concepts: [{name: object, mu: 0, sigma: 1}]\n")
        result = invoke("--config", str(path), "emit-figure")
        assert result.exit_code == 2
        assert "reserved" in result.output


class TestMetricCheck:
    def test_all_axioms_pass(self, invoke):
        result = invoke("metric-check", "--trials", 1000)
        assert result.exit_code == 0, result.output
        assert "FAIL" not in result.stdout
        assert "triangle inequality" in result.stdout

    def test_zero_trials_rejected(self, invoke):
        assert invoke("metric-check", "--trials", 0).exit_code == 2

    def test_injected_km1_fault(self, invoke):
        result = invoke("metric-check", "--trials", 200, "--inject-fault", "km1")
        assert result.exit_code == 1
        assert "KM1 M(x,y,0)=0 counterexample" in result.stdout

    def test_injected_symmetry_fault(self, invoke):
        result = invoke("metric-check", "--trials", 200, "--inject-fault", "symmetry")
        assert result.exit_code == 1
        assert "symmetry counterexample" in result.stdout

    def test_json_report(self, invoke):
        result = invoke("--format", "json", "metric-check", "--trials", 100)
        assert result.exit_code == 0, result.output
        doc = json.loads(result.stdout)
        assert doc["seed"] == 42
        assert all(suite["passed"] for suite in doc["suites"])

    def test_seeded_runs_are_identical(self, invoke):
        first = invoke("--seed", 7, "--format", "json", "metric-check", "--trials", 100)
        second = invoke("--seed", 7, "--format", "json", "metric-check", "--trials", 100)
        assert first.stdout == second.stdout


class TestCompareFuzzy:
    def test_both_tie(self, invoke, config_path):
        result = invoke("--config", config_path, "compare-fuzzy")
        assert result.exit_code == 0, result.output
        assert "quantum decision: TIE{boat,car}" in result.stdout
        assert "fuzzy decision: TIE{boat,car}" in result.stdout
        assert "fuzzy union (max): 0.500000" in result.stdout
        assert "decisions agree: yes" in result.stdout
        assert "note:" not in result.stdout

    def test_narrow_memberships_vanish(self, invoke, narrow_config_path):
        result = invoke("--config", narrow_config_path, "compare-fuzzy")
        assert result.exit_code == 0, result.output
        assert "fuzzy union (max): 0.000000" in result.stdout
        assert "note: every membership degree is 0" in result.stdout

    def test_crisp_value_at_car(self, invoke, config_path):
        result = invoke("--config", config_path, "compare-fuzzy", "--x", 5)
        assert result.exit_code == 0, result.output
        assert "object: mu=5.000000 sigma=2.000000" in result.stdout
        assert "quantum decision: car" in result.stdout
        assert "fuzzy decision: car" in result.stdout
        assert "decisions agree: yes" in result.stdout

    def test_crisp_value_with_explicit_object(self, invoke, config_path):
        result = invoke("--config", config_path, "compare-fuzzy", "--x", 5, "--object-mu", 3)
        assert result.exit_code == 0, result.output
        assert "quantum decision: TIE{boat,car}" in result.stdout
        assert "fuzzy decision: car" in result.stdout
        assert "decisions agree: no" in result.stdout

    def test_crisp_value_keeps_object_width(self, invoke, config_path):
        args = ["--config", config_path, "--format", "json", "compare-fuzzy"]
        result = invoke(*args, "--x", 5, "--object-sigma", 1)
        doc = json.loads(result.stdout)
        assert doc["config"]["object"] == {"mu": 5.0, "sigma": 1.0}
        car = next(e for e in doc["quantum"]["entries"] if e["name"] == "car")
        assert car["raw_score"] == 1.0

    def test_json(self, invoke, narrow_config_path):
        result = invoke("--config", narrow_config_path, "--format", "json", "compare-fuzzy")
        doc = json.loads(result.stdout)
        assert doc["memberships_vanish"] is True
        assert doc["x"] == 3.0
        assert parse_config_dict(doc["config"]) == load_config(narrow_config_path)

    def test_no_memberships(self, invoke, tmp_path):
        path = tmp_path / "no_memberships.yaml"
        path.write_text("concepts: [{name: car, mu: 5, sigma: 1}]\n")
        result = invoke("--config", str(path), "compare-fuzzy")
        assert result.exit_code == 2
        assert "memberships" in result.output


class TestInterference:
    def test_default_phase_cancels(self, invoke, config_path):
        result = invoke("--config", config_path, "interference")
        assert result.exit_code == 0, result.output
        assert "phase: 3.141593" in result.stdout
        assert "0.000000" in result.stdout
        assert "0.9446" in result.stdout
        assert "single car: 0.536256" in result.stdout

    def test_zero_phase_is_constructive(self, invoke, config_path):
        result = invoke("--config", config_path, "--format", "json", "interference", "--phase", 0)
        doc = json.loads(result.stdout)
        assert doc["dephased"] == doc["constructive"]
        assert doc["constructive"] == pytest.approx(0.9447, abs=1e-4)

    def test_sweep(self, invoke, config_path):
        result = invoke(
            "--config", config_path, "--format", "json", "interference", "--sweep-points", 9
        )
        scores = [point["score"] for point in json.loads(result.stdout)["sweep"]]
        assert len(scores) == 9
        assert scores == sorted(scores, reverse=True)

    def test_needs_two_concepts(self, invoke, tmp_path):
        path = tmp_path / "single.yaml"
        path.write_text("concepts: [{name: car, mu: 5, sigma: 1}]\n")
        assert invoke("--config", str(path), "interference").exit_code == 2


class TestKernelMatrix:
    def test_csv(self, invoke, config_path):
        result = invoke("--config", config_path, "kernel-matrix")
        assert result.exit_code == 0, result.output
        assert result.stdout.splitlines()[0] == "name,car,boat,object"
        frame = read_csv(result.stdout, index_col="name")
        assert frame.loc["car", "object"] == pytest.approx(0.536256, abs=1e-6)
        assert frame.loc["car", "boat"] == pytest.approx(math.exp(-4), abs=1e-12)
        np.testing.assert_allclose(np.diag(frame.to_numpy()), 1.0)

    def test_without_object(self, invoke, config_path):
        result = invoke("--config", config_path, "kernel-matrix", "--no-include-object")
        assert result.stdout.splitlines()[0] == "name,car,boat"

    def test_json(self, invoke, config_path):
        result = invoke("--config", config_path, "--format", "json", "kernel-matrix")
        doc = json.loads(result.stdout)
        assert doc["labels"] == ["car", "boat", "object"]
        assert doc["psd"] is True


class TestProductOverlap:
    AXES = [
        "--concept-axis", 5, 1,
        "--concept-axis", 0, 1,
        "--object-axis", 3, 2,
        "--object-axis", 2, 1,
    ]  # fmt: skip

    def test_two_axes_multiply(self, invoke):
        result = invoke("product-overlap", *self.AXES)
        assert result.exit_code == 0, result.output
        assert "0.536256" in result.stdout
        assert "0.367879" in result.stdout
        assert "product overlap: 0.197278" in result.stdout

    def test_single_axis_matches_classify(self, invoke):
        result = invoke("product-overlap", "--concept-axis", 5, 1, "--object-axis", 3, 2)
        assert "product overlap: 0.536256" in result.stdout

    def test_quadrature(self, invoke):
        args = ["--format", "json", "product-overlap", *self.AXES, "--quadrature-points", 401]
        result = invoke(*args)
        assert result.exit_code == 0, result.output
        doc = json.loads(result.stdout)
        assert [axis["overlap_sq"] for axis in doc["axes"]] == [0.536256, 0.367879]
        assert doc["product_overlap"] == 0.197278
        assert doc["quadrature"] == pytest.approx(0.197278, abs=2e-6)

    def test_axis_count_mismatch(self, invoke):
        result = invoke("product-overlap", "--concept-axis", 5, 1, *self.AXES[6:])
        assert result.exit_code == 2
        assert "1 concept axes and 2 object axes" in result.output

    def test_invalid_sigma(self, invoke):
        result = invoke("product-overlap", "--concept-axis", 5, 0, "--object-axis", 3, 2)
        assert result.exit_code == 2

    def test_quadrature_axis_limit(self, invoke):
        three = ["--concept-axis", 1, 1] * 3 + ["--object-axis", 1, 1] * 3
        result = invoke("product-overlap", *three, "--quadrature-points", 101)
        assert result.exit_code == 2

    def test_even_quadrature_points(self, invoke):
        result = invoke("product-overlap", *self.AXES, "--quadrature-points", 400)
        assert result.exit_code == 2

    def test_byte_identical(self, invoke):
        first, second = invoke("product-overlap", *self.AXES), invoke("product-overlap", *self.AXES)
        assert first.stdout_bytes == second.stdout_bytes
