"""CLI contract: schemas, exit statuses, byte-level determinism."""

import json
import subprocess
import sys

import pytest

FAMILY_JSON = {
    "e_p": "1/2",
    "e_w": "1/4",
    "settings": [{"label": "alpha1", "x": "1/3"}, {"label": "alpha2", "x": "2/3"}],
}
CONSTANT_JSON = {
    "e_p": "1/2",
    "e_w": "1/4",
    "settings": [{"label": "alpha1", "x": "1/3"}, {"label": "alpha2", "x": "1/3"}],
}


def run_cli(*args, env_extra=None):
    import os

    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "hvnogo.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.fixture()
def family_file(tmp_path):
    path = tmp_path / "family.json"
    path.write_text(json.dumps(FAMILY_JSON), encoding="utf-8")
    return str(path)


@pytest.fixture()
def constant_file(tmp_path):
    path = tmp_path / "constant.json"
    path.write_text(json.dumps(CONSTANT_JSON), encoding="utf-8")
    return str(path)


class TestQuantum:
    def test_pure_particle_joint(self):
        result = run_cli("quantum", "--alpha", "0", "--phi", "pi/2")
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["joint"] == {"00": 0.5, "01": 0.0, "10": 0.5, "11": 0.0}
        assert payload["params"]["x"] == 1.0
        assert set(payload["amplitudes"]) == {"00", "01", "10", "11"}

    def test_pi_token_forms(self):
        for token in ("pi", "pi/4", "3*pi/4", "0.25"):
            result = run_cli("quantum", "--alpha", token, "--phi", "0")
            assert result.returncode == 0, token
        # negative values need the = form so argparse does not read a flag
        result = run_cli("quantum", "--alpha=-pi/2", "--phi", "0")
        assert result.returncode == 0

    def test_byte_identical_reruns(self):
        a = run_cli("quantum", "--alpha", "pi/3", "--phi", "pi/4")
        b = run_cli("quantum", "--alpha", "pi/3", "--phi", "pi/4")
        assert a.stdout == b.stdout


class TestFamily:
    def test_special_member(self):
        result = run_cli("family", "--x", "1/3", "--ep", "1/2", "--ew", "1/4", "--s", "0", "--t", "0")
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["classification"]["kind"] == "Special"
        assert payload["lambda_marginal"] == {"p": "1/3", "w": "2/3"}
        assert payload["s_range"] == ["0", "1/6"]
        assert payload["instance"]["00p"] == "1/6"

    def test_ranges_only_without_member(self):
        payload = json.loads(run_cli("family", "--x", "1/3", "--ep", "1/2", "--ew", "1/4").stdout)
        assert "instance" not in payload
        assert payload["t_range"] == ["0", "1/6"]

    def test_s_without_t_is_a_usage_error(self):
        result = run_cli("family", "--x", "1/3", "--ep", "1/2", "--ew", "1/4", "--s", "0")
        assert result.returncode == 1
        assert result.stdout == ""

    def test_boundary_x_is_reported_on_stderr(self):
        result = run_cli("family", "--x", "1", "--ep", "1/2", "--ew", "1/4")
        assert result.returncode == 1
        assert "x" in result.stderr
        assert result.stdout == ""

    def test_out_of_range_member(self):
        result = run_cli("family", "--x", "1/3", "--ep", "1/2", "--ew", "1/4", "--s", "1/5", "--t", "0")
        assert result.returncode == 1
        assert result.stdout == ""


class TestFeasibility:
    def test_infeasible_exit_three_with_certificate(self, family_file):
        result = run_cli("feasibility", "--input", family_file)
        assert result.returncode == 3
        payload = json.loads(result.stdout)
        assert payload["feasible"] is False
        assert payload["certificate"]
        assert "1/3" in payload["narrative"] and "2/3" in payload["narrative"]

    def test_feasible_exit_zero_with_witness(self, constant_file):
        result = run_cli("feasibility", "--input", constant_file)
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["feasible"] is True
        assert set(payload["witness"]) == {"00p", "01p", "10p", "11p", "00w", "01w", "10w", "11w"}

    def test_malformed_json_exit_two(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{oops", encoding="utf-8")
        result = run_cli("feasibility", "--input", str(bad))
        assert result.returncode == 2
        assert result.stdout == ""

    def test_missing_field_exit_two(self, tmp_path):
        bad = tmp_path / "nofield.json"
        bad.write_text(json.dumps({"e_w": "1/4", "settings": []}), encoding="utf-8")
        result = run_cli("feasibility", "--input", str(bad))
        assert result.returncode == 2
        assert "e_p" in result.stderr

    def test_missing_file_exit_two(self):
        result = run_cli("feasibility", "--input", "/nonexistent/family.json")
        assert result.returncode == 2


class TestDemo:
    @pytest.mark.parametrize("drop", ["independence", "objectivity", "determinism"])
    def test_witnesses_validate(self, drop, family_file):
        result = run_cli("demo", "--drop", drop, "--input", family_file)
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["validation"]["overall_pass"] is True
        names = {c["name"]: c for c in payload["validation"]["checks"]}
        dropped = {"independence": "independence", "objectivity": "objectivity", "determinism": "determinism"}[drop]
        assert names[dropped]["retained"] is False

    def test_atom_budget_env_var(self, family_file):
        result = run_cli(
            "demo", "--drop", "objectivity", "--input", family_file, env_extra={"HVNOGO_ATOM_BUDGET": "4"}
        )
        assert result.returncode == 1
        assert "budget" in result.stderr
        assert result.stdout == ""

    def test_bad_budget_env_var(self, family_file):
        result = run_cli(
            "demo", "--drop", "objectivity", "--input", family_file, env_extra={"HVNOGO_ATOM_BUDGET": "many"}
        )
        assert result.returncode == 1
        assert "HVNOGO_ATOM_BUDGET" in result.stderr


class TestSweep:
    def test_csv_shape_and_determinism(self):
        args = (
            "sweep", "--alpha", "pi/4", "--phi-start", "0", "--phi-end", "2*pi/1",
            "--steps", "5", "--shots", "2000", "--seed", "9",
        )
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.returncode == 0
        assert a.stdout == b.stdout
        lines = a.stdout.strip().split("\n")
        assert lines[0] == "phi_radians,n00,n01,n10,n11,f_a0_given_b1,f_a0_given_b0"
        assert len(lines) == 6
        counts = [int(v) for v in lines[1].split(",")[1:5]]
        assert sum(counts) == 2000

    def test_output_flag_writes_the_file(self, tmp_path):
        out = tmp_path / "sweep.csv"
        result = run_cli(
            "sweep", "--alpha", "0", "--phi-start", "0", "--phi-end", "1", "--steps", "1",
            "--shots", "100", "--seed", "1", "--output", str(out),
        )
        assert result.returncode == 0
        assert result.stdout == ""
        assert out.read_text(encoding="utf-8").startswith("phi_radians,")


class TestUsageErrors:
    def test_bad_angle(self):
        result = run_cli("quantum", "--alpha", "three", "--phi", "0")
        assert result.returncode == 1
        assert "--alpha" in result.stderr
        assert result.stdout == ""

    def test_bad_probability(self):
        result = run_cli("family", "--x", "5/3", "--ep", "1/2", "--ew", "1/4")
        assert result.returncode == 1

    def test_unknown_subcommand(self):
        result = run_cli("frobnicate")
        assert result.returncode == 1

    def test_missing_required_flag(self):
        result = run_cli("quantum", "--alpha", "0")
        assert result.returncode == 1
