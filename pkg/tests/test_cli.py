import json
import subprocess
import sys
from pathlib import Path

import pytest

from greyrank.cli import main

FIXTURE = str(Path(__file__).parent.parent / "data" / "players.json")


def write_problem(tmp_path, mutate=None, name="problem.json"):
    data = json.loads(Path(FIXTURE).read_text())
    if mutate:
        mutate(data)
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


class TestRankCommand:
    def test_json_output_is_deterministic(self, tmp_path):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["rank", FIXTURE, "--format", "json", "--out", str(out1)]) == 0
        assert main(["rank", FIXTURE, "--format", "json", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_stage_all_final_rank(self, tmp_path):
        out = tmp_path / "r.json"
        assert main(["rank", FIXTURE, "--format", "json", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["fusion"]["order"] == ["A1", "A5", "A2", "A3", "A4"]

    def test_stage_normalize(self, tmp_path):
        out = tmp_path / "n.json"
        assert main(["rank", FIXTURE, "--stage", "normalize", "--format", "json",
                     "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        cell = report["normalized"][0][0]
        assert cell[0] == pytest.approx(6 / 39, abs=1e-12)
        assert cell[1] == pytest.approx(8 / 31, abs=1e-12)
        assert "weights" not in report

    def test_normalized_report_feeds_weights_stage(self, tmp_path):
        norm_out = tmp_path / "norm.json"
        main(["rank", FIXTURE, "--stage", "normalize", "--format", "json",
              "--out", str(norm_out)])
        piped = tmp_path / "piped.json"
        main(["rank", FIXTURE, "--stage", "weights", "--normalized", str(norm_out),
              "--format", "json", "--out", str(piped)])
        single = tmp_path / "single.json"
        main(["rank", FIXTURE, "--stage", "all", "--format", "json",
              "--out", str(single)])
        piped_weights = json.loads(piped.read_text())["weights"]
        single_weights = json.loads(single.read_text())["weights"]
        assert piped_weights == single_weights

    def test_text_format_smoke(self, capsys):
        assert main(["rank", FIXTURE]) == 0
        text = capsys.readouterr().out
        assert "Final order: A1 > A5 > A2 > A3 > A4" in text
        assert "Normalized matrix" in text

    def test_validation_error_exit_1(self, tmp_path, capsys):
        def broken(data):
            data["matrix"][1][2] = [7.5, 6.5]

        path = write_problem(tmp_path, broken)
        assert main(["rank", path]) == 1
        err = capsys.readouterr().err
        assert "A2" in err and "G3" in err

    def test_computation_error_exit_2(self, tmp_path, capsys):
        def constant(data):
            data["matrix"] = [[[2, 3]] * 5] * 5
            data.pop("preferences")

        path = write_problem(tmp_path, constant)
        assert main(["rank", path]) == 2
        assert "constant" in capsys.readouterr().err

    def test_missing_file_exit_1(self, capsys):
        assert main(["rank", "/nonexistent/problem.json"]) != 0

    def test_rho_flag_overrides_file(self, tmp_path):
        out_default = tmp_path / "d.json"
        out_rho = tmp_path / "r.json"
        main(["rank", FIXTURE, "--format", "json", "--out", str(out_default)])
        main(["rank", FIXTURE, "--rho", "0.2", "--format", "json",
              "--out", str(out_rho)])
        a = json.loads(out_default.read_text())
        b = json.loads(out_rho.read_text())
        assert a["problem"]["params"]["rho"] == 0.5
        assert b["problem"]["params"]["rho"] == 0.2
        assert (a["methods"]["grey_incidence"]["scores"]
                != b["methods"]["grey_incidence"]["scores"])

    def test_theta_flag_sets_complement(self, tmp_path):
        out = tmp_path / "t.json"
        main(["rank", FIXTURE, "--theta-plus", "1.0", "--format", "json",
              "--out", str(out)])
        report = json.loads(out.read_text())
        assert report["problem"]["params"]["theta_minus"] == 0.0
        # pure positive branch: scores equal the positive incidence degrees
        method = report["methods"]["grey_incidence"]
        assert method["scores"] == method["trace"]["g_plus"]

    def test_methods_subset(self, tmp_path):
        out = tmp_path / "m.json"
        main(["rank", FIXTURE, "--methods", "topsis", "--format", "json",
              "--out", str(out)])
        report = json.loads(out.read_text())
        assert list(report["methods"]) == ["grey_topsis"]
        assert report["fusion"]["final_rank"] == report["methods"]["grey_topsis"]["ranks"]

    def test_borda_weights_flag(self, tmp_path):
        out = tmp_path / "b.json"
        main(["rank", FIXTURE, "--borda-weights", "1,0,0", "--format", "json",
              "--out", str(out)])
        report = json.loads(out.read_text())
        assert report["fusion"]["final_rank"] == report["methods"]["grey_topsis"]["ranks"]

    def test_bad_borda_weights_flag(self, capsys):
        assert main(["rank", FIXTURE, "--borda-weights", "1,0"]) == 1
        assert "borda" in capsys.readouterr().err.lower()


class TestWhatIfCommand:
    def test_noop_override_empty_diff(self, tmp_path):
        out = tmp_path / "w.json"
        assert main(["whatif", FIXTURE, "--set", "A2.G3=[6,7]", "--format", "json",
                     "--out", str(out)]) == 0
        result = json.loads(out.read_text())
        assert result["diff"]["changed"] == []

    def test_cell_override_diff(self, tmp_path):
        out = tmp_path / "w.json"
        args = ["whatif", FIXTURE, "--format", "json", "--out", str(out)]
        for j in range(1, 6):
            args += ["--set", f"A4.G{j}=[90,99]"]
        assert main(args) == 0
        result = json.loads(out.read_text())
        changed = {e["plan"] for e in result["diff"]["changed"]}
        assert "A4" in changed
        assert result["perturbed"]["fusion"]["final_rank"][3] == 1

    def test_text_output(self, capsys):
        assert main(["whatif", FIXTURE, "--set", "A2.G3=[6,7]"]) == 0
        text = capsys.readouterr().out
        assert "Baseline order" in text
        assert "Rank changes: none" in text

    def test_bad_override_exit_1(self, capsys):
        assert main(["whatif", FIXTURE, "--set", "A9.G1=[1,2]"]) == 1
        assert "A9" in capsys.readouterr().err

    def test_set_required(self, capsys):
        assert main(["whatif", FIXTURE]) == 1


class TestModuleEntrypoint:
    def test_python_dash_m_invocation(self, tmp_path):
        result = subprocess.run(
            [sys.executable, "-m", "greyrank.cli", "rank", FIXTURE,
             "--format", "json"],
            capture_output=True, text=True,
        )
        assert result.returncode == 0
        report = json.loads(result.stdout)
        assert report["fusion"]["order"][0] == "A1"
