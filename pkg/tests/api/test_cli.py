import json
import logging

import pytest

from triglide.api.cli import EXIT_FAILURE, EXIT_INVALID, EXIT_OK, main

HOME = '{"x": 0, "y": 0, "z": 0, "q": [1, 0, 0, 0]}'


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestCommands:
    def test_ik(self, capsys):
        code, out = run(capsys, "ik", "--pose", HOME)
        assert code == EXIT_OK
        assert json.loads(out)["rho2y"] == -0.866025403784

    def test_ik_from_file(self, capsys, tmp_path):
        path = tmp_path / "pose.json"
        path.write_text(HOME)
        code, out = run(capsys, "ik", "--file", str(path))
        assert code == EXIT_OK
        assert json.loads(out)["rho3y"] == 0.866025403784

    def test_dkp(self, capsys):
        code, out = run(capsys, "dkp", "--mu", "0,0,0")
        assert code == EXIT_OK
        solutions = json.loads(out)
        assert len(solutions) == 4
        first = solutions[0]["pose"]
        assert first["x"] == -0.866025403784
        assert first["q"] == pytest.approx([0.0, 1.0, 0.0, 0.0], abs=1e-12)

    def test_dkp_from_joints(self, capsys):
        _, joints = run(capsys, "ik", "--pose", HOME)
        code, out = run(capsys, "dkp", "--joints", joints)
        assert code == EXIT_OK
        poses = json.loads(out)
        assert any(
            p["x"] == pytest.approx(0.0, abs=1e-9)
            and p["q"] == pytest.approx([1.0, 0.0, 0.0, 0.0], abs=1e-9)
            for p in poses
        )

    def test_aspect(self, capsys):
        code, out = run(capsys, "aspect", "--q", "1,0,0,0")
        assert code == EXIT_OK
        body = json.loads(out)
        assert body["label"] == "NN"
        assert body["f1"] == body["f2"] == -0.5

    def test_text_format(self, capsys):
        code, out = run(capsys, "aspect", "--q", "0,0,1,0", "--format", "text")
        assert code == EXIT_OK
        assert "label: PN" in out.splitlines()

    def test_cells(self, capsys):
        code, out = run(capsys, "cells", "list", "--space", "nn", "--format", "text")
        assert code == EXIT_OK
        assert "cell 2:" in out
        code, out = run(capsys, "cells", "classify", "--point", "0,0,0")
        assert json.loads(out)["cell"] == 2
        code, out = run(capsys, "cells", "variety", "--which", "workspace", "--point", "0.5,0.5,0")
        assert json.loads(out)["residual"][0] == 0.0

    def test_oracle(self, capsys):
        code, out = run(capsys, "oracle", "--mu", "0,0,0", "--starts", "40", "--seed", "3")
        assert code == EXIT_OK
        assert json.loads(out)["attempts"] == 40

    def test_roundtrip(self, capsys):
        code, out = run(capsys, "roundtrip", "--n", "5", "--seed", "2")
        assert code == EXIT_OK
        assert json.loads(out)["failures"] == 0


class TestSweep:
    def test_stdout(self, capsys):
        code, out = run(capsys, "sweep", "--space", "workspace", "--resolution", "3")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "q2,q3,q4,label,f1,f2,nn_cell"
        assert len(lines) == 8
        assert "0,0,0,NN,-0.5,-0.5," in lines

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "joint.csv"
        code, out = run(capsys, "sweep", "--resolution", "3", "--output", str(path))
        assert code == EXIT_OK
        assert json.loads(out) == {"path": str(path), "rows": 27}
        assert path.read_text().splitlines()[0] == "mu2z,mu3z,mu3y,cell,boundary,dkp_count"

    def test_surface(self, capsys):
        code, out = run(capsys, "sweep", "--surface", "1", "--resolution", "4")
        assert code == EXIT_OK
        assert len(out.splitlines()) == 17

    def test_repeatable(self, capsys):
        first = run(capsys, "sweep", "--space", "workspace", "--resolution", "5")
        second = run(capsys, "sweep", "--space", "workspace", "--resolution", "5")
        assert first == second

    def test_unwritable_output(self, capsys, tmp_path):
        code, _ = run(
            capsys, "sweep", "--resolution", "2", "--output", str(tmp_path / "no" / "x.csv")
        )
        assert code == EXIT_FAILURE


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["dkp", "--mu", "0,0"],
            ["dkp", "--mu", "a,b,c"],
            ["dkp"],
            ["ik", "--pose", "{broken"],
            ["ik", "--pose", '{"x": 0, "y": 0, "z": 0, "q": [0, 0, 0, 0]}'],
            ["cells", "classify", "--point", "0,0"],
            ["sweep", "--resolution", "1"],
            ["oracle", "--mu", "0,0,0", "--starts", "0"],
            ["roundtrip", "--n", "0"],
            ["nonsense"],
        ],
    )
    def test_invalid_input(self, capsys, argv):
        code, out = run(capsys, *argv)
        assert code == EXIT_INVALID
        assert out == ""

    @pytest.mark.parametrize(
        "argv",
        [
            ["dkp", "--mu", "0,0"],
            ["ik", "--pose", '{"x": 0, "y": 0, "z": 0, "q": [0, 0, 0, 0]}'],
        ],
    )
    def test_rejection_logs_a_single_line(self, capsys, caplog, argv):
        with caplog.at_level(logging.ERROR, logger="triglide.api.cli"):
            code, _ = run(capsys, *argv)
        assert code == EXIT_INVALID
        errors = [r for r in caplog.records if r.name == "triglide.api.cli"]
        assert len(errors) == 1
        assert errors[0].exc_info is None
        assert "Traceback" not in caplog.text

    def test_missing_geometry_file(self, capsys, tmp_path):
        code, _ = run(capsys, "ik", "--pose", HOME, "--geometry", str(tmp_path / "g.json"))
        assert code == EXIT_INVALID

    def test_help(self, capsys):
        assert main(["--help"]) == EXIT_OK
