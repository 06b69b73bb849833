import io
from pathlib import Path

import pytest

from linpi import __version__
from linpi.__main__ import EXIT_BAD_INPUT, EXIT_OK, EXIT_REJECTED, build_parser, main
from tests.corpus import SUCC_ENV, SUCC_PROGRAM


def write(tmp_path: Path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.fixture
def succ(tmp_path: Path) -> str:
    return write(tmp_path, "succ.pi", SUCC_PROGRAM)


class TestInfer:
    def test_prints_environment(self, succ: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["infer", succ]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == SUCC_ENV.splitlines()

    def test_sessions(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "p.pi", "a?(x).idle | new e in s!(1, e)")
        assert main(["infer", path, "--sessions"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "a : [int]{1,0}",
            "s : [int * [int]{0,0}]{0,1}",
            "-- a : not a session, shown as [int]{1,0}",
            "-- s : !int.end",
        ]

    def test_clash(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "bad.pi", "a!3 | a!(1, 2)")
        assert main(["infer", path]) == EXIT_REJECTED
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error: type clash" in captured.err

    def test_parse_error(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "bad.pi", "a!!3")
        assert main(["infer", path]) == EXIT_BAD_INPUT
        assert "parse error: 1:3:" in capsys.readouterr().err

    def test_missing_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["infer", str(tmp_path / "absent.pi")]) == EXIT_BAD_INPUT
        assert "cannot read input" in capsys.readouterr().err

    def test_standard_input(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        monkeypatch.setattr("sys.stdin", io.StringIO("a!3"))
        assert main(["infer", "-"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["a : [int]{0,1}"]

    def test_unbalanced_new(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "p.pi", "new a in a!3")
        assert main(["infer", path]) == EXIT_REJECTED
        assert main(["infer", path, "--unbalanced-new"]) == EXIT_OK
        assert capsys.readouterr().out == ""

    def test_dump_goes_to_stderr(self, succ: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["infer", succ, "--dump", "2"]) == EXIT_OK
        captured = capsys.readouterr()
        assert captured.out.splitlines() == SUCC_ENV.splitlines()
        assert "use equations" in captured.err


class TestCheck:
    def test_accepted(
        self, tmp_path: Path, succ: str, capsys: pytest.CaptureFixture[str]
    ) -> None:
        env = write(tmp_path, "succ.env", SUCC_ENV)
        assert main(["check", succ, "--env", env]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "accepted"

    def test_rejected(
        self, tmp_path: Path, succ: str, capsys: pytest.CaptureFixture[str]
    ) -> None:
        env = write(tmp_path, "succ.env", "print : [int]{0,1}\nsucc : [int * [int]{0,1}]{1,1}\n")
        assert main(["check", succ, "--env", env]) == EXIT_REJECTED
        assert capsys.readouterr().out.strip() == "rejected"

    def test_unbound_name(
        self, tmp_path: Path, succ: str, capsys: pytest.CaptureFixture[str]
    ) -> None:
        env = write(tmp_path, "succ.env", "print : [int]{0,1}\n")
        assert main(["check", succ, "--env", env]) == EXIT_REJECTED
        assert "no type for succ" in capsys.readouterr().err

    def test_binder_without_solution(
        self, tmp_path: Path, succ: str, capsys: pytest.CaptureFixture[str]
    ) -> None:
        env = write(tmp_path, "bad.env", "print : [int]{0,1}\nsucc : rec X. X\n")
        assert main(["check", succ, "--env", env]) == EXIT_BAD_INPUT
        assert "parse error: 2:" in capsys.readouterr().err

    def test_env_is_required(self, succ: str) -> None:
        with pytest.raises(SystemExit) as excinfo:
            main(["check", succ])
        assert excinfo.value.code == 2


class TestConstraints:
    def test_output(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "p.pi", "a!3")
        assert main(["constraints", path]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("-- a : ")
        assert any(" = " in line or " ~ " in line for line in lines[1:])

    def test_dump(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "p.pi", "new a in (a!3 | a?(x).idle)")
        assert main(["constraints", path, "--dump", "2"]) == EXIT_OK
        captured = capsys.readouterr()
        assert "~ classes" in captured.err
        assert captured.out.strip() != ""


class TestRun:
    def test_trace(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "p.pi", "a!3 | a?(x). b!x")
        assert main(["run", path]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["a | b!3"]

    def test_internal_step(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "p.pi", "new a in (a!3 | a?(x). b!x)")
        assert main(["run", path]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["tau | new a in b!3"]

    def test_step_bound(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        path = write(tmp_path, "p.pi", "*a!1 | *a?(x). idle")
        assert main(["run", path, "--max-steps", "3", "--seed", "1"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["a | *a!1 | *a?(x).idle"] * 3


class TestOptions:
    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert capsys.readouterr().out.strip() == f"linpi {__version__}"

    def test_bad_log_level(self, succ: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["infer", succ, "--log-level", "LOUD"]) == EXIT_BAD_INPUT
        assert "configuration error" in capsys.readouterr().err

    def test_bad_config_value(
        self, tmp_path: Path, succ: str, capsys: pytest.CaptureFixture[str]
    ) -> None:
        config = write(tmp_path, "linpi.toml", "[linpi]\nmax_search_vars = 0\n")
        assert main(["infer", succ, "--config", config]) == EXIT_BAD_INPUT
        assert "max_search_vars must be positive" in capsys.readouterr().err

    def test_missing_config(
        self, tmp_path: Path, succ: str, capsys: pytest.CaptureFixture[str]
    ) -> None:
        assert main(["infer", succ, "--config", str(tmp_path / "none.toml")]) == EXIT_BAD_INPUT
        assert "Configuration file not found" in capsys.readouterr().err

    def test_command_is_required(self) -> None:
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
