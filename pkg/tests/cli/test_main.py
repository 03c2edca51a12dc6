import json
from pathlib import Path

import pytest

from mereon.cli import main
from mereon.polytopes import Polyhedron, m144p_construct


def test_verify_passes(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    assert main(["verify", "--out", str(tmp_path)]) == 0

    report = json.loads((tmp_path / "verify.json").read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert all(check["passed"] for check in report["checks"])
    assert (tmp_path / "verify.md").read_text(encoding="utf-8") == capsys.readouterr().out
    assert "| M144p V/E/F | pass | (74, 216, 144) | (74, 216, 144) | yes |" in (tmp_path / "verify.md").read_text(
        encoding="utf-8"
    )


def test_verify_is_deterministic(tmp_path: Path) -> None:
    first, second = tmp_path / "first", tmp_path / "second"
    first.mkdir()
    second.mkdir()

    assert main(["verify", "--out", str(first)]) == 0
    assert main(["verify", "--out", str(second)]) == 0

    for name in ("verify.json", "verify.md"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_verify_fails_on_broken_construction(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path, capsys: pytest.CaptureFixture
) -> None:
    def broken_m144p() -> Polyhedron:
        polyhedron = m144p_construct()
        return Polyhedron("m144p", polyhedron.vertices, polyhedron.types, polyhedron.edges, polyhedron.faces[1:])

    monkeypatch.setattr("mereon.cli.verify.m144p_construct", broken_m144p)

    assert main(["verify", "--out", str(tmp_path)]) == 1
    assert "FAIL M144p V/E/F: expected (74, 216, 144), got (74, 216, 143)" in capsys.readouterr().err
    assert json.loads((tmp_path / "verify.json").read_text(encoding="utf-8"))["passed"] is False


def test_missing_output_directory(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    missing = tmp_path / "missing"

    assert main(["verify", "--out", str(missing)]) == 2
    assert f"output directory {missing} does not exist" in capsys.readouterr().err
    assert not missing.exists()


def test_output_directory_from_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("MEREON_OUT", str(tmp_path))

    assert main(["report", "latitudes"]) == 0
    assert (tmp_path / "latitudes.csv").exists()


def test_unknown_table_is_rejected_by_parser(capsys: pytest.CaptureFixture) -> None:
    with pytest.raises(SystemExit) as e:
        main(["report", "nope"])

    assert e.value.code == 2
    assert "invalid choice: 'nope'" in capsys.readouterr().err


def test_too_few_samples(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    assert main(["knot", "--samples", "2", "--out", str(tmp_path)]) == 2
    assert "samples must be at least 3, got 2" in capsys.readouterr().err


def test_format_not_supported_by_command(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    assert main(["mckay", "2T", "--format", "obj", "--out", str(tmp_path)]) == 2
    assert "'mckay' writes dot, csv, not obj" in capsys.readouterr().err
