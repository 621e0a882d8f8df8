# -*- coding: utf-8 -*-


from pathlib import Path
from typing import Any

import hjson
import pytest

from gale_goppa.cli import initialize
from gale_goppa.cli import run
from gale_goppa.cli.config import Config
from gale_goppa.cli.utils import ConfigFile
from gale_goppa.cli.utils import ExitCode
from gale_goppa.cli.utils import dump_document
from gale_goppa.geometry import PointConfig
from gale_goppa.geometry import gale_transform
from gale_goppa.geometry import gen_cubic_pencil_base

from .conftest import F101
from .conftest import QQ
from .conftest import frame_points
from .conftest import grid_points


@pytest.fixture
def cli(workdir: Path) -> Path:
    assert initialize() == ExitCode.OK
    return workdir


def read(path: str) -> Any:
    return hjson.loads(Path(path).read_text(encoding="utf-8"))


def write(path: str, data: Any) -> None:
    Path(path).write_text(dump_document(data), encoding="utf-8")


def write_points(path: str, config: PointConfig) -> None:
    write(path, ConfigFile(config.field, config, {}).to_json())


def verify(path: str) -> int:
    return run(["verify", path])


def test_gen_gale_verify(cli: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["gen", "--count", "7", "--dim", "2", "--field", "prime:101", "--seed", "3", "--out", "points.json"]) == 0
    points = read("points.json")
    assert points["field"] == {"type": "prime", "p": 101}
    assert len(points["points"]) == 7

    assert run(["gale", "--input", "points.json", "--out", "report.json"]) == 0
    report = read("report.json")
    assert report["command"] == "gale"
    assert report["status"] == "ok"
    assert report["outputs"]["orthogonal"] is True
    assert len(report["outputs"]["dual"]) == 7
    assert all(len(row) == 4 for row in report["outputs"]["dual"])

    capsys.readouterr()
    assert verify("report.json") == ExitCode.OK
    assert "verified" in capsys.readouterr().err


def test_reports_are_reproducible(cli: Path) -> None:
    write_points("frame.json", PointConfig.from_rows(QQ, frame_points(2, 3)))
    assert run(["gale", "--input", "frame.json", "--out", "first.json"]) == 0
    assert run(["gale", "--input", "frame.json", "--out", "second.json"]) == 0
    assert Path("first.json").read_text(encoding="utf-8") == Path("second.json").read_text(encoding="utf-8")


def test_certificate_seed_default(cli: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    assert Config.Budgets.CertificateSeed == 0
    write_points("frame.json", PointConfig.from_rows(QQ, frame_points(2, 3)))
    assert run(["gale", "--input", "frame.json", "--out", "default.json"]) == 0
    assert run(["gale", "--input", "frame.json", "--seed", "0", "--out", "explicit.json"]) == 0
    assert read("default.json") == read("explicit.json")

    monkeypatch.setattr(Config.Budgets, "CertificateSeed", 11)
    assert run(["gale", "--input", "frame.json", "--out", "configured.json"]) == 0
    assert run(["gale", "--input", "frame.json", "--seed", "11", "--out", "explicit11.json"]) == 0
    assert read("configured.json") == read("explicit11.json")
    assert verify("configured.json") == ExitCode.OK


def test_report_to_stdout(cli: Path, capsys: pytest.CaptureFixture[str]) -> None:
    capsys.readouterr()
    assert run(["family", "--degree", "4"]) == 0
    report = hjson.loads(capsys.readouterr().out)
    assert report["outputs"]["table"] == [{"degree": 4, "dimension": 5}]


def test_tampering_is_detected(cli: Path) -> None:
    write_points("frame.json", PointConfig.from_rows(QQ, frame_points(2, 3)))
    assert run(["gale", "--input", "frame.json", "--out", "report.json"]) == 0
    original = read("report.json")

    changed = read("report.json")
    d = changed["certificates"][0]["D"]
    d[1] = "2" if d[1] != "2" else "3"
    write("changed_d.json", changed)
    assert verify("changed_d.json") == ExitCode.MATHEMATICAL_FAILURE

    failed = dict(original, status="failed")
    write("failed.json", failed)
    assert verify("failed.json") == ExitCode.MATHEMATICAL_FAILURE

    forged = read("report.json")
    forged["inputs"]["digest"] = "0" * 64
    write("forged.json", forged)
    assert verify("forged.json") == ExitCode.MATHEMATICAL_FAILURE

    moved = read("report.json")
    moved["inputs"]["points"][4] = ["1", "2", "4"]
    write("moved.json", moved)
    assert verify("moved.json") == ExitCode.MATHEMATICAL_FAILURE


def test_input_errors(cli: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert run(["gale", "--input", "missing.json"]) == ExitCode.INPUT
    assert "missing.json" in capsys.readouterr().err

    Path("broken.json").write_text("{", encoding="utf-8")
    assert run(["gale", "--input", "broken.json"]) == ExitCode.INPUT
    write("list.json", [1, 2])
    assert run(["gale", "--input", "list.json"]) == ExitCode.INPUT
    write("zero.json", {"field": {"type": "rational"}, "points": [["0", "0", "0"], ["1", "0", "0"]]})
    assert run(["gale", "--input", "zero.json"]) == ExitCode.INPUT

    write_points("frame.json", PointConfig.from_rows(F101, frame_points(2, 3)))
    assert run(["gale", "--input", "frame.json", "--field", "rational"]) == ExitCode.INPUT
    assert run(["gale", "--input", "frame.json", "--field", "prime:100"]) == ExitCode.INPUT
    assert run(["h0", "--field", "prime:101", "--seed", "1", "--mult", "1"]) == ExitCode.INPUT
    assert run(["gen", "--field", "prime:101", "--seed", "1"]) == ExitCode.INPUT
    assert run(["gen", "--count", "5", "--dim", "2", "--seed", "1"]) == ExitCode.INPUT
    assert run(["sevenp3", "--input", "frame.json", "--pair", "1,1"]) == ExitCode.INPUT
    assert run(["nonsense"]) == ExitCode.INPUT


def test_precondition_errors(cli: Path) -> None:
    collinear = PointConfig.from_rows(QQ, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0]])
    write_points("collinear.json", collinear)
    assert run(["gale", "--input", "collinear.json"]) == ExitCode.PRECONDITION
    assert run(["coble9", "--gen", "--field", "prime:7", "--seed", "0"]) == ExitCode.PRECONDITION


def test_disabled_command(cli: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    write_points("frame.json", PointConfig.from_rows(QQ, frame_points(2, 3)))
    monkeypatch.setattr(Config.Gale, "Enabled", False)
    assert run(["gale", "--input", "frame.json"]) == ExitCode.PRECONDITION


def test_conic5(cli: Path) -> None:
    write_points("frame.json", PointConfig.from_rows(QQ, frame_points(2, 3)))
    assert run(["conic5", "--input", "frame.json", "--out", "report.json"]) == 0
    conic = read("report.json")["outputs"]["conic"]
    assert conic["degree"] == 2
    assert conic["terms"] == {"1,1,0": "1", "1,0,1": "-4/3", "0,1,1": "1/3"}
    assert verify("report.json") == 0


def test_rnc(cli: Path) -> None:
    write_points("frame.json", PointConfig.from_rows(QQ, frame_points(2, 3)))
    assert run(["rnc", "--input", "frame.json", "--out", "report.json"]) == 0
    outputs = read("report.json")["outputs"]
    assert outputs["degree"] == 2
    assert outputs["hits"] == [True] * 5
    assert verify("report.json") == 0


def test_pencil9(cli: Path) -> None:
    grid = grid_points(QQ)
    write_points("grid.json", PointConfig.from_rows(QQ, grid.points[:8]))
    assert run(["pencil9", "--input", "grid.json", "--out", "report.json"]) == 0
    outputs = read("report.json")["outputs"]
    assert outputs["ninth"] == ["1", "1", "1"]
    assert len(outputs["cubics"]) == 2
    assert verify("report.json") == 0


def test_h0(cli: Path) -> None:
    assert run([
        "h0", "--field", "prime:101", "--seed", "1", "--degree", "4", "--mult", "2,2,2", "--out", "report.json",
    ]) == 0
    outputs = read("report.json")["outputs"]
    assert outputs["h0"] == 6
    assert outputs["multiplicities"] == [2, 2, 2]
    assert verify("report.json") == 0


def test_family(cli: Path) -> None:
    assert run(["family", "--max-degree", "6", "--out", "report.json"]) == 0
    table = read("report.json")["outputs"]["table"]
    assert [row["dimension"] for row in table] == [0, 5, 21, 54]
    assert verify("report.json") == 0

    tampered = read("report.json")
    tampered["outputs"]["table"][1]["dimension"] = 6
    write("tampered.json", tampered)
    assert verify("tampered.json") == ExitCode.MATHEMATICAL_FAILURE


def test_eightp4(cli: Path) -> None:
    base = gen_cubic_pencil_base(F101, 0)
    gamma4 = gale_transform(PointConfig.from_rows(F101, base.points.points[:8]))
    write_points("eight.json", gamma4)
    assert run(["eightp4", "--input", "eight.json", "--out", "report.json"]) == 0
    outputs = read("report.json")["outputs"]
    assert outputs["target_dim"] == 4
    assert len(outputs["excess"]) == 1
    assert len(outputs["conics"]) == 5
    assert verify("report.json") == 0


def test_sevenp3(cli: Path) -> None:
    assert run([
        "gen", "--kind", "seven", "--pair", "0,1", "--pair", "0,2",
        "--field", "prime:101", "--seed", "4", "--out", "seven.json",
    ]) == 0
    assert read("seven.json")["meta"]["pairs"] == [[0, 1], [0, 2]]
    excess = []
    for pair in ("0,1", "0,2"):
        assert run(["sevenp3", "--input", "seven.json", "--pair", pair, "--out", "report.json"]) == 0
        outputs = read("report.json")["outputs"]
        assert outputs["target_dim"] == 3
        assert len(outputs["conics"]) == 4
        excess.append(outputs["excess"])
        assert verify("report.json") == 0
    assert excess[0] != excess[1]


def test_ci33(cli: Path) -> None:
    assert run([
        "gen", "--kind", "ci", "--degrees", "3,3", "--field", "prime:101", "--seed", "2", "--out", "ci.json",
    ]) == 0
    assert run(["ci33", "--input", "ci.json", "--out", "report.json"]) == 0
    outputs = read("report.json")["outputs"]
    assert len(outputs["images"]) == 9
    assert all(len(row) == 6 for row in outputs["images"])
    assert verify("report.json") == 0


def test_coble9(cli: Path) -> None:
    assert run(["coble9", "--gen", "--field", "prime:101", "--seed", "0", "--out", "report.json"]) == 0
    report = read("report.json")
    assert report["outputs"]["factorizations"] == 4
    assert len(report["outputs"]["sextic"]["distinct_pairs"]) == 12
    assert verify("report.json") == 0
