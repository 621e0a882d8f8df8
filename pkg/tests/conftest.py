# -*- coding: utf-8 -*-


from collections.abc import Iterator
from pathlib import Path

import pytest

from gale_goppa.algebra import FieldSpec
from gale_goppa.algebra import PrimeField
from gale_goppa.algebra import RationalField
from gale_goppa.geometry import PointConfig

QQ = RationalField()
F101 = PrimeField(101)
FIELDS = (QQ, F101)


def frame_points(a: int, b: int) -> list[list[int]]:
    """
    平面上的标准五点组 ``[1:0:0], [0:1:0], [0:0:1], [1:1:1], [1:a:b]``
    """
    return [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, a, b]]


def grid_points(field: FieldSpec) -> PointConfig:
    """
    ``X(X−Z)(X+Z)`` 与 ``Y(Y−Z)(Y+Z)`` 的九个交点，``[1:1:1]`` 放在最后
    """
    rows = [[x, y, 1] for x in (0, -1, 1) for y in (0, -1, 1) if (x, y) != (1, 1)]
    return PointConfig.from_rows(field, [*rows, [1, 1, 1]])


@pytest.fixture(params=FIELDS, ids=str)
def field(request: pytest.FixtureRequest) -> FieldSpec:
    f: FieldSpec = request.param
    return f


@pytest.fixture
def frame(field: FieldSpec) -> PointConfig:
    return PointConfig.from_rows(field, frame_points(2, 3))


@pytest.fixture
def workdir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """
    在临时目录中运行命令行，配置文件写到其中的 ``config/``
    """
    monkeypatch.chdir(tmp_path)
    yield tmp_path
