# -*- coding: utf-8 -*-


import hashlib
import logging
import sys
import traceback
from collections.abc import Callable
from collections.abc import Mapping
from dataclasses import dataclass
from enum import IntEnum
from functools import wraps
from pathlib import Path
from typing import Any
from typing import Optional
from typing import overload

import hjson

from ..algebra import FieldSpec
from ..algebra import GaleGoppaError
from ..algebra import InputError
from ..algebra import PreconditionError
from ..algebra import RawVector
from ..algebra import create_field
from ..geometry import PointConfig
from .helper import h

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    MATHEMATICAL_FAILURE = 1
    PRECONDITION = 2
    INPUT = 3


class FileAccessFailed(InputError):
    """
    文件无法读写
    """

    translate_key = "message.failure.file_access"

    def __init__(self, path: str, reason: str):
        super().__init__(path, reason)
        self.path = path
        self.reason = reason

    def __str__(self) -> str:
        return f"Cannot access {self.path}: {self.reason}"


class MalformedInput(InputError):
    """
    文档结构不符合要求
    """

    translate_key = "message.failure.malformed"

    def __init__(self, what: str):
        super().__init__(what)
        self.what = what

    def __str__(self) -> str:
        return f"Malformed input: {self.what}"


class FieldFlagMismatch(InputError):
    """
    ``--field`` 与文件中声明的域不同
    """

    translate_key = "message.failure.field_flag_mismatch"

    def __init__(self, flag: str, declared: str):
        super().__init__(flag, declared)
        self.flag = flag
        self.declared = declared

    def __str__(self) -> str:
        return f"--field {self.flag} does not match the file's field {self.declared}"


class MissingArgument(InputError):
    """
    缺少命令所需的参数
    """

    translate_key = "message.failure.argument.missing"

    def __init__(self, option: str):
        super().__init__(option)
        self.option = option

    def __str__(self) -> str:
        return f"Missing required argument {self.option}"


class CommandDisabled(PreconditionError):
    """
    命令在配置中被禁用
    """

    translate_key = "message.failure.command_disabled"

    def __init__(self, command: str):
        super().__init__(command)
        self.command = command

    def __str__(self) -> str:
        return f"Command {self.command} is disabled in the configuration"


def exit_code_of(err: BaseException) -> ExitCode:
    """
    错误对应的退出码
    """
    if isinstance(err, InputError):
        return ExitCode.INPUT
    if isinstance(err, PreconditionError):
        return ExitCode.PRECONDITION
    return ExitCode.MATHEMATICAL_FAILURE


@overload
def suppress[**P](
        *,
        exception: type[BaseException] | tuple[type[BaseException], ...] = Exception
) -> Callable[[Callable[P, int]], Callable[P, int]]:
    ...


@overload
def suppress[**P](
        func: Callable[P, int],
        *,
        exception: type[BaseException] | tuple[type[BaseException], ...] = Exception
) -> Callable[P, int]:
    ...


def suppress[**P](
        func: Optional[Callable[P, int]] = None,
        *,
        exception: type[BaseException] | tuple[type[BaseException], ...] = Exception
) -> Callable[[Callable[P, int]], Callable[P, int]] | Callable[P, int]:
    """
    捕获意料内的错误，输出翻译后的消息并返回对应的退出码

    :param func: 待包装函数
    :type func: Optional[Callable[..., int]]
    :param exception: 打印调用栈后按数学失败处理的错误类型
    :type exception: type[BaseException] | tuple[type[BaseException], ...]
    """

    def decorator(f: Callable[P, int]) -> Callable[P, int]:
        @wraps(f)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> int:
            try:
                return f(*args, **kwargs)
            except GaleGoppaError as err:
                logger.debug("command failed", exc_info=err)
                h.reply(err.translate_key, **err.translate_kwargs())
                return exit_code_of(err)
            except exception as err:
                traceback.print_exception(err)
                h.reply("message.failure.unknown")
                return ExitCode.MATHEMATICAL_FAILURE

        return wrapper

    return decorator if func is None else decorator(func)


def load_document(path: str) -> Any:
    """
    读取 JSON 文档 (同时接受 Hjson)

    :raise FileAccessFailed: 文件无法读取
    :raise MalformedInput: 不是合法的 JSON
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise FileAccessFailed(path, err.strerror or type(err).__name__) from None
    try:
        return hjson.loads(text)
    except hjson.HjsonDecodeError as err:
        raise MalformedInput(f"{path}: {err.msg}") from None


def dump_document(data: Any, *, indent: int = 2) -> str:
    return hjson.dumpsJSON(data, indent=indent, ensure_ascii=False) + "\n"


def write_document(data: Any, out: str | None, *, indent: int = 2) -> None:
    """
    写到 ``out``，未指定时写到标准输出

    :raise FileAccessFailed: 文件无法写入
    """
    text = dump_document(data, indent=indent)
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as err:
        raise FileAccessFailed(out, err.strerror or type(err).__name__) from None


def digest(data: Any) -> str:
    """
    规范 JSON 序列化后的 SHA-256
    """
    canonical = hjson.dumpsJSON(data, sort_keys=True, separators=(',', ':'), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def decode_rows(field: FieldSpec, rows: Any, what: str) -> list[RawVector]:
    """
    把字符串坐标的二维数组解析为点的齐次坐标

    :raise MalformedInput: 不是等长的非空数组，或含有零行
    :raise ParseError: 坐标无法解析
    """
    if not isinstance(rows, list) or not rows:
        raise MalformedInput(f"{what} must be a non-empty array")
    width = None
    points = []
    for row in rows:
        if not isinstance(row, list) or not row:
            raise MalformedInput(f"{what} rows must be non-empty arrays")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MalformedInput(f"{what} rows must have equal length")
        coords = []
        for entry in row:
            # bool 是 int 的子类
            if isinstance(entry, bool) or not isinstance(entry, (str, int)):
                raise MalformedInput(f"{what} coordinates must be strings")
            coords.append(field.parse_raw(str(entry)))
        if all(x == 0 for x in coords):
            raise MalformedInput(f"{what} contains a zero row")
        points.append(tuple(coords))
    return points


@dataclass(frozen=True)
class ConfigFile:
    """
    点组输入文件
    """

    field: FieldSpec
    points: PointConfig
    meta: dict[str, Any]

    @classmethod
    def from_json(cls, data: Any, field_flag: FieldSpec | None = None) -> "ConfigFile":
        """
        :param data: 已解析的文档
        :type data: Any
        :param field_flag: ``--field`` 参数

        :raise MalformedInput: 文档结构不正确
        :raise FieldFlagMismatch: ``--field`` 与文件不符
        """
        if not isinstance(data, Mapping) or "field" not in data or "points" not in data:
            raise MalformedInput("a point file needs 'field' and 'points'")
        if not isinstance(data["field"], Mapping):
            raise MalformedInput("'field' must be an object")
        field = create_field(data["field"])
        if field_flag is not None and field_flag != field:
            raise FieldFlagMismatch(str(field_flag), str(field))
        meta = data.get("meta", {})
        if not isinstance(meta, Mapping):
            raise MalformedInput("'meta' must be an object")
        points = PointConfig.from_rows(field, decode_rows(field, data["points"], "points"))
        return cls(field, points, dict(meta))

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "field": self.field.to_dict(),
            "points": self.points.to_strings(),
        }
        if self.meta:
            data["meta"] = self.meta
        return data


def read_config_file(path: str, field_flag: FieldSpec | None = None) -> ConfigFile:
    return ConfigFile.from_json(load_document(path), field_flag)


__all__ = (
    "ExitCode",

    "FileAccessFailed",
    "MalformedInput",
    "FieldFlagMismatch",
    "MissingArgument",
    "CommandDisabled",

    "exit_code_of",
    "suppress",

    "load_document",
    "dump_document",
    "write_document",
    "digest",
    "decode_rows",

    "ConfigFile",
    "read_config_file",
)
