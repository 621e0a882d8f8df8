# -*- coding: utf-8 -*-


from argparse import ArgumentParser
from argparse import ArgumentTypeError
from typing import NoReturn
from typing import override

from ..algebra import FieldSpec
from ..algebra import InputError
from ..algebra import ParseError
from ..algebra import parse_field_flag
from .helper import h


class ArgumentParseFailed(InputError):
    """
    命令行参数无法解析
    """

    translate_key = "message.failure.argument.invalid"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


class InvalidArgument(ArgumentTypeError):
    """
    参数值无效，消息已翻译
    """


class InvalidFieldFlag(InvalidArgument):
    def __init__(self, text: str):
        super().__init__(h.tr("message.failure.argument.field", text=text))


class InvalidPair(InvalidArgument):
    def __init__(self, text: str):
        super().__init__(h.tr("message.failure.argument.pair", text=text))


class InvalidCount(InvalidArgument):
    def __init__(self, text: str):
        super().__init__(h.tr("message.failure.argument.count", text=text))


class InvalidSeed(InvalidArgument):
    def __init__(self, text: str):
        super().__init__(h.tr("message.failure.argument.seed", text=text))


class CliArgumentParser(ArgumentParser):
    """
    解析失败时抛出 :py:class:`ArgumentParseFailed` 而不是直接退出
    """

    @override
    def error(self, message: str) -> NoReturn:
        raise ArgumentParseFailed(message)


def field_flag(text: str) -> FieldSpec:
    """
    ``rational`` 或 ``prime:P``
    """
    try:
        return parse_field_flag(text)
    # NotPrime 同时是 ValueError
    except (ParseError, ValueError):
        raise InvalidFieldFlag(text) from None


def cubic_pair(text: str) -> tuple[int, int]:
    """
    ``I,J``，两个从 0 开始的不同下标
    """
    first, sep, second = text.partition(',')
    if not sep or not first.strip().isdigit() or not second.strip().isdigit():
        raise InvalidPair(text)
    pair = int(first), int(second)
    if pair[0] == pair[1]:
        raise InvalidPair(text)
    return pair


def degree_pair(text: str) -> tuple[int, int]:
    """
    ``D1,D2``，两个正整数
    """
    first, sep, second = text.partition(',')
    if not sep or not first.strip().isdigit() or not second.strip().isdigit():
        raise InvalidPair(text)
    degrees = int(first), int(second)
    if min(degrees) < 1:
        raise InvalidPair(text)
    return degrees


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise InvalidCount(text) from None
    if value < 1:
        raise InvalidCount(text)
    return value


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise InvalidCount(text) from None
    if value < 0:
        raise InvalidCount(text)
    return value


def multiplicities(text: str) -> tuple[int, ...]:
    """
    逗号分隔的正整数列表
    """
    return tuple(positive_int(part) for part in text.split(','))


def seed_value(text: str) -> int:
    """
    十进制或 ``0x`` 开头的十六进制非负整数
    """
    try:
        value = int(text, 0)
    except ValueError:
        raise InvalidSeed(text) from None
    if value < 0:
        raise InvalidSeed(text)
    return value


__all__ = (
    "ArgumentParseFailed",

    "InvalidArgument",
    "InvalidFieldFlag",
    "InvalidPair",
    "InvalidCount",
    "InvalidSeed",

    "CliArgumentParser",

    "field_flag",
    "cubic_pair",
    "degree_pair",
    "positive_int",
    "non_negative_int",
    "multiplicities",
    "seed_value",
)
