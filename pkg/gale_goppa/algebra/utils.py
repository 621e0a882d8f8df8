# -*- coding: utf-8 -*-


import random
from collections.abc import Mapping
from fractions import Fraction
from typing import Any
from typing import ClassVar

type Raw = Fraction | int
"""
域元素的规范原始表示：有理数为 :py:class:`Fraction`，素域为 ``[0, p)`` 内的整数
"""
type RawVector = tuple[Raw, ...]

MASK64 = (1 << 64) - 1


def get_params(cfg: Mapping[str, Any]) -> dict[str, Any]:
    """
    从配置获取参数

    :param cfg: 配置
    :type cfg: Mapping[str, Any]

    :return: 参数
    :rtype: dict[str, Any]
    """
    return {k: v for k, v in cfg.items() if k != "type"}


def make_rng(seed: int, *salt: int) -> random.Random:
    """
    由种子与附加盐值构造确定性的随机数生成器

    :param seed: 种子
    :type seed: int
    :param salt: 附加盐值，用于从同一种子派生互不相关的序列
    :type salt: int

    :return: 随机数生成器
    :rtype: random.Random
    """
    mixed = seed & MASK64
    for s in salt:
        mixed = (mixed * 0x100000001B3 ^ (s & MASK64)) & MASK64
    return random.Random(mixed)


class GaleGoppaError(Exception):
    """
    所有错误的基类
    """

    translate_key: ClassVar[str] = "message.failure.unknown"

    def translate_kwargs(self) -> dict[str, Any]:
        """
        提供给翻译文本的参数

        :return: 参数
        :rtype: dict[str, Any]
        """
        return {k: v for k, v in vars(self).items() if not k.startswith('_')}


class PreconditionError(GaleGoppaError):
    """
    输入或假设不满足
    """

    translate_key = "message.failure.precondition"


class MathematicalFailure(GaleGoppaError):
    """
    计算得到数学上的否定结果
    """

    translate_key = "message.failure.mathematical"


class InputError(GaleGoppaError):
    """
    解析或读写失败
    """

    translate_key = "message.failure.input"


class DimensionMismatch(PreconditionError, ValueError):
    """
    维数不匹配
    """

    translate_key = "message.failure.dimension_mismatch"

    def __init__(self, expected: Any, actual: Any, what: str = "dimension"):
        super().__init__(expected, actual, what)
        self.expected = expected
        self.actual = actual
        self.what = what

    def __str__(self) -> str:
        return f"{self.what.capitalize()} mismatch. Expected: {self.expected}, Actual: {self.actual}"


class FieldMismatch(PreconditionError, TypeError):
    """
    混用了不同域的元素
    """

    translate_key = "message.failure.field_mismatch"

    def __init__(self, left: Any, right: Any):
        super().__init__(left, right)
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"Cannot mix elements of {self.left} and {self.right}"


class FieldNotFinite(PreconditionError, ValueError):
    """
    需要有限域
    """

    translate_key = "message.failure.field_not_finite"

    def __init__(self, field: Any):
        super().__init__(field)
        self.field = field

    def __str__(self) -> str:
        return f"A finite field is required, got {self.field}"


class SmallCharacteristic(PreconditionError, ValueError):
    """
    域的特征太小
    """

    translate_key = "message.failure.small_characteristic"

    def __init__(self, characteristic: int, minimum: int):
        super().__init__(characteristic, minimum)
        self.characteristic = characteristic
        self.minimum = minimum

    def __str__(self) -> str:
        return f"Characteristic {self.characteristic} is too small, at least {self.minimum} required"


def require_characteristic(characteristic: int, minimum: int) -> None:
    """
    特征为 0 或不小于 ``minimum``

    :raise SmallCharacteristic: 特征太小
    """
    if 0 < characteristic < minimum:
        raise SmallCharacteristic(characteristic, minimum)


class RetryBudgetExhausted(MathematicalFailure):
    """
    重试预算耗尽
    """

    translate_key = "message.failure.retry_budget_exhausted"

    def __init__(self, task: str, budget: int):
        super().__init__(task, budget)
        self.task = task
        self.budget = budget

    def __str__(self) -> str:
        return f"Retry budget exhausted while {self.task}. Budget: {self.budget}"


__all__ = (
    "Raw",
    "RawVector",

    "get_params",
    "make_rng",

    "GaleGoppaError",
    "PreconditionError",
    "MathematicalFailure",
    "InputError",
    "DimensionMismatch",
    "FieldMismatch",
    "FieldNotFinite",
    "SmallCharacteristic",
    "require_characteristic",
    "RetryBudgetExhausted",
)
