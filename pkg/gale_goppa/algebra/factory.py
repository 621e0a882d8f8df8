# -*- coding: utf-8 -*-


from collections.abc import Mapping
from typing import Any

from .scalars import FIELD_TYPES
from .scalars import FieldKind
from .scalars import FieldSpec
from .scalars import ParseError
from .utils import get_params


def create_field(config: Mapping[str, Any]) -> FieldSpec:
    """
    从配置对象创建域

    :param config: ``{"type": "rational"}`` 或 ``{"type": "prime", "p": 101}``
    :type config: Mapping[str, Any]

    :return: 域
    :rtype: FieldSpec

    :raise ParseError: 未知的域类型或参数
    :raise NotPrime: 模数不是素数
    """
    try:
        field_cls = FIELD_TYPES[config["type"]]
    except (KeyError, TypeError):
        raise ParseError(str(config), "field") from None

    params = get_params(config)
    if field_cls.kind == FieldKind.PRIME and not isinstance(params.get("p"), int):
        raise ParseError(str(config), "field")
    try:
        # noinspection PyArgumentList
        return field_cls(**params)
    except TypeError:
        raise ParseError(str(config), "field") from None


def parse_field_flag(text: str) -> FieldSpec:
    """
    解析命令行中的域参数

    :param text: ``"rational"`` 或 ``"prime:P"``
    :type text: str

    :return: 域
    :rtype: FieldSpec
    """
    kind, _, modulus = text.strip().partition(':')
    if kind == FieldKind.RATIONAL.value and not modulus:
        return create_field({"type": kind})
    if kind == FieldKind.PRIME.value and modulus.isdigit():
        return create_field({"type": kind, "p": int(modulus)})
    raise ParseError(text, "field")


__all__ = (
    "create_field",
    "parse_field_flag",
)
